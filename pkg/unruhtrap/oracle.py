#!/usr/bin/env python
"""
Independent checks of the first-order detector response.

  perturbative_probability   chi^2 int int dt' dt'' e^(i Delta (t'-t'')) G(t', t'')
                             with the exact chirped correlation function G
  evolve_schrodinger         i d psi/dt = H_I(t) psi in a truncated Fock basis,
                             H_I = chi q_m(t) sigma_x(t), rotating and
                             counter-rotating terms kept
  constant_trap_response     |int_0^t e^(i(Delta+nu)t) dt|^2 for a static trap

In the interaction picture

    q_m(t)     = N^(-1/2) sum_p s_m^(p) (a_p e^(-i phi_p(t)) + a_p^+ e^(i phi_p(t)))
    sigma_x(t) = sigma_- e^(-i Delta t) + sigma_+ e^(i Delta t)

with phi_p(t) = (nu_p/kappa) e^(kappa t) for a chirp and nu_p t for a static
trap.  From |g>|0> the a_p^+ sigma_+ term alone acts at first order, so the
excited population is chi^2 sum_p w_p |I_p|^2.
"""
import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .chirpint import GAUSS_ORDERS, PANEL_PHASE, PANEL_WIDTH, GAUSS_RULES
from .errors import AccuracyError, DomainError, IntegratorError, TruncationWarning
from .ionchain import mode_frequencies
from .utils import ifnotNone

logger = logging.getLogger(__name__)

MAX_IONS = 3
MAX_NMAX = 3
BLOCK_ROWS = 256
TERMS = ('full', 'red', 'blue')


@dataclass(frozen=True)
class OracleConfig:
    """settings for the oracle computations.

    chi          coupling Omega0 eta [rad/s]; None takes it from the probe
    n_max        highest phonon number kept per mode
    rtol, atol   DOP853 tolerances
    quad_tol     relative tolerance of the double integral
    norm_tol     allowed drift of the state norm
    trunc_tol    population at n_max that triggers a TruncationWarning
    terms        'full', 'red' (a sigma_+ and h.c. only) or 'blue'
                 (a^+ sigma_+ and h.c. only)
    phase_reference  measure phi_p from t_start, as in the exact mode solution
    """
    chi: float = None
    n_max: int = 2
    rtol: float = 1.e-12
    atol: float = 1.e-14
    quad_tol: float = 1.e-8
    norm_tol: float = 1.e-9
    trunc_tol: float = 1.e-6
    terms: str = 'full'
    phase_reference: bool = False

    def __post_init__(self):
        if self.chi is not None and not self.chi >= 0:
            raise DomainError("chi must be >= 0")
        if not 1 <= self.n_max <= MAX_NMAX:
            raise DomainError("n_max must be in 1..%d, got %r" % (MAX_NMAX, self.n_max))
        for name in ('rtol', 'atol', 'quad_tol', 'norm_tol', 'trunc_tol'):
            if not getattr(self, name) > 0:
                raise DomainError("%s must be positive" % name)
        if self.terms not in TERMS:
            raise DomainError("terms must be one of %s, got '%s'" %
                              (', '.join(TERMS), self.terms))


@dataclass(frozen=True, eq=False)
class TruncatedState:
    """state amplitudes indexed [electronic, n_1, ..., n_N] with
    electronic 0 = g, 1 = e and 0 <= n_p <= n_max"""
    amplitudes: np.ndarray
    n_max: int

    @property
    def norm(self):
        return float((np.abs(self.amplitudes)**2).sum())

    @property
    def excited_population(self):
        return float((np.abs(self.amplitudes[1])**2).sum())

    def phonon_population(self, mode, n):
        "population with n phonons in mode (1-based)"
        sub = np.moveaxis(np.abs(self.amplitudes)**2, mode, 1)
        return float(sub[:, n].sum())

    @property
    def edge_population(self):
        "population with some mode at n_max"
        probs = np.abs(self.amplitudes)**2
        nmodes = probs.ndim - 1
        mask = np.zeros(probs.shape[1:], dtype=bool)
        for p in range(nmodes):
            index = [slice(None)]*nmodes
            index[p] = self.n_max
            mask[tuple(index)] = True
        return float(probs[:, mask].sum())


def _window(chirp):
    t0, t1 = chirp.t_start, chirp.t_stop
    if not (math.isfinite(t0) and math.isfinite(t1)):
        raise DomainError("the oracle needs a finite time window, got [%g, %g]"
                          % (t0, t1))
    return t0, t1


def correlation_function(chain, ion, chirp, t1, t2):
    """G(t1, t2) = <0| q_m(t2) q_m(t1) |0>
                 = sum_p w_p exp(i (phi_p(t1) - phi_p(t2)))

    t1, t2 broadcast against each other; w_p = |b_m^(p)|^2/sqrt(mu_p).
    """
    m = chain.check_ion(ion)
    weights = chain.mode_matrix[m, :]**2/np.sqrt(chain.mode_eigenvalues)
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    out = np.zeros(np.broadcast(t1, t2).shape, dtype=complex)
    for w, nup in zip(weights, mode_frequencies(chain)):
        out += w*np.exp(1j*(chirp.phase(t1, nup) - chirp.phase(t2, nup)))
    return out


def _time_panels(chirp, delta, nu_max):
    """panel edges in t with a bounded phase change per panel"""
    t0, t1 = _window(chirp)
    if chirp.kappa != 0:
        width = PANEL_WIDTH/abs(chirp.kappa)
    else:
        width = t1 - t0
    edges = [t0]
    t = t0
    while t < t1:
        right = min(t + width, t1)
        rate = abs(delta) + float(max(chirp.frequency(t, nu_max),
                                      chirp.frequency(right, nu_max)))
        t = min(t + min(width, PANEL_PHASE/rate), t1)
        edges.append(t)
    return np.array(edges)


def _nodes(edges, order):
    xg, wg = GAUSS_RULES[order]
    lo, hi = edges[:-1], edges[1:]
    half = 0.5*(hi - lo)
    nodes = (0.5*(hi + lo))[:, None] + half[:, None]*xg[None, :]
    weights = half[:, None]*wg[None, :]
    return nodes.ravel(), weights.ravel()


def _double_integral(chain, ion, chirp, delta, nodes, weights):
    total = 0j
    for start in range(0, len(nodes), BLOCK_ROWS):
        ti = nodes[start:start+BLOCK_ROWS]
        wi = weights[start:start+BLOCK_ROWS]
        kern = np.exp(1j*delta*(ti[:, None] - nodes[None, :]))
        kern *= correlation_function(chain, ion, chirp, ti[:, None], nodes[None, :])
        total += wi @ kern @ weights
    return total


def perturbative_probability(chain, probe, chirp, config=None):
    """first-order excitation probability from the double time integral.

    Raises DomainError for an infinite window, AccuracyError when two
    Gauss-Legendre orders on the same panels disagree by more than
    config.quad_tol (relative).
    """
    config = config or OracleConfig()
    chi = ifnotNone(config.chi, probe.chi)
    chain.check_ion(probe.ion_index)
    _window(chirp)
    if chi == 0 or chirp.t_stop == chirp.t_start:
        return 0.0
    delta = probe.detuning
    edges = _time_panels(chirp, delta, float(mode_frequencies(chain).max()))
    values = []
    for order in GAUSS_ORDERS:
        nodes, weights = _nodes(edges, order)
        values.append(_double_integral(chain, probe.ion_index, chirp, delta,
                                       nodes, weights))
    low, high = values
    err = abs(high - low)
    scale = abs(high) + 1.e-300
    logger.debug("double integral: %d panels, value %.6e, error %.2e, "
                 "imaginary part %.2e", len(edges) - 1, high.real, err, high.imag)
    if err > config.quad_tol*scale:
        raise AccuracyError("double integral error %.3e above %.3e" %
                            (err, config.quad_tol*scale),
                            estimate=err, tolerance=config.quad_tol*scale)
    return float(chi**2*high.real)


def _ladder_operators(n_modes, n_max):
    """sigma_+ a_p and sigma_+ a_p^+ for each mode p, as dense matrices on
    C^2 x (C^(n_max+1))^n_modes"""
    dim = n_max + 1
    lower = np.diag(np.sqrt(np.arange(1, dim)), k=1)
    sigma_plus = np.array([[0., 0.], [1., 0.]])
    eye = np.eye(dim)
    ops_a, ops_adag = [], []
    for p in range(n_modes):
        op_a, op_adag = sigma_plus, sigma_plus
        for q in range(n_modes):
            op_a = np.kron(op_a, lower if q == p else eye)
            op_adag = np.kron(op_adag, lower.T if q == p else eye)
        ops_a.append(op_a)
        ops_adag.append(op_adag)
    return ops_a, ops_adag


def evolve_schrodinger(config, chain, probe, chirp):
    """evolve |g>|0> over the chirp window under the full interaction.

    Args:
        config (OracleConfig): coupling, truncation and tolerances
        chain (IonChain): at most three ions
        probe (DetectorProbe): detuning and probed ion
        chirp (ChirpProfile or StaticTrap): finite window and mode phases

    Returns:
        TruncatedState at chirp.t_stop

    Raises:
        IntegratorError if DOP853 fails or the norm drifts by more than
        config.norm_tol; emits TruncationWarning if the population with a
        mode at n_max exceeds config.trunc_tol.
    """
    t0, t1 = _window(chirp)
    if chain.n_ions > MAX_IONS:
        raise DomainError("Schrodinger oracle limited to %d ions" % MAX_IONS)
    m = chain.check_ion(probe.ion_index)
    chi = ifnotNone(config.chi, probe.chi)
    n_modes, n_max = chain.n_ions, config.n_max
    shape = (2,) + (n_max + 1,)*n_modes
    psi0 = np.zeros(int(np.prod(shape)), dtype=complex)
    psi0[0] = 1.0
    if chi == 0 or t1 == t0:
        return TruncatedState(amplitudes=psi0.reshape(shape), n_max=n_max)

    coef = chi*chain.couplings[m, :]/math.sqrt(chain.n_ions)
    nu_p = mode_frequencies(chain)
    delta = probe.detuning
    ops_a, ops_adag = _ladder_operators(n_modes, n_max)
    use_red = config.terms in ('full', 'red')
    use_blue = config.terms in ('full', 'blue')
    if config.phase_reference:
        phase0 = np.array([float(chirp.phase(t0, nup)) for nup in nu_p])
    else:
        phase0 = np.zeros(n_modes)

    def rhs(t, psi):
        out = np.zeros_like(psi)
        laser = np.exp(1j*delta*t)
        for p in range(n_modes):
            mode = np.exp(1j*(float(chirp.phase(t, nu_p[p])) - phase0[p]))
            if use_red:
                f_red = coef[p]*laser/mode
                out += f_red*(ops_a[p] @ psi) + np.conj(f_red)*(ops_a[p].T @ psi)
            if use_blue:
                f_blue = coef[p]*laser*mode
                out += f_blue*(ops_adag[p] @ psi) + np.conj(f_blue)*(ops_adag[p].T @ psi)
        return -1j*out

    sol = solve_ivp(rhs, (t0, t1), psi0, method='DOP853',
                    rtol=config.rtol, atol=config.atol)
    if not sol.success:
        raise IntegratorError("Schrodinger integration failed: %s" % sol.message)
    logger.debug("Schrodinger oracle: %d right-hand side evaluations over "
                 "[%g, %g]", sol.nfev, t0, t1)

    state = TruncatedState(amplitudes=sol.y[:, -1].reshape(shape), n_max=n_max)
    drift = abs(state.norm - 1.0)
    if drift > config.norm_tol:
        raise IntegratorError("state norm drifted by %.3e (limit %.1e)" %
                              (drift, config.norm_tol), drift=drift)
    edge = state.edge_population
    if edge > config.trunc_tol:
        logger.warning("population %.3e at n_max=%d", edge, n_max)
        warnings.warn("population %.3e reached the truncation level n_max=%d"
                      % (edge, n_max), TruncationWarning)
    return state


def constant_trap_response(probe, nu, t_window):
    """|int_0^t_window e^(i(Delta+nu)t) dt|^2 = t_window^2 sinc^2((Delta+nu) t_window/2)

    the blue-sideband response of a static trap; times chi^2 w_p it is the
    first-order excitation probability.  Peaks at Delta = -nu.
    """
    if not t_window > 0:
        raise DomainError("window must be positive")
    omega = probe.detuning + nu
    return float(t_window**2*np.sinc(omega*t_window/(2*math.pi))**2)
