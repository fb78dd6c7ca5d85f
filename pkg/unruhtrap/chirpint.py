#!/usr/bin/env python
"""
Detector-response integral over an exponentially chirped trap.

For a mode of frequency nu_p in a trap chirped as nu(t) = nu e^(kappa t),
the first-order excitation amplitude is proportional to

    I_p(T, t0) = int_t0^T dt e^(i Delta t) exp(i (nu_p/kappa) e^(kappa t))

With y = e^(kappa t), a = Delta/kappa and b = nu_p/|kappa| this becomes

    I_p = (1/|kappa|) int_y0^yT dy y^(ia-1) e^(i s b y),   s = sign(kappa)

where for a chirp down (kappa < 0) the y limits are e^(kappa T) < e^(kappa t0).
Three evaluations are provided:

  integral_quadrature       any parameters; panels of bounded phase in
                            tau = ln y, Gauss-Legendre on each panel
  integral_closed_finite    kappa > 0, via incomplete gamma functions:
      I_p = Gamma(ia) (-ib)^(-ia) / kappa
            * (1 - gamma'(ia, -i b y0) - Gamma'(ia, -i b yT))
  integral_closed_infinite  t0 -> -inf, T -> inf:
      |I_p|^2 kappa^2 = (2 pi/a) / (e^(2 pi a) - 1)        a > 0
                      = (2 pi/|a|) / (1 - e^(-2 pi |a|))   a < 0

y0 = 0 (t0 = -inf) is the Abel limit: the e^(i a tau) tail at early times
is switched on adiabatically, which sets gamma'(ia, 0) = 0.
"""
import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from .specfun import (gamma, lower_incomplete_normalized,
                      upper_incomplete_normalized)
from .utils import TWOPI, planck, planck_blue

logger = logging.getLogger(__name__)

QUAD_METHOD = 'quadrature'
CLOSED_FINITE = 'closed_finite'
CLOSED_INFINITE = 'closed_infinite'

PANEL_PHASE = 1.0      # max phase change per panel [rad]
PANEL_WIDTH = 0.5      # max panel width in tau
GAUSS_ORDERS = (12, 20)
QUAD_RTOL = 1.e-9      # absolute tolerance per unit tau range
MAX_LEVELS = 12
ABEL_CUT = 0.5         # b*y below which the Abel-subtracted form is used
ABEL_FLOOR = 1.e-18    # b*y where the subtracted integrand is dropped

GAUSS_RULES = {n: np.polynomial.legendre.leggauss(n) for n in GAUSS_ORDERS}


@dataclass(frozen=True)
class ChirpProfile:
    """Exponential chirp nu(t) = nu e^(kappa t), applied with the detector
    between t_start and t_stop [s].  kappa [rad/s] is signed: > 0 chirps
    up, < 0 chirps down.  t_start may be -inf for kappa > 0 (and t_stop
    +inf for kappa < 0): the Abel-regularised early-time limit."""
    kappa: float
    t_start: float
    t_stop: float

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa != 0):
            raise DomainError("chirp rate must be finite and nonzero, got %r"
                              % (self.kappa,))
        if math.isnan(self.t_start) or math.isnan(self.t_stop):
            raise DomainError("chirp window has nan limits")
        if self.t_stop < self.t_start:
            raise DomainError("chirp window ends (%g) before it starts (%g)"
                              % (self.t_stop, self.t_start))
        if self.t_start == math.inf or self.t_stop == -math.inf:
            raise DomainError("chirp window lies entirely at infinity")
        if self.kappa < 0 and self.t_start == -math.inf:
            raise DomainError("a chirp down cannot start at -inf")

    @classmethod
    def from_y(cls, kappa, y0, y_t):
        """chirp-up window given by y0 = e^(kappa t0) and yT = e^(kappa T);
        y0 = 0 means t0 = -inf"""
        if kappa <= 0:
            raise DomainError("from_y needs kappa > 0")
        if y0 < 0 or y_t <= 0:
            raise DomainError("y limits must be positive (y0 may be 0)")
        t_start = -math.inf if y0 == 0 else math.log(y0)/kappa
        t_stop = math.inf if y_t == math.inf else math.log(y_t)/kappa
        return cls(kappa=kappa, t_start=t_start, t_stop=t_stop)

    @property
    def direction(self):
        return 1 if self.kappa > 0 else -1

    @property
    def y_start(self):
        return math.exp(self.kappa*self.t_start)

    @property
    def y_stop(self):
        return math.exp(self.kappa*self.t_stop)

    def phase(self, t, nu_p):
        """accumulated mode phase (nu_p/kappa) e^(kappa t) at time(s) t"""
        return (nu_p/self.kappa)*np.exp(self.kappa*np.asarray(t, dtype=float))

    def frequency(self, t, nu_p):
        """instantaneous mode frequency nu_p e^(kappa t)"""
        return nu_p*np.exp(self.kappa*np.asarray(t, dtype=float))

    def reduced(self, detuning, nu_p):
        "ReducedParams for detuning Delta and mode frequency nu_p [rad/s]"
        y_lo, y_hi = self.y_start, self.y_stop
        if self.kappa < 0:
            y_lo, y_hi = y_hi, y_lo
        return ReducedParams(a=detuning/self.kappa, b=nu_p/abs(self.kappa),
                             y0=y_lo, yT=y_hi, sign=self.direction)


@dataclass(frozen=True)
class StaticTrap:
    """constant trap frequency between t_start and t_stop (kappa -> 0)"""
    t_start: float
    t_stop: float
    kappa = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_stop)):
            raise DomainError("a static trap window must be finite")
        if self.t_stop < self.t_start:
            raise DomainError("window ends before it starts")

    def phase(self, t, nu_p):
        return nu_p*np.asarray(t, dtype=float)

    def frequency(self, t, nu_p):
        return nu_p*np.ones_like(np.asarray(t, dtype=float))


@dataclass(frozen=True)
class ReducedParams:
    """dimensionless form of one chirp integral: a = Delta/kappa,
    b = nu_p/|kappa|, integration limits y0 <= yT in y = e^(kappa t),
    sign = chirp direction"""
    a: float
    b: float
    y0: float
    yT: float
    sign: int = 1

    def __post_init__(self):
        if not self.b > 0:
            raise DomainError("b = nu_p/kappa must be positive, got %r" % (self.b,))
        if not 0 <= self.y0 <= self.yT:
            raise DomainError("need 0 <= y0 <= yT, got y0=%r yT=%r" %
                              (self.y0, self.yT))
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")

    @property
    def tau_range(self):
        if self.y0 == 0 or self.yT == math.inf:
            return math.inf
        return math.log(self.yT) - math.log(self.y0)


@dataclass(frozen=True)
class ChirpIntegral:
    """value of I_p [s] with |I_p|^2 [s^2], the method used and an
    absolute error estimate [s]"""
    value: complex
    abs_sq: float
    method: str
    err_estimate: float


def _make_integral(value, method, err, abs_sq=None):
    if abs_sq is None:
        abs_sq = abs(value)**2
    return ChirpIntegral(value=complex(value), abs_sq=float(abs_sq),
                         method=method, err_estimate=abs(float(err)))


def _panel_edges(a, b, tau0, tau1):
    """panel edges on [tau0, tau1] so that the phase a tau + b e^tau changes
    by at most PANEL_PHASE within each panel"""
    edges = [tau0]
    tau = tau0
    while tau < tau1:
        rate = abs(a) + b*math.exp(min(tau + PANEL_WIDTH, tau1))
        tau = min(tau + min(PANEL_WIDTH, PANEL_PHASE/rate), tau1)
        edges.append(tau)
    return np.array(edges)


def _gauss_panels(func, lo, hi, order):
    xg, wg = GAUSS_RULES[order]
    half = 0.5*(hi - lo)
    nodes = (0.5*(hi + lo))[:, None] + half[:, None]*xg[None, :]
    return (func(nodes)*wg[None, :]).sum(axis=1)*half


def panel_quadrature(func, edges, tol, max_levels=MAX_LEVELS):
    """integrate a vectorized complex func over consecutive panels,
    bisecting panels whose two Gauss-Legendre estimates disagree.

    Returns (value, error estimate, number of panels).
    Raises AccuracyError if the tolerance is not met after max_levels.
    """
    lo, hi = edges[:-1], edges[1:]
    total_width = edges[-1] - edges[0]
    value, error, npanels = 0j, 0.0, 0
    for level in range(max_levels+1):
        if len(lo) == 0:
            break
        low = _gauss_panels(func, lo, hi, GAUSS_ORDERS[0])
        high = _gauss_panels(func, lo, hi, GAUSS_ORDERS[1])
        perr = np.abs(high - low)
        allowed = tol*(hi - lo)/total_width
        done = perr <= allowed
        if level == max_levels:
            done[:] = True
        value += high[done].sum()
        error += perr[done].sum()
        npanels += int(done.sum())
        mid = 0.5*(lo[~done] + hi[~done])
        lo, hi = (np.concatenate((lo[~done], mid)),
                  np.concatenate((mid, hi[~done])))
    if error > tol:
        raise AccuracyError("chirp quadrature error estimate %.3e above "
                            "tolerance %.3e" % (error, tol),
                            estimate=error, tolerance=tol)
    return value, error, npanels


def integral_quadrature(params, kappa, rtol=QUAD_RTOL):
    """I_p by direct quadrature of (1/|kappa|) int e^(i a tau + i s b e^tau) dtau.

    Args:
        params (ReducedParams): reduced parameters, any sign of a and kappa
        kappa (float): chirp rate [rad/s]
        rtol (float): absolute tolerance on the tau integral per unit tau
                      range [1e-9]

    Returns:
        ChirpIntegral with method 'quadrature'

    Raises:
        AccuracyError if the error estimate stays above tolerance,
        DomainError for y0 = 0 with a = 0 (logarithmic divergence) or an
        infinite upper limit.
    """
    akap = abs(kappa)
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    a, b, sgn = params.a, params.b, params.sign
    if params.yT == math.inf:
        raise DomainError("quadrature needs a finite upper limit")
    if params.y0 == params.yT:
        return _make_integral(0j, QUAD_METHOD, 0.0)

    def integrand(tau):
        return np.exp(1j*(a*tau + sgn*b*np.exp(tau)))

    value, error, npanels = 0j, 0.0, 0
    tau_hi = math.log(params.yT)
    if params.y0 == 0:
        if a == 0:
            raise DomainError("Delta = 0 with y0 = 0 (t0 = -inf): the integral diverges")
        # Abel head: int_0^yc y^(ia-1)(e^(isby) - 1) dy + yc^(ia)/(ia)
        tau_c = min(tau_hi, math.log(ABEL_CUT/b))
        tau_floor = min(tau_c, math.log(ABEL_FLOOR/b))

        def head(tau):
            theta = sgn*b*np.exp(tau)
            return np.exp(1j*a*tau)*(-2*np.sin(0.5*theta)**2 + 1j*np.sin(theta))
        tol = rtol*max(1.0, tau_c - tau_floor)
        if tau_c > tau_floor:
            hval, herr, hpan = panel_quadrature(head, _panel_edges(a, b, tau_floor, tau_c), tol)
            value += hval
            error += herr
            npanels += hpan
        value += cmath.exp(1j*a*tau_c)/(1j*a)
        tau_lo = tau_c
    else:
        tau_lo = math.log(params.y0)

    if tau_hi > tau_lo:
        tol = rtol*max(1.0, tau_hi - tau_lo)
        bval, berr, bpan = panel_quadrature(integrand, _panel_edges(a, b, tau_lo, tau_hi), tol)
        value += bval
        error += berr
        npanels += bpan
    logger.debug("chirp quadrature a=%g b=%g: %d panels, error %.2e",
                 a, b, npanels, error)
    return _make_integral(value/akap, QUAD_METHOD, error/akap)


def _check_closed(a, kappa):
    if not kappa > 0:
        raise DomainError("closed forms are only derived for a chirp up (kappa > 0)")
    if a == 0:
        raise DomainError("closed form has a Gamma pole at a = Delta/kappa = 0")


def closed_prefactor(a, b, kappa):
    """Gamma(ia) (-ib)^(-ia) / kappa, the infinite-window value of I_p"""
    _check_closed(a, kappa)
    mu = 1j*a
    return gamma(mu)*cmath.exp(-mu*cmath.log(-1j*b))/kappa


def finite_bracket(a, b, y0, yT):
    """1 - gamma'(ia, -i b y0) - Gamma'(ia, -i b yT): the finite-window
    correction factor multiplying the infinite-window I_p"""
    mu = 1j*a
    lower = 0j if y0 == 0 else lower_incomplete_normalized(mu, -1j*b*y0)
    upper = 0j if yT == math.inf else upper_incomplete_normalized(mu, -1j*b*yT)
    return 1.0 - lower - upper, lower, upper


def integral_closed_finite(params, kappa):
    """I_p from the incomplete-gamma closed form (chirp up only).

    Raises DomainError for a = 0 or kappa <= 0; special-function errors
    propagate.
    """
    _check_closed(params.a, kappa)
    if params.sign != 1:
        raise DomainError("closed forms are only derived for a chirp up")
    pref = closed_prefactor(params.a, params.b, kappa)
    bracket, lower, upper = finite_bracket(params.a, params.b, params.y0, params.yT)
    err = 1.e-14*abs(pref)*(1.0 + abs(lower) + abs(upper))
    return _make_integral(pref*bracket, CLOSED_FINITE, err)


def integral_closed_infinite(a, kappa, b=None):
    """I_p for t0 -> -inf, T -> inf.

    Args:
        a (float): Delta/kappa, nonzero, either sign
        kappa (float): chirp rate > 0
        b (float or None): nu_p/kappa, only sets the phase (b^(-ia));
                           None drops that phase

    abs_sq is the Planck form (2pi/(kappa^2 a))/(e^(2 pi a) - 1) for a > 0
    and (2pi/(kappa^2 |a|))/(1 - e^(-2 pi |a|)) for a < 0.
    """
    _check_closed(a, kappa)
    value = gamma(1j*a)*math.exp(-0.5*math.pi*a)/kappa
    if b is not None:
        value *= cmath.exp(-1j*a*math.log(b))
    factor = planck(TWOPI*a) if a > 0 else planck_blue(TWOPI*abs(a))
    abs_sq = TWOPI/(kappa**2*abs(a))*factor
    return _make_integral(value, CLOSED_INFINITE, 1.e-14*abs(value), abs_sq=abs_sq)


def rindler_noise_spectrum(delta, accel_freq):
    """noise spectrum S(Delta) of a plane wave seen in proper time by an
    observer with acceleration frequency a/c = accel_freq [rad/s]:

        S = (2 pi/(Delta a/c)) / (e^(2 pi Delta c/a) - 1)

    the chirp rate kappa playing the role of a/c."""
    if delta == 0:
        raise DomainError("S(Delta) diverges at Delta = 0")
    if not accel_freq > 0:
        raise DomainError("acceleration frequency must be positive")
    return integral_closed_infinite(delta/accel_freq, accel_freq).abs_sq


def chirp_integral(chirp, detuning, nu_p, method='auto'):
    """I_p for one mode and a ChirpProfile.

    method: 'auto' (closed form when kappa > 0 and Delta != 0, quadrature
    otherwise), 'closed' or 'quadrature'.
    """
    params = chirp.reduced(detuning, nu_p)
    if method == 'auto':
        method = 'closed' if (chirp.kappa > 0 and detuning != 0) else 'quadrature'
    if method == 'closed':
        return integral_closed_finite(params, chirp.kappa)
    elif method == 'quadrature':
        return integral_quadrature(params, chirp.kappa)
    raise DomainError("unknown chirp integral method '%s'" % method)
