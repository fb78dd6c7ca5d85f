#!/usr/bin/env python
"""
Excitation probabilities and observables of the phonon detector.

With chi = Omega0 eta and the mode weight W_m = sum_p |b_m^(p)|^2 / sqrt(mu_p):

  red sideband (Delta > 0)   P^R = (chi^2 / kappa Delta) 2 pi / (e^(2 pi Delta/kappa) - 1) W_m
  blue sideband (Delta < 0)  P^B = (chi^2 / kappa |Delta|) 2 pi / (1 - e^(-2 pi |Delta|/kappa)) W_m
  finite chirp               P_m(T, t0) = chi^2 sum_p (|b_m^(p)|^2/sqrt(mu_p)) |I_p(T, t0)|^2

Written with z = 2 pi Delta/kappa at Delta = nu, P^R = (chi/nu)^2 z/(e^z - 1)
and P^B = (chi/nu)^2 z/(1 - e^-z), so that P^R/P^B = e^-z.
"""
import logging
import math
import multiprocessing as mp
import warnings
from dataclasses import dataclass, replace
from functools import partial

import numpy as np

from .chirpint import (closed_prefactor, finite_bracket,
                       integral_closed_infinite, integral_quadrature)
from .errors import DomainError, PerturbativeWarning
from .ionchain import mode_frequencies
from .utils import TWOPI

logger = logging.getLogger(__name__)

PERTURBATIVE_LIMIT = 0.1
REGIME_SMALL = 0.01
REGIME_LARGE = 100.0


@dataclass(frozen=True)
class DetectorProbe:
    """laser probe of one ion: detuning Delta = omega_A - omega_L [rad/s],
    Rabi frequency Omega0 [rad/s], Lamb-Dicke parameter eta and the
    (1-based) index of the probed ion"""
    detuning: float
    rabi: float
    lamb_dicke: float
    ion_index: int = 1

    def __post_init__(self):
        if not math.isfinite(self.detuning):
            raise DomainError("detuning must be finite")
        if not self.rabi >= 0:
            raise DomainError("Rabi frequency must be >= 0, got %r" % (self.rabi,))
        if not 0 <= self.lamb_dicke < 1:
            raise DomainError("Lamb-Dicke parameter must be in [0, 1), got %r"
                              % (self.lamb_dicke,))
        if self.ion_index < 1:
            raise DomainError("ion index is 1-based, got %r" % (self.ion_index,))

    @property
    def chi(self):
        "effective coupling chi = Omega0 eta"
        return self.rabi*self.lamb_dicke


@dataclass(frozen=True)
class SpectrumPoint:
    """one detuning of a spectrum.  p_red and p_blue are the infinite-chirp
    probabilities with the laser on the red or blue sideband at |detuning|,
    p_finite the finite-window probability at the signed detuning.
    unruh_temp is kappa/2pi (hbar = k_B = 1).  For a chirp down p_red and
    p_blue are nan: no thermal limit exists.  The same holds at
    detuning 0."""
    detuning: float
    p_red: float
    p_blue: float
    p_finite: float
    unruh_temp: float
    perturbative: bool = True

    @property
    def p_sideband(self):
        "infinite-chirp probability on the sideband selected by sign(detuning)"
        return self.p_red if self.detuning > 0 else self.p_blue


def _mode_weights(chain, ion):
    "|b_m^(p)|^2 / sqrt(mu_p) for each mode p"
    m = chain.check_ion(ion)
    return chain.mode_matrix[m, :]**2/np.sqrt(chain.mode_eigenvalues)


def _check_rate(kappa):
    if not kappa > 0:
        raise DomainError("thermal forms need a chirp up (kappa > 0), got %r"
                          % (kappa,))


def red_probability(chain, probe, kappa):
    """P^R for the red sideband (Delta > 0) in the infinite-chirp limit.

    Raises DomainError for Delta <= 0 or kappa <= 0.
    """
    _check_rate(kappa)
    if not probe.detuning > 0:
        raise DomainError("red sideband needs Delta > 0; use blue_probability")
    weight = _mode_weights(chain, probe.ion_index).sum()
    abs_sq = integral_closed_infinite(probe.detuning/kappa, kappa).abs_sq
    return float(probe.chi**2*abs_sq*weight)


def blue_probability(chain, probe, kappa):
    """P^B for the blue sideband (Delta < 0) in the infinite-chirp limit.

    Raises DomainError for Delta >= 0 or kappa <= 0.
    """
    _check_rate(kappa)
    if not probe.detuning < 0:
        raise DomainError("blue sideband needs Delta < 0; use red_probability")
    weight = _mode_weights(chain, probe.ion_index).sum()
    abs_sq = integral_closed_infinite(probe.detuning/kappa, kappa).abs_sq
    return float(probe.chi**2*abs_sq*weight)


def finite_chirp_probability(chain, probe, chirp, method='auto'):
    """P_m(T, t0) for a chirp applied over [chirp.t_start, chirp.t_stop].

    For a chirp up with Delta != 0 the factorized closed form
        |Gamma(ia)|^2 e^(-pi a)/kappa^2 * sum_p w_p |bracket_p|^2
    is used; otherwise ('quadrature', or a chirp down, or Delta = 0) each
    mode integral is evaluated by quadrature.
    """
    delta, kappa = probe.detuning, chirp.kappa
    weights = _mode_weights(chain, probe.ion_index)
    nu_p = mode_frequencies(chain)
    if probe.chi == 0:
        return 0.0
    if method == 'auto':
        method = 'closed' if (kappa > 0 and delta != 0) else 'quadrature'
    if method == 'closed':
        a = delta/kappa
        pref = integral_closed_infinite(a, kappa).abs_sq
        total = 0.0
        for w, nup in zip(weights, nu_p):
            params = chirp.reduced(delta, nup)
            bracket = finite_bracket(a, params.b, params.y0, params.yT)[0]
            total += w*abs(bracket)**2
        return float(probe.chi**2*pref*total)
    elif method == 'modes':
        # per-mode closed form, phases included
        total = 0.0
        for w, nup in zip(weights, nu_p):
            params = chirp.reduced(delta, nup)
            bracket = finite_bracket(params.a, params.b, params.y0, params.yT)[0]
            total += w*abs(closed_prefactor(params.a, params.b, kappa)*bracket)**2
        return float(probe.chi**2*total)
    elif method == 'quadrature':
        total = 0.0
        for w, nup in zip(weights, nu_p):
            total += w*integral_quadrature(chirp.reduced(delta, nup), kappa).abs_sq
        return float(probe.chi**2*total)
    raise DomainError("unknown method '%s'" % method)


def sideband_ratio(nu, kappa):
    """R = (1 - e^-z)/(e^z - 1) = e^-z with z = 2 pi nu/kappa.
    kappa = inf gives R = 1."""
    if not (nu > 0 and kappa > 0):
        raise DomainError("sideband ratio needs nu > 0 and kappa > 0")
    z = TWOPI*nu/kappa
    if z == 0:
        return 1.0
    return -math.expm1(-z)/math.expm1(z)


def measured_ratio(p_red, p_blue):
    """R_e = P^R/P^B from measured red and blue sideband probabilities"""
    if not p_blue > 0 or p_red < 0:
        raise DomainError("need p_red >= 0 and p_blue > 0")
    return p_red/p_blue


def unruh_temperature(kappa):
    "k_B T = hbar kappa/2pi, returned in units hbar = k_B = 1"
    if kappa < 0:
        raise DomainError("Unruh temperature needs kappa >= 0")
    return kappa/TWOPI


def prefactor(probe, nu):
    "(Omega0 eta/nu)^2, the overall scale of both sideband probabilities"
    if not nu > 0:
        raise DomainError("trap frequency must be positive")
    return (probe.chi/nu)**2


def unruh_regime(chain, chirp, small=REGIME_SMALL, large=REGIME_LARGE):
    """True if nu_p/kappa <= small and (nu_p/kappa) e^(kappa T) >= large
    for every mode p, the window in which the finite chirp reproduces the
    thermal spectrum"""
    if chirp.kappa <= 0:
        return False
    ratio = mode_frequencies(chain)/chirp.kappa
    slack = 1 + 1.e-9
    return bool(np.all(ratio <= small*slack) and
                np.all(ratio*chirp.y_stop*slack >= large))


def spectrum_point(chain, probe, chirp):
    """SpectrumPoint for one probe.  Probabilities above PERTURBATIVE_LIMIT
    are returned unchanged with perturbative=False.

    At Delta = 0 neither sideband has a thermal limit, so p_red and p_blue
    are nan and only p_finite is computed; that needs a finite chirp start.
    """
    kappa, delta = chirp.kappa, probe.detuning
    if delta == 0 and chirp.t_start == -math.inf:
        raise DomainError("Delta = 0 needs a finite chirp start: with "
                          "t0 = -inf the chirp integral diverges")
    if kappa > 0 and delta != 0:
        mirror = replace(probe, detuning=abs(delta))
        p_red = red_probability(chain, mirror, kappa)
        p_blue = blue_probability(chain, replace(mirror, detuning=-mirror.detuning), kappa)
    else:
        p_red = p_blue = math.nan
    temp = unruh_temperature(kappa) if kappa > 0 else 0.0
    p_finite = finite_chirp_probability(chain, probe, chirp)
    largest = max(p for p in (p_red, p_blue, p_finite) if not math.isnan(p))
    perturbative = largest <= PERTURBATIVE_LIMIT
    if not perturbative:
        logger.info("Delta=%g: probability %.4g beyond first-order validity",
                    probe.detuning, largest)
        warnings.warn("first-order probability %.4g exceeds %g at Delta=%g"
                      % (largest, PERTURBATIVE_LIMIT, probe.detuning),
                      PerturbativeWarning)
    return SpectrumPoint(detuning=probe.detuning, p_red=p_red, p_blue=p_blue,
                         p_finite=p_finite, unruh_temp=temp,
                         perturbative=perturbative)


def _point_at(delta, chain, probe, chirp):
    return spectrum_point(chain, replace(probe, detuning=delta), chirp)


def pool_map(func, items, workers=1):
    """[func(item) for item in items] in input order.  workers > 1
    distributes the items over a process pool; func must be picklable."""
    items = list(items)
    if workers is None or workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with mp.Pool(min(workers, len(items))) as pool:
        return pool.map(func, items)


def sweep(chain, probe, chirp, deltas, workers=1):
    """SpectrumPoints over a sequence of detunings, in input order.
    workers > 1 distributes the points over a process pool."""
    deltas = [float(d) for d in deltas]
    func = partial(_point_at, chain=chain, probe=probe, chirp=chirp)
    return pool_map(func, deltas, workers=workers)
