#!/usr/bin/env python
"""
Complex gamma and incomplete gamma functions.

Values are plain Python complex numbers. Conventions:

  gamma(z)                        Lanczos approximation (g=7, 9 terms) with
                                  the reflection formula for Re z < 1/2

  lower_incomplete(mu, x)         gamma(mu, x) = int_0^x t^(mu-1) e^-t dt
  upper_incomplete(mu, x)         Gamma(mu, x) = int_x^inf t^(mu-1) e^-t dt
  *_normalized(mu, x)             the same divided by Gamma(mu)

t^(mu-1) is taken on the principal branch along the straight ray from 0 to
x.  At x = 0 the lower function is 0 by definition, also for Re mu = 0, where
the integral only exists as an Abel limit.

The incomplete functions are evaluated by up to three routes, each with an
error estimate for the normalized result:

  power series        gamma(mu, x) = x^mu e^-x sum x^n / (mu)_(n+1),
                      for |x| <= |mu| + SERIES_RADIUS; the estimate grows
                      with the largest term over the sum (cancellation)
  continued fraction  Legendre fraction for Gamma(mu, x), for
                      |x| >= CFRAC_RADIUS and |arg x| <= CFRAC_MAX_PHASE
  ray quadrature      adaptive quadrature along the ray, for Re mu > -1

Taking the complement 1 - f of one normalized function for the other costs
absolute, not relative, accuracy, so the route is chosen by the estimate for
the function asked for.  Routes are tried in the order above until one
reaches GOOD_RTOL; the best is kept, and AccuracyError is raised if even that
misses INCOMPLETE_RTOL.
"""
import cmath
import logging
import math
import warnings

import numpy as np
from scipy import integrate

from .errors import AccuracyError, DomainError
from .utils import as_complex

logger = logging.getLogger(__name__)

LANCZOS_G = 7
LANCZOS_COEF = (0.99999999999980993, 676.5203681218851, -1259.1392167224028,
                771.32342877765313, -176.61502916214059, 12.507343278686905,
                -0.13857109526572012, 9.9843695780195716e-6,
                1.5056327351493116e-7)
HALF_LOG_TWOPI = 0.5*math.log(2*math.pi)

SERIES_RADIUS = 12.0
SERIES_MAXITER = 1000
CFRAC_RADIUS = 2.0
CFRAC_MAX_PHASE = 0.6*math.pi
CFRAC_MAXITER = 20000
EPS = 1.e-15
FPMIN = 1.e-300
ROUNDOFF = np.finfo(float).eps
GAMMA_RTOL = 2.e-13     # gamma() for |Im z| <= 20
GOOD_RTOL = 1.e-12
INCOMPLETE_RTOL = 1.e-8


def _is_pole(z):
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _finite(val, what):
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise AccuracyError("%s is not finite (%r)" % (what, val))
    return val


def log_gamma(z):
    """log Gamma(z) for Re z >= 1/2 (Lanczos, principal branch of the sum)"""
    z = as_complex(z) - 1
    acc = LANCZOS_COEF[0]
    for i in range(1, len(LANCZOS_COEF)):
        acc += LANCZOS_COEF[i]/(z + i)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_TWOPI + (z + 0.5)*cmath.log(t) - t + cmath.log(acc)


def gamma(z):
    """complex Gamma function.

    Args:
        z (complex): argument, not a non-positive integer

    Returns:
        complex Gamma(z)

    Raises:
        DomainError at the poles z = 0, -1, -2, ...
    """
    z = as_complex(z)
    if _is_pole(z):
        raise DomainError("Gamma has a pole at z = %g" % z.real)
    if z.real < 0.5:
        return _finite(math.pi/(cmath.sin(math.pi*z)*gamma(1 - z)), 'Gamma(%r)' % z)
    return _finite(cmath.exp(log_gamma(z)), 'Gamma(%r)' % z)


def _power(x, mu):
    "x^mu on the principal branch"
    return cmath.exp(mu*cmath.log(x))


def _check_args(mu, x):
    mu = as_complex(mu)
    x = as_complex(x)
    if _is_pole(mu):
        raise DomainError("incomplete gamma undefined at mu = %g" % mu.real)
    return mu, x


def _series(mu, x):
    """(gamma(mu, x), relative error estimate) by the power series,
    or None if not converged"""
    term = 1.0/mu
    total = term
    peak = abs(term)
    for n in range(1, SERIES_MAXITER):
        term *= x/(mu + n)
        total += term
        peak = max(peak, abs(term))
        if abs(term) < EPS*abs(total) and n > abs(x):
            expo = mu*cmath.log(x) - x
            err = ROUNDOFF*(4*math.sqrt(n)*peak/abs(total) + abs(expo))
            logger.debug("incomplete gamma series: %d terms at |x|=%.3g, "
                         "cancellation %.2g", n, abs(x), peak/abs(total))
            return total*cmath.exp(expo), err
    return None


def _continued_fraction(mu, x):
    """(Gamma(mu, x), relative error estimate) by the Legendre continued
    fraction (modified Lentz), or None if not converged"""
    b = x + 1.0 - mu
    c = 1.0/FPMIN
    d = 1.0/b
    h = d
    for i in range(1, CFRAC_MAXITER):
        an = -i*(i - mu)
        b += 2.0
        d = an*d + b
        if abs(d) < FPMIN:
            d = FPMIN
        c = b + an/c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0/d
        delta = d*c
        h *= delta
        if abs(delta - 1.0) < EPS:
            expo = mu*cmath.log(x) - x
            err = ROUNDOFF*(10*math.sqrt(i) + abs(expo))
            logger.debug("incomplete gamma continued fraction: %d terms at "
                         "|x|=%.3g", i, abs(x))
            return cmath.exp(expo)*h, err
    return None


def _expm1(w):
    if abs(w) < 1.e-5:
        return w*(1 + w*(0.5 + w/6.0))
    return cmath.exp(w) - 1.0


def _quad_complex(func, a, b, **kws):
    "integrate a complex-valued function of a real variable"
    opts = dict(epsabs=1.e-15, epsrel=1.e-12, limit=2000)
    opts.update(kws)
    # the error estimates are checked by the callers
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        re, re_err = integrate.quad(lambda s: func(s).real, a, b, **opts)
        im, im_err = integrate.quad(lambda s: func(s).imag, a, b, **opts)
    return complex(re, im), math.hypot(re_err, im_err)


def _ray_quadrature(mu, x):
    """(gamma(mu, x), absolute error estimate) along the ray t = x s"""
    s1 = min(1.0, 1.0/abs(x))

    # [0, s1] in v = -ln s: s^(mu-1) ds -> e^(-mu v) dv
    def inner(v):
        s = math.exp(-v)
        return cmath.exp(-mu*v)*_expm1(-x*s)
    part0, err0 = _quad_complex(inner, -math.log(s1), np.inf)

    part1, err1 = 0j, 0.0
    if s1 < 1:
        # int_{s1}^1 s^(mu-1) e^(-xr s) e^(-i xi s) ds, minus the "-1" term
        xr, xi = x.real, x.imag

        def amp(s):
            return cmath.exp((mu - 1)*math.log(s) - xr*s)
        if xi != 0:
            omega = abs(xi)
            wcos, ecos = _quad_complex(amp, s1, 1.0, weight='cos', wvar=omega)
            wsin, esin = _quad_complex(amp, s1, 1.0, weight='sin', wvar=omega)
            osc = wcos - 1j*math.copysign(1.0, xi)*wsin
            err1 = math.hypot(ecos, esin)
        else:
            osc, err1 = _quad_complex(amp, s1, 1.0)
        part1 = osc - (1.0 - _power(s1, mu))/mu

    scale = abs(_power(x, mu))
    total = _power(x, mu)*(part0 + part1 + 1.0/mu)
    err = scale*(err0 + err1) + ROUNDOFF*scale*abs(part0 + part1 + 1.0/mu)
    logger.debug("ray quadrature gamma(%r, %r): error estimate %.2e",
                 mu, x, err)
    return _finite(total, 'gamma(%r, %r)' % (mu, x)), err


def lower_incomplete_quadrature(mu, x, rtol=INCOMPLETE_RTOL):
    """gamma(mu, x) by adaptive quadrature along the ray t = x s, 0 <= s <= 1.

    Uses  gamma(mu, x) = x^mu [ int_0^1 s^(mu-1) (e^(-xs) - 1) ds + 1/mu ],
    which is valid for Re mu > -1 (mu != 0) and defines the Abel value when
    Re mu = 0.  The piece [0, s1], s1 = min(1, 1/|x|), is integrated in
    v = -ln s; the oscillatory piece [s1, 1] with cosine/sine weights.

    Raises:
        AccuracyError if the error estimate exceeds rtol |gamma(mu, x)|,
        as it does where the integrand cancels far below its own size.
    """
    mu, x = _check_args(mu, x)
    if mu.real <= -1:
        raise DomainError("ray quadrature needs Re mu > -1, got %r" % mu)
    if x == 0:
        return 0j
    val, err = _ray_quadrature(mu, x)
    if err > rtol*abs(val):
        raise AccuracyError("ray quadrature of gamma(%r, %r): error estimate "
                            "%.3e above %.3e" % (mu, x, err, rtol*abs(val)),
                            estimate=err, tolerance=rtol*abs(val))
    return val


def _routes(mu, x, gam):
    """yield (route, lower', upper', abs. error of lower', abs. error of upper')
    for the normalized functions, cheapest route first"""
    if abs(x) <= abs(mu) + SERIES_RADIUS:
        res = _series(mu, x)
        if res is not None:
            low = res[0]/gam
            err = abs(low)*(res[1] + GAMMA_RTOL)
            yield ('series', low, 1.0 - low, err,
                   err + ROUNDOFF*max(1.0, abs(low)))
    if abs(x) >= CFRAC_RADIUS and abs(cmath.phase(x)) <= CFRAC_MAX_PHASE:
        res = _continued_fraction(mu, x)
        if res is not None:
            up = res[0]/gam
            err = abs(up)*(res[1] + GAMMA_RTOL)
            yield ('continued fraction', 1.0 - up, up,
                   err + ROUNDOFF*max(1.0, abs(up)), err)
    if mu.real > -1:
        try:
            val, qerr = _ray_quadrature(mu, x)
        except AccuracyError:
            return
        low = val/gam
        err = qerr/abs(gam) + abs(low)*GAMMA_RTOL
        yield ('ray quadrature', low, 1.0 - low, err,
               err + ROUNDOFF*max(1.0, abs(low)))


def _normalized(mu, x, upper):
    """lower (upper=False) or upper normalized incomplete gamma function
    by the best-conditioned route"""
    gam = gamma(mu)
    best = None
    for route, low, up, err_low, err_up in _routes(mu, x, gam):
        val, err = (up, err_up) if upper else (low, err_low)
        if val == 0:
            rel = 0.0 if err == 0 else math.inf
        else:
            rel = err/abs(val)
        if best is None or rel < best[0]:
            best = (rel, val, route)
        if rel <= GOOD_RTOL:
            break
    if best is None or not best[0] <= INCOMPLETE_RTOL:
        estimate = math.inf if best is None else best[0]
        raise AccuracyError("%s incomplete gamma at mu=%r, x=%r: relative "
                            "error estimate %.3e above %.3e"
                            % ('upper' if upper else 'lower', mu, x, estimate,
                               INCOMPLETE_RTOL),
                            estimate=estimate, tolerance=INCOMPLETE_RTOL)
    logger.debug("incomplete gamma mu=%r x=%r: %s, relative error %.2e",
                 mu, x, best[2], best[0])
    return _finite(best[1], 'incomplete gamma(%r, %r)' % (mu, x))


def lower_incomplete(mu, x):
    """lower incomplete gamma function gamma(mu, x) (not normalized)"""
    mu, x = _check_args(mu, x)
    if x == 0:
        return 0j
    return _finite(_normalized(mu, x, upper=False)*gamma(mu),
                   'gamma(%r, %r)' % (mu, x))


def upper_incomplete(mu, x):
    """upper incomplete gamma function Gamma(mu, x) (not normalized)"""
    mu, x = _check_args(mu, x)
    if x == 0:
        return gamma(mu)
    return _finite(_normalized(mu, x, upper=True)*gamma(mu),
                   'Gamma(%r, %r)' % (mu, x))


def lower_incomplete_normalized(mu, x):
    """gamma'(mu, x) = gamma(mu, x) / Gamma(mu)"""
    mu, x = _check_args(mu, x)
    if x == 0:
        return 0j
    return _normalized(mu, x, upper=False)


def upper_incomplete_normalized(mu, x):
    """Gamma'(mu, x) = Gamma(mu, x) / Gamma(mu)"""
    mu, x = _check_args(mu, x)
    if x == 0:
        return 1.0 + 0j
    return _normalized(mu, x, upper=True)
