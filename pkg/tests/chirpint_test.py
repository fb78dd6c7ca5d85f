#!/usr/bin/env python
# chirp-integral quadrature and closed forms

import cmath
import math

import numpy as np
import pytest
from scipy import integrate

from unruhtrap.chirpint import (ChirpProfile, ReducedParams, StaticTrap,
                                chirp_integral, integral_closed_finite,
                                integral_closed_infinite, integral_quadrature,
                                rindler_noise_spectrum)
from unruhtrap.errors import DomainError

UNRUH_ONE = 2*math.pi/math.expm1(2*math.pi)     # |I|^2 kappa^2 at a = 1

A_GRID = (-3, -1, -0.5, -0.1, 0.1, 0.5, 1, 3)
B_GRID = (0.01, 0.1, 1, 10)
Y_GRID = ((1e-3, 10), (1, 100), (1e-2, 1e3))


def brute_force(kappa, nu_p, delta, t0, t1):
    "I_p by scipy quad directly in t"
    def phase(t):
        return delta*t + (nu_p/kappa)*math.exp(kappa*t)
    opts = dict(limit=500, epsabs=1e-13, epsrel=1e-12)
    re = integrate.quad(lambda t: math.cos(phase(t)), t0, t1, **opts)[0]
    im = integrate.quad(lambda t: math.sin(phase(t)), t0, t1, **opts)[0]
    return complex(re, im)


def test_empty_range():
    params = ReducedParams(a=1, b=1, y0=1, yT=1)
    quad = integral_quadrature(params, 1.0)
    assert quad.value == 0
    assert quad.err_estimate == 0
    closed = integral_closed_finite(params, 1.0)
    assert abs(closed.value) < 1e-10


@pytest.mark.parametrize('a', A_GRID)
def test_closed_form_matches_quadrature(a):
    for b in B_GRID:
        for y0, yT in Y_GRID:
            params = ReducedParams(a=a, b=b, y0=y0, yT=yT)
            quad = integral_quadrature(params, 1.0)
            closed = integral_closed_finite(params, 1.0)
            assert quad.method == 'quadrature'
            assert closed.method == 'closed_finite'
            assert quad.err_estimate >= 0
            assert abs(quad.value - closed.value) < 1e-6*abs(closed.value), (a, b, y0, yT)
            assert quad.abs_sq == pytest.approx(abs(quad.value)**2, rel=1e-14)


def test_kappa_scaling():
    params = ReducedParams(a=0.7, b=2.0, y0=0.1, yT=20)
    one = integral_closed_finite(params, 1.0).value
    assert integral_closed_finite(params, 4.0).value == pytest.approx(one/4, rel=1e-13)
    assert integral_quadrature(params, 4.0).value == pytest.approx(one/4, rel=1e-8)


def test_matches_direct_time_integration():
    chirp = ChirpProfile(kappa=0.8, t_start=-1.0, t_stop=2.5)
    direct = brute_force(0.8, 1.3, 0.6, -1.0, 2.5)
    assert chirp_integral(chirp, 0.6, 1.3).value == pytest.approx(direct, rel=1e-9)
    assert chirp_integral(chirp, 0.6, 1.3, method='quadrature').value == \
        pytest.approx(direct, rel=1e-9)


@pytest.mark.parametrize('delta', (0.5, -0.5, 0.0, 2.0))
def test_chirp_down(delta):
    chirp = ChirpProfile(kappa=-1.0, t_start=0.0, t_stop=3.0)
    params = chirp.reduced(delta, 1.0)
    assert params.sign == -1
    assert params.y0 == pytest.approx(math.exp(-3.0))
    assert params.yT == pytest.approx(1.0)
    result = chirp_integral(chirp, delta, 1.0)
    assert result.method == 'quadrature'
    assert result.value == pytest.approx(brute_force(-1.0, 1.0, delta, 0.0, 3.0),
                                         rel=1e-9)


def test_closed_forms_need_chirp_up():
    params = ReducedParams(a=1, b=1, y0=0.1, yT=1, sign=-1)
    with pytest.raises(DomainError):
        integral_closed_finite(params, 1.0)
    with pytest.raises(DomainError):
        integral_closed_finite(ReducedParams(a=1, b=1, y0=0.1, yT=1), -1.0)
    with pytest.raises(DomainError):
        integral_closed_infinite(1.0, -1.0)


def test_zero_detuning():
    with pytest.raises(DomainError):
        integral_closed_finite(ReducedParams(a=0, b=1, y0=0.1, yT=10), 1.0)
    with pytest.raises(DomainError):
        integral_closed_infinite(0, 1.0)
    # finite window: the quadrature still works
    params = ReducedParams(a=0, b=1, y0=0.1, yT=10)
    expected = brute_force(1.0, 1.0, 0.0, math.log(0.1), math.log(10))
    assert integral_quadrature(params, 1.0).value == pytest.approx(expected, rel=1e-9)
    with pytest.raises(DomainError):
        integral_quadrature(ReducedParams(a=0, b=1, y0=0, yT=10), 1.0)


def test_infinite_form():
    red = integral_closed_infinite(1.0, 1.0)
    assert red.method == 'closed_infinite'
    assert red.abs_sq == pytest.approx(UNRUH_ONE, rel=1e-13)
    assert red.abs_sq == pytest.approx(0.011755, rel=1e-4)
    assert abs(red.value)**2 == pytest.approx(red.abs_sq, rel=1e-12)
    blue = integral_closed_infinite(-1.0, 1.0)
    assert blue.abs_sq == pytest.approx(2*math.pi/(1 - math.exp(-2*math.pi)), rel=1e-13)
    assert blue.abs_sq == pytest.approx(6.2948, rel=1e-4)
    assert abs(blue.value)**2 == pytest.approx(blue.abs_sq, rel=1e-12)
    assert integral_closed_infinite(40.0, 1.0).abs_sq < 1e-100
    assert integral_closed_infinite(1.0, 2.0).abs_sq == pytest.approx(UNRUH_ONE/4, rel=1e-13)


def test_infinite_phase():
    b = 3.0
    value = integral_closed_infinite(0.4, 1.0, b=b).value
    plain = integral_closed_infinite(0.4, 1.0).value
    assert value == pytest.approx(plain*cmath.exp(-0.4j*math.log(b)), rel=1e-13)


def test_finite_reduces_to_infinite():
    params = ReducedParams(a=0.8, b=1.5, y0=0, yT=math.inf)
    closed = integral_closed_finite(params, 1.0)
    assert closed.value == pytest.approx(
        integral_closed_infinite(0.8, 1.0, b=1.5).value, rel=1e-12)


def test_large_window_limit():
    # adiabatic switch-on (y0 = 0) and a long chirp
    params = ReducedParams(a=1.0, b=1.0, y0=0, yT=1e6)
    closed = integral_closed_finite(params, 1.0)
    assert closed.abs_sq == pytest.approx(UNRUH_ONE, rel=1e-4)
    shorter = ReducedParams(a=1.0, b=1.0, y0=0, yT=1e4)
    quad = integral_quadrature(shorter, 1.0)
    assert quad.value == pytest.approx(integral_closed_finite(shorter, 1.0).value,
                                       rel=1e-6)


def test_convergence_to_infinite_form():
    b = 1.0
    limit = integral_closed_infinite(1.0, 1.0, b=b).value
    dist = []
    for by in (10, 100, 1000):
        params = ReducedParams(a=1.0, b=b, y0=0, yT=by/b)
        dist.append(abs(integral_closed_finite(params, 1.0).value - limit))
    assert dist[0] > dist[1] > dist[2]
    # tail of the sharp cut-off
    assert dist[2] < 2.5/1000


def test_abel_lower_limit_matches_small_y0():
    # y0 -> 0 differs from the Abel value by the lower incomplete-gamma term
    full = integral_closed_finite(ReducedParams(a=0.5, b=1, y0=0, yT=10), 1.0)
    tiny = integral_closed_finite(ReducedParams(a=0.5, b=1, y0=1e-8, yT=10), 1.0)
    quad = integral_quadrature(ReducedParams(a=0.5, b=1, y0=1e-8, yT=10), 1.0)
    assert quad.value == pytest.approx(tiny.value, rel=1e-6)
    assert abs(tiny.value - full.value) > 0.1
    # the difference is y^(ia)/(ia) at the lower end, up to O(b y0)
    assert tiny.value - full.value == pytest.approx(
        -cmath.exp(0.5j*math.log(1e-8))/0.5j, rel=1e-6)


def test_rindler_spectrum():
    assert rindler_noise_spectrum(2.0, 2.0)*4 == pytest.approx(UNRUH_ONE, rel=1e-13)
    for delta in (0.1, 0.7, 3.0):
        assert rindler_noise_spectrum(delta, 1.3) == pytest.approx(
            integral_closed_infinite(delta/1.3, 1.3).abs_sq, rel=1e-15)
    assert rindler_noise_spectrum(100.0, 1.0) < 1e-200
    with pytest.raises(DomainError):
        rindler_noise_spectrum(0.0, 1.0)
    with pytest.raises(DomainError):
        rindler_noise_spectrum(1.0, 0.0)


def test_profile_validation():
    with pytest.raises(DomainError):
        ChirpProfile(kappa=0, t_start=0, t_stop=1)
    with pytest.raises(DomainError):
        ChirpProfile(kappa=1, t_start=2, t_stop=1)
    with pytest.raises(DomainError):
        ChirpProfile(kappa=-1, t_start=-math.inf, t_stop=1)
    with pytest.raises(DomainError):
        ReducedParams(a=1, b=0, y0=0.1, yT=1)
    with pytest.raises(DomainError):
        ReducedParams(a=1, b=1, y0=2, yT=1)
    with pytest.raises(DomainError):
        StaticTrap(t_start=0, t_stop=math.inf)


def test_profile_from_y():
    chirp = ChirpProfile.from_y(2.0, 0.5, 100.0)
    assert chirp.t_start == pytest.approx(math.log(0.5)/2)
    assert chirp.y_stop == pytest.approx(100.0)
    assert ChirpProfile.from_y(1.0, 0, 10).t_start == -math.inf
    assert ChirpProfile.from_y(1.0, 0, 10).y_start == 0
    t = np.linspace(-1, 1, 5)
    assert chirp.phase(t, 3.0) == pytest.approx(1.5*np.exp(2*t), rel=1e-15)
    assert chirp.frequency(t, 3.0) == pytest.approx(3*np.exp(2*t), rel=1e-15)
    static = StaticTrap(0.0, 2.0)
    assert static.phase(t, 3.0) == pytest.approx(3*t)
