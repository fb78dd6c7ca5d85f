#!/usr/bin/env python
# double time integral and Schrodinger-evolution checks

import math

import numpy as np
import pytest

from unruhtrap.chirpint import ChirpProfile, StaticTrap
from unruhtrap.errors import DomainError, TruncationWarning
from unruhtrap.ionchain import IonChain
from unruhtrap.oracle import (OracleConfig, constant_trap_response,
                              correlation_function, evolve_schrodinger,
                              perturbative_probability)
from unruhtrap.spectrum import DetectorProbe, finite_chirp_probability

TWOPI = 2*math.pi
SINGLE = IonChain.build(1, 1.0)
WINDOW = ChirpProfile.from_y(1.0, 1.e-2, 100.0)


def probe(delta, chi=0.005, ion=1):
    return DetectorProbe(detuning=delta, rabi=chi/0.1, lamb_dicke=0.1, ion_index=ion)


def test_correlation_function():
    chain = IonChain.build(3, 1.0)
    t = np.linspace(-1, 1, 7)
    same = correlation_function(chain, 2, WINDOW, t, t)
    weights = chain.mode_matrix[1, :]**2/np.sqrt(chain.mode_eigenvalues)
    assert same.real == pytest.approx(np.full(7, weights.sum()), rel=1e-14)
    assert np.abs(same.imag).max() < 1e-14
    g12 = correlation_function(chain, 1, WINDOW, 0.3, -0.2)
    g21 = correlation_function(chain, 1, WINDOW, -0.2, 0.3)
    assert g12 == pytest.approx(np.conj(g21), rel=1e-14)
    expected = sum(w*np.exp(1j*(WINDOW.phase(0.3, nu) - WINDOW.phase(-0.2, nu)))
                   for w, nu in zip(chain.mode_matrix[0, :]**2/np.sqrt(chain.mode_eigenvalues),
                                    np.sqrt(chain.mode_eigenvalues)))
    assert g12 == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize('y_t', (1.0, 10.0, 100.0))
def test_double_integral_matches_closed_form(y_t):
    window = ChirpProfile.from_y(1.0, 1.e-2, y_t)
    for x in np.linspace(1, 8, 8):
        p = probe(x/TWOPI, chi=0.01)
        closed = finite_chirp_probability(SINGLE, p, window)
        double = perturbative_probability(SINGLE, p, window)
        assert double == pytest.approx(closed, rel=1e-4)


def test_double_integral_factorizes_over_modes():
    chain = IonChain.build(2, 1.0)
    chirp = ChirpProfile.from_y(1.0, 0.1, 10.0)
    for ion in (1, 2):
        for delta in (-0.6, 0.4):
            p = probe(delta, chi=0.02, ion=ion)
            double = perturbative_probability(chain, p, chirp)
            assert double == pytest.approx(finite_chirp_probability(chain, p, chirp),
                                           rel=1e-6)


def test_double_integral_chirp_down():
    chirp = ChirpProfile(kappa=-1.0, t_start=0.0, t_stop=3.0)
    p = probe(0.5, chi=0.01)
    assert perturbative_probability(SINGLE, p, chirp) == pytest.approx(
        finite_chirp_probability(SINGLE, p, chirp), rel=1e-6)


def test_double_integral_config():
    p = probe(0.5)
    base = perturbative_probability(SINGLE, p, WINDOW)
    doubled = perturbative_probability(SINGLE, p, WINDOW, OracleConfig(chi=0.01))
    assert doubled == pytest.approx(4*base, rel=1e-12)
    assert perturbative_probability(SINGLE, p, WINDOW, OracleConfig(chi=0.0)) == 0
    assert perturbative_probability(SINGLE, p, ChirpProfile(1.0, 0.2, 0.2)) == 0


def test_oracle_needs_finite_window():
    endless = ChirpProfile.from_y(1.0, 0, 100.0)
    with pytest.raises(DomainError):
        perturbative_probability(SINGLE, probe(0.5), endless)
    with pytest.raises(DomainError):
        evolve_schrodinger(OracleConfig(), SINGLE, probe(0.5), endless)


def test_oracle_config_validation():
    with pytest.raises(DomainError):
        OracleConfig(n_max=0)
    with pytest.raises(DomainError):
        OracleConfig(n_max=4)
    with pytest.raises(DomainError):
        OracleConfig(terms='both')
    with pytest.raises(DomainError):
        OracleConfig(chi=-1.0)
    with pytest.raises(DomainError):
        OracleConfig(rtol=0)


def test_schrodinger_matches_first_order():
    # at chi/kappa = 0.01 a few 1e-6 of the population reaches two phonons
    config = OracleConfig(n_max=2, trunc_tol=1e-4)
    for x in np.linspace(1, 8, 8):
        p = probe(x/TWOPI, chi=0.01)
        state = evolve_schrodinger(config, SINGLE, p, WINDOW)
        closed = finite_chirp_probability(SINGLE, p, WINDOW)
        assert abs(state.norm - 1) < 1e-9
        assert state.edge_population < 1e-4
        assert state.excited_population == pytest.approx(closed, rel=1e-2)


def test_schrodinger_truncation():
    p = probe(1/TWOPI)
    two = evolve_schrodinger(OracleConfig(n_max=2), SINGLE, p, WINDOW)
    three = evolve_schrodinger(OracleConfig(n_max=3), SINGLE, p, WINDOW)
    assert three.excited_population == pytest.approx(two.excited_population, rel=1e-4)
    with pytest.warns(TruncationWarning):
        one = evolve_schrodinger(OracleConfig(n_max=1), SINGLE, p, WINDOW)
    assert one.edge_population > 1e-6
    assert one.phonon_population(1, 1) == pytest.approx(one.edge_population)


def test_schrodinger_rotating_terms():
    p = probe(2/TWOPI)
    red = evolve_schrodinger(OracleConfig(terms='red'), SINGLE, p, WINDOW)
    assert red.excited_population == 0
    assert red.norm == pytest.approx(1.0, abs=1e-12)
    blue = evolve_schrodinger(OracleConfig(terms='blue'), SINGLE, p, WINDOW)
    full = evolve_schrodinger(OracleConfig(terms='full'), SINGLE, p, WINDOW)
    assert blue.excited_population == pytest.approx(full.excited_population, rel=1e-3)


def test_schrodinger_phase_reference():
    p = probe(3/TWOPI)
    plain = evolve_schrodinger(OracleConfig(), SINGLE, p, WINDOW)
    shifted = evolve_schrodinger(OracleConfig(phase_reference=True), SINGLE, p, WINDOW)
    assert shifted.excited_population == pytest.approx(plain.excited_population, rel=1e-6)


def test_schrodinger_two_ions():
    chain = IonChain.build(2, 1.0)
    chirp = ChirpProfile.from_y(1.0, 0.1, 10.0)
    p = probe(0.4, ion=2)
    state = evolve_schrodinger(OracleConfig(), chain, p, chirp)
    assert state.amplitudes.shape == (2, 3, 3)
    assert state.excited_population == pytest.approx(
        finite_chirp_probability(chain, p, chirp), rel=1e-2)
    # the probed excitation leaves one phonon in one of the modes
    ones = state.phonon_population(1, 1) + state.phonon_population(2, 1)
    assert ones == pytest.approx(state.excited_population, rel=1e-2)


def test_schrodinger_limits():
    with pytest.raises(DomainError):
        evolve_schrodinger(OracleConfig(), IonChain.build(4, 1.0), probe(0.5),
                           WINDOW)
    idle = evolve_schrodinger(OracleConfig(chi=0.0), SINGLE, probe(0.5), WINDOW)
    assert idle.excited_population == 0
    assert idle.norm == 1


def test_static_trap():
    chi, nu = 0.01, 1.0
    static = StaticTrap(0.0, 2.0)
    p = probe(-nu, chi=chi)
    state = evolve_schrodinger(OracleConfig(), SINGLE, p, static)
    assert state.excited_population == pytest.approx((chi*2.0)**2, rel=1e-2)
    expected = chi**2*constant_trap_response(p, nu, 2.0)
    assert expected == pytest.approx((chi*2.0)**2, rel=1e-12)
    assert perturbative_probability(SINGLE, p, static) == pytest.approx(expected,
                                                                       rel=1e-8)


def test_constant_trap_response():
    p = probe(-1.0)
    assert constant_trap_response(p, 1.0, 3.0) == pytest.approx(9.0)
    # first zero of the sinc at (Delta + nu) t = 2 pi
    off = probe(-1.0 + TWOPI/3.0)
    assert constant_trap_response(off, 1.0, 3.0) < 1e-20
    with pytest.raises(DomainError):
        constant_trap_response(p, 1.0, 0.0)


def test_inertial_trap_sees_no_red_sideband():
    nu = 1.0
    t_window = 100*math.pi/nu
    peak = constant_trap_response(probe(-nu), nu, t_window)
    assert peak == pytest.approx(t_window**2)
    assert constant_trap_response(probe(nu), nu, t_window) < 1e-3*peak
