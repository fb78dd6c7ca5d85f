#!/usr/bin/env python
"""
   unruhtrap: phonon-detector response of an ion in a chirped trap.

   An ion in a trap whose frequency is chirped as nu e^(kappa t) and probed
   on a motional sideband is excited with a Planck-shaped probability at
   the temperature kappa/2pi: the trapped-ion analog of the Unruh effect.
   unruhtrap computes these probabilities from the normal modes of the
   ion chain, in the infinite-chirp limit and for finite chirp windows,
   and checks them against a double time integral of the correlation
   function and against Schrodinger evolution in a truncated Fock basis.

   License:  MIT

   the main pieces provided by unruhtrap are:

      IonChain:      equilibrium positions, normal modes and couplings

      ChirpProfile:  chirp rate and window; chirp_integral evaluates I_p

      DetectorProbe: detuning, Rabi frequency, Lamb-Dicke parameter, ion

      red_probability, blue_probability, finite_chirp_probability,
      sideband_ratio, unruh_temperature, prefactor: spectrum observables

      perturbative_probability, evolve_schrodinger: independent checks

   and the `unruhtrap` command writes sweeps and tables as CSV.
"""

__version__ = '0.1.0'

from .errors import (UnruhTrapError, DomainError, ConvergenceError,
                     AccuracyError, IntegratorError, ConfigError,
                     TruncationWarning, PerturbativeWarning)
from .ionchain import (IonChain, equilibrium_positions, mode_decomposition,
                       couplings, mode_frequencies, mode_weight)
from .specfun import (gamma, lower_incomplete_normalized,
                      upper_incomplete_normalized)
from .chirpint import (ChirpProfile, StaticTrap, ReducedParams, ChirpIntegral,
                       chirp_integral, integral_quadrature,
                       integral_closed_finite, integral_closed_infinite,
                       rindler_noise_spectrum)
from .spectrum import (DetectorProbe, SpectrumPoint, red_probability,
                       blue_probability, finite_chirp_probability,
                       sideband_ratio, measured_ratio, unruh_temperature,
                       prefactor, unruh_regime, spectrum_point, sweep)
from .oracle import (OracleConfig, TruncatedState, correlation_function,
                     perturbative_probability, evolve_schrodinger,
                     constant_trap_response)
