#!/usr/bin/env python
"""
Exceptions and warning categories for unruhtrap.

All numerical failures derive from UnruhTrapError so a caller can catch
everything from the package in one place; the command-line front end maps
ConfigError to exit code 2 and the numerical failures to exit code 3.
"""


class UnruhTrapError(Exception):
    "base class for all unruhtrap errors"


class DomainError(UnruhTrapError, ValueError):
    """argument outside the domain of an operation
    (gamma pole, zero detuning in a closed form, wrong sideband, ...)"""


class ConvergenceError(UnruhTrapError, ArithmeticError):
    """iterative solve stopped at its iteration cap"""
    def __init__(self, msg, residual=None, iterations=None):
        UnruhTrapError.__init__(self, msg)
        self.residual = residual
        self.iterations = iterations


class AccuracyError(UnruhTrapError, ArithmeticError):
    """error estimate still above tolerance after all refinements"""
    def __init__(self, msg, estimate=None, tolerance=None):
        UnruhTrapError.__init__(self, msg)
        self.estimate = estimate
        self.tolerance = tolerance


class IntegratorError(UnruhTrapError, ArithmeticError):
    """time integration failed, or the state norm drifted"""
    def __init__(self, msg, drift=None):
        UnruhTrapError.__init__(self, msg)
        self.drift = drift


class ConfigError(UnruhTrapError, ValueError):
    """bad run configuration; `key` names the offending parameter"""
    def __init__(self, msg, key=None):
        UnruhTrapError.__init__(self, msg)
        self.key = key


class TruncationWarning(UserWarning):
    "population reached the top of the truncated phonon basis"


class PerturbativeWarning(UserWarning):
    "first-order probability too large to be trusted"


NUMERICAL_ERRORS = (ConvergenceError, AccuracyError, IntegratorError)
