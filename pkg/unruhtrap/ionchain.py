#!/usr/bin/env python
"""
Axial normal modes of a linear chain of N ions in a harmonic trap.

Lengths are in units of the usual Coulomb length scale
l = (Z^2 e^2 / 4 pi eps0 M nu^2)^(1/3), in which the equilibrium condition
for ion m reads

    u_m - sum_{n<m} (u_m - u_n)^-2 + sum_{n>m} (u_m - u_n)^-2 = 0

and the Hessian of the dimensionless potential is

    A_mm = 1 + 2 sum_{n != m} |u_m - u_n|^-3,   A_mn = -2 |u_m - u_n|^-3.

Its eigenvalues mu_p give the mode frequencies nu_p = sqrt(mu_p) nu, its
eigenvectors b_m^(p) the participation of ion m in mode p, and the couplings
entering the detector Hamiltonian are s_m^(p) = sqrt(N) b_m^(p) / mu_p^(1/4).
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import constants

from .errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

NEWTON_MAXITER = 200
NEWTON_TOL = 1.e-13
RESIDUAL_MAX = 1.e-12
SPACING_GUESS = 1.06


def _pair_distances(u):
    diff = u[:, None] - u[None, :]
    np.fill_diagonal(diff, np.inf)
    return diff


def equilibrium_force(u):
    """dimensionless net force on each ion at positions u"""
    u = np.asarray(u, dtype=float)
    diff = _pair_distances(u)
    return u - (np.sign(diff)/diff**2).sum(axis=1)


def hessian(positions):
    """Hessian A_mn of the dimensionless potential at `positions`
    (also the Jacobian of equilibrium_force)"""
    u = np.asarray(positions, dtype=float)
    inv3 = 1.0/np.abs(_pair_distances(u))**3
    amat = -2.0*inv3
    np.fill_diagonal(amat, 1.0 + 2.0*inv3.sum(axis=1))
    return amat


def equilibrium_positions(n_ions, maxiter=NEWTON_MAXITER, tol=NEWTON_TOL):
    """equilibrium positions of `n_ions` ions, sorted ascending.

    Args:
        n_ions (int): number of ions, >= 1
        maxiter (int): Newton iteration cap [200]
        tol (float): target max-norm of the force residual [1e-13]

    Returns:
        ndarray of N dimensionless coordinates, antisymmetric about 0

    Raises:
        DomainError for n_ions < 1, ConvergenceError carrying the residual
        if the damped Newton iteration does not converge.
    """
    n_ions = int(n_ions)
    if n_ions < 1:
        raise DomainError("need at least one ion, got %d" % n_ions)
    if n_ions == 1:
        return np.zeros(1)

    u = (np.arange(1, n_ions+1) - (n_ions+1)/2.0) * SPACING_GUESS
    force = equilibrium_force(u)
    resid = np.abs(force).max()
    niter = 0
    while resid > tol and niter < maxiter:
        niter += 1
        step = np.linalg.solve(hessian(u), -force)
        lam = 1.0
        while lam > 1.e-10:
            trial = u + lam*step
            if np.all(np.diff(trial) > 0):
                tforce = equilibrium_force(trial)
                tresid = np.abs(tforce).max()
                if tresid < resid:
                    break
            lam *= 0.5
        else:
            # no further decrease possible: rounding floor
            break
        u, force, resid = trial, tforce, tresid
        logger.debug("chain N=%d newton iter %d: damping %g, residual %.3e",
                     n_ions, niter, lam, resid)

    # restore exact mirror symmetry lost to rounding
    u = 0.5*(u - u[::-1])
    resid = np.abs(equilibrium_force(u)).max()
    if resid >= max(tol, RESIDUAL_MAX):
        raise ConvergenceError("equilibrium of %d ions not converged after "
                               "%d iterations (residual %.3e)" %
                               (n_ions, niter, resid),
                               residual=resid, iterations=niter)
    return u


def _fix_sign(vec, rtol=1.e-9):
    """flip vec so that its first largest-magnitude entry is positive.
    Entries within rtol of the maximum count as ties, which keeps mirror
    (antisymmetric) modes deterministic."""
    mag = np.abs(vec)
    idx = int(np.argmax(mag >= mag.max()*(1.0 - rtol)))
    return -vec if vec[idx] < 0 else vec


def mode_decomposition(positions):
    """eigenvalues mu_p (ascending) and orthonormal eigenvectors
    (columns, b[m, p]) of the chain Hessian"""
    try:
        mu, bmat = np.linalg.eigh(hessian(positions))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError("Hessian eigensolve failed: %s" % exc)
    for p in range(bmat.shape[1]):
        bmat[:, p] = _fix_sign(bmat[:, p])
    return mu, bmat


def couplings(mode_eigenvalues, mode_matrix):
    """s_m^(p) = sqrt(N) b_m^(p) / mu_p^(1/4), same layout as mode_matrix"""
    mu = np.asarray(mode_eigenvalues, dtype=float)
    bmat = np.asarray(mode_matrix, dtype=float)
    nions = len(mu)
    if bmat.shape != (nions, nions):
        raise DomainError("mode matrix shape %s does not match %d modes" %
                          (bmat.shape, nions))
    if np.any(mu <= 0):
        raise DomainError("mode eigenvalues must be positive")
    return np.sqrt(nions) * bmat / mu[None, :]**0.25


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class IonChain:
    """N ions in a trap of bare (axial) frequency nu_bare [rad/s], with
    equilibrium positions, mode eigenvalues, mode vectors b[m, p] and
    couplings s[m, p]. Indices are 0-based in the arrays; ion and mode
    numbers given to functions are 1-based as in the physics notation."""
    n_ions: int
    nu_bare: float
    positions: np.ndarray
    mode_eigenvalues: np.ndarray
    mode_matrix: np.ndarray
    couplings: np.ndarray

    @classmethod
    def build(cls, n_ions, nu_bare):
        "solve for the equilibrium and normal modes of n_ions ions"
        if not nu_bare > 0:
            raise DomainError("trap frequency must be positive, got %r" % (nu_bare,))
        pos = equilibrium_positions(n_ions)
        mu, bmat = mode_decomposition(pos)
        return cls(n_ions=int(n_ions), nu_bare=float(nu_bare),
                   positions=_frozen(pos), mode_eigenvalues=_frozen(mu),
                   mode_matrix=_frozen(bmat),
                   couplings=_frozen(couplings(mu, bmat)))

    def check_ion(self, ion):
        "validate a 1-based ion index, returning the 0-based one"
        ion = int(ion)
        if ion < 1 or ion > self.n_ions:
            raise DomainError("ion index %d outside 1..%d" % (ion, self.n_ions))
        return ion - 1


def mode_frequencies(chain):
    "nu_p = sqrt(mu_p) nu  [rad/s]"
    return np.sqrt(chain.mode_eigenvalues) * chain.nu_bare


def mode_weight(chain, ion=1):
    """sum_p |b_m^(p)|^2 / sqrt(mu_p) for ion m: the mode factor
    multiplying every excitation probability"""
    m = chain.check_ion(ion)
    return float((chain.mode_matrix[m, :]**2 /
                  np.sqrt(chain.mode_eigenvalues)).sum())


def breathing_mode_vector(positions):
    """breathing-mode eigenvector b^(2)_m = u_m/sqrt(sum u^2), built from the
    equilibrium positions (the breathing mode is a uniform dilation)"""
    u = np.asarray(positions, dtype=float)
    if len(u) < 2:
        raise DomainError("a single ion has no breathing mode")
    return _fix_sign(u/np.sqrt((u*u).sum()))


def breathing_mode_coupling(positions):
    "s_m^(2) = sqrt(N) b^(2)_m / 3^(1/4)"
    return np.sqrt(len(positions)) * breathing_mode_vector(positions) / 3**0.25


def lamb_dicke_parameter(wavelength, angle, mass_amu, nu):
    """eta = sqrt(hbar k^2 cos^2(theta) / (2 M nu))

    Args:
        wavelength (float): effective (Raman difference) wavelength [m]
        angle (float): angle between beam and trap axis [rad]
        mass_amu (float): ion mass [u]
        nu (float): trap frequency [rad/s]
    """
    if wavelength <= 0 or mass_amu <= 0 or nu <= 0:
        raise DomainError("wavelength, mass and trap frequency must be positive")
    kvec = 2*np.pi/wavelength
    mass = mass_amu*constants.atomic_mass
    return float(np.sqrt(constants.hbar*(kvec*np.cos(angle))**2/(2*mass*nu)))
