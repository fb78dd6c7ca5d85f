#!/usr/bin/env python

from setuptools import setup

long_desc = """
unruhtrap computes the response of a trapped-ion phonon detector to an
exponentially chirped trap frequency nu e^(kappa t).  Probing one ion of a
linear chain on a motional sideband, the excitation probability follows a
Planck distribution at the temperature kappa/2pi, the ion-trap analog of
the Unruh effect.  The package provides the normal modes and couplings of
Coulomb crystals of up to 10 ions, complex Gamma and incomplete Gamma
functions, closed forms and adaptive quadrature for the chirp integrals,
the red and blue sideband spectra with their finite-window corrections,
two independent checks (a double time integral of the phonon correlation
function and Schrodinger evolution in a truncated Fock basis), and a
command-line program writing sweeps and tables as CSV.
"""

setup(name = 'unruhtrap',
      version = '0.1.0',
      author = 'unruhtrap developers',
      license = 'OSI Approved :: MIT License',
      platforms=['Windows', 'Linux', 'Mac OS X'],
      description  = 'Unruh-effect detector response of ions in a chirped trap',
      long_description = long_desc,
      classifiers=['Intended Audience :: Science/Research',
                   'Operating System :: OS Independent',
                   'Programming Language :: Python',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering',
                   'Topic :: Scientific/Engineering :: Physics'],
      packages = ['unruhtrap'],
      python_requires='>=3.8',
      install_requires=['numpy>=1.17',
                        'scipy>=1.4'],
      extras_require={'test': ['pytest']},
      entry_points={'console_scripts': ['unruhtrap = unruhtrap.cli:main']},
 )
