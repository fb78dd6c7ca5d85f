#!/usr/bin/env python
"""
Command-line front end: parameter sweeps and tables as CSV.

    unruhtrap [options] modes | scan | fig3 | ratio | oracle-check

Results go to stdout or --out, log messages to stderr.  Exit codes:
0 success, 2 configuration error, 3 numerical failure.  Negative values
need the '=' form, for example --t0=-inf or --delta-min=-1.
"""
import argparse
import logging
import math
import sys
from dataclasses import replace
from functools import partial

import numpy as np

from . import __version__
from .chirpint import ChirpProfile
from .config import COMMANDS, RunConfig, read_config_file
from .errors import (NUMERICAL_ERRORS, AccuracyError, ConfigError,
                     DomainError)
from .ionchain import IonChain
from .oracle import OracleConfig, evolve_schrodinger, perturbative_probability
from .spectrum import (DetectorProbe, finite_chirp_probability, pool_map,
                       prefactor, red_probability, sideband_ratio, sweep,
                       unruh_temperature)
from .utils import TWOPI, csv_buffer

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3
FIG3_X = (0.25, 8.0)
FIG3_Y_T = (1, 10, 100)
FIG3_T0 = -math.inf

# flag name -> config key
FLAGS = (('n', int, 'number of ions'),
         ('nu_hz', float, 'bare trap frequency nu/2pi [Hz]'),
         ('kappa', float, 'chirp rate [rad/s], negative for a chirp down'),
         ('delta_min', float, 'first detuning of the sweep [rad/s]'),
         ('delta_max', float, 'last detuning of the sweep [rad/s]'),
         ('steps', int, 'number of sweep points'),
         ('rabi_hz', float, 'Rabi frequency Omega0/2pi [Hz]'),
         ('eta', float, 'Lamb-Dicke parameter'),
         ('ion', int, 'probed ion (1-based)'),
         ('t0', float, 'chirp start time [s] (-inf: adiabatic switch-on)'),
         ('t_stop', float, 'chirp stop time [s]'),
         ('y_t', float, 'e^(kappa T), used when --t-stop is not given'),
         ('n_max', int, 'phonon truncation for oracle-check'),
         ('workers', int, 'worker processes for scan, fig3 and oracle-check'),
         ('out', str, 'output CSV file (default: stdout)'))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='unruhtrap',
        description='detector response of an ion in an exponentially '
                    'chirped trap')
    parser.add_argument('command', choices=COMMANDS, help='table to produce')
    for key, kind, text in FLAGS:
        parser.add_argument('--' + key.replace('_', '-'), dest=key, type=kind,
                            default=None, help=text)
    parser.add_argument('--config', default=None,
                        help='file of "key = value" lines')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='debug messages on stderr')
    parser.add_argument('--version', action='version', version=__version__)
    return parser


def parse_config(args, config_file=None):
    """RunConfig from parsed arguments: defaults, then the config file
    (args.config or config_file), then the flags given on the command line.

    Raises ConfigError for unknown keys, malformed numbers, missing keys or
    invalid combinations.
    """
    config = RunConfig(args.command)
    fname = args.config if args.config is not None else config_file
    if fname is not None:
        config.load_config(read_config_file(fname))
    overrides = {}
    for key, _, _ in FLAGS:
        val = getattr(args, key, None)
        if val is not None:
            overrides[key] = val
    config.load_config(overrides)
    config.validate()
    return config


def _probe(config, detuning=0.0):
    return DetectorProbe(detuning=detuning, rabi=config.rabi,
                         lamb_dicke=config.eta, ion_index=config.ion)


def _detunings(config):
    return np.linspace(config.delta_min, config.delta_max, config.steps)


def validate_rows(rows, columns):
    """post-emission check: probability columns finite (or nan where not
    defined) and non-negative"""
    for row in rows:
        for col in columns:
            val = row[col]
            if math.isnan(val):
                continue
            if not (math.isfinite(val) and val >= 0):
                raise AccuracyError("row %r holds an invalid probability %r"
                                    % (row, val))
    return True


def run_modes(config):
    chain = IonChain.build(config.n, config.nu)
    nions = chain.n_ions
    header = (['p', 'mu_p'] + ['b_%d' % m for m in range(1, nions+1)] +
              ['s_%d' % m for m in range(1, nions+1)])
    rows = []
    for p in range(nions):
        rows.append([p+1, chain.mode_eigenvalues[p]] +
                    list(chain.mode_matrix[:, p]) + list(chain.couplings[:, p]))
    return csv_buffer(header, rows)


def run_scan(config):
    """rows (delta, x = 2 pi delta/kappa, p_red_or_blue, p_finite,
    validity_flag) over the detuning sweep, in sweep order"""
    chain = IonChain.build(config.n, config.nu)
    chirp = ChirpProfile(kappa=config.kappa, t_start=config.t0,
                         t_stop=config.chirp_stop())
    points = sweep(chain, _probe(config), chirp, _detunings(config),
                   workers=config.workers)
    rows = [[pt.detuning, TWOPI*pt.detuning/config.kappa, pt.p_sideband,
             pt.p_finite, int(pt.perturbative)] for pt in points]
    validate_rows(rows, (2, 3))
    return csv_buffer(('delta', 'x', 'p_red_or_blue', 'p_finite',
                       'validity_flag'), rows)


def _fig3_row(x, chain, probe, chirps):
    kappa = chirps[0].kappa
    probe = replace(probe, detuning=x*kappa/TWOPI)
    row = [x, probe.detuning, red_probability(chain, probe, kappa)]
    row.extend(finite_chirp_probability(chain, probe, chirp) for chirp in chirps)
    return row


def run_fig3(config):
    """Unruh-limit curve and finite-window curves for y_T = 1, 10, 100 with
    an adiabatic switch-on, over x = 2 pi Delta/kappa in [0.25, 8]"""
    chain = IonChain.build(config.n, config.nu)
    kappa = config.kappa
    chirps = [ChirpProfile(kappa=kappa, t_start=FIG3_T0,
                           t_stop=math.log(y_t)/kappa) for y_t in FIG3_Y_T]
    xs = [float(x) for x in np.linspace(FIG3_X[0], FIG3_X[1], config.steps)]
    func = partial(_fig3_row, chain=chain, probe=_probe(config), chirps=chirps)
    rows = pool_map(func, xs, workers=config.workers)
    validate_rows(rows, (2, 3, 4, 5))
    header = ['x', 'delta', 'p_unruh'] + ['p_y_t_%d' % y for y in FIG3_Y_T]
    return csv_buffer(header, rows)


def run_ratio(config):
    ratio = sideband_ratio(config.nu, config.kappa)
    row = [config.nu, config.kappa, config.nu/config.kappa,
           TWOPI*config.nu/config.kappa, ratio, unruh_temperature(config.kappa),
           prefactor(_probe(config), config.nu)]
    return csv_buffer(('nu', 'kappa', 'nu_over_kappa', 'z', 'ratio',
                       'unruh_temp', 'prefactor'), [row])


def _oracle_row(delta, chain, probe, chirp, oconf):
    probe = replace(probe, detuning=delta)
    p_closed = finite_chirp_probability(chain, probe, chirp)
    p_double = perturbative_probability(chain, probe, chirp, oconf)
    p_schro = evolve_schrodinger(oconf, chain, probe, chirp).excited_population
    scale = p_closed if p_closed > 0 else 1.0
    return [delta, TWOPI*delta/chirp.kappa, p_closed, p_double, p_schro,
            abs(p_double - p_closed)/scale, abs(p_schro - p_closed)/scale]


def run_oracle_check(config):
    """closed form (or mode quadrature) against the double integral and
    the Schrodinger evolution at each detuning"""
    chain = IonChain.build(config.n, config.nu)
    chirp = ChirpProfile(kappa=config.kappa, t_start=config.t0,
                         t_stop=config.chirp_stop())
    func = partial(_oracle_row, chain=chain, probe=_probe(config), chirp=chirp,
                   oconf=OracleConfig(n_max=config.n_max))
    deltas = [float(d) for d in _detunings(config)]
    rows = pool_map(func, deltas, workers=config.workers)
    validate_rows(rows, (2, 3, 4))
    return csv_buffer(('delta', 'x', 'p_closed', 'p_double', 'p_schrodinger',
                       'rel_double', 'rel_schrodinger'), rows)


RUNNERS = {'modes': run_modes, 'scan': run_scan, 'fig3': run_fig3,
           'ratio': run_ratio, 'oracle-check': run_oracle_check}


def write_output(lines, out=None):
    text = '\n'.join(lines)
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, 'w') as fh:
            fh.write(text)
        logger.info("wrote %d rows to %s", len(lines) - 2, out)


def main(argv=None):
    """entry point of the `unruhtrap` console script; returns the exit code"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    logging.captureWarnings(True)
    try:
        config = parse_config(args)
        lines = RUNNERS[config.command](config)
        write_output(lines, config.out)
    except ConfigError as exc:
        sys.stderr.write("unruhtrap: configuration error: %s\n" % exc)
        return EXIT_CONFIG
    except DomainError as exc:
        sys.stderr.write("unruhtrap: invalid parameters: %s\n" % exc)
        return EXIT_CONFIG
    except NUMERICAL_ERRORS as exc:
        sys.stderr.write("unruhtrap: numerical failure: %s\n" % exc)
        return EXIT_NUMERICAL
    finally:
        logging.captureWarnings(False)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
