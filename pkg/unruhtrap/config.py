#!/usr/bin/python
"""
Run configuration for the command-line front end.

Every known parameter with its default lives in `default_config`.  A
RunConfig copies these, applies an optional `key = value` file, then the
command-line overrides, and finally validates the combination for the
requested command:

    n          number of ions                              [1]
    nu         bare trap frequency [rad/s]                 [1]
    nu_hz      the same as a cyclic frequency [Hz]; sets nu
    kappa      chirp rate [rad/s], nonzero, signed         [1]
    delta_min  first detuning of a sweep [rad/s]           [0.25/2pi]
    delta_max  last detuning of a sweep [rad/s]            [8/2pi]
    steps      number of sweep points, >= 2                [64]
    rabi       Rabi frequency Omega0 [rad/s]               [10]
    rabi_hz    the same as a cyclic frequency [Hz]; sets rabi
    eta        Lamb-Dicke parameter                        [0.1]
    ion        probed ion, 1-based                         [1]
    t0         chirp start [s]; -inf is the Abel limit     [-inf]
    t_stop     chirp stop [s]; if unset, ln(y_t)/kappa     [none]
    y_t        e^(kappa T) when t_stop is unset            [100]
    n_max      phonon truncation of the Schrodinger check  [2]
    workers    processes for scan, fig3, oracle-check      [1]
    out        output file; unset writes to stdout         [none]

In a file, '#' starts a comment, blank lines are ignored and the value
'none' unsets a key.
"""
import logging
import math
from copy import copy

from .errors import ConfigError
from .utils import TWOPI

logger = logging.getLogger(__name__)

COMMANDS = ('modes', 'scan', 'fig3', 'ratio', 'oracle-check')

default_config = dict(n=1,
                      nu=1.0,
                      nu_hz=None,
                      kappa=1.0,
                      delta_min=0.25/TWOPI,
                      delta_max=8.0/TWOPI,
                      steps=64,
                      rabi=10.0,
                      rabi_hz=None,
                      eta=0.1,
                      ion=1,
                      t0=-math.inf,
                      t_stop=None,
                      y_t=100.0,
                      n_max=2,
                      workers=1,
                      out=None)

INT_KEYS = ('n', 'steps', 'ion', 'n_max', 'workers')
STR_KEYS = ('out',)
HZ_KEYS = {'nu_hz': 'nu', 'rabi_hz': 'rabi'}

REQUIRED = {'modes': ('n', 'nu'),
            'scan': ('n', 'nu', 'kappa', 'delta_min', 'delta_max', 'steps',
                     'rabi', 'eta', 'ion', 't0'),
            'fig3': ('n', 'nu', 'kappa', 'steps', 'rabi', 'eta', 'ion'),
            'ratio': ('nu', 'kappa'),
            'oracle-check': ('n', 'nu', 'kappa', 'delta_min', 'delta_max',
                             'steps', 'rabi', 'eta', 'ion', 't0', 'n_max')}


def convert_value(key, val):
    """convert one text value for `key`, raising ConfigError naming the key"""
    if key not in default_config:
        raise ConfigError("unknown key '%s'" % key, key=key)
    if val is None or not isinstance(val, str):
        return val
    val = val.strip()
    if val.lower() == 'none':
        return None
    if key in STR_KEYS:
        return val
    try:
        if key in INT_KEYS:
            return int(val)
        return float(val)
    except ValueError:
        kind = 'integer' if key in INT_KEYS else 'number'
        raise ConfigError("malformed %s for '%s': '%s'" % (kind, key, val), key=key)


def read_config_file(fname):
    """parse a `key = value` file into a dict of converted values"""
    try:
        with open(fname, 'r') as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError("cannot read config file '%s': %s" % (fname, exc))
    conf = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if len(line) < 1:
            continue
        if '=' not in line:
            raise ConfigError("%s:%d: expected 'key = value', got '%s'" %
                              (fname, lineno, line))
        key, val = [w.strip() for w in line.split('=', 1)]
        conf[key] = convert_value(key, val)
    logger.debug("read %d keys from %s", len(conf), fname)
    return conf


class RunConfig:
    """configuration of one command-line run ... holder class for the
    parameters named in default_config"""

    def __init__(self, command='scan', custom_config=None):
        if command not in COMMANDS:
            raise ConfigError("unknown command '%s'" % command)
        self.command = command
        self.configdict = copy(default_config)
        if custom_config is not None:
            self.load_config(custom_config)
        else:
            self.set_defaults()

    def set_defaults(self):
        for key, val in self.configdict.items():
            setattr(self, key, val)

    def get_current_config(self):
        "dict of the current parameter values"
        return {key: getattr(self, key) for key in self.configdict}

    def load_config(self, conf):
        """apply a dict of values (text or numbers); unknown keys raise
        ConfigError, cyclic '*_hz' values set their angular key"""
        for key, val in conf.items():
            val = convert_value(key, val)
            self.configdict[key] = val
            if key in HZ_KEYS and val is not None:
                self.configdict[HZ_KEYS[key]] = TWOPI*val
        self.set_defaults()

    def chirp_stop(self):
        "T from t_stop, or ln(y_t)/kappa"
        if self.t_stop is not None:
            return self.t_stop
        return math.log(self.y_t)/self.kappa

    def validate(self):
        """check the parameters needed by self.command, raising ConfigError
        with the offending key"""
        for key in REQUIRED[self.command]:
            if getattr(self, key) is None:
                raise ConfigError("missing required key '%s' for %s" %
                                  (key, self.command), key=key)

        def check(test, key, msg):
            if not test:
                raise ConfigError("%s: %s (got %r)" % (key, msg, getattr(self, key)),
                                  key=key)

        check(self.nu > 0, 'nu', 'trap frequency must be positive')
        if self.command in ('modes', 'scan', 'fig3', 'oracle-check'):
            check(1 <= self.n <= 10, 'n', 'number of ions must be in 1..10')
        if self.command == 'modes':
            return
        check(math.isfinite(self.kappa) and self.kappa != 0, 'kappa',
              'chirp rate must be finite and nonzero')
        if self.command == 'ratio':
            check(self.kappa > 0, 'kappa', 'sideband ratio needs kappa > 0')
            return
        check(self.steps >= 2, 'steps', 'a sweep needs at least 2 points')
        check(self.rabi >= 0, 'rabi', 'Rabi frequency must be >= 0')
        check(0 <= self.eta < 1, 'eta', 'Lamb-Dicke parameter must be in [0, 1)')
        check(1 <= self.ion <= self.n, 'ion', 'probed ion must be in 1..n')
        check(self.workers >= 1, 'workers', 'need at least one worker')
        if self.command == 'fig3':
            check(self.kappa > 0, 'kappa', 'fig3 needs a chirp up')
            return
        check(self.delta_min <= self.delta_max, 'delta_min',
              'delta_min must not exceed delta_max')
        if self.t_stop is None:
            check(self.y_t is not None and self.y_t > 0, 'y_t',
                  'need t_stop or a positive y_t')
        check(self.kappa > 0 or math.isfinite(self.t0), 't0',
              'a chirp down needs a finite start time')
        check(self.chirp_stop() >= self.t0, 't_stop',
              'chirp must stop after it starts')
        check(math.isfinite(self.chirp_stop()), 't_stop',
              'chirp stop time must be finite')
        if self.command == 'oracle-check':
            check(math.isfinite(self.t0), 't0', 'oracle-check needs a finite t0')
            check(self.n <= 3, 'n', 'oracle-check handles at most 3 ions')
            check(1 <= self.n_max <= 3, 'n_max', 'truncation must be in 1..3')
