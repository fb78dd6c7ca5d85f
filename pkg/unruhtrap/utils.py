#!/usr/bin/python
"""
small helpers shared by the computational modules and the command line
"""
import math
import numpy as np

from .errors import DomainError

TWOPI = 2.0*math.pi


def ifnotNone(val, default):
    "return val if val is not None else default"
    return val if val is not None else default


def sformat(val, digits=12):
    """Format a number in scientific notation with a fixed number of
    significant digits, so that identical values always produce
    identical text.

    Arguments
    ---------
    val       value to be formatted (nan/inf are written as such)
    digits    number of significant digits [12]

    Returns
    -------
    string
    """
    val = float(val)
    if math.isnan(val):
        return 'nan'
    if math.isinf(val):
        return 'inf' if val > 0 else '-inf'
    if val == 0.0:
        val = 0.0   # no '-0.0'
    return '%.*e' % (digits-1, val)


def csv_line(values, digits=12):
    "join a row of numbers (and strings) into one CSV line"
    out = []
    for val in values:
        if isinstance(val, str):
            out.append(val)
        elif isinstance(val, (int, np.integer)) and not isinstance(val, bool):
            out.append('%d' % val)
        else:
            out.append(sformat(val, digits=digits))
    return ','.join(out)


def csv_buffer(header, rows, digits=12):
    """list of CSV lines: a header line and one line per row"""
    buff = [','.join(header)]
    for row in rows:
        buff.append(csv_line(row, digits=digits))
    buff.append('')
    return buff


def planck(x):
    """Bose-Einstein factor 1/(e^x - 1), x > 0"""
    if x <= 0:
        raise DomainError("planck factor needs x > 0, got %g" % x)
    return 1.0/math.expm1(x)


def planck_blue(x):
    """emission-side factor 1/(1 - e^-x), x > 0"""
    if x <= 0:
        raise DomainError("planck factor needs x > 0, got %g" % x)
    return -1.0/math.expm1(-x)


def as_complex(z):
    "complex(z), rejecting nan and inf"
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("non-finite argument %r" % (z,))
    return z
