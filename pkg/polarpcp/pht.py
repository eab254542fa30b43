"""
Reading and writing hypercomplex matrices in the PHT text format.

A PHT file starts with the header ``PHT 1 <l> <m> <n> <real|complex>`` and is
followed by l*m*n lines, one per coefficient in (i, k, t) order. Real files
hold one number per line, complex files hold ``re im`` pairs. Numbers are
written with 17 significant digits so a round trip is exact.
"""
import logging

import numpy as np

from .errors import PhtFormatError
from .hyperalgebra import Field
from .hypermatrix import HyperMatrix

logger = logging.getLogger(__name__)

MAGIC = 'PHT'
VERSION = '1'


def write_pht(A, path):
    values = A.data.reshape(-1)
    with open(path, 'w') as f:
        f.write('{} {} {} {} {} {}\n'.format(
            MAGIC, VERSION, A.l, A.m, A.n, A.field.value))
        if A.field is Field.COMPLEX:
            for v in values:
                f.write('{:.17g} {:.17g}\n'.format(v.real, v.imag))
        else:
            for v in values:
                f.write('{:.17g}\n'.format(v))
    logger.debug('Wrote %r to %s', A, path)


def read_pht(path):
    """
    Load a matrix written by write_pht().

    Raises PhtFormatError when the header or the body do not follow the
    format; I/O failures propagate as OSError.
    """
    with open(path) as f:
        lines = [line.split() for line in f if line.strip()]

    if not lines:
        raise PhtFormatError('{} is empty.'.format(path))

    l, m, n, field = _parse_header(lines[0], path)
    body = lines[1:]
    width = 2 if field is Field.COMPLEX else 1

    if len(body) != l * m * n:
        raise PhtFormatError(
            '{} should have {} data lines, found {}.'.format(
                path, l * m * n, len(body)))
    if any(len(row) != width for row in body):
        raise PhtFormatError(
            '{}: every data line must hold {} number(s).'.format(path, width))

    try:
        numbers = np.array(body, dtype=np.float64)
    except ValueError:
        raise PhtFormatError('{} holds a non-numeric value.'.format(path))

    if field is Field.COMPLEX:
        data = numbers[:, 0] + 1j * numbers[:, 1]
    else:
        data = numbers[:, 0]

    return HyperMatrix(data.reshape(l, m, n), field)


def _parse_header(header, path):
    if len(header) != 6 or header[0] != MAGIC or header[1] != VERSION:
        raise PhtFormatError(
            '{} does not start with a "PHT 1" header.'.format(path))
    try:
        l, m, n = (int(v) for v in header[2:5])
    except ValueError:
        raise PhtFormatError('{}: dimensions must be integers.'.format(path))
    if min(l, m, n) < 1:
        raise PhtFormatError('{}: dimensions must be positive.'.format(path))
    try:
        field = Field(header[5])
    except ValueError:
        raise PhtFormatError(
            '{}: unknown field "{}".'.format(path, header[5]))
    return l, m, n, field
