# -*- coding: utf-8 -*-
# Copyright 2023-2026 the sepspec developers
#
# This file is part of sepspec.
#
# sepspec is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# sepspec is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with sepspec.  If not, see <http://www.gnu.org/licenses/>.

"""Test functions of linear spectral statistics given as polynomials,
coefficient lists or callables.
"""

import re
from typing import Callable, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

TestFunction = Union[str, Sequence[float], Polynomial, Callable]

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
    (?P<coef>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)?
    \s*(?P<times>\*)?\s*
    (?P<x>x(?:\s*(?:\^|\*\*)\s*(?P<power>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_polynomial(text: str) -> Polynomial:
    """Return the polynomial written in ``text``.

    Terms are separated by ``+`` or ``-``; powers are written ``x^k`` or
    ``x**k`` and coefficients may be joined by ``*`` or juxtaposed.

    Examples
    --------
    >>> from sepspec.clt import parse_polynomial
    >>> parse_polynomial("x^2 + 3x - 1").coef
    array([-1.,  3.,  1.])
    """
    text = text.strip()
    if not text:
        raise ValueError("Empty polynomial.")
    coefs = {}
    pos = 0
    first = True
    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"Cannot parse polynomial {text!r} at position {pos}.")
        sign, coef, x = match.group("sign"), match.group("coef"), match.group("x")
        if coef is None and x is None:
            raise ValueError(f"Cannot parse polynomial {text!r} at position {pos}.")
        if sign is None and not first:
            raise ValueError(
                f"Missing + or - before term at position {pos} of {text!r}."
            )
        if match.group("times") and (coef is None or x is None):
            raise ValueError(f"Misplaced * at position {pos} of {text!r}.")
        value = float(coef) if coef is not None else 1.0
        if sign == "-":
            value = -value
        power = 0
        if x is not None:
            power = int(match.group("power")) if match.group("power") else 1
        coefs[power] = coefs.get(power, 0.0) + value
        pos = match.end()
        first = False
    out = np.zeros(max(coefs) + 1)
    for power, value in coefs.items():
        out[power] = value
    return Polynomial(out)


def as_polynomial(f: TestFunction) -> Callable[[np.ndarray], np.ndarray]:
    """Return a vectorised evaluator of a test function.

    Parameters
    ----------
    f
        A polynomial string (see :func:`parse_polynomial`), a sequence
        of coefficients in increasing order of power, a
        :class:`numpy.polynomial.Polynomial` or a callable accepting
        complex arrays.
    """
    if isinstance(f, str):
        return parse_polynomial(f)
    if isinstance(f, Polynomial) or callable(f):
        return f
    coef = np.asarray(f, dtype=float)
    if coef.ndim != 1 or coef.size == 0:
        raise ValueError("Polynomial coefficients must be a non-empty sequence.")
    return Polynomial(coef)
