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

"""Helper functions for managing sepspec internals.

This module and documentation is only relevant for sepspec developers,
not for users.

.. warning:
    This module and its submodules are for internal use only.  Do not
    use them in your own code. We may change the API at any time with no
    warning.
"""

import os
from typing import Optional
import warnings

import numba as nb
import numpy as np

from sepspec.base import ConfigurationError, DimensionError

# Increments and multipliers of the splitmix64 finaliser. Shift counts
# are unsigned as well, otherwise Numba promotes mixed uint64/int64
# arithmetic to float64.
_GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S27 = np.uint64(27)
_S30 = np.uint64(30)
_S31 = np.uint64(31)
_MASK64 = (1 << 64) - 1

THREADS_ENV = "SEPSPEC_THREADS"


@nb.jit("uint64(uint64)", cache=True, nogil=True, nopython=True)
def splitmix64(state: np.uint64) -> np.uint64:
    """Return the splitmix64 mix of a 64-bit state.

    Parameters
    ----------
    state
        Unsigned 64-bit integer.

    Returns
    -------
    mixed
        Unsigned 64-bit integer.

    Notes
    -----
    This function is optimized with Numba, so care must be taken with
    the data type of ``state``.
    """
    z = state + _GOLDEN_GAMMA
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


def derive_seed(*keys: int) -> int:
    """Return a 64-bit seed derived from a sequence of integer keys.

    The keys are folded left to right through :func:`splitmix64`, so
    ``derive_seed(base, cell, replication)`` gives every replication of
    every simulation cell its own stream.

    Parameters
    ----------
    *keys
        Non-negative or negative integers. Negative values are reduced
        modulo 2**64.

    Returns
    -------
    seed
        Integer in [0, 2**64).
    """
    if len(keys) == 0:
        raise ValueError("At least one key is needed to derive a seed.")
    h = np.uint64(0)
    for key in keys:
        h = splitmix64(np.uint64(int(h) ^ (int(key) & _MASK64)))
    return int(h)


def make_rng(seed: int) -> np.random.Generator:
    """Return a counter-based Philox generator for ``seed``."""
    return np.random.Generator(np.random.Philox(int(seed) & _MASK64))


def check_hermitian(
    a: np.ndarray, name: str = "matrix", rtol: float = 1e-10
) -> np.ndarray:
    """Return the Hermitian part of ``a`` after checking that ``a`` is
    Hermitian within ``rtol`` times its Frobenius norm.

    Parameters
    ----------
    a
        Square matrix.
    name
        Name used in error messages.
    rtol
        Tolerance relative to the Frobenius norm of ``a``.

    Returns
    -------
    hermitian
        ``(a + a*) / 2``.

    Raises
    ------
    DimensionError
        If ``a`` is not square.
    ValueError
        If ``a`` deviates from its conjugate transpose beyond
        tolerance.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{name} must be square, but has shape {a.shape}.")
    scale = np.linalg.norm(a)
    deviation = np.linalg.norm(a - a.conj().T)
    if deviation > rtol * max(scale, np.finfo(float).tiny):
        raise ValueError(
            f"{name} is not Hermitian: |A - A*| = {deviation:.3e} exceeds "
            f"{rtol:.0e} * |A| = {rtol * scale:.3e}."
        )
    return 0.5 * (a + a.conj().T)


def resolve_threads(threads: Optional[int] = None) -> Optional[int]:
    """Return the number of worker threads to use.

    An explicit ``threads`` wins, then the ``SEPSPEC_THREADS``
    environment variable. ``None`` lets Dask decide.
    """
    if threads is None:
        value = os.environ.get(THREADS_ENV)
        if value is None or value.strip() == "":
            return None
        try:
            threads = int(value)
        except ValueError:
            raise ConfigurationError(
                f"{THREADS_ENV}={value!r} is not an integer number of threads."
            )
    threads = int(threads)
    if threads < 1:
        raise ConfigurationError(f"Number of threads must be >= 1, not {threads}.")
    return threads


def warn_imaginary(value: complex, what: str, rtol: float = 1e-6):
    """Warn if a quantity known to be real carries a non-negligible
    imaginary part.
    """
    if abs(value.imag) > rtol * (1 + abs(value.real)):
        warnings.warn(
            f"{what} has imaginary part {value.imag:.3e} (real part "
            f"{value.real:.6g}); the contour may be too close to the support."
        )
