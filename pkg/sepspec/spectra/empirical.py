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

"""Empirical spectral distributions of Hermitian matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigvalsh

from sepspec._util import check_hermitian
from sepspec.spectra.spectral_measure import DiscreteMeasure


@dataclass(frozen=True, eq=False)
class EmpiricalSpectrum:
    r"""Sorted eigenvalues of a p x p Hermitian matrix.

    The empirical spectral distribution is
    :math:`F(x) = \#\{\lambda_j \le x\} / p`.

    Parameters
    ----------
    eigenvalues
        Real eigenvalues. They are sorted ascending on construction.
    """

    eigenvalues: np.ndarray

    def __post_init__(self):
        lam = np.sort(np.atleast_1d(np.asarray(self.eigenvalues, dtype=float)).ravel())
        if lam.size == 0:
            raise ValueError("An empirical spectrum needs at least one eigenvalue.")
        lam.flags.writeable = False
        object.__setattr__(self, "eigenvalues", lam)

    def __repr__(self) -> str:
        lam = self.eigenvalues
        return (
            f"{self.__class__.__name__} (p={self.p}) "
            f"on [{lam[0]:.4g}, {lam[-1]:.4g}]"
        )

    @property
    def p(self) -> int:
        """Return the number of eigenvalues."""
        return self.eigenvalues.size

    def cdf(self, x):
        """Return the empirical distribution function at ``x``."""
        return np.searchsorted(self.eigenvalues, x, side="right") / self.p

    def moment(self, k: int) -> float:
        r"""Return :math:`\frac1p\sum_j \lambda_j^k`."""
        if k < 0:
            raise ValueError(f"Moment order k={k} must be >= 0.")
        return float(np.mean(self.eigenvalues ** int(k)))

    def linear_statistic(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        r"""Return :math:`\sum_j f(\lambda_j)`.

        ``f`` must accept an array of eigenvalues.
        """
        return float(np.sum(f(self.eigenvalues)))

    def to_measure(self) -> DiscreteMeasure:
        """Return the distribution as a :class:`DiscreteMeasure`."""
        return DiscreteMeasure(self.eigenvalues)


def esd(s: np.ndarray, rtol: float = 1e-10) -> EmpiricalSpectrum:
    """Return the empirical spectral distribution of a Hermitian matrix.

    Parameters
    ----------
    s
        Hermitian matrix.
    rtol
        Hermiticity tolerance relative to the Frobenius norm of ``s``.
        Default is 1e-10.

    Returns
    -------
    spectrum
        Eigenvalues in ascending order.

    Examples
    --------
    >>> from sepspec.spectra import esd
    >>> esd(np.diag([3.0, 1.0])).eigenvalues
    array([1., 3.])
    """
    s = check_hermitian(s, "S", rtol=rtol)
    return EmpiricalSpectrum(eigvalsh(s))


def kolmogorov_distance(
    f: EmpiricalSpectrum, g: Callable[[np.ndarray], np.ndarray]
) -> float:
    """Return the Kolmogorov distance between an empirical spectral
    distribution and a distribution function.

    The supremum of ``|F - G|`` is taken over the jump points of ``F``,
    using both the value at and the left limit before each jump.

    Parameters
    ----------
    f
        Empirical spectrum.
    g
        Vectorised distribution function, monotone on the eigenvalues
        of ``f``.

    Returns
    -------
    distance
        Number in [0, 1].
    """
    lam = np.unique(f.eigenvalues)
    before = np.nextafter(lam, -np.inf)
    f_at = f.cdf(lam)
    f_before = f.cdf(before)
    g_at = np.asarray(g(lam), dtype=float)
    g_before = np.asarray(g(before), dtype=float)
    return float(max(np.max(np.abs(f_at - g_at)), np.max(np.abs(f_before - g_before))))
