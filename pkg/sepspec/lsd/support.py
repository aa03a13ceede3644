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

"""Bounds of the support of the limiting spectral distribution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from sepspec.spectra import SpectralMeasure


@dataclass(frozen=True)
class SupportEstimate:
    """An interval ``[x_l, x_r]`` enclosing the limiting support and
    the spectrum of :math:`S_n` for large n.

    Attributes
    ----------
    x_l, x_r
        Ends of the widened interval.
    raw_l, raw_r
        Ends of the interval before widening.
    """

    x_l: float
    x_r: float
    raw_l: Optional[float] = None
    raw_r: Optional[float] = None

    def __post_init__(self):
        if not self.x_l < self.x_r:
            raise ValueError(
                f"Support bounds must satisfy x_l < x_r, got [{self.x_l}, {self.x_r}]."
            )

    @property
    def width(self) -> float:
        """Return ``x_r - x_l``."""
        return self.x_r - self.x_l

    @property
    def midpoint(self) -> float:
        """Return the centre of the interval."""
        return 0.5 * (self.x_l + self.x_r)

    def contains(self, x) -> np.ndarray:
        """Return whether ``x`` lies in ``[x_l, x_r]``."""
        x = np.asarray(x)
        return (x >= self.x_l) & (x <= self.x_r)


def estimate_support(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    s1: Optional[float] = None,
    sn: Optional[float] = None,
    lam_max: Optional[float] = None,
    lam_min: Optional[float] = None,
    margin: float = 0.05,
) -> SupportEstimate:
    r"""Return an interval enclosing the limiting support.

    The right end is :math:`s_1 \lambda_{max} (1 + \sqrt c)^2`. The left
    end is :math:`s_n \lambda_{min} (1 - \sqrt c)^2` for ``c < 1`` and 0
    for ``c >= 1`` when :math:`s_n \ge 0`, and
    :math:`s_n \lambda_{max} (1 + \sqrt c)^2` when :math:`s_n < 0`.
    Both ends are then moved outwards by ``margin`` times the width.

    Parameters
    ----------
    h1, h2
        Spectral measures of :math:`\Sigma_1` and :math:`T_2`. They
        provide the extreme eigenvalues that are not passed.
    c
        Dimension ratio.
    s1, sn
        Largest and smallest eigenvalue of :math:`T_2`. Default is the
        support ends of ``h2``.
    lam_max, lam_min
        Largest and smallest eigenvalue of :math:`\Sigma_1`. Default is
        the support ends of ``h1``.
    margin
        Relative widening on each side. Default is 0.05.

    Returns
    -------
    support
        The widened interval.

    Examples
    --------
    >>> from sepspec.lsd import estimate_support
    >>> from sepspec.spectra import PointMass
    >>> s = estimate_support(PointMass(1), PointMass(1), 0.25)
    >>> s.raw_l, s.raw_r
    (0.25, 2.25)
    """
    if c <= 0:
        raise ValueError(f"Dimension ratio c={c} must be positive.")
    s1 = h2.support_hi if s1 is None else float(s1)
    sn = h2.support_lo if sn is None else float(sn)
    lam_max = h1.support_hi if lam_max is None else float(lam_max)
    lam_min = h1.support_lo if lam_min is None else float(lam_min)
    if s1 <= 0:
        raise ValueError(f"Largest eigenvalue s1={s1} of T2 must be positive.")
    if margin < 0:
        raise ValueError(f"Margin {margin} must be non-negative.")

    right = s1 * lam_max * (1 + np.sqrt(c)) ** 2
    if sn >= 0:
        left = sn * lam_min * (1 - np.sqrt(c)) ** 2 if c < 1 else 0.0
    else:
        left = sn * lam_max * (1 + np.sqrt(c)) ** 2
    width = right - left
    return SupportEstimate(
        float(left - margin * width),
        float(right + margin * width),
        float(left),
        float(right),
    )


def support_from_measures(
    h1: SpectralMeasure, h2: SpectralMeasure, c: float, margin: float = 0.05
) -> SupportEstimate:
    """Return :func:`estimate_support` with all extreme eigenvalues
    read from the supports of ``h1`` and ``h2``.
    """
    return estimate_support(h1, h2, c, margin=margin)
