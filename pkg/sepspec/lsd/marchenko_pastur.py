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

"""Closed forms of the Marchenko-Pastur law, the limit of ordinary
sample covariance matrices with :math:`T_1 = I` and :math:`T_2 = I`.
"""

import numpy as np


def marchenko_pastur_edges(c: float):
    r"""Return the support edges :math:`(1 \mp \sqrt c)^2`."""
    if c <= 0:
        raise ValueError(f"Dimension ratio c={c} must be positive.")
    return (1 - np.sqrt(c)) ** 2, (1 + np.sqrt(c)) ** 2


def marchenko_pastur_stieltjes(z, c: float):
    r"""Return the Stieltjes transform of the Marchenko-Pastur law.

    .. math::

        m(z) = \frac{1 - c - z + \sqrt{(z - 1 - c)^2 - 4c}}{2cz},

    where the square root is the branch behaving like
    :math:`z - 1 - c` at infinity, which gives :math:`\Im m > 0` on
    the upper half plane.

    Parameters
    ----------
    z
        Complex number(s) off the real axis.
    c
        Dimension ratio.
    """
    a, b = marchenko_pastur_edges(c)
    z = np.asarray(z, dtype=complex)
    root = np.sqrt(z - a) * np.sqrt(z - b)
    m = (1 - c - z + root) / (2 * c * z)
    return m[()] if m.ndim == 0 else m


def marchenko_pastur_density(x, c: float):
    r"""Return the density
    :math:`\sqrt{4c - (x - 1 - c)^2} / (2\pi c x)` of the absolutely
    continuous part of the Marchenko-Pastur law.

    For ``c > 1`` the law also has an atom of mass ``1 - 1/c`` at zero,
    which is not included.
    """
    a, b = marchenko_pastur_edges(c)
    x = np.asarray(x, dtype=float)
    inside = (x > a) & (x < b)
    with np.errstate(invalid="ignore", divide="ignore"):
        f = np.sqrt(np.clip(4 * c - (x - 1 - c) ** 2, 0, None)) / (2 * np.pi * c * x)
    f = np.where(inside, f, 0.0)
    return f[()] if f.ndim == 0 else f
