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

r"""Kernels of the CLT mean and covariance integrands.

The single-point kernels are

.. math::

    d_3 = \int \frac{x^2 dH_1}{(1 + x g_2)^2}, \quad
    d_4 = \int \frac{y^2 dH_2}{(1 + g_1 y)^2},

    d_5 = d_4 \int \frac{x^3 dH_1}{(1 + g_2 x)^3}
          \int \frac{y dH_2}{(1 + g_1 y)^2}, \quad
    d_6 = d_3 \int \frac{x dH_1}{(1 + g_2 x)^2}
          \int \frac{y^3 dH_2}{(1 + g_1 y)^3},

and the two-point kernel is

.. math::

    d(z_1, z_2) = \frac{1}{z_1 z_2}
        \frac{z_1 g_1(z_1) - z_2 g_1(z_2)}{g_2(z_1) - g_2(z_2)}
        \frac{z_1 g_2(z_1) - z_2 g_2(z_2)}{g_1(z_1) - g_1(z_2)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from sepspec.base import CoincidenceLimitError
from sepspec.lsd import StieltjesTriple
from sepspec.spectra import SpectralMeasure

ArrayLike = Union[complex, np.ndarray]


@dataclass(frozen=True)
class CltKernels:
    """Kernels :math:`d_3, \\dots, d_6` at one or more contour points."""

    d3: ArrayLike
    d4: ArrayLike
    d5: ArrayLike
    d6: ArrayLike


def kernels_at(
    h1: SpectralMeasure, h2: SpectralMeasure, c: float, triple: StieltjesTriple
) -> CltKernels:
    """Return the mean kernels at the points of a solved triple.

    Parameters
    ----------
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio. The kernels do not depend on it; it is
        accepted for symmetry with the other kernel functions.
    triple
        Converged solution at the contour point(s).

    Returns
    -------
    kernels
        Kernels of the shape of ``triple.z``.
    """
    g1, g2 = triple.g1, triple.g2
    d3 = h1.resolvent_integral(g2, 2, 2)
    d4 = h2.resolvent_integral(g1, 2, 2)
    d5 = d4 * h1.resolvent_integral(g2, 3, 3) * h2.resolvent_integral(g1, 2, 1)
    d6 = d3 * h1.resolvent_integral(g2, 2, 1) * h2.resolvent_integral(g1, 3, 3)
    return CltKernels(d3, d4, d5, d6)


def d_kernel(
    z1: ArrayLike,
    g1_1: ArrayLike,
    g2_1: ArrayLike,
    z2: ArrayLike,
    g1_2: ArrayLike,
    g2_2: ArrayLike,
    coincidence_tol: float = 1e-10,
) -> ArrayLike:
    """Return the two-point kernel d(z1, z2) in difference form.

    Arguments broadcast against each other.

    Parameters
    ----------
    z1, z2
        Points on the two contours.
    g1_1, g2_1
        :math:`g_1(z_1)` and :math:`g_2(z_1)`.
    g1_2, g2_2
        :math:`g_1(z_2)` and :math:`g_2(z_2)`.
    coincidence_tol
        Smallest accepted :math:`|g_k(z_1) - g_k(z_2)|`. Default is
        1e-10.

    Raises
    ------
    CoincidenceLimitError
        If :math:`g_1` or :math:`g_2` nearly coincide at the two points.
    """
    dg1 = g1_1 - g1_2
    dg2 = g2_1 - g2_2
    if np.any(np.abs(dg1) < coincidence_tol) or np.any(np.abs(dg2) < coincidence_tol):
        raise CoincidenceLimitError(
            f"g(z1) and g(z2) agree within {coincidence_tol:.0e}; separate the "
            "contours further."
        )
    a = (z1 * g1_1 - z2 * g1_2) / dg2
    b = (z1 * g2_1 - z2 * g2_2) / dg1
    return a * b / (z1 * z2)


def d_kernel_integral(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    triple1: StieltjesTriple,
    triple2: StieltjesTriple,
) -> ArrayLike:
    r"""Return d(z1, z2) in integral form,

    .. math::

        d(z_1, z_2) = \frac{c}{z_1 z_2}
            \int \frac{x}{1 + g_2(z_1) x} \frac{x}{1 + g_2(z_2) x} dH_1
            \int \frac{y}{1 + g_1(z_1) y} \frac{y}{1 + g_1(z_2) y} dH_2.

    It has no removable singularity at :math:`z_1 = z_2`.
    """
    a1 = np.asarray(triple1.g1)[..., np.newaxis]
    a2 = np.asarray(triple2.g1)[..., np.newaxis]
    b1 = np.asarray(triple1.g2)[..., np.newaxis]
    b2 = np.asarray(triple2.g2)[..., np.newaxis]
    i1 = h1.integrate(lambda x: x**2 / ((1 + b1 * x) * (1 + b2 * x)))
    i2 = h2.integrate(lambda y: y**2 / ((1 + a1 * y) * (1 + a2 * y)))
    return c * i1 * i2 / (triple1.z * triple2.z)


def d_derivatives_analytic(
    z1, g1_1, g2_1, dg1_1, dg2_1, z2, g1_2, g2_2, dg1_2, dg2_2, coincidence_tol=1e-10
) -> Tuple[ArrayLike, ArrayLike, ArrayLike, ArrayLike]:
    r"""Return :math:`d`, :math:`\partial_{z_1} d`,
    :math:`\partial_{z_2} d` and :math:`\partial_{z_1}\partial_{z_2} d`
    from the values and first derivatives of :math:`g_1, g_2`.

    The derivatives follow from differentiating :math:`\log d`, whose
    mixed derivative needs only first derivatives of :math:`g_1, g_2`.
    """
    d = d_kernel(z1, g1_1, g2_1, z2, g1_2, g2_2, coincidence_tol)
    na = z1 * g1_1 - z2 * g1_2
    nb = z1 * g2_1 - z2 * g2_2
    da_ = g2_1 - g2_2
    db_ = g1_1 - g1_2
    p1 = g1_1 + z1 * dg1_1
    p2 = g1_2 + z2 * dg1_2
    q1 = g2_1 + z1 * dg2_1
    q2 = g2_2 + z2 * dg2_2
    l1 = p1 / na + q1 / nb - 1 / z1 - dg2_1 / da_ - dg1_1 / db_
    l2 = -p2 / na - q2 / nb - 1 / z2 + dg2_2 / da_ + dg1_2 / db_
    l12 = (
        p1 * p2 / na**2
        + q1 * q2 / nb**2
        - dg2_1 * dg2_2 / da_**2
        - dg1_1 * dg1_2 / db_**2
    )
    return d, d * l1, d * l2, d * (l12 + l1 * l2)


def d_derivatives_fd(d_at, h1, h2) -> Tuple[ArrayLike, ArrayLike, ArrayLike, ArrayLike]:
    r"""Return :math:`d` and its first and mixed derivatives by central
    differences with one Richardson extrapolation step.

    Parameters
    ----------
    d_at
        Callable ``d_at(s, t)`` returning
        :math:`d(z_1 + s h_1, z_2 + t h_2)` for ``s, t`` in
        ``{-1, -1/2, 0, 1/2, 1}``.
    h1, h2
        Steps in :math:`z_1` and :math:`z_2`, broadcasting like ``d``.
    """

    def first1(s):
        return (d_at(s, 0) - d_at(-s, 0)) / (2 * s * h1)

    def first2(t):
        return (d_at(0, t) - d_at(0, -t)) / (2 * t * h2)

    def mixed(s):
        return (d_at(s, s) - d_at(s, -s) - d_at(-s, s) + d_at(-s, -s)) / (
            4 * s * s * h1 * h2
        )

    d1 = (4 * first1(0.5) - first1(1)) / 3
    d2 = (4 * first2(0.5) - first2(1)) / 3
    d12 = (4 * mixed(0.5) - mixed(1)) / 3
    return d_at(0, 0), d1, d2, d12
