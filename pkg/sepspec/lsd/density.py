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

"""Density, distribution function and linear statistics of the
limiting spectral distribution, recovered from its Stieltjes transform.
"""

from __future__ import annotations

import logging
from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from sepspec._util import warn_imaginary
from sepspec.lsd.solver import solve_triples
from sepspec.lsd.support import support_from_measures
from sepspec.spectra import SpectralMeasure

_logger = logging.getLogger(__name__)


class LsdDensity(NamedTuple):
    """Density of the limiting spectral distribution on a grid."""

    x: np.ndarray
    density: np.ndarray


def _check_grid(grid, v_min) -> np.ndarray:
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("Grid must be a non-empty one-dimensional array.")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("Grid must be strictly increasing.")
    if v_min <= 0:
        raise ValueError(f"v_min={v_min} must be positive.")
    return grid


def lsd_density(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    grid,
    v_min: float = 1e-5,
    **kwargs,
) -> LsdDensity:
    r"""Return the limiting spectral density
    :math:`f(x) \approx \Im m(x + i v_{min}) / \pi` on a grid.

    Each grid point is reached by continuation from ``Im z = 1`` down to
    ``v_min``, all grid points at once.

    Parameters
    ----------
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio.
    grid
        Strictly increasing real points.
    v_min
        Imaginary part at which the transform is inverted. Default is
        1e-5.
    **kwargs
        Keyword arguments passed to
        :func:`~sepspec.lsd.solve_triples`.

    Returns
    -------
    density
        Grid and density values.

    Raises
    ------
    SolverError
        If the solve fails at a grid point, which is named in the
        message.
    """
    grid = _check_grid(grid, v_min)
    triple = solve_triples(h1, h2, c, grid + 1j * v_min, **kwargs)
    _logger.debug(
        "Density on %d points, up to %d iterations",
        grid.size,
        np.max(triple.iterations),
    )
    return LsdDensity(grid, np.asarray(triple.m).imag / np.pi)


def lsd_cdf(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    x,
    v_min: float = 1e-5,
    atom_threshold: float = 1e-3,
    **kwargs,
) -> np.ndarray:
    r"""Return the limiting spectral distribution function on a grid.

    The density from :func:`lsd_density` is integrated with the
    cumulative trapezoidal rule from the first grid point, which should
    lie left of the support. If the grid covers zero, an atom at zero
    of mass :math:`v \Im m(iv)` is added when it exceeds
    ``atom_threshold``; this is the case for ``c > 1``.

    Parameters
    ----------
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio.
    x
        Strictly increasing grid covering the support.
    v_min
        Imaginary part at which the transform is inverted. Default is
        1e-5.
    atom_threshold
        Smallest mass reported as an atom at zero. Default is 1e-3.
    **kwargs
        Keyword arguments passed to
        :func:`~sepspec.lsd.solve_triples`.

    Returns
    -------
    cdf
        Values in [0, 1] at ``x``.
    """
    x, f = lsd_density(h1, h2, c, x, v_min=v_min, **kwargs)
    atom = 0.0
    if x[0] <= 0 <= x[-1]:
        m0 = solve_triples(h1, h2, c, 1j * v_min, **kwargs).m
        atom = float(v_min * np.imag(m0))
        if atom > atom_threshold:
            f = f - atom * v_min / (np.pi * (x**2 + v_min**2))
        else:
            atom = 0.0
    cdf = cumulative_trapezoid(np.clip(f, 0, None), x, initial=0)
    cdf = cdf + atom * (x >= 0)
    return np.clip(cdf, 0, 1)


def lsd_linear_statistic(
    f: Callable[[np.ndarray], np.ndarray],
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    contour=None,
    **kwargs,
) -> float:
    r"""Return :math:`\int f dF` of the limiting spectral distribution
    ``F`` by contour integration,

    .. math::

        \int f dF = -\frac{1}{2\pi i} \oint f(z) m(z) dz.

    Parameters
    ----------
    f
        Function analytic on a neighbourhood of the contour and its
        interior, accepting complex arrays.
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio.
    contour
        A :class:`~sepspec.clt.Contour` enclosing the support. Default
        is a rectangle around :func:`support_from_measures`.
    **kwargs
        Keyword arguments passed to
        :func:`~sepspec.lsd.solve_triples`.

    Returns
    -------
    value
        The real part of the integral. A warning is emitted if the
        imaginary part is not negligible.
    """
    if contour is None:
        from sepspec.clt import Contour

        contour = Contour.enclosing(support_from_measures(h1, h2, c))
    m = solve_triples(h1, h2, c, contour.nodes, **kwargs).m
    value = -np.sum(f(contour.nodes) * m * contour.weights) / (2j * np.pi)
    warn_imaginary(complex(value), "Linear statistic")
    return float(value.real)
