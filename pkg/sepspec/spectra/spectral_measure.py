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

"""Spectral measures of the population matrices: discrete measures,
point masses and the arcsine law.
"""

from __future__ import annotations

from typing import Callable, Optional, Union
import warnings

import numpy as np
from numpy.polynomial.chebyshev import chebgauss
from scipy.linalg import eigvalsh
from scipy.special import comb

from sepspec._util import check_hermitian
from sepspec.base import DimensionError, SingularIntegralError

ArrayLike = Union[complex, np.ndarray]


class SpectralMeasure:
    """Base class of probability measures on the real line.

    Subclasses implement :meth:`moment`, :meth:`resolvent_integral`
    and :meth:`cdf`, and set :attr:`support_lo` and :attr:`support_hi`.
    """

    kind: str = ""

    @property
    def support_lo(self) -> float:
        """Return the lower end of the support."""
        raise NotImplementedError  # pragma: no cover

    @property
    def support_hi(self) -> float:
        """Return the upper end of the support."""
        raise NotImplementedError  # pragma: no cover

    def moment(self, k: int) -> float:
        r"""Return :math:`\int x^k dH(x)`."""
        raise NotImplementedError  # pragma: no cover

    def resolvent_integral(
        self, g: ArrayLike, power: int = 1, numerator_power: int = 0
    ) -> ArrayLike:
        r"""Return :math:`\int x^{a} / (1 + g x)^{b} dH(x)` with
        ``a = numerator_power`` and ``b = power``.
        """
        raise NotImplementedError  # pragma: no cover

    def integrate(self, func: Callable[[np.ndarray], np.ndarray]) -> ArrayLike:
        r"""Return :math:`\int \varphi(x) dH(x)` for a vectorised
        :math:`\varphi`.

        ``func`` receives a one-dimensional array of support points and
        must return an array whose last axis runs over these points.
        """
        raise NotImplementedError  # pragma: no cover

    def cdf(self, x: ArrayLike) -> ArrayLike:
        """Return the distribution function evaluated at ``x``."""
        raise NotImplementedError  # pragma: no cover


def _check_powers(power: int, numerator_power: int):
    if power < 0 or numerator_power < 0:
        raise ValueError(
            f"Powers must be non-negative, not power={power} and "
            f"numerator_power={numerator_power}."
        )


class DiscreteMeasure(SpectralMeasure):
    """A finitely supported probability measure.

    Atoms at equal locations are merged on construction.

    Parameters
    ----------
    locations
        Atom locations.
    weights
        Atom weights. Default is equal weights. Must be non-negative
        and sum to one within 1e-12.

    Examples
    --------
    >>> from sepspec.spectra import DiscreteMeasure
    >>> h = DiscreteMeasure([1, 3, 1, 3])
    >>> h.locations, h.weights
    (array([1., 3.]), array([0.5, 0.5]))
    >>> h.moment(1)
    2.0
    """

    kind = "discrete"

    def __init__(self, locations, weights: Optional[np.ndarray] = None):
        x = np.atleast_1d(np.asarray(locations, dtype=float)).ravel()
        if x.size == 0:
            raise ValueError("A discrete measure needs at least one atom.")
        if not np.all(np.isfinite(x)):
            raise ValueError("Atom locations must be finite.")
        if weights is None:
            w = np.full(x.size, 1 / x.size)
        else:
            w = np.atleast_1d(np.asarray(weights, dtype=float)).ravel()
            if w.size != x.size:
                raise DimensionError(
                    f"{x.size} locations but {w.size} weights were passed."
                )
        if np.any(w < 0):
            raise ValueError("Atom weights must be non-negative.")
        if abs(w.sum() - 1) > 1e-12:
            raise ValueError(f"Atom weights sum to {w.sum()!r}, not 1.")
        unique, inverse = np.unique(x, return_inverse=True)
        merged = np.bincount(inverse.ravel(), weights=w, minlength=unique.size)
        self._locations = unique
        self._weights = merged
        self._locations.flags.writeable = False
        self._weights.flags.writeable = False

    def __repr__(self) -> str:
        n = self._locations.size
        return (
            f"{self.__class__.__name__} ({n} atom{'s' if n != 1 else ''}) "
            f"on [{self.support_lo:.4g}, {self.support_hi:.4g}]"
        )

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> DiscreteMeasure:
        """Return the empirical spectral distribution of a Hermitian
        matrix as a measure.
        """
        return cls(eigvalsh(check_hermitian(a)))

    @property
    def locations(self) -> np.ndarray:
        """Return the sorted distinct atom locations."""
        return self._locations

    @property
    def weights(self) -> np.ndarray:
        """Return the atom weights."""
        return self._weights

    @property
    def support_lo(self) -> float:
        return float(self._locations[0])

    @property
    def support_hi(self) -> float:
        return float(self._locations[-1])

    def moment(self, k: int) -> float:
        if k < 0:
            raise ValueError(f"Moment order k={k} must be >= 0.")
        return float(np.sum(self._weights * self._locations ** int(k)))

    def resolvent_integral(
        self, g: ArrayLike, power: int = 1, numerator_power: int = 0
    ) -> ArrayLike:
        _check_powers(power, numerator_power)
        g = np.asarray(g, dtype=complex)
        x = self._locations
        denom = 1 + g[..., np.newaxis] * x
        if power > 0:
            scale = 1 + np.abs(g[..., np.newaxis] * x)
            if np.any(np.abs(denom) <= 1e-14 * scale):
                raise SingularIntegralError(
                    "1 + g x vanishes at an atom of the measure."
                )
        out = np.sum(self._weights * x**numerator_power / denom**power, axis=-1)
        return out[()] if out.ndim == 0 else out

    def integrate(self, func: Callable[[np.ndarray], np.ndarray]) -> ArrayLike:
        out = np.sum(self._weights * func(self._locations), axis=-1)
        return out[()] if np.ndim(out) == 0 else out

    def cdf(self, x: ArrayLike) -> ArrayLike:
        cum = np.concatenate([[0.0], np.cumsum(self._weights)])
        idx = np.searchsorted(self._locations, x, side="right")
        return np.minimum(cum[idx], 1.0)


class PointMass(DiscreteMeasure):
    """The Dirac measure at ``location``."""

    kind = "point_mass"

    def __init__(self, location: float = 1.0):
        super().__init__([location], [1.0])

    def __repr__(self) -> str:
        return f"{self.__class__.__name__} at {self.location:.6g}"

    @property
    def location(self) -> float:
        """Return the location of the atom."""
        return float(self.locations[0])


class ArcsineMeasure(SpectralMeasure):
    r"""The arcsine law on (-1, 1) with density
    :math:`1 / (\pi\sqrt{1 - t^2})`.

    It is the limiting spectral distribution of the symmetrized shift
    matrix. Resolvent integrals use Gauss-Chebyshev quadrature of the
    first kind, whose weight function is exactly this density.

    Parameters
    ----------
    nodes
        Initial number of quadrature nodes. Default is 256.
    max_nodes
        The number of nodes is doubled until two successive results
        agree within ``rtol``, up to this many nodes. Default is 4096.
    rtol
        Relative tolerance of the adaptive quadrature. Default is
        1e-12.
    """

    kind = "arcsine"

    def __init__(self, nodes: int = 256, max_nodes: int = 4096, rtol: float = 1e-12):
        if nodes < 1 or max_nodes < nodes:
            raise ValueError(
                f"Need 1 <= nodes <= max_nodes, got nodes={nodes} and "
                f"max_nodes={max_nodes}."
            )
        self.nodes = int(nodes)
        self.max_nodes = int(max_nodes)
        self.rtol = float(rtol)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__} on (-1, 1)"

    @property
    def support_lo(self) -> float:
        return -1.0

    @property
    def support_hi(self) -> float:
        return 1.0

    def moment(self, k: int) -> float:
        if k < 0:
            raise ValueError(f"Moment order k={k} must be >= 0.")
        if k % 2 == 1:
            return 0.0
        return float(comb(k, k // 2, exact=True)) / 2**k

    def integrate(self, func: Callable[[np.ndarray], np.ndarray]) -> ArrayLike:
        # With the arcsine density as weight all Chebyshev weights are 1/n
        n = self.nodes
        previous = func(chebgauss(n)[0]).mean(axis=-1)
        change = np.zeros(np.shape(previous))
        while n < self.max_nodes:
            n *= 2
            current = func(chebgauss(n)[0]).mean(axis=-1)
            change = np.abs(current - previous)
            previous = current
            if np.all(change <= self.rtol * (1 + np.abs(current))):
                break
        else:
            if n > self.nodes:
                warnings.warn(
                    f"Arcsine quadrature did not reach rtol={self.rtol:.0e} with "
                    f"{n} nodes (last change {np.max(change):.2e}); the integrand "
                    "is close to a pole on the support."
                )
        return previous[()] if np.ndim(previous) == 0 else previous

    def resolvent_integral(
        self, g: ArrayLike, power: int = 1, numerator_power: int = 0
    ) -> ArrayLike:
        _check_powers(power, numerator_power)
        g = np.asarray(g, dtype=complex)
        if power > 0:
            on_support = (np.abs(g.imag) <= 1e-14 * np.abs(g)) & (np.abs(g.real) >= 1)
            if np.any(on_support):
                raise SingularIntegralError(
                    "1 + g t vanishes inside (-1, 1) for real g with |g| >= 1."
                )
        if power == 0:
            out = np.full(g.shape, self.moment(numerator_power), dtype=complex)
            return out[()] if out.ndim == 0 else out
        gx = g[..., np.newaxis]
        return self.integrate(lambda t: t**numerator_power / (1 + gx * t) ** power)

    def cdf(self, x: ArrayLike) -> ArrayLike:
        x = np.clip(np.asarray(x, dtype=float), -1, 1)
        return 0.5 + np.arcsin(x) / np.pi


def moment(h: SpectralMeasure, k: int) -> float:
    r"""Return :math:`\int x^k dH(x)`.

    Examples
    --------
    >>> from sepspec.spectra import ArcsineMeasure, moment
    >>> moment(ArcsineMeasure(), 4)
    0.375
    """
    return h.moment(k)


def resolvent_integral(
    h: SpectralMeasure, g: ArrayLike, power: int = 1, numerator_power: int = 0
) -> ArrayLike:
    r"""Return :math:`\int x^{a} / (1 + g x)^{b} dH(x)`.

    Parameters
    ----------
    h
        Spectral measure.
    g
        Complex number or array of complex numbers.
    power
        Exponent ``b`` of the denominator.
    numerator_power
        Exponent ``a`` of the numerator.

    Returns
    -------
    value
        Complex number or array of the same shape as ``g``.

    Raises
    ------
    SingularIntegralError
        If ``1 + g x`` vanishes on the support of ``h``.
    """
    return h.resolvent_integral(g, power=power, numerator_power=numerator_power)
