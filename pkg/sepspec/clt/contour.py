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

"""Closed, positively oriented integration contours around the
limiting support.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from numpy.polynomial.legendre import leggauss

from sepspec.base import NearSingularError


class Contour:
    r"""A closed, positively oriented contour with quadrature rule
    :math:`\oint \varphi(z) dz \approx \sum_j w_j \varphi(z_j)`.

    Use the constructors :meth:`rectangle`, :meth:`circle` and
    :meth:`enclosing` rather than initialising directly.

    Parameters
    ----------
    nodes
        Quadrature nodes :math:`z_j`, none of them on the real axis.
    weights
        Complex quadrature weights :math:`w_j`, including :math:`dz`.
    vertices
        Closed polygon through the contour, first vertex equal to the
        last. Used for plotting and distance checks.
    kind
        Either "rectangle" or "circle".
    params
        Parameters of the constructor.
    """

    def __init__(
        self,
        nodes: np.ndarray,
        weights: np.ndarray,
        vertices: np.ndarray,
        kind: str,
        params: Optional[dict] = None,
    ):
        nodes = np.asarray(nodes, dtype=complex)
        weights = np.asarray(weights, dtype=complex)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("Nodes and weights must be one-dimensional of equal size.")
        if np.any(nodes.imag == 0):
            raise ValueError("Contour nodes must not lie on the real axis.")
        vertices = np.asarray(vertices, dtype=complex)
        if vertices[0] != vertices[-1]:
            raise ValueError("Contour vertices must be closed, first equal to last.")
        self.nodes = nodes
        self.weights = weights
        self.vertices = vertices
        self.kind = kind
        self.params = dict(params or {})

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v:.4g}" for k, v in self.params.items())
        return f"{self.__class__.__name__} {self.kind} ({self.size} nodes) {params}"

    @property
    def size(self) -> int:
        """Return the number of quadrature nodes."""
        return self.nodes.size

    @classmethod
    def rectangle(
        cls, x_l: float, x_r: float, v0: float = 0.5, nodes_per_side: int = 512
    ) -> Contour:
        """Return the rectangle with corners ``x_l - i v0``,
        ``x_r - i v0``, ``x_r + i v0`` and ``x_l + i v0``, traversed
        counter-clockwise.

        Each side carries ``nodes_per_side`` Gauss-Legendre nodes, so with
        an even number of nodes no node falls on the real axis.

        Parameters
        ----------
        x_l, x_r
            Real parts of the vertical sides.
        v0
            Half height. Default is 0.5.
        nodes_per_side
            Default is 512.
        """
        if not x_l < x_r:
            raise ValueError(f"Need x_l < x_r, got {x_l} and {x_r}.")
        if v0 <= 0:
            raise ValueError(f"Half height v0={v0} must be positive.")
        if nodes_per_side < 2 or nodes_per_side % 2:
            raise ValueError(
                f"nodes_per_side={nodes_per_side} must be even and at least 2."
            )
        corners = np.array(
            [x_l - 1j * v0, x_r - 1j * v0, x_r + 1j * v0, x_l + 1j * v0, x_l - 1j * v0]
        )
        t, w = leggauss(nodes_per_side)
        nodes, weights = [], []
        for a, b in zip(corners[:-1], corners[1:]):
            nodes.append(0.5 * (a + b) + 0.5 * (b - a) * t)
            weights.append(0.5 * (b - a) * w)
        params = dict(x_l=x_l, x_r=x_r, v0=v0, nodes_per_side=nodes_per_side)
        return cls(
            np.concatenate(nodes), np.concatenate(weights), corners, "rectangle", params
        )

    @classmethod
    def circle(cls, center: float, radius: float, nodes: int = 2048) -> Contour:
        r"""Return the circle :math:`|z - center| = radius` with the
        trapezoidal rule at angles :math:`2\pi(k + 1/2)/N`.

        Parameters
        ----------
        center
            Real centre.
        radius
            Radius, must be positive.
        nodes
            Even number of nodes. Default is 2048.
        """
        if radius <= 0:
            raise ValueError(f"Radius {radius} must be positive.")
        if nodes < 2 or nodes % 2:
            raise ValueError(f"Number of nodes {nodes} must be even and at least 2.")
        theta = 2 * np.pi * (np.arange(nodes) + 0.5) / nodes
        e = np.exp(1j * theta)
        z = center + radius * e
        w = 1j * radius * e * 2 * np.pi / nodes
        phi = np.linspace(0, 2 * np.pi, 65)
        vertices = center + radius * np.exp(1j * phi)
        vertices[-1] = vertices[0]
        params = dict(center=center, radius=radius, nodes=nodes)
        return cls(z, w, vertices, "circle", params)

    @classmethod
    def enclosing(
        cls,
        support,
        v0: float = 0.5,
        nodes_per_side: int = 512,
        kind: str = "rectangle",
    ) -> Contour:
        """Return a contour around a
        :class:`~sepspec.lsd.SupportEstimate`.

        A rectangle has its vertical sides at ``x_l`` and ``x_r``; a
        circle passes through both points.
        """
        if kind == "rectangle":
            return cls.rectangle(support.x_l, support.x_r, v0, nodes_per_side)
        elif kind == "circle":
            return cls.circle(
                support.midpoint, 0.5 * support.width, nodes=4 * nodes_per_side
            )
        else:
            raise ValueError(f"Unknown contour kind {kind!r}, use rectangle or circle.")

    def scaled(self, factor: float, about: Optional[float] = None) -> Contour:
        """Return the contour scaled by ``factor`` about a real point.

        Parameters
        ----------
        factor
            Positive scale factor. A factor above one gives a contour
            enclosing this one when ``about`` lies inside.
        about
            Centre of scaling. Default is the midpoint of the real
            extent of the vertices.
        """
        if factor <= 0:
            raise ValueError(f"Scale factor {factor} must be positive.")
        if about is None:
            about = 0.5 * (self.vertices.real.min() + self.vertices.real.max())
        params = dict(self.params, factor=factor, about=about)
        return Contour(
            about + factor * (self.nodes - about),
            factor * self.weights,
            about + factor * (self.vertices - about),
            self.kind,
            params,
        )

    def refined(self) -> Contour:
        """Return the same contour with twice as many nodes."""
        p = self.params
        if self.kind == "rectangle":
            out = Contour.rectangle(
                p["x_l"], p["x_r"], p["v0"], 2 * p["nodes_per_side"]
            )
        else:
            out = Contour.circle(p["center"], p["radius"], 2 * p["nodes"])
        if "factor" in p:
            out = out.scaled(p["factor"], p["about"])
        return out

    def distance_to_interval(self, lo: float, hi: float) -> float:
        """Return the smallest distance of a node to the real interval
        ``[lo, hi]``.
        """
        x = np.clip(self.nodes.real, lo, hi)
        return float(np.min(np.abs(self.nodes - x)))

    def check_encloses(self, lo: float, hi: float):
        """Raise if the interval ``[lo, hi]`` is not strictly inside the
        real extent of the contour.
        """
        left = self.vertices.real.min()
        right = self.vertices.real.max()
        if not (left < lo and hi < right):
            raise NearSingularError(
                f"Contour with real extent [{left:.6g}, {right:.6g}] does not "
                f"enclose [{lo:.6g}, {hi:.6g}]."
            )
