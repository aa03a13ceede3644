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

import numpy as np
from numpy.polynomial import Polynomial
import pytest

from sepspec.base import NearSingularError
from sepspec.clt import Contour, as_polynomial, parse_polynomial


class TestContour:
    def test_rectangle(self):
        contour = Contour.rectangle(-1, 1, 0.5, 64)
        assert contour.size == 256
        assert contour.kind == "rectangle"
        assert np.all(contour.nodes.imag != 0)
        assert contour.vertices[0] == contour.vertices[-1]
        corners = [-1 - 0.5j, 1 - 0.5j, 1 + 0.5j, -1 + 0.5j]
        assert np.allclose(contour.vertices[:4], corners)

    @pytest.mark.parametrize(
        "contour",
        [Contour.rectangle(-1, 1, 0.5, 64), Contour.circle(0, 1, 128)],
    )
    def test_cauchy_integrals(self, contour):
        w, z = contour.weights, contour.nodes
        assert np.isclose(np.sum(w), 0, atol=1e-12)
        assert np.isclose(np.sum(w * z**3), 0, atol=1e-12)
        assert np.isclose(np.sum(w / z), 2j * np.pi)
        assert np.isclose(np.sum(w / z**2), 0, atol=1e-10)

    def test_pole_outside_gives_zero(self):
        contour = Contour.rectangle(-1, 1, 0.5, 64)
        assert np.isclose(np.sum(contour.weights / (contour.nodes - 3)), 0, atol=1e-12)

    def test_circle(self):
        contour = Contour.circle(1, 2, 16)
        assert contour.size == 16
        assert np.allclose(np.abs(contour.nodes - 1), 2)
        assert np.all(contour.nodes.imag != 0)

    @pytest.mark.parametrize(
        "args, match",
        [
            ((1, 0), "x_l < x_r"),
            ((0, 1, 0), "must be positive"),
            ((0, 1, 0.5, 7), "must be even"),
        ],
    )
    def test_invalid_rectangle(self, args, match):
        with pytest.raises(ValueError, match=match):
            _ = Contour.rectangle(*args)

    def test_nodes_on_real_axis_raise(self):
        with pytest.raises(ValueError, match="real axis"):
            _ = Contour(np.array([1, 1j]), np.ones(2), np.array([0, 1, 0]), "custom")

    def test_open_vertices_raise(self):
        with pytest.raises(ValueError, match="closed"):
            _ = Contour(np.array([1j]), np.ones(1), np.array([0, 1]), "custom")

    def test_enclosing(self):
        from sepspec.lsd import SupportEstimate

        support = SupportEstimate(0.0, 4.0)
        rectangle = Contour.enclosing(support, nodes_per_side=8)
        assert np.isclose(rectangle.vertices.real.min(), 0)
        assert np.isclose(rectangle.vertices.real.max(), 4)
        circle = Contour.enclosing(support, nodes_per_side=8, kind="circle")
        assert circle.size == 32
        assert np.allclose(np.abs(circle.nodes - 2), 2)
        with pytest.raises(ValueError, match="Unknown contour kind"):
            _ = Contour.enclosing(support, kind="ellipse")

    def test_scaled(self):
        contour = Contour.rectangle(0, 2, 0.5, 64)
        scaled = contour.scaled(2)
        assert np.isclose(scaled.vertices.real.min(), -1)
        assert np.isclose(scaled.vertices.real.max(), 3)
        assert np.allclose(scaled.weights, 2 * contour.weights)
        assert np.isclose(np.sum(scaled.weights / (scaled.nodes - 1)), 2j * np.pi)
        with pytest.raises(ValueError, match="must be positive"):
            _ = contour.scaled(0)

    def test_refined(self):
        contour = Contour.rectangle(0, 2, 0.5, 8).scaled(1.5)
        refined = contour.refined()
        assert refined.size == 2 * contour.size
        assert np.allclose(refined.vertices, contour.vertices)
        circle = Contour.circle(0, 1, 8).refined()
        assert circle.size == 16

    def test_distance_to_interval(self):
        contour = Contour.rectangle(-1, 2, 0.5, 8)
        assert np.isclose(contour.distance_to_interval(0, 1), 0.5)

    def test_check_encloses(self):
        contour = Contour.rectangle(-1, 2, 0.5, 8)
        contour.check_encloses(0, 1)
        with pytest.raises(NearSingularError, match="does not enclose"):
            contour.check_encloses(-2, 1)


class TestPolynomials:
    @pytest.mark.parametrize(
        "text, coef",
        [
            ("x^2 + 3x - 1", [-1, 3, 1]),
            ("x**2", [0, 0, 1]),
            ("2*x", [0, 2]),
            ("-x", [0, -1]),
            ("1", [1]),
            ("0.5x^3 - 2.5e-1", [-0.25, 0, 0, 0.5]),
            (" x + x ", [0, 2]),
        ],
    )
    def test_parse(self, text, coef):
        assert np.allclose(parse_polynomial(text).coef, coef)

    @pytest.mark.parametrize("text", ["", "x x", "x^", "3 *", "y"])
    def test_parse_invalid(self, text):
        with pytest.raises(ValueError):
            _ = parse_polynomial(text)

    def test_as_polynomial(self):
        z = np.array([1 + 1j, 2.0])
        assert np.allclose(as_polynomial("x^2")(z), z**2)
        assert np.allclose(as_polynomial([1, 0, 1])(z), 1 + z**2)
        p = Polynomial([0, 1])
        assert as_polynomial(p) is p
        assert as_polynomial(np.exp) is np.exp
        with pytest.raises(ValueError, match="non-empty"):
            _ = as_polynomial([])
