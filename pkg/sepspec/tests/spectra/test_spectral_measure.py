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
import pytest

from sepspec.base import DimensionError, SingularIntegralError
from sepspec.spectra import (
    ArcsineMeasure,
    DiscreteMeasure,
    PointMass,
    moment,
    resolvent_integral,
)


class TestDiscreteMeasure:
    def test_merges_atoms(self):
        h = DiscreteMeasure([3, 1, 3, 1])
        assert np.allclose(h.locations, [1, 3])
        assert np.allclose(h.weights, [0.5, 0.5])
        assert h.support_lo == 1
        assert h.support_hi == 3

    def test_repr(self):
        assert repr(DiscreteMeasure([1, 3])) == "DiscreteMeasure (2 atoms) on [1, 3]"
        assert repr(PointMass(2)) == "PointMass at 2"

    @pytest.mark.parametrize(
        "locations, weights, error, match",
        [
            ([1, 2], [0.5, 0.6], ValueError, "sum to"),
            ([1, 2], [1.5, -0.5], ValueError, "non-negative"),
            ([1, 2], [1.0], DimensionError, "2 locations but 1 weights"),
            ([], None, ValueError, "at least one atom"),
            ([1, np.inf], None, ValueError, "finite"),
        ],
    )
    def test_invalid(self, locations, weights, error, match):
        with pytest.raises(error, match=match):
            _ = DiscreteMeasure(locations, weights)

    def test_moments(self, model1_h1):
        assert np.isclose(model1_h1.moment(0), 1)
        assert np.isclose(model1_h1.moment(1), 2)
        assert np.isclose(moment(model1_h1, 2), 5)

    def test_resolvent_integral(self, model1_h1):
        g = 0.3 + 0.2j
        expected = 0.5 * (1 / (1 + g) + 1 / (1 + 3 * g))
        assert np.isclose(model1_h1.resolvent_integral(g), expected)
        expected2 = 0.5 * (1 / (1 + g) ** 2 + 3 / (1 + 3 * g) ** 2)
        assert np.isclose(
            resolvent_integral(model1_h1, g, power=2, numerator_power=1), expected2
        )

    def test_resolvent_integral_vectorised(self, model1_h1):
        g = np.linspace(0.1, 1, 12).reshape(3, 4) * (1 + 1j)
        out = model1_h1.resolvent_integral(g)
        assert out.shape == (3, 4)
        assert np.isclose(out[1, 2], model1_h1.resolvent_integral(g[1, 2]))

    def test_resolvent_integral_pole_raises(self, model1_h1):
        with pytest.raises(SingularIntegralError):
            _ = model1_h1.resolvent_integral(-1.0)

    def test_negative_powers_rejected(self, model1_h1):
        with pytest.raises(ValueError):
            _ = model1_h1.resolvent_integral(0.5j, power=-1)

    def test_integrate(self, model1_h1):
        assert np.isclose(model1_h1.integrate(np.exp), 0.5 * (np.e + np.e**3))

    def test_cdf(self, model1_h1):
        assert np.allclose(model1_h1.cdf([0, 1, 2, 3, 4]), [0, 0.5, 0.5, 1, 1])

    def test_from_matrix(self):
        h = DiscreteMeasure.from_matrix(np.array([[2.0, 1.0], [1.0, 2.0]]))
        assert np.allclose(h.locations, [1, 3])

    def test_point_mass(self, point_mass):
        assert point_mass.location == 1
        assert np.isclose(point_mass.resolvent_integral(1j), 1 / (1 + 1j))


class TestArcsineMeasure:
    @pytest.mark.parametrize("k, value", [(0, 1), (1, 0), (2, 0.5), (3, 0), (4, 0.375)])
    def test_moments(self, arcsine, k, value):
        assert np.isclose(arcsine.moment(k), value)
        # Quadrature agrees with the closed form
        assert np.isclose(arcsine.integrate(lambda t: t**k), value)

    @pytest.mark.parametrize("g", [0.5, 0.5j, 0.3 + 0.4j, -0.2 - 0.7j])
    def test_resolvent_integral_closed_form(self, arcsine, g):
        assert np.isclose(arcsine.resolvent_integral(g), 1 / np.sqrt(1 - g**2))
        assert np.isclose(
            arcsine.resolvent_integral(g, power=2), (1 - g**2) ** -1.5
        )
        assert np.isclose(
            arcsine.resolvent_integral(g, power=2, numerator_power=1),
            -g * (1 - g**2) ** -1.5,
        )

    def test_resolvent_integral_vectorised(self, arcsine):
        g = np.array([0.5j, 0.25j])
        out = arcsine.resolvent_integral(g)
        assert out.shape == (2,)
        assert np.allclose(out, 1 / np.sqrt(1 - g**2))

    def test_power_zero_is_moment(self, arcsine):
        value = arcsine.resolvent_integral(3.0, power=0, numerator_power=2)
        assert np.isclose(value, 0.5)

    @pytest.mark.parametrize("g", [1.0, -1.5, 2.0])
    def test_pole_on_support_raises(self, arcsine, g):
        with pytest.raises(SingularIntegralError):
            _ = arcsine.resolvent_integral(g)

    def test_cdf(self, arcsine):
        assert np.allclose(arcsine.cdf([-2, -1, 0, 1, 2]), [0, 0, 0.5, 1, 1])
        assert np.isclose(arcsine.cdf(0.5), 2 / 3)

    def test_invalid_nodes(self):
        with pytest.raises(ValueError, match="nodes <= max_nodes"):
            _ = ArcsineMeasure(nodes=512, max_nodes=256)

    def test_agrees_with_large_shift_spectrum(self, arcsine, shift_h2):
        g = 0.4 + 0.6j
        assert np.isclose(
            shift_h2.resolvent_integral(g), arcsine.resolvent_integral(g), atol=1e-2
        )
        assert np.isclose(shift_h2.moment(2), 599 / 1200)
