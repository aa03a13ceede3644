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

from sepspec.lsd import SupportEstimate, estimate_support, support_from_measures
from sepspec.spectra import PointMass


class TestSupportEstimate:
    def test_properties(self):
        s = SupportEstimate(-1.0, 3.0)
        assert s.width == 4
        assert s.midpoint == 1
        assert np.array_equal(s.contains([-2, -1, 0, 3, 4]), [0, 1, 1, 1, 0])

    def test_invalid_bounds(self):
        with pytest.raises(ValueError, match="x_l < x_r"):
            _ = SupportEstimate(1.0, 1.0)


class TestEstimateSupport:
    def test_marchenko_pastur(self, point_mass):
        s = estimate_support(point_mass, point_mass, 0.25)
        assert (s.raw_l, s.raw_r) == (0.25, 2.25)
        assert np.isclose(s.x_l, 0.25 - 0.05 * 2)
        assert np.isclose(s.x_r, 2.25 + 0.05 * 2)

    def test_left_end_zero_for_large_ratio(self, point_mass):
        s = estimate_support(point_mass, point_mass, 2, margin=0)
        assert s.raw_l == 0
        assert np.isclose(s.raw_r, (1 + np.sqrt(2)) ** 2)

    def test_negative_t2_eigenvalues(self, model1_h1, arcsine):
        s = support_from_measures(model1_h1, arcsine, 0.5, margin=0)
        right = 3 * (1 + np.sqrt(0.5)) ** 2
        assert np.isclose(s.raw_r, right)
        assert np.isclose(s.raw_l, -right)

    def test_explicit_eigenvalues(self, point_mass):
        s = estimate_support(
            point_mass, point_mass, 0.25, s1=2, sn=1, lam_max=3, lam_min=1, margin=0
        )
        assert np.isclose(s.raw_r, 2 * 3 * 2.25)
        assert np.isclose(s.raw_l, 0.25)

    def test_encloses_sample_spectrum(self, white_noise_model):
        s = white_noise_model.support()
        lam = np.linalg.eigvalsh(white_noise_model.sample(1))
        assert np.all(s.contains(lam))

    @pytest.mark.parametrize(
        "kwargs, match",
        [
            (dict(c=0), "must be positive"),
            (dict(c=0.5, s1=-1), "s1=-1.0"),
            (dict(c=0.5, margin=-0.1), "non-negative"),
        ],
    )
    def test_invalid(self, kwargs, match):
        with pytest.raises(ValueError, match=match):
            _ = estimate_support(PointMass(1), PointMass(1), **kwargs)
