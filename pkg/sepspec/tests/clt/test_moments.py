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

from sepspec.base import NearSingularError
from sepspec.clt import CltMoments, Contour, clt_covariance, clt_mean, clt_moments
from sepspec.lsd import support_from_measures
from sepspec.model import EntryLaw

# Closed forms for f = x^2, Model 1 spectrum, c = 0.5, real Gaussian entries
MU = 1.25
SIGMA2 = 13.75


def _contour(h1, h2, c, nodes=128, v0=0.5, margin=0.05):
    support = support_from_measures(h1, h2, c, margin=margin)
    return Contour.enclosing(support, v0=v0, nodes_per_side=nodes)


def _sigma2(h1, h2, c, alpha_x=1, kappa_x=0):
    """Variance of tr S^2 from the second and fourth moments of H2."""
    y2, y4 = h2.moment(2), h2.moment(4)
    m1, m2 = h1.moment(1), h1.moment(2)
    return (
        2 * c**2 * (1 + alpha_x**2) * y2**2 * m2**2
        + 4 * c**3 * (kappa_x + 2) * y4 * m1**2 * m2
    )


class TestClosedForms:
    def test_arcsine_limit(self, model1_h1, arcsine):
        contour = _contour(model1_h1, arcsine, 0.5)
        moments = clt_moments(["x^2"], model1_h1, arcsine, 0.5, 1, 0, contour=contour)
        assert moments.labels == ["x^2"]
        assert np.isclose(moments.mean[0], MU, rtol=1e-3)
        assert np.isclose(moments.cov[0, 0], SIGMA2, rtol=1e-3)
        assert moments.mean_imag < 1e-6
        assert moments.cov_imag < 1e-4

    def test_finite_shift_spectrum(self, model1_h1, shift_h2):
        contour = _contour(model1_h1, shift_h2, 0.5)
        moments = clt_moments(
            ["x^2"], model1_h1, shift_h2, 0.5, 1, 0, contour=contour, threads=2
        )
        assert np.isclose(moments.mean[0], MU * 599 / 600, rtol=1e-3)
        sigma2 = _sigma2(model1_h1, shift_h2, 0.5)
        assert abs(sigma2 / SIGMA2 - 1) < 5e-3
        assert np.isclose(moments.cov[0, 0], sigma2, rtol=1e-3)

    def test_mean_by_law(self, model1_h1, arcsine):
        contour = _contour(model1_h1, arcsine, 0.5)
        mean = clt_mean("x^2", model1_h1, arcsine, 0.5, 0, 1, contour=contour)
        # c (alpha + kappa) / 2 * m2(H1) with alpha = 0, kappa = 1
        assert np.isclose(mean, 1.25, rtol=1e-3)
        assert clt_mean("x^2", model1_h1, arcsine, 0.5, 0, 0, contour=contour) == 0

    def test_arcsine_closed_form_of_sigma2(self, model1_h1, arcsine):
        assert np.isclose(_sigma2(model1_h1, arcsine, 0.5), SIGMA2)

    def test_left_half_of_contour(self, model1_h1, shift_h2):
        # Symmetric H2 gives an even limit, so odd statistics have mean 0
        contour = _contour(model1_h1, shift_h2, 0.5, 64)
        mean = clt_mean("x^3", model1_h1, shift_h2, 0.5, 1, 0, contour=contour)
        assert abs(mean) < 1e-6


class TestContourChoice:
    @pytest.mark.parametrize("kappa_x", [1.0, 2.0])
    def test_covariance_is_linear_in_kappa(self, model1_h1, arcsine, kappa_x):
        contour = _contour(model1_h1, arcsine, 0.5, 64)

        def cov(kappa):
            return clt_covariance(
                "x^2", "x", model1_h1, arcsine, 0.5, 1, kappa, contour
            )

        base = cov(0.0)
        expected = base + kappa_x * (cov(1.0) - base)
        assert np.isclose(cov(kappa_x), expected, rtol=1e-6)

    @pytest.mark.parametrize("v0", [0.3, 0.6, 1.0])
    @pytest.mark.parametrize("margin", [0.03, 0.1])
    def test_invariant_to_contour(self, point_mass, v0, margin):
        fs = ["x^2", "x"]
        default = _contour(point_mass, point_mass, 0.5, 128)
        other = _contour(point_mass, point_mass, 0.5, 128, v0=v0, margin=margin)
        reference = clt_moments(fs, point_mass, point_mass, 0.5, 1, 1, default)
        moments = clt_moments(fs, point_mass, point_mass, 0.5, 1, 1, other)
        assert np.allclose(moments.mean, reference.mean, rtol=1e-4, atol=1e-10)
        assert np.allclose(moments.cov, reference.cov, rtol=1e-4, atol=1e-10)

    def test_doubling_nodes(self, model1_h1, point_mass):
        contour = _contour(model1_h1, point_mass, 0.5, 64)
        coarse = clt_mean("x^2", model1_h1, point_mass, 0.5, 1, 0, contour=contour)
        fine = clt_mean(
            "x^2", model1_h1, point_mass, 0.5, 1, 0, contour=contour.refined()
        )
        assert abs(fine - coarse) < 1e-8


class TestMarchenkoPastur:
    @pytest.mark.parametrize(
        "law, variance",
        [
            (EntryLaw.real_gaussian(), 1.0),
            (EntryLaw.complex_gaussian(), 0.5),
            (EntryLaw.rademacher(), 0.0),
        ],
    )
    def test_trace(self, point_mass, law, variance):
        contour = _contour(point_mass, point_mass, 0.5, 64)
        moments = clt_moments(
            ["x"], point_mass, point_mass, 0.5, law.alpha_x, law.kappa_x, contour
        )
        assert np.isclose(moments.mean[0], 0, atol=1e-8)
        assert np.isclose(moments.cov[0, 0], variance, rtol=1e-4, atol=1e-7)

    def test_constant_function(self, point_mass):
        contour = _contour(point_mass, point_mass, 0.5, 64)
        moments = clt_moments(["1", "x"], point_mass, point_mass, 0.5, 1, 0, contour)
        assert np.isclose(moments.mean[0], 0, atol=1e-8)
        assert np.allclose(moments.cov[0], 0, atol=1e-6)
        assert np.allclose(moments.cov[:, 0], 0, atol=1e-6)

    def test_methods_agree(self, point_mass):
        contour = _contour(point_mass, point_mass, 0.5, 64)
        fs = ["x", "x^2", "x^3 - x"]
        fd = clt_moments(fs, point_mass, point_mass, 0.5, 1, 0, contour)
        analytic = clt_moments(
            fs, point_mass, point_mass, 0.5, 1, 0, contour, method="analytic"
        )
        assert np.allclose(fd.mean, analytic.mean)
        assert np.allclose(fd.cov, analytic.cov, rtol=1e-5, atol=1e-8)
        assert np.allclose(fd.cov, fd.cov.T)
        assert np.all(np.linalg.eigvalsh(fd.cov) > -1e-8)

    def test_covariance_is_symmetric_in_contours(self, point_mass):
        contour = _contour(point_mass, point_mass, 0.5, 64)
        fg = clt_covariance("x", "x^2", point_mass, point_mass, 0.5, 1, 0, contour)
        gf = clt_covariance("x^2", "x", point_mass, point_mass, 0.5, 1, 0, contour)
        assert np.isclose(fg, gf, rtol=1e-6)


class TestCltMoments:
    def test_mean_only(self, point_mass):
        contour = _contour(point_mass, point_mass, 0.5, 64)
        moments = clt_moments(
            ["x"], point_mass, point_mass, 0.5, 1, 0, contour, covariance=False
        )
        assert moments.cov is None

    def test_labels(self, point_mass):
        contour = _contour(point_mass, point_mass, 0.5, 16)
        moments = clt_moments(
            [[0, 1]], point_mass, point_mass, 0.5, 1, 0, contour, labels=["trace"]
        )
        assert moments.labels == ["trace"]

    def test_invalid_input(self, point_mass):
        with pytest.raises(ValueError, match="Unknown derivative method"):
            _ = clt_moments(["x"], point_mass, point_mass, 0.5, 1, 0, method="exact")
        with pytest.raises(ValueError, match="At least one test function"):
            _ = clt_moments([], point_mass, point_mass, 0.5, 1, 0)

    def test_contour_must_enclose_support(self, point_mass):
        contour = Contour.rectangle(1, 2, 0.5, 16)
        with pytest.raises(NearSingularError, match="does not enclose"):
            _ = clt_moments(["x"], point_mass, point_mass, 0.5, 1, 0, contour)

    def test_dict_round_trip(self):
        moments = CltMoments(
            np.array([1.25]), np.array([[13.75]]), 1e-12, 1e-10, ["x^2"]
        )
        d = moments.to_dict()
        assert d["mean"] == [1.25]
        assert d["cov"] == [[13.75]]
        back = CltMoments.from_dict(d)
        assert np.array_equal(back.mean, moments.mean)
        assert np.array_equal(back.cov, moments.cov)
        assert back.labels == ["x^2"]
        assert CltMoments.from_dict({"mean": [0.0]}).cov is None
