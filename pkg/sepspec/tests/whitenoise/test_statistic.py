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

from sepspec.base import InvalidLagError, ParameterError
from sepspec.model import shift_matrix
from sepspec.whitenoise import (
    KnownMoments,
    NullParameters,
    lambda_hat,
    null_parameters,
    plug_in_moments,
)


class TestLambdaHat:
    @pytest.mark.parametrize("seed", range(100))
    def test_trace_form(self, seed):
        rng = np.random.default_rng(seed)
        p = int(rng.integers(1, 9))
        n = int(rng.integers(3, 31))
        tau = int(rng.integers(1, n))
        data = rng.standard_normal((p, n))
        if seed % 2:
            data = data + 1j * rng.standard_normal((p, n))
        s = data @ shift_matrix(n, tau) @ data.conj().T / n
        expected = np.trace(s @ s.conj().T).real
        assert np.isclose(lambda_hat(data, tau), expected)

    @pytest.mark.parametrize("seed", range(200))
    def test_quartic_homogeneity(self, seed):
        rng = np.random.default_rng(seed)
        p = int(rng.integers(1, 9))
        n = int(rng.integers(3, 31))
        tau = int(rng.integers(1, n))
        data = rng.standard_normal((p, n))
        a = rng.uniform(-5, 5)
        expected = a**4 * lambda_hat(data, tau)
        assert np.isclose(lambda_hat(a * data, tau), expected, rtol=1e-10, atol=0)

    def test_non_negative(self):
        data = np.random.default_rng(1).standard_normal((4, 10))
        assert all(lambda_hat(data, tau) >= 0 for tau in range(1, 10))

    @pytest.mark.parametrize("tau", [0, 5, 1.5])
    def test_invalid_lag(self, tau):
        with pytest.raises(InvalidLagError, match="must satisfy 1 <= tau < n=5"):
            _ = lambda_hat(np.ones((2, 5)), tau)


class TestNullParameters:
    def test_model1(self):
        params = null_parameters(100, 200, 1, 2, 5, centering="asymptotic")
        assert isinstance(params, NullParameters)
        assert np.isclose(params.centering, 99.5)
        assert np.isclose(params.mu, 1.25)
        assert np.isclose(params.sigma2, 13.75)

    @pytest.mark.parametrize("tau", [1, 2, 3])
    def test_centerings_agree(self, tau):
        finite = null_parameters(100, 200, tau, 2, 5, centering="finite_n")
        asymptotic = null_parameters(100, 200, tau, 2, 5, centering="asymptotic")
        assert np.isclose(finite.centering, asymptotic.centering)
        assert finite.mu == asymptotic.mu
        assert finite.sigma2 == asymptotic.sigma2

    def test_complex_gaussian(self):
        params = null_parameters(100, 200, 1, 2, 5, alpha_x=0, kappa_x=0)
        assert params.mu == 0
        assert np.isclose(params.sigma2, 0.125 * 25 + 1.5 * 0.125 * 2 * 4 * 5)

    def test_lag_does_not_change_mu_and_sigma2(self):
        one = null_parameters(50, 100, 1, 1, 1)
        three = null_parameters(50, 100, 3, 1, 1)
        assert one.mu == three.mu
        assert one.sigma2 == three.sigma2
        assert three.centering < one.centering

    def test_invalid(self):
        with pytest.raises(ParameterError, match="m2=0"):
            _ = null_parameters(10, 20, 1, 1, 0)
        with pytest.raises(InvalidLagError):
            _ = null_parameters(10, 20, 20, 1, 1)
        with pytest.raises(ValueError, match="Unknown centering"):
            _ = null_parameters(10, 20, 1, 1, 1, centering="exact")
        with pytest.raises(ValueError, match="must be positive"):
            _ = null_parameters(0, 20, 1, 1, 1)


class TestPlugInMoments:
    def test_hand_example(self):
        data = np.diag([np.sqrt(6), np.sqrt(2)])
        m = plug_in_moments(data)
        assert np.isclose(m.m1, 2)
        assert np.isclose(m.m2, 1)

    def test_scaling(self):
        data = np.random.default_rng(2).standard_normal((5, 30))
        m = plug_in_moments(data)
        scaled = plug_in_moments(3 * data)
        assert np.allclose(scaled, m.scaled(3))
        assert KnownMoments(1, 2).scaled(2) == (4, 32)

    def test_nearly_unbiased(self):
        rng = np.random.default_rng(3)
        m2 = [plug_in_moments(rng.standard_normal((20, 40))).m2 for _ in range(200)]
        assert abs(np.mean(m2) - 1) < 0.05

    def test_needs_two_observations(self):
        with pytest.raises(ValueError, match="At least two observations"):
            _ = plug_in_moments(np.ones((3, 1)))
