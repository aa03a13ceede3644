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

from dataclasses import replace

import numpy as np
import pytest

from sepspec.base import ConfigurationError
from sepspec.model import LinearProcessSpec, SeparableModel
from sepspec.montecarlo import (
    TABLE1_SIZE,
    TABLE2_POWER,
    SimulationPlan,
    SimulationRow,
    SimulationTable,
    empirical_lss_moments,
    run_plan,
    wilson_interval,
)
from sepspec.whitenoise import PLUG_IN, KnownMoments


class TestWilsonInterval:
    def test_known_value(self):
        low, high = wilson_interval(50, 1000)
        assert np.isclose(low, 0.0381, atol=1e-4)
        assert np.isclose(high, 0.0653, atol=1e-4)

    def test_edges(self):
        low, high = wilson_interval(0, 20)
        assert low == 0 and 0 < high < 0.2
        low, high = wilson_interval(20, 20)
        assert 0.8 < low < 1 and high == 1

    def test_wider_with_confidence(self):
        narrow = wilson_interval(10, 100, 0.9)
        wide = wilson_interval(10, 100, 0.99)
        assert wide[0] < narrow[0] and narrow[1] < wide[1]

    @pytest.mark.parametrize("k, r, conf", [(1, 0, 0.95), (5, 4, 0.95), (1, 4, 1)])
    def test_invalid(self, k, r, conf):
        with pytest.raises(ValueError):
            _ = wilson_interval(k, r, conf)


class TestSimulationPlan:
    def test_cells_are_normalised(self):
        plan = SimulationPlan([[10, 30, 1], (20.0, 40, 3)])
        assert plan.cells == ((10, 30, 1), (20, 40, 3))

    @pytest.mark.parametrize(
        "kwargs, match",
        [
            (dict(cells=[]), "at least one cell"),
            (dict(cells=[(5, 3)]), "not a \\(p, n, q\\) triple"),
            (dict(cells=[(5, 3, 3)]), "n > q >= 1"),
            (dict(cells=[(5, 30, 0)]), "n > q >= 1"),
            (dict(cells=[(5, 30, 1)], replications=0), "must be >= 1"),
            (dict(cells=[(5, 30, 1)], level=1.5), "must lie in"),
            (dict(cells=[(5, 30, 1)], model="model3"), "Unknown model"),
            (dict(cells=[(5, 30, 1)], moments="exact"), "Moments must be"),
        ],
    )
    def test_invalid(self, kwargs, match):
        with pytest.raises(ConfigurationError, match=match):
            _ = SimulationPlan(**kwargs)

    def test_known_moments_of_model1(self):
        plan = SimulationPlan([(10, 30, 2)])
        spec = plan.spec_for(10)
        cfg = plan.config_for(spec, 2)
        assert cfg.q == 2
        assert np.allclose(cfg.moments, KnownMoments(2, 5))
        assert plan.spec_for(10).ma_coefficients == (1.0,)
        assert replace(plan, model="model2").spec_for(10).ma_coefficients == (
            1.0,
            0.3,
            0.1,
        )

    def test_plug_in_and_callable_model(self):
        plan = SimulationPlan(
            [(4, 30, 1)], model=lambda p: LinearProcessSpec(np.eye(p)), moments=PLUG_IN
        )
        spec = plan.spec_for(4)
        assert np.array_equal(spec.sigma0, np.eye(4))
        assert plan.config_for(spec, 1).moments == PLUG_IN


class TestRunPlan:
    def test_deterministic(self):
        plan = SimulationPlan([(10, 30, 1), (5, 20, 2)], replications=20, base_seed=3)
        one = run_plan(plan, batch_size=7, threads=1)
        two = run_plan(plan, batch_size=20, threads=2)
        assert one.to_rows() == two.to_rows()
        assert [r.cell for r in one.rows] == list(plan.cells)
        for row in one.rows:
            assert row.replications == 20
            assert row.rate == row.rejections / 20
            assert row.ci_low <= row.rate <= row.ci_high

    def test_power_of_moving_average(self):
        plan = SimulationPlan([(50, 100, 1)], model="model2", replications=40)
        table = run_plan(plan)
        assert table.rate(50, 100, 1) >= 0.9

    def test_failed_cell(self):
        plan = SimulationPlan(
            [(4, 30, 1), (5, 30, 1)],
            model=lambda p: LinearProcessSpec(np.eye(4)),
            replications=5,
        )
        table = run_plan(plan)
        assert table.rows[0].error is None
        failed = table.rows[1]
        assert "does not match" in failed.error
        assert np.isnan(failed.rate)
        assert "failed" in repr(table)

    def test_invalid_batch_size(self):
        with pytest.raises(ValueError, match="Batch size"):
            _ = run_plan(SimulationPlan([(4, 30, 1)]), batch_size=0)


class TestSimulationTable:
    def test_rows(self):
        table = SimulationTable(
            [
                SimulationRow.from_counts((10, 50, 1), 5, 100),
                SimulationRow.failed((10, 50, 3), 100, "solver failed"),
            ]
        )
        assert len(table) == 2
        assert table.rate(10, 50, 1) == 0.05
        with pytest.raises(KeyError):
            _ = table.rate(1, 2, 3)
        rows = table.to_rows()
        assert rows[0]["ci_low"] < 0.05 < rows[0]["ci_high"]
        assert rows[1]["error"] == "solver failed"
        back = SimulationTable.from_rows(rows)
        assert back.rows[0] == table.rows[0]
        assert back.rows[1].error == "solver failed"
        assert repr(back).splitlines()[1] == "  p=10 n=50 q=1 0.050"

    def test_reference_tables(self):
        assert set(TABLE1_SIZE) == set(TABLE2_POWER)
        assert len(TABLE1_SIZE) == 32
        assert all(0 < v <= 1 for v in TABLE2_POWER.values())


class TestEmpiricalLssMoments:
    def test_trace_of_sample_covariance(self):
        model = SeparableModel.identity(20, 40)
        mean, var = empirical_lss_moments(model, "x", 200, base_seed=5)
        assert abs(mean) < 0.25
        assert np.isclose(var, 1.0, rtol=0.3)

    def test_needs_two_replications(self):
        with pytest.raises(ValueError, match="At least two replications"):
            _ = empirical_lss_moments(SeparableModel.identity(5, 10), "x", 1)


def _multi_lag_cells(table, tol):
    cells = [(20, 40, 3), (100, 200, 3), (300, 600, 3)]
    mark = pytest.mark.xfail(strict=False, reason="multi-lag cell")
    return [pytest.param(cell, table[cell], tol, marks=mark) for cell in cells]


SIZE_CELLS = [(100, 200, 1), (300, 600, 1), (200, 1000, 1), (500, 250, 1)]


@pytest.mark.slow
@pytest.mark.parametrize(
    "cell, reference, tol",
    [(cell, TABLE1_SIZE[cell], 0.021) for cell in SIZE_CELLS]
    + _multi_lag_cells(TABLE1_SIZE, 0.05),
)
def test_size_matches_reference(cell, reference, tol):
    table = run_plan(SimulationPlan([cell], replications=1000))
    assert abs(table.rows[0].rate - reference) <= tol


@pytest.mark.slow
@pytest.mark.parametrize(
    "cell, reference, tol",
    [((20, 40, 1), 0.946, 0.05), ((5, 50, 1), 0.857, 0.05)]
    + _multi_lag_cells(TABLE2_POWER, 0.05),
)
def test_power_matches_reference(cell, reference, tol):
    assert TABLE2_POWER[cell] == reference
    table = run_plan(SimulationPlan([cell], model="model2", replications=500))
    assert abs(table.rows[0].rate - reference) <= tol


@pytest.mark.slow
def test_power_is_near_one_for_moderate_sizes():
    table = run_plan(SimulationPlan([(50, 100, 1)], model="model2", replications=500))
    assert table.rows[0].rate >= 0.99


@pytest.mark.slow
def test_lss_moments_match_clt():
    spec = LinearProcessSpec.model1(200)
    model = SeparableModel.white_noise(spec.sigma0_sqrt, 400, 1)
    mean, var = empirical_lss_moments(model, "x^2", 1000, base_seed=11)
    assert abs(mean - 1.25) < 0.5
    assert np.isclose(var, 13.75, rtol=0.15)
