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

"""Seeded Monte Carlo replications of the white noise test and of
linear spectral statistics.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple, Union

import dask
import numpy as np
from scipy.stats import norm
from tqdm import tqdm

from sepspec._util import derive_seed, resolve_threads
from sepspec.base import ConfigurationError, SepspecError
from sepspec.clt import Contour, as_polynomial
from sepspec.clt.functions import TestFunction
from sepspec.lsd import lsd_linear_statistic
from sepspec.model import (
    EntryLaw,
    LinearProcessSpec,
    SeparableModel,
    generate_linear_process,
)
from sepspec.spectra import SpectralMeasure, esd
from sepspec.whitenoise import PLUG_IN, KnownMoments, TestConfig, run_test

_logger = logging.getLogger(__name__)

MODELS = ("model1", "model2")

Cell = Tuple[int, int, int]


def wilson_interval(k: int, r: int, confidence: float = 0.95) -> Tuple[float, float]:
    """Return the Wilson score interval of a binomial proportion.

    Parameters
    ----------
    k
        Number of successes, 0 <= k <= r.
    r
        Number of trials, r >= 1.
    confidence
        Coverage of the interval. Default is 0.95.

    Returns
    -------
    low, high
        Interval ends in [0, 1].

    Examples
    --------
    >>> from sepspec.montecarlo import wilson_interval
    >>> low, high = wilson_interval(50, 1000)
    >>> round(low, 4), round(high, 4)
    (0.0381, 0.0653)
    """
    if r < 1 or not 0 <= k <= r:
        raise ValueError(f"Need 0 <= k <= r and r >= 1, got k={k} and r={r}.")
    if not 0 < confidence < 1:
        raise ValueError(f"Confidence {confidence} must lie in (0, 1).")
    z = norm.ppf(0.5 + confidence / 2)
    z2 = z * z
    phat = k / r
    center = (phat + z2 / (2 * r)) / (1 + z2 / r)
    half = z * math.sqrt(phat * (1 - phat) / r + z2 / (4 * r * r)) / (1 + z2 / r)
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class SimulationPlan:
    """A grid of (p, n, q) cells to replicate the white noise test on.

    Parameters
    ----------
    cells
        Cells (p, n, q); each must satisfy n > q.
    model
        "model1" (white noise) or "model2" (moving average), or a
        callable returning a :class:`~sepspec.model.LinearProcessSpec`
        for a dimension p.
    replications
        Replications per cell. Default is 1000.
    level
        Significance level. Default is 0.05.
    base_seed
        Seed from which all replication seeds are derived. Default is 0.
    moments
        "known" (default) to use the spectral moments of the process'
        spatial covariance, or "plug_in".
    law
        Law of the innovations. Default is real Gaussian.
    centering
        "finite_n" (default) or "asymptotic".
    """

    cells: Tuple[Cell, ...]
    model: Union[str, Callable[[int], LinearProcessSpec]] = "model1"
    replications: int = 1000
    level: float = 0.05
    base_seed: int = 0
    moments: str = "known"
    law: EntryLaw = field(default_factory=EntryLaw.real_gaussian)
    centering: str = "finite_n"

    def __post_init__(self):
        cells = tuple(tuple(int(v) for v in cell) for cell in self.cells)
        if len(cells) == 0:
            raise ConfigurationError("A simulation plan needs at least one cell.")
        for cell in cells:
            if len(cell) != 3:
                raise ConfigurationError(f"Cell {cell} is not a (p, n, q) triple.")
            p, n, q = cell
            if p < 1 or q < 1 or n <= q:
                raise ConfigurationError(
                    f"Cell (p={p}, n={n}, q={q}) must satisfy p >= 1 and n > q >= 1."
                )
        object.__setattr__(self, "cells", cells)
        if self.replications < 1:
            raise ConfigurationError(
                f"Number of replications {self.replications} must be >= 1."
            )
        if not 0 < self.level < 1:
            raise ConfigurationError(f"Level {self.level} must lie in (0, 1).")
        if isinstance(self.model, str) and self.model not in MODELS:
            raise ConfigurationError(
                f"Unknown model {self.model!r}, use one of {MODELS}."
            )
        if self.moments not in ("known", PLUG_IN):
            raise ConfigurationError(
                f"Moments must be 'known' or {PLUG_IN!r}, not {self.moments!r}."
            )

    def spec_for(self, p: int) -> LinearProcessSpec:
        """Return the process specification in dimension ``p``."""
        if self.model == "model1":
            return LinearProcessSpec.model1(p, self.law)
        elif self.model == "model2":
            return LinearProcessSpec.model2(p, self.law)
        return self.model(p)

    def config_for(self, spec: LinearProcessSpec, q: int) -> TestConfig:
        """Return the test configuration of a cell."""
        if self.moments == "known":
            moments = KnownMoments(*spec.population_moments)
        else:
            moments = PLUG_IN
        return TestConfig(
            q,
            self.level,
            moments,
            self.centering,
            self.law.alpha_x,
            self.law.kappa_x,
        )


@dataclass
class SimulationRow:
    """Empirical rejection rate of one cell.

    A cell that failed has ``rate`` NaN and the error message in
    ``error``.
    """

    p: int
    n: int
    q: int
    rejections: int
    replications: int
    rate: float
    ci_low: float
    ci_high: float
    error: Optional[str] = None

    @classmethod
    def from_counts(cls, cell: Cell, k: int, r: int) -> SimulationRow:
        """Return a row with ``k`` rejections in ``r`` replications."""
        low, high = wilson_interval(k, r)
        return cls(*cell, k, r, k / r, low, high)

    @classmethod
    def failed(cls, cell: Cell, r: int, error: str) -> SimulationRow:
        """Return a diagnostic row of a cell that failed."""
        nan = float("nan")
        return cls(*cell, 0, r, nan, nan, nan, error)

    @property
    def cell(self) -> Cell:
        """Return (p, n, q)."""
        return self.p, self.n, self.q


@dataclass
class SimulationTable:
    """Rows of a simulation run."""

    rows: List[SimulationRow]

    def __repr__(self) -> str:
        lines = [f"{self.__class__.__name__} ({len(self.rows)} cells)"]
        for r in self.rows:
            value = f"{r.rate:.3f}" if r.error is None else f"failed: {r.error}"
            lines.append(f"  p={r.p} n={r.n} q={r.q} {value}")
        return "\n".join(lines)

    def __len__(self) -> int:
        return len(self.rows)

    def rate(self, p: int, n: int, q: int) -> float:
        """Return the rejection rate of a cell."""
        for r in self.rows:
            if r.cell == (p, n, q):
                return r.rate
        raise KeyError(f"No cell (p={p}, n={n}, q={q}) in table.")

    def to_rows(self) -> List[dict]:
        """Return the rows as dictionaries."""
        return [asdict(r) for r in self.rows]

    @classmethod
    def from_rows(cls, rows: Sequence[dict]) -> SimulationTable:
        """Return a table from :meth:`to_rows` output."""
        return cls([SimulationRow(**r) for r in rows])


def _compute_batches(batches, threads: Optional[int]) -> list:
    return list(
        dask.compute(
            *batches, scheduler="threads", num_workers=resolve_threads(threads)
        )
    )


def _test_batch(spec, cfg, p, n, seeds) -> List[bool]:
    return [
        run_test(generate_linear_process(spec, p, n, s), cfg).decision for s in seeds
    ]


def run_plan(
    plan: SimulationPlan,
    batch_size: int = 50,
    threads: Optional[int] = None,
    verbose: bool = False,
) -> SimulationTable:
    """Run the white noise test on all cells of a plan.

    Replication ``r`` of cell ``i`` draws its data from the seed
    ``derive_seed(base_seed, i, r)``, so the table does not depend on
    scheduling.

    Parameters
    ----------
    plan
        Simulation plan.
    batch_size
        Replications per parallel task. Default is 50.
    threads
        Number of worker threads; see
        :func:`~sepspec._util.resolve_threads`.
    verbose
        Whether to print a progressbar over the cells. Default is
        ``False``.

    Returns
    -------
    table
        One row per cell, in the order of ``plan.cells``.
    """
    if batch_size < 1:
        raise ValueError(f"Batch size {batch_size} must be >= 1.")
    cells = enumerate(plan.cells)
    if verbose:
        cells = tqdm(cells, total=len(plan.cells))
    rows = []
    for i, cell in cells:
        p, n, q = cell
        r = plan.replications
        seeds = [derive_seed(plan.base_seed, i, k) for k in range(r)]
        try:
            spec = plan.spec_for(p)
            cfg = plan.config_for(spec, q)
            batches = [
                dask.delayed(_test_batch)(spec, cfg, p, n, seeds[j : j + batch_size])
                for j in range(0, r, batch_size)
            ]
            batches = _compute_batches(batches, threads)
            decisions = [d for batch in batches for d in batch]
        except SepspecError as e:
            _logger.warning("Cell (p=%d, n=%d, q=%d) failed: %s", p, n, q, e)
            rows.append(SimulationRow.failed(cell, r, str(e)))
            continue
        row = SimulationRow.from_counts(cell, int(np.sum(decisions)), r)
        _logger.info("Cell (p=%d, n=%d, q=%d): rate %.4f", p, n, q, row.rate)
        rows.append(row)
    return SimulationTable(rows)


def _lss_batch(model, f, centering, seeds) -> List[float]:
    return [esd(model.sample(s)).linear_statistic(f) - centering for s in seeds]


def empirical_lss_moments(
    model: SeparableModel,
    f: TestFunction,
    replications: int,
    h1: Optional[SpectralMeasure] = None,
    h2: Optional[SpectralMeasure] = None,
    c: Optional[float] = None,
    base_seed: int = 0,
    contour: Optional[Contour] = None,
    batch_size: int = 50,
    threads: Optional[int] = None,
) -> Tuple[float, float]:
    r"""Return the Monte Carlo mean and variance of the centred linear
    spectral statistic
    :math:`\sum_j f(\lambda_j) - p \int f dF^{c_n, H_{1n}, H_{2n}}`.

    Parameters
    ----------
    model
        Separable model to sample :math:`S_n` from.
    f
        Test function; see :func:`~sepspec.clt.as_polynomial`.
    replications
        Number of replications, at least 2.
    h1, h2, c
        Measures and ratio of the centring distribution. Default is the
        finite-n measures and ratio of ``model``.
    base_seed
        Replication ``r`` uses the seed ``derive_seed(base_seed, r)``.
        Default is 0.
    contour
        Contour of the centring integral; see
        :func:`~sepspec.lsd.lsd_linear_statistic`.
    batch_size
        Replications per parallel task. Default is 50.
    threads
        Number of worker threads.

    Returns
    -------
    mean, variance
        Sample mean and unbiased sample variance.
    """
    if replications < 2:
        raise ValueError(f"At least two replications are needed, not {replications}.")
    h1 = model.h1n if h1 is None else h1
    h2 = model.h2n if h2 is None else h2
    c = model.dims.c_n if c is None else c
    func = as_polynomial(f)
    centering = model.dims.p * lsd_linear_statistic(func, h1, h2, c, contour)
    _logger.debug("Centering of the linear statistic: %.8g", centering)
    seeds = [derive_seed(base_seed, k) for k in range(replications)]
    batches = [
        dask.delayed(_lss_batch)(model, func, centering, seeds[j : j + batch_size])
        for j in range(0, replications, batch_size)
    ]
    batches = _compute_batches(batches, threads)
    values = np.array([v for batch in batches for v in batch])
    return float(values.mean()), float(values.var(ddof=1))
