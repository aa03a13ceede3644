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

"""The multi-lag white noise test and its report."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import List, Optional, Union
import warnings

import numpy as np
from scipy.stats import norm

from sepspec.base import ConfigurationError, InvalidLagError
from sepspec.whitenoise.statistic import (
    CENTERINGS,
    KnownMoments,
    lambda_hat,
    null_parameters,
    plug_in_moments,
)

PLUG_IN = "plug_in"


@dataclass(frozen=True)
class TestConfig:
    """Configuration of :func:`run_test`.

    Parameters
    ----------
    q
        Largest lag; lags 1, ..., q are tested. Default is 1.
    level
        Significance level in (0, 1). Default is 0.05.
    moments
        :class:`KnownMoments` of the null covariance, or "plug_in"
        (default) to estimate them from the data.
    centering
        "finite_n" (default) or "asymptotic".
    alpha_x, kappa_x
        Moment parameters of the innovations. Default is the real
        Gaussian case (1, 0).
    """

    # Not a test class
    __test__ = False

    q: int = 1
    level: float = 0.05
    moments: Union[KnownMoments, str] = PLUG_IN
    centering: str = "finite_n"
    alpha_x: float = 1.0
    kappa_x: float = 0.0

    def __post_init__(self):
        if int(self.q) != self.q or self.q < 1:
            raise ConfigurationError(
                f"Largest lag q={self.q} must be a positive integer."
            )
        if not 0 < self.level < 1:
            raise ConfigurationError(f"Level {self.level} must lie in (0, 1).")
        if self.centering not in CENTERINGS:
            raise ConfigurationError(
                f"Unknown centering {self.centering!r}, use one of {CENTERINGS}."
            )
        if isinstance(self.moments, str):
            if self.moments != PLUG_IN:
                raise ConfigurationError(
                    f"Moments must be KnownMoments or {PLUG_IN!r}, not "
                    f"{self.moments!r}."
                )
        else:
            object.__setattr__(self, "moments", KnownMoments(*self.moments))

    @property
    def moment_source(self) -> str:
        """Return "known" or "plug_in"."""
        return PLUG_IN if isinstance(self.moments, str) else "known"


@dataclass(frozen=True)
class LagResult:
    """Test result at one lag."""

    tau: int
    lambda_hat: float
    centering: float
    mu: float
    sigma2: float
    zscore: float
    pvalue: float


@dataclass
class WhiteNoiseReport:
    """Result of :func:`run_test`.

    Attributes
    ----------
    per_lag
        One :class:`LagResult` per lag.
    decision
        Whether the null of white noise is rejected.
    level
        Overall significance level; each lag is tested at ``level / q``.
    p, n
        Dimension and sample size.
    m1, m2
        Spectral moments used for the null parameters.
    moment_source
        "known" or "plug_in".
    warnings
        Messages about the reliability of the result.
    """

    per_lag: List[LagResult]
    decision: bool
    level: float
    p: int
    n: int
    m1: float
    m2: float
    moment_source: str = "known"
    warnings: List[str] = field(default_factory=list)

    def __repr__(self) -> str:
        verdict = "reject" if self.decision else "accept"
        lines = [
            f"{self.__class__.__name__} (p={self.p}, n={self.n}) {verdict} at "
            f"level {self.level}"
        ]
        for r in self.per_lag:
            lines.append(f"  tau={r.tau} z={r.zscore:.4f} p={r.pvalue:.4g}")
        return "\n".join(lines)

    @property
    def q(self) -> int:
        """Return the largest tested lag."""
        return len(self.per_lag)

    @property
    def min_pvalue(self) -> float:
        """Return the smallest p-value over the lags."""
        return min(r.pvalue for r in self.per_lag)

    def to_dict(self) -> dict:
        """Return a JSON serialisable dictionary."""
        d = asdict(self)
        d["per_lag"] = [asdict(r) for r in self.per_lag]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> WhiteNoiseReport:
        """Return a report from :meth:`to_dict` output."""
        d = dict(d)
        d["per_lag"] = [LagResult(**r) for r in d["per_lag"]]
        d["warnings"] = list(d.get("warnings", []))
        return cls(**d)


def run_test(data: np.ndarray, cfg: Optional[TestConfig] = None) -> WhiteNoiseReport:
    r"""Test a p-dimensional time series for white noise.

    For each lag :math:`\tau = 1, \dots, q` the statistic
    :math:`\hat\Lambda_\tau` is standardised to
    :math:`z = (\hat\Lambda_\tau - \text{centering} - \mu)/\sigma` and
    the upper one-sided p-value is taken from the standard normal
    distribution. The null is rejected if the smallest p-value is below
    ``level / q``.

    Parameters
    ----------
    data
        Real or complex matrix of shape (p, n) with observations in
        columns.
    cfg
        Test configuration. Default is :class:`TestConfig` with its
        defaults.

    Returns
    -------
    report
        Per-lag results and the decision.

    Raises
    ------
    InvalidLagError
        If ``q >= n``.

    Notes
    -----
    If plug-in moments are requested and the estimate of m2 is not
    positive, as for a zero matrix, every lag gets the p-value 1 and a
    warning is added to the report. The centring, null moments and
    z-score of such lags are NaN.
    """
    cfg = cfg if cfg is not None else TestConfig()
    data = np.atleast_2d(np.asarray(data))
    if not np.all(np.isfinite(data)):
        raise ValueError("Data contain non-finite values.")
    p, n = data.shape
    if cfg.q >= n:
        raise InvalidLagError(cfg.q, n, lower=1)

    messages = []
    if cfg.moment_source == PLUG_IN:
        moments = plug_in_moments(data)
        if n <= p + 2:
            msg = (
                f"Plug-in moment estimates are ill-conditioned for n={n} <= p + 2 "
                f"= {p + 2}."
            )
            warnings.warn(msg)
            messages.append(msg)
    else:
        moments = cfg.moments
    degenerate = cfg.moment_source == PLUG_IN and not moments.m2 > 0
    if degenerate:
        msg = (
            "Sample covariance has no spread (m2 estimate <= 0), the null is not "
            "rejected."
        )
        warnings.warn(msg)
        messages.append(msg)

    results = []
    for tau in range(1, cfg.q + 1):
        stat = lambda_hat(data, tau)
        if degenerate:
            results.append(LagResult(tau, stat, np.nan, np.nan, np.nan, np.nan, 1.0))
            continue
        params = null_parameters(
            p,
            n,
            tau,
            moments.m1,
            moments.m2,
            cfg.alpha_x,
            cfg.kappa_x,
            cfg.centering,
        )
        z = (stat - params.centering - params.mu) / np.sqrt(params.sigma2)
        results.append(
            LagResult(
                tau,
                stat,
                params.centering,
                params.mu,
                params.sigma2,
                float(z),
                float(norm.sf(z)),
            )
        )
    decision = bool(min(r.pvalue for r in results) < cfg.level / cfg.q)
    return WhiteNoiseReport(
        results,
        decision,
        cfg.level,
        p,
        n,
        float(moments.m1),
        float(moments.m2),
        cfg.moment_source,
        messages,
    )
