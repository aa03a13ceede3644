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

r"""The lag-:math:`\tau` white noise statistic and its null
parameters.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from sepspec.base import InvalidLagError, ParameterError
from sepspec.model import lag_autocovariance

CENTERINGS = ("finite_n", "asymptotic")


class KnownMoments(NamedTuple):
    r"""First and second spectral moments
    :math:`m_1 = \int x dH_{1n}` and :math:`m_2 = \int x^2 dH_{1n}` of
    the null covariance :math:`\Sigma_0`.
    """

    m1: float
    m2: float

    def scaled(self, a: float) -> KnownMoments:
        """Return the moments of the data multiplied by ``a``."""
        return KnownMoments(a**2 * self.m1, a**4 * self.m2)


class NullParameters(NamedTuple):
    """Centering, mean and variance of the statistic under the null."""

    centering: float
    mu: float
    sigma2: float


def lambda_hat(data: np.ndarray, tau: int) -> float:
    r"""Return :math:`\hat\Lambda_\tau = \mathrm{tr}(\Xi_\tau \Xi_\tau^*)`
    with the symmetrized lag-``tau`` autocovariance
    :math:`\Xi_\tau = (\hat\Sigma_\tau + \hat\Sigma_\tau^*)/2`.

    Parameters
    ----------
    data
        Matrix of shape (p, n) with observations in columns.
    tau
        Lag, 1 <= ``tau`` < n.

    Returns
    -------
    statistic
        Non-negative number.

    Raises
    ------
    InvalidLagError
        If ``tau`` is out of range.

    Examples
    --------
    >>> from sepspec.whitenoise import lambda_hat
    >>> round(lambda_hat(np.array([[1.0, 2.0, 3.0]]), 1), 10)
    7.1111111111
    """
    data = np.atleast_2d(data)
    n = data.shape[1]
    if int(tau) != tau or not 1 <= tau < n:
        raise InvalidLagError(tau, n, lower=1)
    s = lag_autocovariance(data, tau)
    xi = 0.5 * (s + s.conj().T)
    return float(np.sum(np.abs(xi) ** 2))


def null_parameters(
    p: int,
    n: int,
    tau: int,
    m1: float,
    m2: float,
    alpha_x: float = 1.0,
    kappa_x: float = 0.0,
    centering: str = "finite_n",
) -> NullParameters:
    r"""Return the centering, mean and variance of
    :math:`\hat\Lambda_\tau` under the white noise null.

    With :math:`c = p/n`,

    .. math::

        \mu = \frac{c(\alpha_x + \kappa_x)}{2} m_2, \quad
        \sigma^2 = \frac{c^2(1 + \alpha_x^2)}{2} m_2^2
                   + \frac32 c^3 (\kappa_x + 2) m_1^2 m_2.

    The centering is :math:`\frac{n - \tau}{2n} p c m_1^2` ("finite_n")
    or :math:`(pc/2 - \tau c^2/2) m_1^2` ("asymptotic"); both agree
    since c = p/n.

    Parameters
    ----------
    p, n
        Dimension and sample size.
    tau
        Lag, 1 <= ``tau`` < n.
    m1, m2
        First and second spectral moments of :math:`\Sigma_0`.
    alpha_x, kappa_x
        Moment parameters of the innovations. Default is the real
        Gaussian case (1, 0).
    centering
        "finite_n" (default) or "asymptotic".

    Returns
    -------
    params
        Centering, mu and sigma2.

    Raises
    ------
    ParameterError
        If ``m2`` or the resulting variance are not positive.

    Examples
    --------
    >>> from sepspec.whitenoise import null_parameters
    >>> null_parameters(100, 200, 1, 2, 5, centering="asymptotic")
    NullParameters(centering=99.5, mu=1.25, sigma2=13.75)
    """
    if p < 1 or n < 1:
        raise ValueError(f"Dimensions must be positive, got p={p} and n={n}.")
    if int(tau) != tau or not 1 <= tau < n:
        raise InvalidLagError(tau, n, lower=1)
    if centering not in CENTERINGS:
        raise ValueError(f"Unknown centering {centering!r}, use one of {CENTERINGS}.")
    if not m2 > 0:
        raise ParameterError(f"Second moment m2={m2} must be positive.")
    c = p / n
    if centering == "finite_n":
        center = (n - tau) / (2 * n) * p * c * m1**2
    else:
        center = (p * c / 2 - tau * c**2 / 2) * m1**2
    mu = c * (alpha_x + kappa_x) / 2 * m2
    sigma2 = (
        c**2 * (1 + alpha_x**2) / 2 * m2**2
        + 1.5 * c**3 * (kappa_x + 2) * m1**2 * m2
    )
    if not sigma2 > 0:
        raise ParameterError(
            f"Null variance sigma2={sigma2} is not positive for alpha_x={alpha_x}, "
            f"kappa_x={kappa_x}."
        )
    return NullParameters(float(center), float(mu), float(sigma2))


def plug_in_moments(data: np.ndarray) -> KnownMoments:
    r"""Return estimates of the spectral moments of :math:`\Sigma_0` from
    the sample covariance :math:`\hat\Sigma_0`.

    .. math::

        \hat m_1 = \mathrm{tr}\hat\Sigma_0 / p, \quad
        \hat m_2 = \frac{n^2}{(n - 1)(n + 2) p}
            \left[\mathrm{tr}\hat\Sigma_0^2
                  - (\mathrm{tr}\hat\Sigma_0)^2 / n\right].

    The correction of :math:`\hat m_2` is unbiased for Gaussian data and
    approximate otherwise.

    Parameters
    ----------
    data
        Matrix of shape (p, n), n >= 2.
    """
    data = np.atleast_2d(data)
    p, n = data.shape
    if n < 2:
        raise ValueError(f"At least two observations are needed, not n={n}.")
    s = lag_autocovariance(data, 0)
    tr = float(np.trace(s).real)
    tr2 = float(np.sum(np.abs(s) ** 2))
    m1 = tr / p
    m2 = (tr2 - tr**2 / n) * n**2 / ((n - 1) * (n + 2)) / p
    return KnownMoments(m1, m2)
