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

"""Linear processes, lagged sample autocovariances and the symmetrized
shift matrix of the white noise statistic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import eigh

from sepspec.base import DimensionError, InvalidLagError
from sepspec.model.separable_model import EntryLaw, generate_entries

__all__ = [
    "LinearProcessSpec",
    "generate_linear_process",
    "lag_autocovariance",
    "model1_sigma0",
    "shift_matrix",
    "shift_matrix_eigenvalues",
    "sigma0_sqrt",
]


def model1_sigma0(p: int) -> np.ndarray:
    r"""Return the diagonal covariance :math:`\sigma_{0,i,i} = 2 + (-1)^i`,
    i.e. diag(1, 3, 1, 3, ...) with one-based ``i``.
    """
    i = np.arange(1, p + 1)
    return np.diag(2.0 + (-1.0) ** i)


def sigma0_sqrt(sigma0: np.ndarray) -> np.ndarray:
    """Return the symmetric square root of a covariance matrix.

    Diagonal matrices take the elementwise square root of the diagonal,
    other matrices use a symmetric eigendecomposition with negative
    rounding noise in the eigenvalues clipped to zero.

    Parameters
    ----------
    sigma0
        Symmetric positive semidefinite matrix.

    Returns
    -------
    root
        Matrix ``r`` with ``r @ r.T == sigma0``.
    """
    sigma0 = np.atleast_2d(np.asarray(sigma0, dtype=float))
    if sigma0.shape[0] != sigma0.shape[1]:
        raise DimensionError(f"Covariance must be square, not {sigma0.shape}.")
    diagonal = np.diag(np.diag(sigma0))
    if np.array_equal(sigma0, diagonal):
        d = np.diag(sigma0)
        if np.any(d < 0):
            raise ValueError("Covariance has negative diagonal entries.")
        return np.diag(np.sqrt(d))
    w, v = eigh(0.5 * (sigma0 + sigma0.T))
    if w.min() < -1e-10 * max(abs(w.max()), 1):
        raise ValueError("Covariance is not positive semidefinite.")
    w = np.clip(w, 0, None)
    return (v * np.sqrt(w)) @ v.T


@dataclass(frozen=True, eq=False)
class LinearProcessSpec:
    r"""A p-dimensional linear process
    :math:`\varepsilon_i = \Sigma_0^{1/2} \sum_k b_k x_{i-k}` with scalar
    filter weights :math:`b_k`.

    Parameters
    ----------
    sigma0_sqrt
        Square root of :math:`\Sigma_0`, shape (p, p).
    ma_coefficients
        Filter weights :math:`b_0, b_1, \dots`. Must not be empty.
    law
        Law of the innovations :math:`x_t`. Default is real Gaussian.
    """

    sigma0_sqrt: np.ndarray
    ma_coefficients: Tuple[float, ...] = (1.0,)
    law: EntryLaw = field(default_factory=EntryLaw.real_gaussian)

    def __post_init__(self):
        root = np.atleast_2d(np.asarray(self.sigma0_sqrt, dtype=float))
        if root.shape[0] != root.shape[1]:
            raise DimensionError(f"sigma0_sqrt must be square, not {root.shape}.")
        root = root.copy()
        root.flags.writeable = False
        object.__setattr__(self, "sigma0_sqrt", root)
        b = tuple(float(bk) for bk in self.ma_coefficients)
        if len(b) == 0:
            raise ValueError("`ma_coefficients` must not be empty.")
        object.__setattr__(self, "ma_coefficients", b)

    @classmethod
    def model1(cls, p: int, law: Optional[EntryLaw] = None) -> LinearProcessSpec:
        """Return white noise with the diag(1, 3, 1, 3, ...) covariance."""
        law = law if law is not None else EntryLaw.real_gaussian()
        return cls(sigma0_sqrt(model1_sigma0(p)), (1.0,), law)

    @classmethod
    def model2(cls, p: int, law: Optional[EntryLaw] = None) -> LinearProcessSpec:
        """Return the moving average :math:`x_i + 0.3 x_{i-1} + 0.1 x_{i-2}`
        with the same spatial covariance as :meth:`model1`.
        """
        law = law if law is not None else EntryLaw.real_gaussian()
        return cls(sigma0_sqrt(model1_sigma0(p)), (1.0, 0.3, 0.1), law)

    @property
    def p(self) -> int:
        """Return the dimension of the process."""
        return self.sigma0_sqrt.shape[0]

    @property
    def sigma0(self) -> np.ndarray:
        r"""Return :math:`\Sigma_0`."""
        return self.sigma0_sqrt @ self.sigma0_sqrt.T

    @property
    def population_moments(self) -> Tuple[float, float]:
        r"""Return :math:`(\int x\,dH_{1n}, \int x^2\,dH_{1n})` of the
        spectrum of :math:`\Sigma_0`.
        """
        s = self.sigma0
        return float(np.trace(s)) / self.p, float(np.sum(s * s)) / self.p

    def autocovariance_weight(self, tau: int) -> float:
        r"""Return :math:`\sum_k b_k b_{k+\tau}`, the population lag-``tau``
        autocovariance of the process in units of :math:`\Sigma_0`.
        """
        b = np.asarray(self.ma_coefficients)
        tau = abs(int(tau))
        if tau >= b.size:
            return 0.0
        return float(np.dot(b[: b.size - tau], b[tau:]))


def generate_linear_process(
    spec: LinearProcessSpec, p: int, n: int, seed: int
) -> np.ndarray:
    r"""Return ``n`` consecutive observations of a linear process.

    Parameters
    ----------
    spec
        Process specification.
    p
        Dimension; must match ``spec.sigma0_sqrt``.
    n
        Number of observations.
    seed
        Seed of the innovations.

    Returns
    -------
    data
        Matrix of shape (p, n) whose columns are
        :math:`\varepsilon_1, \dots, \varepsilon_n`.

    Notes
    -----
    ``len(spec.ma_coefficients) - 1`` presample innovations are drawn,
    so that :math:`\varepsilon_1` already has the stationary law.
    """
    if p != spec.p:
        raise DimensionError(f"p={p} does not match sigma0_sqrt of size {spec.p}.")
    if n < 1:
        raise ValueError(f"n={n} must be >= 1.")
    b = spec.ma_coefficients
    burn_in = len(b) - 1
    x = generate_entries(spec.law, p, n + burn_in, seed)
    filtered = np.zeros((p, n), dtype=x.dtype)
    for k, bk in enumerate(b):
        # Column i of the output uses innovation i + burn_in - k
        filtered += bk * x[:, burn_in - k : burn_in - k + n]
    return spec.sigma0_sqrt @ filtered


def lag_autocovariance(data: np.ndarray, tau: int) -> np.ndarray:
    r"""Return the lag-``tau`` sample autocovariance
    :math:`\hat\Sigma_\tau = \frac{1}{n}\sum_{i=1}^{n-\tau}
    \varepsilon_{i+\tau}\varepsilon_i^*`.

    The sum has ``n - tau`` terms but is divided by ``n``.

    Parameters
    ----------
    data
        Matrix of shape (p, n) with observations in columns.
    tau
        Lag, 0 <= ``tau`` < n. ``tau = 0`` gives the sample covariance.

    Returns
    -------
    sigma_tau
        Matrix of shape (p, p).

    Raises
    ------
    InvalidLagError
        If ``tau`` is out of range.

    Examples
    --------
    >>> from sepspec.model import lag_autocovariance
    >>> lag_autocovariance(np.array([[1.0, 2.0, 3.0]]), 1)
    array([[2.66666667]])
    """
    data = np.atleast_2d(data)
    n = data.shape[1]
    if int(tau) != tau or not 0 <= tau < n:
        raise InvalidLagError(tau, n)
    tau = int(tau)
    return data[:, tau:] @ data[:, : n - tau].conj().T / n


def shift_matrix(n: int, tau: int) -> np.ndarray:
    r"""Return the symmetrized shift matrix with 1/2 on the
    :math:`\pm\tau`-th diagonals.

    With this matrix as :math:`T_2`,
    :math:`\frac1n T_1 X T_2 X^* T_1^*` is the symmetrized lag-``tau``
    autocovariance :math:`\Xi_\tau`.

    Parameters
    ----------
    n
        Size of the matrix.
    tau
        Lag, 1 <= ``tau`` < n.

    Returns
    -------
    t2
        Symmetric matrix of shape (n, n).

    Raises
    ------
    InvalidLagError
        If ``tau`` is out of range.
    """
    if int(tau) != tau or not 1 <= tau < n:
        raise InvalidLagError(tau, n, lower=1)
    tau = int(tau)
    half = np.full(n - tau, 0.5)
    return np.diag(half, tau) + np.diag(half, -tau)


def shift_matrix_eigenvalues(n: int, tau: int) -> np.ndarray:
    r"""Return the closed-form nonzero eigenvalues
    :math:`\cos(k\pi/(n-\tau+2)),\ k = 1, \dots, n-\tau+1`.

    For ``tau = 1`` these are exactly the eigenvalues of
    :func:`shift_matrix`. For larger lags they are an :math:`O(1/n)`
    approximation; use a dense eigensolver on :func:`shift_matrix` for
    the exact values.
    """
    if int(tau) != tau or not 1 <= tau < n:
        raise InvalidLagError(tau, n, lower=1)
    k = np.arange(1, n - tau + 2)
    return np.sort(np.cos(k * np.pi / (n - tau + 2)))
