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

r"""Separable sample covariance models
:math:`S_n = \frac{1}{n} T_1 X T_2 X^* T_1^*` and their random entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.linalg import eigvalsh

from sepspec._util import check_hermitian, make_rng
from sepspec.base import ConfigurationError, DimensionError

__all__ = [
    "Dimensions",
    "EntryLaw",
    "SeparableModel",
    "generate_entries",
    "sample_covariance",
]

ENTRY_KINDS = ("real_gaussian", "complex_gaussian", "rademacher", "custom")


@dataclass(frozen=True)
class Dimensions:
    """Dimensions of a separable model.

    Parameters
    ----------
    p
        Observed dimension (rows of :math:`T_1`).
    n
        Sample size.
    m1
        Rows of :math:`X`, at least ``p``. Default is ``p``.
    m2
        Columns of :math:`X`, at least ``n``. Default is ``n``.
    """

    p: int
    n: int
    m1: Optional[int] = None
    m2: Optional[int] = None

    def __post_init__(self):
        if self.m1 is None:
            object.__setattr__(self, "m1", self.p)
        if self.m2 is None:
            object.__setattr__(self, "m2", self.n)
        for name in ["p", "n", "m1", "m2"]:
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"`{name}` must be a positive integer, not {value}.")
            object.__setattr__(self, name, int(value))
        if self.m1 < self.p:
            raise DimensionError(f"m1={self.m1} must be >= p={self.p}.")
        if self.m2 < self.n:
            raise DimensionError(f"m2={self.m2} must be >= n={self.n}.")

    @property
    def c_n(self) -> float:
        """Return the dimension ratio :math:`c_n = p/n`."""
        return self.p / self.n


@dataclass(frozen=True)
class EntryLaw:
    r"""Law of the i.i.d. standardized entries of :math:`X`.

    Parameters
    ----------
    kind
        One of ``"real_gaussian"``, ``"complex_gaussian"``,
        ``"rademacher"`` or ``"custom"``.
    alpha_x
        :math:`\alpha_x = |E x^2|^2`.
    kappa_x
        :math:`\kappa_x = E|x|^4 - \alpha_x - 2`.
    sampler
        Only used by ``"custom"`` laws: a callable taking a
        :class:`numpy.random.Generator` and a shape, returning samples
        with mean 0 and variance 1.

    Examples
    --------
    >>> from sepspec.model import EntryLaw
    >>> EntryLaw.rademacher()
    EntryLaw(kind='rademacher', alpha_x=1.0, kappa_x=-2.0)
    """

    kind: str
    alpha_x: float
    kappa_x: float
    sampler: Optional[Callable[[np.random.Generator, Tuple[int, int]], np.ndarray]] = (
        field(default=None, compare=False, repr=False)
    )

    def __post_init__(self):
        if self.kind not in ENTRY_KINDS:
            raise ConfigurationError(
                f"Unknown entry law {self.kind!r}, must be one of {ENTRY_KINDS}."
            )
        if self.alpha_x < 0 or self.alpha_x > 1:
            raise ConfigurationError(f"alpha_x={self.alpha_x} must be in [0, 1].")
        if self.kappa_x < -2:
            raise ConfigurationError(f"kappa_x={self.kappa_x} must be >= -2.")
        object.__setattr__(self, "alpha_x", float(self.alpha_x))
        object.__setattr__(self, "kappa_x", float(self.kappa_x))

    @classmethod
    def real_gaussian(cls) -> EntryLaw:
        """Return the standard real Gaussian law (alpha 1, kappa 0)."""
        return cls("real_gaussian", 1, 0)

    @classmethod
    def complex_gaussian(cls) -> EntryLaw:
        """Return the standard complex Gaussian law (alpha 0, kappa 0)."""
        return cls("complex_gaussian", 0, 0)

    @classmethod
    def rademacher(cls) -> EntryLaw:
        """Return the symmetric +-1 law (alpha 1, kappa -2)."""
        return cls("rademacher", 1, -2)

    @classmethod
    def custom(
        cls,
        alpha_x: float,
        kappa_x: float,
        sampler: Optional[Callable] = None,
    ) -> EntryLaw:
        """Return a user defined law.

        Without a ``sampler`` the law can still parametrize the CLT, but
        not generate data.
        """
        return cls("custom", alpha_x, kappa_x, sampler)

    @property
    def is_real(self) -> bool:
        """Return whether samples are real valued."""
        return self.kind in ["real_gaussian", "rademacher"]


def generate_entries(law: EntryLaw, rows: int, cols: int, seed: int) -> np.ndarray:
    """Return a ``rows`` x ``cols`` matrix of i.i.d. standardized
    entries.

    Parameters
    ----------
    law
        Entry law.
    rows, cols
        Shape of the returned matrix.
    seed
        Seed of the counter-based generator. The same seed always gives
        the same matrix.

    Returns
    -------
    x
        Real (``float64``) matrix for real laws, ``complex128``
        otherwise.

    Raises
    ------
    ConfigurationError
        If a custom law has no sampler.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"Shape ({rows}, {cols}) must be positive.")
    rng = make_rng(seed)
    shape = (int(rows), int(cols))
    if law.kind == "real_gaussian":
        return rng.standard_normal(shape)
    elif law.kind == "complex_gaussian":
        re_im = rng.standard_normal((2,) + shape)
        return (re_im[0] + 1j * re_im[1]) / np.sqrt(2)
    elif law.kind == "rademacher":
        return 2.0 * rng.integers(0, 2, size=shape) - 1.0
    else:  # custom
        if law.sampler is None:
            raise ConfigurationError(
                "A custom entry law needs a `sampler` to generate entries."
            )
        x = np.asarray(law.sampler(rng, shape))
        if x.shape != shape:
            raise DimensionError(
                f"Custom sampler returned shape {x.shape}, expected {shape}."
            )
        return x


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class SeparableModel:
    r"""General separable sample covariance model
    :math:`S_n = \frac{1}{n} T_1 X T_2 X^* T_1^*`.

    Parameters
    ----------
    dims
        Dimensions (p, n, m1, m2).
    T1
        Complex matrix of shape (p, m1).
    T2
        Hermitian matrix of shape (m2, m2).
    law
        Law of the entries of :math:`X`. Default is the real Gaussian.

    Notes
    -----
    :math:`\mathrm{rank}(T_2) = O(n)` is required by the theory; it is
    recorded in :attr:`t2_rank` but not enforced.
    """

    dims: Dimensions
    T1: np.ndarray
    T2: np.ndarray
    law: EntryLaw = field(default_factory=EntryLaw.real_gaussian)

    def __post_init__(self):
        T1 = np.asarray(self.T1)
        T2 = np.asarray(self.T2)
        d = self.dims
        if T1.shape != (d.p, d.m1):
            raise DimensionError(
                f"T1 must have shape (p, m1) = {(d.p, d.m1)}, not {T1.shape}."
            )
        if T2.shape != (d.m2, d.m2):
            raise DimensionError(
                f"T2 must have shape (m2, m2) = {(d.m2, d.m2)}, not {T2.shape}."
            )
        if not (np.all(np.isfinite(T1)) and np.all(np.isfinite(T2))):
            raise ValueError("T1 and T2 must have finite entries.")
        T2 = check_hermitian(T2, "T2")
        if np.isrealobj(self.T2):
            T2 = T2.real
        object.__setattr__(self, "T1", _readonly(T1))
        object.__setattr__(self, "T2", _readonly(T2))

    def __repr__(self) -> str:
        d = self.dims
        return (
            f"{self.__class__.__name__} (p={d.p}, n={d.n}, m1={d.m1}, m2={d.m2}) "
            f"{self.law.kind}"
        )

    @classmethod
    def identity(
        cls, p: int, n: int, law: Optional[EntryLaw] = None
    ) -> SeparableModel:
        """Return the ordinary sample covariance model
        :math:`T_1 = I_p, T_2 = I_n`.
        """
        law = law if law is not None else EntryLaw.real_gaussian()
        return cls(Dimensions(p, n), np.eye(p), np.eye(n), law)

    @classmethod
    def white_noise(
        cls,
        sigma0_sqrt: np.ndarray,
        n: int,
        tau: int,
        law: Optional[EntryLaw] = None,
    ) -> SeparableModel:
        r"""Return the model behind the lag-``tau`` white noise statistic:
        :math:`T_1 = \Sigma_0^{1/2}` and :math:`T_2` the symmetrized
        shift matrix.
        """
        from sepspec.model.linear_process import shift_matrix

        sigma0_sqrt = np.atleast_2d(sigma0_sqrt)
        p = sigma0_sqrt.shape[0]
        law = law if law is not None else EntryLaw.real_gaussian()
        return cls(Dimensions(p, n), sigma0_sqrt, shift_matrix(n, tau), law)

    @cached_property
    def sigma1(self) -> np.ndarray:
        r"""Return :math:`\Sigma_1 = T_1 T_1^*`."""
        s = self.T1 @ self.T1.conj().T
        s = 0.5 * (s + s.conj().T)
        return s.real if np.isrealobj(self.T1) else s

    @cached_property
    def t2_eigenvalues(self) -> np.ndarray:
        """Return the eigenvalues :math:`s_1 \\ge \\dots \\ge s_{m_2}` of
        :math:`T_2`.
        """
        return eigvalsh(self.T2)[::-1]

    @property
    def t2_rank(self) -> int:
        """Return the numerical rank of :math:`T_2`."""
        s = np.abs(self.t2_eigenvalues)
        return int(np.sum(s > s.max(initial=0) * max(self.T2.shape) * 1e-12))

    @cached_property
    def h1n(self):
        """Return :math:`H_{1n}`, the ESD of :math:`\\Sigma_1`."""
        from sepspec.spectra import DiscreteMeasure

        return DiscreteMeasure(eigvalsh(self.sigma1))

    @cached_property
    def h2n(self):
        """Return :math:`H_{2n}`, the ESD of the n eigenvalues of
        :math:`T_2` largest in magnitude.

        The remaining m2 - n eigenvalues belong to the null block of
        :math:`T_2` and do not enter the limiting equations.
        """
        from sepspec.spectra import DiscreteMeasure

        s = self.t2_eigenvalues
        keep = np.sort(np.argsort(np.abs(s), kind="stable")[::-1][: self.dims.n])
        return DiscreteMeasure(s[keep])

    def support(self, margin: float = 0.05):
        """Return the interval enclosing the limiting support, see
        :func:`~sepspec.lsd.estimate_support`.
        """
        from sepspec.lsd import estimate_support

        h1, h2 = self.h1n, self.h2n
        return estimate_support(
            h1,
            h2,
            self.dims.c_n,
            s1=h2.support_hi,
            sn=h2.support_lo,
            lam_max=h1.support_hi,
            lam_min=h1.support_lo,
            margin=margin,
        )

    def sample(self, seed: int) -> np.ndarray:
        """Return one realization of :math:`S_n`.

        Parameters
        ----------
        seed
            Seed of the entries of :math:`X`.
        """
        x = generate_entries(self.law, self.dims.m1, self.dims.m2, seed)
        return sample_covariance(self, x)


def sample_covariance(model: SeparableModel, X: np.ndarray) -> np.ndarray:
    r"""Return :math:`S_n = \frac{1}{n} T_1 X T_2 X^* T_1^*`.

    Parameters
    ----------
    model
        Separable model.
    X
        Matrix of shape (m1, m2).

    Returns
    -------
    s
        Hermitian matrix of shape (p, p); real if all inputs are real.

    Raises
    ------
    DimensionError
        If ``X`` does not have shape (m1, m2).
    """
    X = np.asarray(X)
    d = model.dims
    if X.shape != (d.m1, d.m2):
        raise DimensionError(f"X must have shape {(d.m1, d.m2)}, not {X.shape}.")
    y = model.T1 @ X
    s = (y @ model.T2 @ y.conj().T) / d.n
    # Remove rounding asymmetry
    return 0.5 * (s + s.conj().T)
