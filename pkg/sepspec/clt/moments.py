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

"""Mean and covariance of the Gaussian limit of linear spectral
statistics by numerical contour integration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
from typing import List, Optional, Sequence

import dask.array as da
from dask.diagnostics import ProgressBar
import numpy as np

from sepspec._util import resolve_threads, warn_imaginary
from sepspec.base import NearSingularError
from sepspec.clt.contour import Contour
from sepspec.clt.functions import TestFunction, as_polynomial
from sepspec.clt.kernels import (
    d_derivatives_analytic,
    d_derivatives_fd,
    d_kernel,
    kernels_at,
)
from sepspec.lsd import (
    StieltjesTriple,
    g_derivatives,
    solve_triples,
    support_from_measures,
)
from sepspec.spectra import SpectralMeasure

_logger = logging.getLogger(__name__)

# Offsets of the finite difference stencil in units of the step
_STENCIL = (-1.0, -0.5, 0.0, 0.5, 1.0)

DERIVATIVE_METHODS = ("finite_difference", "analytic")


@dataclass
class CltMoments:
    """Mean vector and covariance matrix of the Gaussian limit of a
    list of linear spectral statistics.

    Attributes
    ----------
    mean
        Means, one per test function.
    cov
        Symmetric covariance matrix, or None if not computed.
    mean_imag, cov_imag
        Largest absolute imaginary part of the contour integrals. The
        limits are real, so large values indicate a poor contour.
    labels
        Names of the test functions.
    """

    mean: np.ndarray
    cov: Optional[np.ndarray] = None
    mean_imag: float = 0.0
    cov_imag: float = 0.0
    labels: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        """Return a JSON serialisable dictionary."""
        return {
            "labels": list(self.labels),
            "mean": [float(v) for v in self.mean],
            "cov": None if self.cov is None else self.cov.tolist(),
            "mean_imag": float(self.mean_imag),
            "cov_imag": float(self.cov_imag),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CltMoments:
        """Return moments from :meth:`to_dict` output."""
        cov = d.get("cov")
        return cls(
            np.asarray(d["mean"], dtype=float),
            None if cov is None else np.asarray(cov, dtype=float),
            float(d.get("mean_imag", 0.0)),
            float(d.get("cov_imag", 0.0)),
            list(d.get("labels", [])),
        )


class _ContourSolution:
    """Solutions of the limiting equations on a contour, with what the
    covariance kernel needs for the derivatives of d(z1, z2).
    """

    def __init__(
        self,
        h1: SpectralMeasure,
        h2: SpectralMeasure,
        c: float,
        contour: Contour,
        method: str,
        fd_step: float,
        **kwargs,
    ):
        self.contour = contour
        self.z = contour.nodes
        self.triple = solve_triples(h1, h2, c, self.z, **kwargs)
        warm = (self.triple.g1, self.triple.g2)
        if method == "analytic":
            self.dg1, self.dg2, _ = g_derivatives(h1, h2, c, self.triple)
        else:
            self.h = fd_step * np.abs(self.z)
            g1, g2 = [], []
            for s in _STENCIL:
                if s == 0:
                    t = self.triple
                else:
                    t = solve_triples(
                        h1, h2, c, self.z + s * self.h, warm_start=warm, **kwargs
                    )
                g1.append(t.g1)
                g2.append(t.g2)
            self.g1 = np.stack(g1)
            self.g2 = np.stack(g2)


def _check_method(method: str):
    if method not in DERIVATIVE_METHODS:
        raise ValueError(
            f"Unknown derivative method {method!r}, use one of {DERIVATIVE_METHODS}."
        )


def _mean_integrand(
    h1, h2, c, alpha_x, kappa_x, triple: StieltjesTriple, singular_tol: float
) -> np.ndarray:
    z = triple.z
    k = kernels_at(h1, h2, c, triple)
    x = c * k.d3 * k.d4 / z**2
    den1 = 1 - x
    den2 = 1 - alpha_x * x
    if np.any(np.abs(den1) < singular_tol) or (
        alpha_x != 0 and np.any(np.abs(den2) < singular_tol)
    ):
        raise NearSingularError(
            f"1 - c d3 d4 / z^2 is below {singular_tol:.0e} on the contour; move "
            "the contour away from the support."
        )
    bracket = (
        c * k.d3 * k.d4 / z**3
        - c**2 * k.d3**2 * k.d4**2 / z**5
        + c * k.d5 / z**4
        + c**2 * k.d6 / z**4
    )
    return (alpha_x / den2 + kappa_x) * bracket / den1


def _covariance_block(
    rows: np.ndarray,
    sol1: _ContourSolution,
    sol2: _ContourSolution,
    gw: np.ndarray,
    alpha_x: float,
    kappa_x: float,
    method: str,
    singular_tol: float,
    coincidence_tol: float,
) -> np.ndarray:
    """Return the rows ``rows`` of the kernel matrix contracted with the
    weighted test function values on the second contour.
    """
    i = rows.astype(int)
    z1 = sol1.z[i, np.newaxis]
    z2 = sol2.z[np.newaxis, :]
    if method == "analytic":
        t1, t2 = sol1.triple, sol2.triple
        d, d1, d2, d12 = d_derivatives_analytic(
            z1,
            t1.g1[i, np.newaxis],
            t1.g2[i, np.newaxis],
            sol1.dg1[i, np.newaxis],
            sol1.dg2[i, np.newaxis],
            z2,
            t2.g1[np.newaxis],
            t2.g2[np.newaxis],
            sol2.dg1[np.newaxis],
            sol2.dg2[np.newaxis],
            coincidence_tol,
        )
    else:
        step1 = sol1.h[i, np.newaxis]
        step2 = sol2.h[np.newaxis, :]

        def d_at(s, t):
            a, b = _STENCIL.index(s), _STENCIL.index(t)
            return d_kernel(
                z1 + s * step1,
                sol1.g1[a, i, np.newaxis],
                sol1.g2[a, i, np.newaxis],
                z2 + t * step2,
                sol2.g1[b][np.newaxis],
                sol2.g2[b][np.newaxis],
                coincidence_tol,
            )

        d, d1, d2, d12 = d_derivatives_fd(d_at, step1, step2)

    one_minus = 1 - d
    one_minus_alpha = 1 - alpha_x * d
    if np.any(np.abs(one_minus) < singular_tol) or (
        alpha_x != 0 and np.any(np.abs(one_minus_alpha) < singular_tol)
    ):
        raise NearSingularError(
            f"1 - d(z1, z2) is below {singular_tol:.0e}; move the contours "
            "away from the support."
        )
    dphi = 1 / one_minus + alpha_x / one_minus_alpha + kappa_x
    d2phi = 1 / one_minus**2 + alpha_x**2 / one_minus_alpha**2
    kernel = d2phi * d1 * d2 + dphi * d12
    return kernel @ gw.T


def clt_moments(
    fs: Sequence[TestFunction],
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    alpha_x: float,
    kappa_x: float,
    contour: Optional[Contour] = None,
    contour2: Optional[Contour] = None,
    covariance: bool = True,
    method: str = "finite_difference",
    fd_step: float = 1e-4,
    separation: float = 1.15,
    singular_tol: float = 1e-8,
    coincidence_tol: float = 1e-10,
    chunk_size: int = 64,
    progressbar: bool = False,
    threads: Optional[int] = None,
    labels: Optional[Sequence[str]] = None,
    **kwargs,
) -> CltMoments:
    r"""Return the limiting mean and covariance of the linear spectral
    statistics of a list of test functions.

    The limiting equations are solved once per contour and shared by
    all test functions.

    Parameters
    ----------
    fs
        Test functions, analytic on a neighbourhood of the support; see
        :func:`~sepspec.clt.as_polynomial`.
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio.
    alpha_x, kappa_x
        Moment parameters of the entries: 1 and 0 for real Gaussian,
        0 and 0 for complex Gaussian entries.
    contour
        Contour of the mean integral and the inner contour of the
        covariance. Default is a rectangle around
        :func:`~sepspec.lsd.support_from_measures`.
    contour2
        Outer contour of the covariance. Default is ``contour`` scaled
        by ``separation`` about its midpoint.
    covariance
        Whether to compute the covariance. Default is True.
    method
        How derivatives of d(z1, z2) are taken, "finite_difference"
        (default) with steps ``fd_step * |z|`` and Richardson
        extrapolation, or "analytic" from the derivatives of
        :math:`g_1, g_2`.
    fd_step
        Relative finite difference step. Default is 1e-4.
    separation
        Scale factor from ``contour`` to the default ``contour2``.
        Default is 1.15.
    singular_tol
        Smallest accepted modulus of the denominators. Default is 1e-8.
    coincidence_tol
        Smallest accepted :math:`|g_k(z_1) - g_k(z_2)|`. Default is
        1e-10.
    chunk_size
        Number of inner contour nodes per block of the double integral.
        Default is 64.
    progressbar
        Whether to show a progressbar over the blocks. Default is False.
    threads
        Number of worker threads; see :func:`~sepspec._util.resolve_threads`.
    labels
        Names of the test functions. Default is their string form.
    **kwargs
        Keyword arguments passed to :func:`~sepspec.lsd.solve_triples`.

    Returns
    -------
    moments
        Means and covariance matrix.

    Raises
    ------
    NearSingularError
        If a denominator of the integrands nearly vanishes, or a passed
        contour does not enclose the support bracket.
    CoincidenceLimitError
        If the two contours are too close.
    """
    _check_method(method)
    funcs = [as_polynomial(f) for f in fs]
    if len(funcs) == 0:
        raise ValueError("At least one test function is needed.")
    if labels is None:
        labels = [f if isinstance(f, str) else repr(f) for f in fs]
    support = support_from_measures(h1, h2, c)
    if contour is None:
        contour = Contour.enclosing(support)
    else:
        contour.check_encloses(support.raw_l, support.raw_r)
    if contour2 is None:
        contour2 = contour.scaled(separation)
    else:
        contour2.check_encloses(support.raw_l, support.raw_r)

    sol1 = _ContourSolution(h1, h2, c, contour, method, fd_step, **kwargs)
    _logger.debug(
        "Solved %d contour nodes, up to %d iterations",
        contour.size,
        np.max(sol1.triple.iterations),
    )
    integrand = _mean_integrand(h1, h2, c, alpha_x, kappa_x, sol1.triple, singular_tol)
    fw1 = np.stack([np.asarray(f(contour.nodes)) * contour.weights for f in funcs])
    means = fw1 @ integrand / (2j * np.pi)
    for label, value in zip(labels, means):
        warn_imaginary(complex(value), f"Mean of {label}")
    moments = CltMoments(
        means.real, mean_imag=float(np.max(np.abs(means.imag))), labels=list(labels)
    )
    if not covariance:
        return moments

    sol2 = _ContourSolution(h1, h2, c, contour2, method, fd_step, **kwargs)
    gw2 = np.stack([np.asarray(f(contour2.nodes)) * contour2.weights for f in funcs])
    rows = da.from_array(np.arange(contour.size), chunks=chunk_size)
    lazy = da.map_blocks(
        _covariance_block,
        rows,
        sol1=sol1,
        sol2=sol2,
        gw=gw2,
        alpha_x=alpha_x,
        kappa_x=kappa_x,
        method=method,
        singular_tol=singular_tol,
        coincidence_tol=coincidence_tol,
        dtype=complex,
        new_axis=1,
        chunks=(rows.chunks[0], (len(funcs),)),
    )
    contracted = np.empty((contour.size, len(funcs)), dtype=complex)
    compute_kwargs = dict(scheduler="threads", num_workers=resolve_threads(threads))
    if progressbar:
        with ProgressBar():
            da.store(sources=lazy, targets=contracted, **compute_kwargs)
    else:
        da.store(sources=lazy, targets=contracted, **compute_kwargs)
    cov = -(fw1 @ contracted) / (4 * np.pi**2)
    for a in range(len(funcs)):
        for b in range(len(funcs)):
            warn_imaginary(
                complex(cov[a, b]), f"Covariance of {labels[a]}, {labels[b]}"
            )
    moments.cov = 0.5 * (cov.real + cov.real.T)
    moments.cov_imag = float(np.max(np.abs(cov.imag)))
    return moments


def clt_mean(
    f: TestFunction,
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    alpha_x: float,
    kappa_x: float,
    contour: Optional[Contour] = None,
    **kwargs,
) -> float:
    r"""Return the limiting mean :math:`E X_f` of the linear spectral
    statistic of ``f``.

    .. math::

        E X_f = \frac{1}{2\pi i}\oint
        \frac{f(z)}{1 - c z^{-2} d_3 d_4}
        \left(\frac{\alpha_x}{1 - \alpha_x c z^{-2} d_3 d_4} + \kappa_x\right)
        \left[\frac{c d_3 d_4}{z^3} - \frac{c^2 d_3^2 d_4^2}{z^5}
        + \frac{c d_5}{z^4} + \frac{c^2 d_6}{z^4}\right] dz

    See :func:`clt_moments` for the parameters.

    Examples
    --------
    Complex Gaussian entries have no mean correction.

    >>> from sepspec.clt import clt_mean
    >>> from sepspec.spectra import ArcsineMeasure, DiscreteMeasure
    >>> mean = clt_mean("x^2", DiscreteMeasure([1, 3]), ArcsineMeasure(), 0.5, 0, 0)
    >>> abs(mean) < 1e-12
    True
    """
    moments = clt_moments(
        [f], h1, h2, c, alpha_x, kappa_x, contour, covariance=False, **kwargs
    )
    return float(moments.mean[0])


def clt_covariance(
    f: TestFunction,
    g: TestFunction,
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    alpha_x: float,
    kappa_x: float,
    contour1: Optional[Contour] = None,
    contour2: Optional[Contour] = None,
    **kwargs,
) -> float:
    r"""Return the limiting covariance :math:`Cov(X_f, X_g)`.

    .. math::

        Cov(X_f, X_g) = -\frac{1}{4\pi^2}\oint_{C_1}\oint_{C_2}
        f(z_1) g(z_2) \frac{\partial^2}{\partial z_2 \partial z_1}
        \Phi(d(z_1, z_2)) dz_1 dz_2,

    with :math:`\Phi(d) = -\log(1 - d) - \log(1 - \alpha_x d) + \kappa_x d`.

    ``f`` is integrated over ``contour1`` and ``g`` over ``contour2``.
    See :func:`clt_moments` for the other parameters.
    """
    moments = clt_moments(
        [f, g],
        h1,
        h2,
        c,
        alpha_x,
        kappa_x,
        contour1,
        contour2,
        labels=["f", "g"],
        **kwargs,
    )
    return float(moments.cov[0, 1])
