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

r"""Solver of the limiting equations of separable sample covariance
matrices.

For :math:`z \in \mathbb{C}^+` the Stieltjes transform :math:`m(z)` of
the limiting spectral distribution and the auxiliary functions
:math:`g_1(z), g_2(z)` satisfy

.. math::

    z g_1 = -c \int \frac{x}{1 + g_2 x} dH_1(x), \quad
    z g_2 = -\int \frac{y}{1 + g_1 y} dH_2(y), \quad
    m = -\frac1z \int \frac{1}{1 + g_2 x} dH_1(x),

with the unique solution in
:math:`U = \{\Im m > 0, \Im(z g_1) > 0, \Im g_2 > 0\}` when :math:`H_2` is
supported on :math:`[0, \infty)`.

When :math:`H_2` has negative support, as for the lag shift matrices of
the white noise test, the solution leaves :math:`U`: a symmetric
:math:`H_2` gives a symmetric limiting distribution and
:math:`g_2(-\bar z) = \overline{g_2(z)}`, so :math:`\Im g_2 < 0` for
:math:`\Re z < 0`. The root is then selected by :math:`\Im m > 0`, a
vanishing residual and continuation from large :math:`\Im z`.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Optional, Tuple, Union

import numpy as np

from sepspec.base import SolverError, SpuriousRootError
from sepspec.spectra import SpectralMeasure

_logger = logging.getLogger(__name__)

ArrayLike = Union[complex, np.ndarray]


@dataclass(frozen=True)
class StieltjesTriple:
    r"""Solution :math:`(m, g_1, g_2)` of the limiting equations at
    ``z``.

    All fields are either scalars or arrays of the shape of ``z``.

    Attributes
    ----------
    z
        Evaluation point(s).
    m
        Stieltjes transform of the limiting spectral distribution.
    g1, g2
        Auxiliary functions.
    residual
        Largest defect of the three forms of the equations for ``m``.
    iterations
        Number of iterations spent, continuation included.
    """

    z: ArrayLike
    m: ArrayLike
    g1: ArrayLike
    g2: ArrayLike
    residual: Union[float, np.ndarray] = 0.0
    iterations: Union[int, np.ndarray] = 0

    def __getitem__(self, key) -> StieltjesTriple:
        """Return the triple(s) at index ``key`` of an array triple."""
        return StieltjesTriple(
            *(np.asarray(getattr(self, name))[key] for name in _FIELDS)
        )

    @property
    def shape(self) -> tuple:
        """Return the shape of the evaluation points."""
        return np.shape(self.z)

    @property
    def in_u(self) -> Union[bool, np.ndarray]:
        r"""Return whether :math:`\Im m > 0`, :math:`\Im(z g_1) > 0` and
        :math:`\Im g_2 > 0`.
        """
        z, m = np.asarray(self.z), np.asarray(self.m)
        return _in_u(z, m, np.asarray(self.g1), np.asarray(self.g2))

    def conj(self) -> StieltjesTriple:
        """Return the triple at the complex conjugate point."""
        return StieltjesTriple(
            np.conj(self.z),
            np.conj(self.m),
            np.conj(self.g1),
            np.conj(self.g2),
            self.residual,
            self.iterations,
        )


_FIELDS = ("z", "m", "g1", "g2", "residual", "iterations")


def _in_u(z, m, g1, g2):
    return (m.imag > 0) & ((z * g1).imag > 0) & (g2.imag > 0)


def _admissible(z, m, g1, g2, full_u: bool):
    if full_u:
        return _in_u(z, m, g1, g2)
    return m.imag > 0


def stieltjes_from_g2(h1: SpectralMeasure, z: ArrayLike, g2: ArrayLike) -> ArrayLike:
    r"""Return :math:`m = -z^{-1}\int (1 + g_2 x)^{-1} dH_1(x)`."""
    return -h1.resolvent_integral(g2, 1, 0) / z


def equation_residual(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    z: ArrayLike,
    m: ArrayLike,
    g1: ArrayLike,
    g2: ArrayLike,
) -> ArrayLike:
    r"""Return the largest defect of the three equivalent forms of the
    equation for ``m``, relative to ``1 + |m|``.

    The forms are

    .. math::

        m = -\frac{1 - c^{-1}}{z}
            - \frac{1}{zc}\int \frac{dH_2(y)}{1 + g_1 y}, \quad
        m = -\frac1z \int \frac{dH_1(x)}{1 + g_2 x}, \quad
        m = -\frac1z - \frac{g_1 g_2}{c}.
    """
    r1 = m + (1 - 1 / c) / z + h2.resolvent_integral(g1, 1, 0) / (z * c)
    r2 = m + h1.resolvent_integral(g2, 1, 0) / z
    r3 = m + 1 / z + g1 * g2 / c
    defect = np.maximum(np.maximum(np.abs(r1), np.abs(r2)), np.abs(r3))
    return defect / (1 + np.abs(m))


def _iterate(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    z: np.ndarray,
    g1: np.ndarray,
    g2: np.ndarray,
    tol: float,
    max_iter: int,
    damping: float,
    newton_threshold: float,
    strict_im: float,
    full_u: bool = True,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, list]:
    """Run the damped alternating map with Newton acceleration on a
    batch of points.

    Returns the iterates, a convergence mask, the iteration counts and
    the trace of the largest change per iteration.
    """
    g1 = g1.copy()
    g2 = g2.copy()
    converged = np.zeros(z.shape, dtype=bool)
    iterations = np.zeros(z.shape, dtype=int)
    strict = z.imag >= strict_im
    trace = []
    for _ in range(max_iter):
        idx = np.flatnonzero(~converged)
        if idx.size == 0:
            break
        za, a1, a2 = z[idx], g1[idx], g2[idx]

        i1 = h1.resolvent_integral(a2, 1, 1)
        i2 = h2.resolvent_integral(a1, 1, 1)
        f1 = za * a1 + c * i1
        f2 = za * a2 + i2
        defect = np.maximum(
            np.abs(f1) / (1 + np.abs(za * a1)), np.abs(f2) / (1 + np.abs(za * a2))
        )

        # Alternating step: g2 from g1, then g1 from the damped g2
        d2 = (1 - damping) * a2 + damping * (-i2 / za)
        d1 = (1 - damping) * a1 + damping * (-c * h1.resolvent_integral(d2, 1, 1) / za)
        new1, new2 = d1, d2

        use_newton = defect < newton_threshold
        if np.any(use_newton):
            k = np.flatnonzero(use_newton)
            zk = za[k]
            d3 = h1.resolvent_integral(a2[k], 2, 2)
            d4 = h2.resolvent_integral(a1[k], 2, 2)
            det = zk**2 - c * d3 * d4
            with np.errstate(divide="ignore", invalid="ignore"):
                n1 = a1[k] - (zk * f1[k] + c * d3 * f2[k]) / det
                n2 = a2[k] - (d4 * f1[k] + zk * f2[k]) / det
            step = np.maximum(np.abs(n1 - a1[k]), np.abs(n2 - a2[k]))
            scale = 1 + np.maximum(np.abs(a1[k]), np.abs(a2[k]))
            ok = np.isfinite(n1) & np.isfinite(n2) & (step <= 0.1 * scale)
            if full_u:
                stays = ((zk * n1).imag > 0) & (n2.imag > 0)
            else:
                safe = np.where(ok, n2, a2[k])
                stays = stieltjes_from_g2(h1, zk, safe).imag > 0
            ok &= stays | ~strict[idx[k]]
            new1[k[ok]] = n1[ok]
            new2[k[ok]] = n2[ok]

        change = np.maximum(np.abs(new1 - a1), np.abs(new2 - a2))
        scale = 1 + np.maximum(np.abs(new1), np.abs(new2))
        g1[idx] = new1
        g2[idx] = new2
        iterations[idx] += 1
        converged[idx] = change <= tol * scale
        trace.append(float(np.max(change)))
    return g1, g2, converged, iterations, trace


def _continuation(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    z: np.ndarray,
    v_start: float,
    factor: float,
    start_scale: complex = 1.0,
    **kwargs,
):
    """Solve by walking Im z down from ``max(v_start, Im z)`` in
    geometric steps of ``factor``, warm starting each level.
    """
    u, v = z.real, z.imag
    v0 = np.maximum(v_start, v)
    levels = np.ceil(np.log(v / v0) / np.log(factor)).astype(int)
    levels = np.maximum(levels, 0)
    z0 = u + 1j * v0
    g1 = -start_scale / z0
    g2 = -start_scale / z0
    iterations = np.zeros(z.shape, dtype=int)
    converged = np.ones(z.shape, dtype=bool)
    trace = []
    for k in range(int(levels.max(initial=0)) + 1):
        active = np.flatnonzero((levels >= k) & converged)
        if active.size == 0:
            break
        zk = u[active] + 1j * np.maximum(v[active], v0[active] * factor**k)
        a1, a2, conv, its, tr = _iterate(
            h1, h2, c, zk, g1[active], g2[active], **kwargs
        )
        g1[active], g2[active] = a1, a2
        iterations[active] += its
        converged[active] = conv
        trace = tr
        _logger.debug(
            "Continuation level %d: %d points, %d iterations", k, active.size, its.max()
        )
    return g1, g2, converged, iterations, trace


def solve_triples(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    z: ArrayLike,
    warm_start: Optional[Tuple[ArrayLike, ArrayLike]] = None,
    tol: float = 1e-12,
    max_iter: int = 10_000,
    damping: float = 0.5,
    newton_threshold: float = 1e-3,
    v_start: float = 1.0,
    ladder_factor: float = 0.7,
    strict_im: float = 1e-5,
    residual_tol: float = 1e-10,
    max_retries: int = 5,
) -> StieltjesTriple:
    r"""Solve the limiting equations on an array of points.

    Parameters
    ----------
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio, must be positive.
    z
        Evaluation point(s) off the real axis. Points in the lower half
        plane are solved at their conjugate and reflected.
    warm_start
        Initial values ``(g1, g2)`` of the shape of ``z``, e.g. from a
        neighbouring point. Points that fail from the warm start are
        solved again by continuation.
    tol
        Iteration stops when successive iterates change less than
        ``tol`` relative to their size. Default is 1e-12.
    max_iter
        Largest number of iterations per continuation level. Default is
        10 000.
    damping
        Weight of the new iterate in the alternating map. Default is
        0.5.
    newton_threshold
        Relative defect below which Newton steps are tried. Default is
        1e-3.
    v_start
        Imaginary part where continuation starts. Default is 1.
    ladder_factor
        Ratio of successive imaginary parts during continuation.
        Default is 0.7.
    strict_im
        Root selection is enforced at points with ``Im z`` at least
        this large: membership in U for nonnegative ``h2``, ``Im m > 0``
        otherwise. Default is 1e-5.
    residual_tol
        Largest accepted relative residual of the equations. Default is
        1e-10.
    max_retries
        Number of restarts with a perturbed start and a finer ladder
        before a spurious root is reported. Default is 5.

    Returns
    -------
    triple
        Solution with fields of the shape of ``z``.

    Raises
    ------
    SolverError
        If a point does not converge.
    SpuriousRootError
        If a point keeps converging to a root that is not admissible.
    """
    if c <= 0:
        raise ValueError(f"Dimension ratio c={c} must be positive.")
    z_in = np.asarray(z, dtype=complex)
    if np.any(z_in.imag == 0):
        raise ValueError("Evaluation points must not lie on the real axis.")
    shape = z_in.shape
    flip = z_in.imag < 0
    # U characterises the root only for nonnegative T2
    full_u = h2.support_lo >= 0
    zu = np.where(flip, np.conj(z_in), z_in).ravel()
    kwargs = dict(
        tol=tol,
        max_iter=max_iter,
        damping=damping,
        newton_threshold=newton_threshold,
        strict_im=strict_im,
        full_u=full_u,
    )
    strict = zu.imag >= strict_im

    def _accepted(g1, g2, conv):
        m = stieltjes_from_g2(h1, zu, g2)
        good = conv & np.isfinite(m)
        good &= _admissible(zu, m, g1, g2, full_u) | ~strict
        return m, good

    if warm_start is not None:
        w1 = np.where(flip, np.conj(warm_start[0]), warm_start[0]).ravel()
        w2 = np.where(flip, np.conj(warm_start[1]), warm_start[1]).ravel()
        g1, g2, conv, iterations, trace = _iterate(
            h1, h2, c, zu, w1.astype(complex), w2.astype(complex), **kwargs
        )
        m, good = _accepted(g1, g2, conv)
    else:
        g1 = np.zeros(zu.shape, dtype=complex)
        g2 = np.zeros(zu.shape, dtype=complex)
        m = np.zeros(zu.shape, dtype=complex)
        conv = np.zeros(zu.shape, dtype=bool)
        good = np.zeros(zu.shape, dtype=bool)
        iterations = np.zeros(zu.shape, dtype=int)
        trace = []

    for attempt in range(max_retries + 1):
        redo = np.flatnonzero(~good)
        if redo.size == 0:
            break
        if attempt > 0:
            _logger.debug("Retry %d on %d points", attempt, redo.size)
        # Finer ladders and rotated starts on retries
        factor = ladder_factor ** (1 / (attempt + 1))
        start = 1 + 0.1 * attempt * np.exp(1j * np.pi * attempt / 3)
        r1, r2, rc, rits, trace = _continuation(
            h1, h2, c, zu[redo], v_start, factor, start, **kwargs
        )
        g1[redo], g2[redo], conv[redo] = r1, r2, rc
        iterations[redo] += rits
        m, good = _accepted(g1, g2, conv)

    if not np.all(conv):
        i = int(np.flatnonzero(~conv)[0])
        raise SolverError(
            f"Fixed-point iteration did not converge in {max_iter} iterations",
            z=complex(z_in.ravel()[i]),
            trace=trace[::-1][:10],
        )
    if not np.all(good):
        i = int(np.flatnonzero(~good)[0])
        raise SpuriousRootError(
            f"Iteration converged to an inadmissible root after {max_retries} restarts",
            z=complex(z_in.ravel()[i]),
        )

    residual = equation_residual(h1, h2, c, zu, m, g1, g2)
    if np.any(residual > residual_tol):
        i = int(np.argmax(residual))
        raise SolverError(
            f"Residual {residual[i]:.3e} of the limiting equations exceeds "
            f"{residual_tol:.0e}",
            z=complex(z_in.ravel()[i]),
        )

    m = np.where(flip.ravel(), np.conj(m), m)
    g1 = np.where(flip.ravel(), np.conj(g1), g1)
    g2 = np.where(flip.ravel(), np.conj(g2), g2)

    def _shape(a):
        a = a.reshape(shape)
        return a[()] if a.ndim == 0 else a

    return StieltjesTriple(
        _shape(z_in.ravel()),
        _shape(m),
        _shape(g1),
        _shape(g2),
        _shape(residual),
        _shape(iterations),
    )


def solve_triple(
    h1: SpectralMeasure,
    h2: SpectralMeasure,
    c: float,
    z: complex,
    warm_start: Optional[StieltjesTriple] = None,
    **kwargs,
) -> StieltjesTriple:
    """Solve the limiting equations at a single point ``z``.

    Parameters
    ----------
    h1, h2
        Spectral measures :math:`H_1` and :math:`H_2`.
    c
        Dimension ratio.
    z
        Point with ``Im z > 0``.
    warm_start
        Solution at a nearby point.
    **kwargs
        Keyword arguments passed to :func:`solve_triples`.

    Returns
    -------
    triple
        Solution with scalar fields.

    Examples
    --------
    >>> from sepspec.lsd import solve_triple, marchenko_pastur_stieltjes
    >>> from sepspec.spectra import PointMass
    >>> t = solve_triple(PointMass(1), PointMass(1), 0.5, 1 + 1j)
    >>> bool(abs(t.m - marchenko_pastur_stieltjes(1 + 1j, 0.5)) < 1e-8)
    True
    """
    if np.imag(z) <= 0:
        raise ValueError(f"z={z} must lie in the upper half plane.")
    start = None
    if warm_start is not None:
        start = (warm_start.g1, warm_start.g2)
    return solve_triples(h1, h2, c, complex(z), warm_start=start, **kwargs)


def g_derivatives(
    h1: SpectralMeasure, h2: SpectralMeasure, c: float, triple: StieltjesTriple
) -> Tuple[ArrayLike, ArrayLike, ArrayLike]:
    r"""Return :math:`g_1'(z)`, :math:`g_2'(z)` and the Jacobian
    determinant :math:`z^2 - c d_3 d_4` of the reduced system.

    With :math:`d_3 = \int x^2 (1 + g_2 x)^{-2} dH_1` and
    :math:`d_4 = \int y^2 (1 + g_1 y)^{-2} dH_2`,

    .. math::

        g_1' = \frac{c \int x (1 + g_2 x)^{-2} dH_1}{z^2 - c d_3 d_4},
        \quad
        g_2' = \frac{\int y (1 + g_1 y)^{-2} dH_2}{z^2 - c d_3 d_4}.
    """
    z, g1, g2 = triple.z, triple.g1, triple.g2
    d3 = h1.resolvent_integral(g2, 2, 2)
    d4 = h2.resolvent_integral(g1, 2, 2)
    det = z**2 - c * d3 * d4
    dg1 = c * h1.resolvent_integral(g2, 2, 1) / det
    dg2 = h2.resolvent_integral(g1, 2, 1) / det
    return dg1, dg2, det
