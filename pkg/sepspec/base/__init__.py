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

"""Exceptions raised by sepspec.

Every error is a :class:`ValueError`, so code written against plain
NumPy/SciPy error handling keeps working.
"""

from __future__ import annotations

from typing import Optional, Sequence

__all__ = [
    "CoincidenceLimitError",
    "ConfigurationError",
    "DataError",
    "DimensionError",
    "InvalidLagError",
    "NearSingularError",
    "ParameterError",
    "SepspecError",
    "SingularIntegralError",
    "SolverError",
    "SpuriousRootError",
]


class SepspecError(ValueError):
    """Base class of all sepspec errors."""


class DimensionError(SepspecError):
    """Error raised when arrays have incompatible shapes."""


class ConfigurationError(SepspecError):
    """Error raised on an invalid or incomplete configuration."""


class InvalidLagError(SepspecError):
    """Error raised when a lag is outside of its admissible range.

    Parameters
    ----------
    tau
        The offending lag.
    n
        Sample size.
    lower
        Smallest admissible lag.
    """

    def __init__(self, tau: int, n: int, lower: int = 0):
        self.tau = tau
        self.n = n
        super().__init__(f"Lag tau={tau} must satisfy {lower} <= tau < n={n}.")


class ParameterError(SepspecError):
    """Error raised when derived null parameters are invalid."""


class SingularIntegralError(SepspecError):
    """Error raised when the integrand of a resolvent integral has a
    pole on the support of the measure.
    """


class SolverError(SepspecError):
    """Error raised when the fixed-point solver does not converge.

    Parameters
    ----------
    message
        Error message.
    z
        The point at which the solve failed.
    trace
        Successive changes of the iterate, the last ones first.
    """

    def __init__(
        self,
        message: str,
        z: Optional[complex] = None,
        trace: Optional[Sequence[float]] = None,
    ):
        self.z = z
        self.trace = list(trace) if trace is not None else []
        if z is not None:
            message = f"{message} (z = {z:.6g})"
        super().__init__(message)


class SpuriousRootError(SolverError):
    """Error raised when the solver converges to a root outside of the
    admissible set U.
    """


class NearSingularError(SepspecError):
    """Error raised when a contour integrand is nearly singular, which
    happens when the contour is too close to the support.
    """


class CoincidenceLimitError(SepspecError):
    """Error raised when g(z1) and g(z2) nearly coincide in the
    covariance kernel d(z1, z2), i.e. the two contours are too close.
    """


class DataError(SepspecError):
    """Error raised when an input data file contains invalid cells.

    Parameters
    ----------
    message
        Error message.
    row, column
        One-based position of the offending cell, if known.
    """

    def __init__(
        self, message: str, row: Optional[int] = None, column: Optional[int] = None
    ):
        self.row = row
        self.column = column
        if row is not None and column is not None:
            message = f"{message} (row {row}, column {column})"
        super().__init__(message)
