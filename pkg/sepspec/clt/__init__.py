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

"""Gaussian limit of linear spectral statistics: contours, kernels,
and the mean and covariance integrals.
"""

from sepspec.clt.contour import Contour
from sepspec.clt.functions import as_polynomial, parse_polynomial
from sepspec.clt.kernels import (
    CltKernels,
    d_derivatives_analytic,
    d_derivatives_fd,
    d_kernel,
    d_kernel_integral,
    kernels_at,
)
from sepspec.clt.moments import (
    DERIVATIVE_METHODS,
    CltMoments,
    clt_covariance,
    clt_mean,
    clt_moments,
)

# Lists what will be imported when calling "from sepspec.clt import *"
__all__ = [
    "CltKernels",
    "CltMoments",
    "Contour",
    "DERIVATIVE_METHODS",
    "as_polynomial",
    "clt_covariance",
    "clt_mean",
    "clt_moments",
    "d_derivatives_analytic",
    "d_derivatives_fd",
    "d_kernel",
    "d_kernel_integral",
    "kernels_at",
    "parse_polynomial",
]
