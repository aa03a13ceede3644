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

"""Separable covariance models, random entries, linear processes and
lagged autocovariances.
"""

from sepspec.model.linear_process import (
    LinearProcessSpec,
    generate_linear_process,
    lag_autocovariance,
    model1_sigma0,
    shift_matrix,
    shift_matrix_eigenvalues,
    sigma0_sqrt,
)
from sepspec.model.separable_model import (
    Dimensions,
    EntryLaw,
    SeparableModel,
    generate_entries,
    sample_covariance,
)

# Lists what will be imported when calling "from sepspec.model import *"
__all__ = [
    "Dimensions",
    "EntryLaw",
    "LinearProcessSpec",
    "SeparableModel",
    "generate_entries",
    "generate_linear_process",
    "lag_autocovariance",
    "model1_sigma0",
    "sample_covariance",
    "shift_matrix",
    "shift_matrix_eigenvalues",
    "sigma0_sqrt",
]
