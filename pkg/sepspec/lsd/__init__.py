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

"""Limiting spectral distribution of separable sample covariance
matrices: the fixed-point solver, density and support.
"""

from sepspec.lsd.density import LsdDensity, lsd_cdf, lsd_density, lsd_linear_statistic
from sepspec.lsd.marchenko_pastur import (
    marchenko_pastur_density,
    marchenko_pastur_edges,
    marchenko_pastur_stieltjes,
)
from sepspec.lsd.solver import (
    StieltjesTriple,
    equation_residual,
    g_derivatives,
    solve_triple,
    solve_triples,
    stieltjes_from_g2,
)
from sepspec.lsd.support import SupportEstimate, estimate_support, support_from_measures

# Lists what will be imported when calling "from sepspec.lsd import *"
__all__ = [
    "LsdDensity",
    "StieltjesTriple",
    "SupportEstimate",
    "equation_residual",
    "estimate_support",
    "g_derivatives",
    "lsd_cdf",
    "lsd_density",
    "lsd_linear_statistic",
    "marchenko_pastur_density",
    "marchenko_pastur_edges",
    "marchenko_pastur_stieltjes",
    "solve_triple",
    "solve_triples",
    "stieltjes_from_g2",
    "support_from_measures",
]
