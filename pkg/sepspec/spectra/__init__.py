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

"""Spectral measures, empirical spectral distributions and the
moment and resolvent integrals of these measures.
"""

from sepspec.spectra.empirical import EmpiricalSpectrum, esd, kolmogorov_distance
from sepspec.spectra.spectral_measure import (
    ArcsineMeasure,
    DiscreteMeasure,
    PointMass,
    SpectralMeasure,
    moment,
    resolvent_integral,
)

# Lists what will be imported when calling "from sepspec.spectra import *"
__all__ = [
    "ArcsineMeasure",
    "DiscreteMeasure",
    "EmpiricalSpectrum",
    "PointMass",
    "SpectralMeasure",
    "esd",
    "kolmogorov_distance",
    "moment",
    "resolvent_integral",
]
