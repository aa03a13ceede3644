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

"""High-dimensional white noise test based on lagged sample
autocovariances.
"""

from sepspec.whitenoise.report import (
    PLUG_IN,
    LagResult,
    TestConfig,
    WhiteNoiseReport,
    run_test,
)
from sepspec.whitenoise.statistic import (
    CENTERINGS,
    KnownMoments,
    NullParameters,
    lambda_hat,
    null_parameters,
    plug_in_moments,
)

# Lists what will be imported when calling "from sepspec.whitenoise import *"
__all__ = [
    "CENTERINGS",
    "KnownMoments",
    "LagResult",
    "NullParameters",
    "PLUG_IN",
    "TestConfig",
    "WhiteNoiseReport",
    "lambda_hat",
    "null_parameters",
    "plug_in_moments",
    "run_test",
]
