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

"""Monte Carlo replication of the white noise test and of linear
spectral statistics.
"""

from sepspec.montecarlo.reference_tables import TABLE1_SIZE, TABLE2_POWER
from sepspec.montecarlo.simulation import (
    MODELS,
    SimulationPlan,
    SimulationRow,
    SimulationTable,
    empirical_lss_moments,
    run_plan,
    wilson_interval,
)

# Lists what will be imported when calling "from sepspec.montecarlo import *"
__all__ = [
    "MODELS",
    "SimulationPlan",
    "SimulationRow",
    "SimulationTable",
    "TABLE1_SIZE",
    "TABLE2_POWER",
    "empirical_lss_moments",
    "run_plan",
    "wilson_interval",
]
