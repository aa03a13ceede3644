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

"""Published empirical rejection rates of the white noise test, keyed
by (p, n, q).

Size is under white noise with the diag(1, 3, 1, 3, ...) covariance,
power under the moving average alternative with filter
(1, 0.3, 0.1), both with Gaussian innovations and level 0.05.
"""

TABLE1_SIZE = {
    (5, 50, 1): 0.094,
    (5, 50, 3): 0.086,
    (20, 40, 1): 0.078,
    (20, 40, 3): 0.092,
    (25, 250, 1): 0.063,
    (25, 250, 3): 0.071,
    (50, 100, 1): 0.065,
    (50, 100, 3): 0.074,
    (50, 500, 1): 0.062,
    (50, 500, 3): 0.072,
    (100, 200, 1): 0.054,
    (100, 200, 3): 0.061,
    (100, 1000, 1): 0.063,
    (100, 1000, 3): 0.058,
    (300, 600, 1): 0.050,
    (300, 600, 3): 0.056,
    (10, 50, 1): 0.084,
    (10, 50, 3): 0.081,
    (50, 25, 1): 0.066,
    (50, 25, 3): 0.061,
    (50, 250, 1): 0.056,
    (50, 250, 3): 0.075,
    (100, 50, 1): 0.054,
    (100, 50, 3): 0.053,
    (100, 500, 1): 0.060,
    (100, 500, 3): 0.057,
    (200, 100, 1): 0.055,
    (200, 100, 3): 0.047,
    (200, 1000, 1): 0.055,
    (200, 1000, 3): 0.056,
    (500, 250, 1): 0.047,
    (500, 250, 3): 0.045,
}

TABLE2_POWER = {
    (5, 50, 1): 0.857,
    (5, 50, 3): 0.741,
    (20, 40, 1): 0.946,
    (20, 40, 3): 0.908,
    (25, 250, 1): 1.000,
    (25, 250, 3): 1.000,
    (50, 100, 1): 1.000,
    (50, 100, 3): 1.000,
    (50, 500, 1): 1.000,
    (50, 500, 3): 1.000,
    (100, 200, 1): 1.000,
    (100, 200, 3): 1.000,
    (100, 1000, 1): 1.000,
    (100, 1000, 3): 1.000,
    (300, 600, 1): 1.000,
    (300, 600, 3): 1.000,
    (10, 50, 1): 0.863,
    (10, 50, 3): 0.872,
    (50, 25, 1): 0.968,
    (50, 25, 3): 0.946,
    (50, 250, 1): 1.000,
    (50, 250, 3): 1.000,
    (100, 50, 1): 1.000,
    (100, 50, 3): 1.000,
    (100, 500, 1): 1.000,
    (100, 500, 3): 1.000,
    (200, 100, 1): 1.000,
    (200, 100, 3): 1.000,
    (200, 1000, 1): 1.000,
    (200, 1000, 3): 1.000,
    (500, 250, 1): 1.000,
    (500, 250, 3): 1.000,
}
