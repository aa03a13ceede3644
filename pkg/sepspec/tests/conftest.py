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

import gc
import os
from tempfile import TemporaryDirectory

import numpy as np
import pytest

from sepspec.model import LinearProcessSpec, SeparableModel, shift_matrix
from sepspec.spectra import ArcsineMeasure, DiscreteMeasure, PointMass


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="Run long statistical reproductions.",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="Needs --runslow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def point_mass():
    return PointMass(1.0)


@pytest.fixture
def model1_h1():
    """Spectrum of diag(1, 3, 1, 3, ...)."""
    return DiscreteMeasure([1.0, 3.0])


@pytest.fixture
def arcsine():
    return ArcsineMeasure()


@pytest.fixture
def shift_h2():
    """Finite-n spectrum of the lag one shift matrix with n = 600."""
    return DiscreteMeasure.from_matrix(shift_matrix(600, 1))


@pytest.fixture
def white_noise_model():
    spec = LinearProcessSpec.model1(40)
    return SeparableModel.white_noise(spec.sigma0_sqrt, 80, 1)


@pytest.fixture(params=["csv"])
def temp_file_path(request):
    """Temporary file in a temporary directory for use when tests need
    to write, and sometimes read again, data to, and from, a file.
    """
    ext = request.param
    with TemporaryDirectory() as tmp:
        file_path = os.path.join(tmp, "data_temp." + ext)
        yield file_path
        gc.collect()


MODEL_CONFIG = """\
[dimensions]
p = {p}
n = {n}

[t1]
kind = {t1}
values = 1, 3

[t2]
kind = {t2}
tau = 1

[law]
kind = {law}

[spectra]
h2 = {h2}
"""


@pytest.fixture
def model_config_file(tmpdir, request):
    """Model configuration file. Parameters are passed as a dictionary
    updating the defaults below.
    """
    params = dict(p=30, n=60, t1="sqrt_diagonal", t2="shift", law="real_gaussian")
    params["h2"] = "finite"
    params.update(getattr(request, "param", {}))
    f = tmpdir.join("model.ini")
    f.write(MODEL_CONFIG.format(**params))
    yield str(f)
    gc.collect()


@pytest.fixture(autouse=True)
def import_to_namespace(doctest_namespace):
    """Make :mod:`numpy` available in docstring examples without having
    to import it.
    """
    doctest_namespace["np"] = np
