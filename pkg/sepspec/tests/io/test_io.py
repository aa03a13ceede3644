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

import os

import numpy as np
import pytest

from sepspec.io import load, save
from sepspec.montecarlo import SimulationRow, SimulationTable


class TestLoad:
    def test_missing_file(self, tmpdir):
        with pytest.raises(IOError, match="No filename matches"):
            _ = load(str(tmpdir.join("missing.csv")))

    def test_unknown_extension(self, tmpdir):
        f = tmpdir.join("data.xyz")
        f.write("1,2\n")
        with pytest.raises(IOError, match="Could not read"):
            _ = load(str(f))

    def test_format_name(self, tmpdir):
        f = tmpdir.join("data.dat")
        f.write("1,2\n3,4\n")
        assert np.array_equal(load(str(f), format_name="csv_matrix"), [[1, 2], [3, 4]])
        with pytest.raises(IOError, match="Unknown format"):
            _ = load(str(f), format_name="hdf5")


class TestSave:
    def test_unsupported_extension(self, tmpdir):
        with pytest.raises(IOError, match="does not correspond to any supported"):
            save(str(tmpdir.join("data.json")), np.eye(2))

    def test_overwrite(self, temp_file_path):
        save(temp_file_path, np.eye(2))
        save(temp_file_path, np.zeros((2, 2)), overwrite=False)
        assert np.array_equal(load(temp_file_path), np.eye(2))
        save(temp_file_path, np.zeros((2, 2)), overwrite=True)
        assert np.array_equal(load(temp_file_path), np.zeros((2, 2)))
        with pytest.raises(ValueError, match="`overwrite` parameter"):
            save(temp_file_path, np.eye(2), overwrite="yes")

    @pytest.mark.parametrize("answer, expected", [("n", 1.0), ("y", 0.0)])
    def test_overwrite_prompt(self, temp_file_path, monkeypatch, answer, expected):
        save(temp_file_path, np.eye(2))
        monkeypatch.setattr("builtins.input", lambda x: answer)
        save(temp_file_path, np.zeros((2, 2)))
        assert load(temp_file_path)[0, 0] == expected

    def test_overwrite_without_terminal(self, temp_file_path, monkeypatch):
        save(temp_file_path, np.eye(2))

        def no_input(x):
            raise OSError

        monkeypatch.setattr("builtins.input", no_input)
        with pytest.warns(UserWarning, match="Not overwriting"):
            save(temp_file_path, np.zeros((2, 2)))
        assert load(temp_file_path)[0, 0] == 1

    def test_table_goes_to_table_writer(self, temp_file_path):
        table = SimulationTable([SimulationRow.from_counts((5, 50, 1), 3, 10)])
        save(temp_file_path, table)
        assert os.path.isfile(temp_file_path)
        assert load(temp_file_path).rate(5, 50, 1) == 0.3
