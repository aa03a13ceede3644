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

"""Reader and writer of simulation tables and LSD densities in CSV
files with a header line and an optional manifest comment line.
"""

from __future__ import annotations

import csv
from dataclasses import fields
from typing import Optional, Union

import numpy as np

from sepspec.io.manifest import MANIFEST_PREFIX, RunManifest
from sepspec.lsd import LsdDensity
from sepspec.montecarlo import SimulationRow, SimulationTable

__all__ = ["file_reader", "file_writer", "is_table", "write_table"]

# Plugin description
format_name = "csv_table"
file_extensions = ["csv"]
writes = True
writes_this = (SimulationTable, LsdDensity)

TABLE_COLUMNS = [f.name for f in fields(SimulationRow)]
DENSITY_COLUMNS = ["x", "density"]

_INT_COLUMNS = ["p", "n", "q", "rejections", "replications"]


def _header(filename: str):
    """Return the manifest line (or None) and the header cells."""
    manifest = None
    with open(filename, newline="") as f:
        for line in f:
            if line.startswith(MANIFEST_PREFIX):
                manifest = line.strip()
            elif line.startswith("#") or line.strip() == "":
                continue
            else:
                return manifest, next(csv.reader([line]))
    return manifest, []


def is_table(filename: str) -> bool:
    """Return whether a CSV file holds a simulation table or an LSD
    density rather than a data matrix.
    """
    _, header = _header(filename)
    header = [h.strip() for h in header]
    return header in [TABLE_COLUMNS, DENSITY_COLUMNS]


def _rows(filename: str):
    with open(filename, newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    return list(csv.DictReader(lines))


def file_reader(filename: str, with_manifest: bool = False):
    """Return a simulation table or an LSD density from a CSV file.

    Parameters
    ----------
    filename
        Path and file name.
    with_manifest
        Whether to also return the run manifest. Default is ``False``.

    Returns
    -------
    result
        :class:`~sepspec.montecarlo.SimulationTable` or
        :class:`~sepspec.lsd.LsdDensity`, depending on the header.
    manifest
        The run manifest, or None. Only returned if ``with_manifest`` is
        ``True``.
    """
    manifest, header = _header(filename)
    header = [h.strip() for h in header]
    if header == TABLE_COLUMNS:
        rows = []
        for r in _rows(filename):
            d = {}
            for key, value in r.items():
                if key in _INT_COLUMNS:
                    d[key] = int(value)
                elif key == "error":
                    d[key] = value if value != "" else None
                else:
                    d[key] = float(value)
            rows.append(d)
        obj = SimulationTable.from_rows(rows)
    elif header == DENSITY_COLUMNS:
        data = np.array(
            [[float(r["x"]), float(r["density"])] for r in _rows(filename)]
        ).reshape(-1, 2)
        obj = LsdDensity(data[:, 0], data[:, 1])
    else:
        raise IOError(f"'{filename}' has no simulation table or density header.")
    if with_manifest:
        return obj, None if manifest is None else RunManifest.from_comment(manifest)
    return obj


def file_writer(
    filename: str,
    obj: Union[SimulationTable, LsdDensity],
    manifest: Optional[RunManifest] = None,
):
    """Write a simulation table or an LSD density to a CSV file.

    Table rates are written with full precision, densities with 12
    significant digits.

    Parameters
    ----------
    filename
        Path and file name.
    obj
        Table or density.
    manifest
        Run manifest written as the first line. Default is no manifest.
    """
    with open(filename, "w", newline="") as f:
        write_table(f, obj, manifest)


def write_table(f, obj, manifest: Optional[RunManifest] = None):
    """Write a table or density to an open text stream, e.g.
    :data:`sys.stdout`.
    """
    if manifest is not None:
        f.write(manifest.to_comment() + "\n")
    writer = csv.writer(f, lineterminator="\n")
    if isinstance(obj, SimulationTable):
        writer.writerow(TABLE_COLUMNS)
        for row in obj.to_rows():
            values = []
            for key in TABLE_COLUMNS:
                value = row[key]
                if key == "error":
                    value = "" if value is None else value
                elif key not in _INT_COLUMNS:
                    value = repr(float(value))
                values.append(value)
            writer.writerow(values)
    elif isinstance(obj, LsdDensity):
        writer.writerow(DENSITY_COLUMNS)
        for x, y in zip(obj.x, obj.density):
            writer.writerow([f"{x:.12g}", f"{y:.12g}"])
    else:
        raise TypeError(f"Cannot write object of type {type(obj).__name__}.")
