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

"""Reader and writer of data matrices in CSV files, one variable per
row and one observation per column.
"""

import csv
import math
from typing import Optional

import numpy as np

from sepspec.base import DataError
from sepspec.io.manifest import RunManifest

__all__ = ["file_reader", "file_writer"]

# Plugin description
format_name = "csv_matrix"
file_extensions = ["csv", "txt"]
writes = True
writes_this = np.ndarray


def file_reader(
    filename: str, header: bool = False, transpose: bool = False, delimiter: str = ","
) -> np.ndarray:
    """Return a real data matrix from a CSV file.

    Lines starting with ``#`` are skipped.

    Parameters
    ----------
    filename
        Path and file name.
    header
        Whether the first non-comment line is a header to skip. Default
        is ``False``.
    transpose
        Whether the file has one observation per row instead. Default
        is ``False``.
    delimiter
        Field separator. Default is ",".

    Returns
    -------
    data
        Matrix of shape (p, n).

    Raises
    ------
    DataError
        If a cell is not a finite number or rows have different lengths.
        The one-based row and column in the file are given.
    """
    rows = []
    width = None
    with open(filename, newline="") as f:
        skipped_header = not header
        for i, text in enumerate(f, start=1):
            if text.strip() == "" or text.lstrip().startswith("#"):
                continue
            line = next(csv.reader([text], delimiter=delimiter))
            if not skipped_header:
                skipped_header = True
                continue
            values = []
            for j, cell in enumerate(line, start=1):
                try:
                    v = float(cell)
                except ValueError:
                    raise DataError(f"Cell {cell!r} is not a number", row=i, column=j)
                if not math.isfinite(v):
                    raise DataError(f"Cell {cell!r} is not finite", row=i, column=j)
                values.append(v)
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise DataError(
                    f"Row has {len(values)} cells, expected {width}",
                    row=i,
                    column=min(len(values), width) + 1,
                )
            rows.append(values)
    if len(rows) == 0:
        raise DataError(f"No data in '{filename}'.")
    data = np.array(rows, dtype=float)
    return data.T if transpose else data


def file_writer(
    filename: str,
    data: np.ndarray,
    manifest: Optional[RunManifest] = None,
    fmt: str = "%.17g",
):
    """Write a real data matrix to a CSV file, rows first.

    Parameters
    ----------
    filename
        Path and file name.
    data
        Two-dimensional real array.
    manifest
        Run manifest written as a comment line. Default is no manifest.
    fmt
        Number format. Default is "%.17g", which round trips.
    """
    data = np.atleast_2d(data)
    if np.iscomplexobj(data):
        raise DataError("Complex data cannot be written to CSV.")
    with open(filename, "w", newline="") as f:
        if manifest is not None:
            f.write(manifest.to_comment() + "\n")
        np.savetxt(f, data, fmt=fmt, delimiter=",")
