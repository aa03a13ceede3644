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

"""Reader of model and simulation plan configurations in INI files.

A model configuration has the sections ``[dimensions]``, ``[t1]``,
``[t2]`` and optionally ``[law]`` and ``[spectra]``::

    [dimensions]
    p = 300
    n = 600

    [t1]
    kind = sqrt_diagonal
    values = 1, 3

    [t2]
    kind = shift
    tau = 1

    [law]
    kind = real_gaussian

    [spectra]
    h2 = arcsine

A simulation plan has a ``[plan]`` section and optionally a ``[law]``
section::

    [plan]
    model = model1
    replications = 1000
    cells = 100x200x1, 300x600x1
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
import os
from typing import List, Optional, Tuple, Union

import numpy as np

from sepspec.base import ConfigurationError
from sepspec.io.plugins import csv_matrix
from sepspec.model import Dimensions, EntryLaw, SeparableModel, shift_matrix
from sepspec.montecarlo import SimulationPlan
from sepspec.spectra import ArcsineMeasure, SpectralMeasure

__all__ = ["ModelConfig", "file_reader", "file_writer"]

# Plugin description
format_name = "model_config"
file_extensions = ["ini", "cfg"]
writes = False
writes_this = None

MATRIX_KINDS = ("identity", "diagonal", "sqrt_diagonal", "shift", "file")
H2_KINDS = ("finite", "arcsine")


@dataclass(frozen=True, eq=False)
class ModelConfig:
    """Separable model read from a configuration file.

    Parameters
    ----------
    model
        The model.
    h2
        "finite" to use the eigenvalues of :math:`T_2` as :math:`H_2`,
        or "arcsine" for the limiting spectrum of the shift matrices.
    config
        The parsed sections, used for the run manifest.
    """

    model: SeparableModel
    h2: str = "finite"
    config: dict = field(default_factory=dict)

    def measures(self) -> Tuple[SpectralMeasure, SpectralMeasure, float]:
        """Return :math:`(H_1, H_2, c)` of the model."""
        h2 = ArcsineMeasure() if self.h2 == "arcsine" else self.model.h2n
        return self.model.h1n, h2, self.model.dims.c_n


def _values(section: configparser.SectionProxy, size: int) -> np.ndarray:
    raw = [v for v in section.get("values", "").replace(";", ",").split(",")]
    raw = [v.strip() for v in raw if v.strip() != ""]
    if len(raw) == 0:
        raise ConfigurationError(f"Section [{section.name}] needs `values`.")
    values = np.array([float(v) for v in raw])
    return np.resize(values, size)


def _matrix(
    section: configparser.SectionProxy, rows: int, cols: int, directory: str
) -> np.ndarray:
    kind = section.get("kind", "identity").strip().lower()
    if kind not in MATRIX_KINDS:
        raise ConfigurationError(
            f"Unknown kind {kind!r} in [{section.name}], use one of {MATRIX_KINDS}."
        )
    if kind == "identity":
        return np.eye(rows, cols)
    elif kind == "file":
        path = os.path.join(directory, section["path"])
        return csv_matrix.file_reader(path, header=section.getboolean("header", False))
    if rows != cols:
        raise ConfigurationError(
            f"Kind {kind!r} in [{section.name}] needs a square matrix, not "
            f"{rows} x {cols}."
        )
    if kind == "shift":
        return shift_matrix(rows, section.getint("tau", 1))
    values = _values(section, rows)
    if kind == "sqrt_diagonal":
        if np.any(values < 0):
            raise ConfigurationError(
                f"Values in [{section.name}] must be non-negative for 'sqrt_diagonal'."
            )
        values = np.sqrt(values)
    return np.diag(values)


def _law(parser: configparser.ConfigParser) -> EntryLaw:
    if not parser.has_section("law"):
        return EntryLaw.real_gaussian()
    section = parser["law"]
    kind = section.get("kind", "real_gaussian").strip().lower()
    if kind == "custom":
        return EntryLaw.custom(
            section.getfloat("alpha_x", 1.0), section.getfloat("kappa_x", 0.0)
        )
    factories = {
        "real_gaussian": EntryLaw.real_gaussian,
        "complex_gaussian": EntryLaw.complex_gaussian,
        "rademacher": EntryLaw.rademacher,
    }
    if kind not in factories:
        raise ConfigurationError(f"Unknown entry law {kind!r}.")
    return factories[kind]()


def parse_cells(text: str) -> List[Tuple[int, int, int]]:
    """Return (p, n, q) cells from text like "100x200x1, 300x600x3".

    Examples
    --------
    >>> from sepspec.io.plugins.model_config import parse_cells
    >>> parse_cells("100x200x1, 5x50x3")
    [(100, 200, 1), (5, 50, 3)]
    """
    cells = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if item == "":
            continue
        parts = item.lower().split("x")
        if len(parts) != 3:
            raise ConfigurationError(f"Cell {item!r} is not of the form PxNxQ.")
        cells.append(tuple(int(v) for v in parts))
    return cells


def _read_model(parser: configparser.ConfigParser, directory: str) -> ModelConfig:
    for name in ["dimensions", "t1", "t2"]:
        if not parser.has_section(name):
            raise ConfigurationError(f"Missing section [{name}].")
    d = parser["dimensions"]
    m1 = d.getint("m1", None)
    m2 = d.getint("m2", None)
    dims = Dimensions(d.getint("p"), d.getint("n"), m1, m2)
    T1 = _matrix(parser["t1"], dims.p, dims.m1, directory)
    T2 = _matrix(parser["t2"], dims.m2, dims.m2, directory)
    h2 = "finite"
    if parser.has_section("spectra"):
        h2 = parser["spectra"].get("h2", "finite").strip().lower()
    if h2 not in H2_KINDS:
        raise ConfigurationError(f"Unknown H2 kind {h2!r}, use one of {H2_KINDS}.")
    config = {s: dict(parser[s]) for s in parser.sections()}
    return ModelConfig(SeparableModel(dims, T1, T2, _law(parser)), h2, config)


def _read_plan(parser: configparser.ConfigParser) -> SimulationPlan:
    s = parser["plan"]
    return SimulationPlan(
        cells=tuple(parse_cells(s.get("cells", ""))),
        model=s.get("model", "model1").strip(),
        replications=s.getint("replications", 1000),
        level=s.getfloat("level", 0.05),
        base_seed=s.getint("base_seed", 0),
        moments=s.get("moments", "known").strip(),
        law=_law(parser),
        centering=s.get("centering", "finite_n").strip(),
    )


def file_reader(filename: str) -> Union[ModelConfig, SimulationPlan]:
    """Return a model configuration or a simulation plan from an INI
    file.

    Parameters
    ----------
    filename
        Path and file name. Paths to matrix files inside the
        configuration are relative to the directory of this file.

    Returns
    -------
    config
        A :class:`SimulationPlan` if the file has a ``[plan]`` section,
        else a :class:`ModelConfig`.

    Raises
    ------
    ConfigurationError
        If the file cannot be parsed or describes an invalid model.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(filename) as f:
            parser.read_file(f)
        if parser.has_section("plan"):
            return _read_plan(parser)
        return _read_model(parser, os.path.dirname(os.path.abspath(filename)))
    except ConfigurationError:
        raise
    except (configparser.Error, KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"Invalid configuration '{filename}': {e}") from e


def file_writer(filename: str, obj: Optional[object] = None):
    """Configurations are written by hand; this plugin does not write."""
    raise IOError(f"Format {format_name!r} cannot be written.")
