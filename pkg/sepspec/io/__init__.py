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
"""Read and write data matrices, model configurations and results from
and to file.

.. currentmodule:: sepspec.io

.. rubric:: Modules

.. autosummary::
    :toctree: ../generated/
    :template: custom-module-template.rst

    plugins
"""

import os
from types import ModuleType
from typing import List, Optional
from warnings import warn

from sepspec.io.manifest import RunManifest, canonical_json, config_digest
from sepspec.io.plugins import csv_table, plugin_list
from sepspec.io.plugins.model_config import ModelConfig

extensions = [plugin.file_extensions for plugin in plugin_list if plugin.writes]


# Lists what will be imported when calling "from sepspec.io import *"
__all__ = [
    "ModelConfig",
    "RunManifest",
    "canonical_json",
    "config_digest",
    "load",
    "save",
]


def _extension(filename: str) -> str:
    return os.path.splitext(filename)[1][1:].lower()


def _candidate_readers(
    filename: str, format_name: Optional[str] = None
) -> List[ModuleType]:
    if format_name is None:
        ext = _extension(filename)
        return [p for p in plugin_list if ext in p.file_extensions]
    named = [p for p in plugin_list if p.format_name == format_name]
    if not named:
        names = [p.format_name for p in plugin_list]
        raise IOError(f"Unknown format {format_name!r}, use one of {names}.")
    return named


def _select_reader(filename: str, readers: List[ModuleType]) -> ModuleType:
    if not readers:
        raise IOError(
            f"Could not read '{filename}'. If the file format is supported, please "
            "report this error."
        )
    # Tables and data matrices share the .csv extension
    if len(readers) > 1 and csv_table in readers and csv_table.is_table(filename):
        return csv_table
    return readers[0]


def load(filename: str, format_name: Optional[str] = None, **kwargs):
    """Load data from a supported file format listed in
    :doc:`sepspec.io.plugins`.

    Parameters
    ----------
    filename
        Name of file to load.
    format_name
        Name of the plugin to use, e.g. "csv_matrix". If not given, the
        plugin is found from the file extension. A CSV file is read as a
        simulation table or density if its header says so, otherwise as
        a data matrix.
    **kwargs
        Keyword arguments passed to the corresponding plugins'
        ``file_reader()``. See their individual docstrings for available
        arguments.

    Returns
    -------
    data
        Data matrix, configuration or result read from the file.
    """
    if not os.path.isfile(filename):
        raise IOError(f"No filename matches '{filename}'.")
    readers = _candidate_readers(filename, format_name)
    reader = _select_reader(filename, readers)
    return reader.file_reader(filename, **kwargs)


def _select_writer(filename: str, obj: object) -> ModuleType:
    ext = _extension(filename)
    for plugin in plugin_list:
        if (
            plugin.writes
            and ext in plugin.file_extensions
            and isinstance(obj, plugin.writes_this)
        ):
            return plugin
    raise IOError(
        f"'{ext}' does not correspond to any supported format for "
        f"{type(obj).__name__}. Supported file extensions are: '{extensions}'."
    )


def save(
    filename: str,
    object2write: object,
    overwrite: Optional[bool] = None,
    **kwargs,
):
    """Write data to a supported file format listed in
    :doc:`sepspec.io.plugins`.

    Parameters
    ----------
    filename
        Name of file to write to.
    object2write
        Object to write to file: a data matrix, a
        :class:`~sepspec.whitenoise.WhiteNoiseReport`,
        :class:`~sepspec.clt.CltMoments`,
        :class:`~sepspec.montecarlo.SimulationTable` or
        :class:`~sepspec.lsd.LsdDensity`.
    overwrite
        If not given and the file exists, the user is queried. If
        ``True`` (``False``) the file is (not) overwritten if it exists.
    **kwargs
        Keyword arguments passed to the corresponding plugins'
        ``file_writer()``, e.g. ``manifest``. See their individual
        docstrings for available arguments.
    """
    writer = _select_writer(filename, object2write)
    if overwrite not in (None, True, False):
        raise ValueError("`overwrite` parameter can only be None, True or False.")

    if overwrite is None:
        write = _confirm_overwrite(filename)
    else:
        write = overwrite or not os.path.isfile(filename)

    if write:
        writer.file_writer(filename, object2write, **kwargs)


def _confirm_overwrite(filename: str) -> bool:
    """Return whether ``filename`` may be written, asking the user when
    it already exists.

    Parameters
    ----------
    filename
        Name of file to write to.

    Returns
    -------
    overwrite
        Whether to write the file.
    """
    if not os.path.isfile(filename):
        return True
    message = f"Overwrite '{filename}' (y/n)?\n"
    try:
        answer = input(message).lower()
        while answer not in ("y", "n"):
            print("Please answer y or n.")
            answer = input(message).lower()
    except OSError:
        warn(
            "Not overwriting, since your terminal does not support raw input. To "
            "overwrite the file, use `overwrite=True`."
        )
        return False
    return answer == "y"
