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

"""Reader and writer of results in JSON files.

A file holds one object with the keys ``type``, ``manifest`` and
``result``. Keys are sorted, so equal results give equal files.
"""

from __future__ import annotations

import json
from typing import Optional, Tuple, Union

import numpy as np

from sepspec.clt import CltMoments
from sepspec.io.manifest import RunManifest
from sepspec.montecarlo import SimulationTable
from sepspec.whitenoise import WhiteNoiseReport

__all__ = ["dumps", "file_reader", "file_writer", "loads"]

# Plugin description
format_name = "json_report"
file_extensions = ["json"]
writes = True
writes_this = (WhiteNoiseReport, CltMoments, SimulationTable)

Result = Union[WhiteNoiseReport, CltMoments, SimulationTable]

_TYPES = {
    "white_noise_report": WhiteNoiseReport,
    "clt_moments": CltMoments,
    "simulation_table": SimulationTable,
}


def _type_name(obj: Result) -> str:
    for name, cls in _TYPES.items():
        if isinstance(obj, cls):
            return name
    raise TypeError(f"Cannot serialise object of type {type(obj).__name__}.")


def _result_dict(obj: Result) -> dict:
    if isinstance(obj, SimulationTable):
        return {"rows": obj.to_rows()}
    d = obj.to_dict()
    if isinstance(obj, CltMoments) and obj.cov is not None:
        d["variance"] = [float(v) for v in np.diag(obj.cov)]
    return d


def dumps(obj: Result, manifest: Optional[RunManifest] = None) -> str:
    """Return the JSON text written by :func:`file_writer`."""
    d = {
        "type": _type_name(obj),
        "manifest": None if manifest is None else manifest.to_dict(),
        "result": _result_dict(obj),
    }
    return json.dumps(d, sort_keys=True, indent=2, default=float)


def loads(text: str) -> Tuple[Result, Optional[RunManifest]]:
    """Return the result and manifest from :func:`dumps` output."""
    d = json.loads(text)
    name = d.get("type")
    if name not in _TYPES:
        raise IOError(f"Unknown result type {name!r}.")
    result = d["result"]
    if name == "simulation_table":
        obj = SimulationTable.from_rows(result["rows"])
    else:
        obj = _TYPES[name].from_dict(result)
    manifest = d.get("manifest")
    return obj, None if manifest is None else RunManifest.from_dict(manifest)


def file_reader(filename: str, with_manifest: bool = False):
    """Return a result from a JSON file.

    Parameters
    ----------
    filename
        Path and file name.
    with_manifest
        Whether to also return the run manifest. Default is ``False``.

    Returns
    -------
    result
        A :class:`~sepspec.whitenoise.WhiteNoiseReport`,
        :class:`~sepspec.clt.CltMoments` or
        :class:`~sepspec.montecarlo.SimulationTable`.
    manifest
        The run manifest, or None. Only returned if ``with_manifest`` is
        ``True``.
    """
    with open(filename, encoding="utf-8") as f:
        obj, manifest = loads(f.read())
    if with_manifest:
        return obj, manifest
    return obj


def file_writer(filename: str, obj: Result, manifest: Optional[RunManifest] = None):
    """Write a result to a JSON file.

    Parameters
    ----------
    filename
        Path and file name.
    obj
        Result to write.
    manifest
        Run manifest to embed. Default is no manifest.
    """
    with open(filename, "w", encoding="utf-8") as f:
        f.write(dumps(obj, manifest))
        f.write("\n")
