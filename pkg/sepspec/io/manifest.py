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

"""Reproducibility metadata embedded in every output file."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from datetime import datetime, timezone
import hashlib
import json
from typing import Optional

from sepspec import __version__

MANIFEST_PREFIX = "# manifest:"


def canonical_json(config: dict) -> str:
    """Return a canonical JSON form of a configuration: sorted keys, no
    whitespace, non-JSON values converted with :func:`str`.
    """
    return json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)


def config_digest(config: dict) -> str:
    """Return the SHA-256 hex digest of :func:`canonical_json`."""
    return hashlib.sha256(canonical_json(config).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """Description of the run that produced an output.

    Attributes
    ----------
    command
        Name of the command.
    config_digest
        SHA-256 digest of the canonicalised configuration.
    seed
        Seed of the run, if any.
    tool_version
        Version of sepspec.
    timestamp
        Creation time in ISO 8601 format, UTC.
    """

    command: str
    config_digest: str
    seed: Optional[int]
    tool_version: str
    timestamp: str

    @classmethod
    def create(
        cls, command: str, config: dict, seed: Optional[int] = None
    ) -> RunManifest:
        """Return a manifest for ``command`` run with ``config`` now."""
        now = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(command, config_digest(config), seed, __version__, now)

    def to_dict(self) -> dict:
        """Return the manifest as a dictionary."""
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> RunManifest:
        """Return a manifest from :meth:`to_dict` output."""
        return cls(
            d["command"],
            d["config_digest"],
            d.get("seed"),
            d["tool_version"],
            d["timestamp"],
        )

    def to_comment(self) -> str:
        """Return the manifest as a CSV comment line, without newline."""
        return f"{MANIFEST_PREFIX} {json.dumps(self.to_dict(), sort_keys=True)}"

    @classmethod
    def from_comment(cls, line: str) -> RunManifest:
        """Return a manifest from a :meth:`to_comment` line."""
        if not line.startswith(MANIFEST_PREFIX):
            raise ValueError(f"Line does not start with {MANIFEST_PREFIX!r}.")
        return cls.from_dict(json.loads(line[len(MANIFEST_PREFIX) :]))

    def same_run(self, other: RunManifest) -> bool:
        """Return whether two manifests describe the same inputs,
        ignoring the timestamp.
        """
        a, b = self.to_dict(), other.to_dict()
        a.pop("timestamp")
        b.pop("timestamp")
        return a == b
