"""Location of the bundled data files.

``LOGGW_DATA_DIR`` overrides the bundled directory, which lets callers point
the whole toolkit at a modified copy of the tables.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Optional, Union

from .errors import ConfigurationError

BUNDLED = Path(__file__).resolve().parent / "data"

SURFACES = {"P2-elliptic": "p2-elliptic.cfg", "P2-toric": "p2-toric.cfg", "GPS-weak-dP": "gps-weak-dp.cfg"}
TROPICAL = {"gps-cubic": "gps-cubic.json", "line": "line.json"}
PENCILS = {
    "nodal": "pencil-nodal.json",
    "cuspidal": "pencil-cuspidal.json",
    "conic-line": "pencil-conic-line.json",
    "three-lines": "pencil-three-lines.json",
}


def data_dir(override: Optional[Union[str, Path]] = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get("LOGGW_DATA_DIR")
    return Path(env) if env else BUNDLED


def data_file(name: str, override: Optional[Union[str, Path]] = None) -> Path:
    path = data_dir(override) / name
    if not path.is_file():
        raise ConfigurationError(f"data file {name!r} not found in {path.parent}")
    return path


def preset_file(table: dict, name: str, override=None) -> Path:
    if name not in table:
        raise ConfigurationError(f"unknown preset {name!r}; choose from {sorted(table)}")
    return data_file(table[name], override)
