"""Reading and writing end/point configurations as JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .._rational import format_rational, parse_rational
from ..errors import ConfigurationError
from .curve import EndCondition, Point


@dataclass
class TropicalConfig:
    ends: list[EndCondition]
    points: list[Point] = field(default_factory=list)
    description: str = ""


def config_from_dict(doc: dict) -> TropicalConfig:
    try:
        ends = []
        for e in doc["ends"]:
            anchor = e.get("anchor")
            if anchor is not None:
                anchor = (parse_rational(anchor[0]), parse_rational(anchor[1]))
            ends.append(
                EndCondition(tuple(e["direction"]), int(e.get("weight", 1)), anchor, e.get("label", ""))
            )
        points = [(parse_rational(x), parse_rational(y)) for x, y in doc.get("points", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"bad tropical configuration: {exc}") from exc
    return TropicalConfig(ends, points, doc.get("description", ""))


def config_to_dict(config: TropicalConfig) -> dict:
    ends = []
    for e in config.ends:
        entry = {"direction": list(e.direction), "weight": e.weight}
        if e.anchor is not None:
            entry["anchor"] = [format_rational(e.anchor[0]), format_rational(e.anchor[1])]
        if e.label:
            entry["label"] = e.label
        ends.append(entry)
    return {
        "description": config.description,
        "ends": ends,
        "points": [[format_rational(x), format_rational(y)] for x, y in config.points],
    }


def load_config(path: Union[str, Path]) -> TropicalConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: {exc}") from exc
    return config_from_dict(doc)
