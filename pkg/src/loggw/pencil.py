"""Euler-characteristic ledger for a pencil of anticanonical curves.

Resolving the pencil gives an elliptic fibration Y. Every rational fiber
other than the listed special ones is nodal or cuspidal, and its Euler
number (1 or 2) equals the count it contributes. Additivity of Euler
numbers then gives the count at the base point as

    N = sum(direct contributions) + e(Y) - sum(e(special fibers)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from ._rational import format_rational, parse_rational
from .errors import ConfigurationError, LedgerArityError

UNKNOWN_MARK = "?"


@dataclass(frozen=True)
class SpecialFiber:
    label: str
    euler_number: int
    direct_contribution: Optional[Fraction]  # None marks the unknown

    def __post_init__(self):
        if self.direct_contribution is not None:
            object.__setattr__(self, "direct_contribution", parse_rational(self.direct_contribution))

    @property
    def is_unknown(self) -> bool:
        return self.direct_contribution is None


@dataclass(frozen=True)
class PencilScenario:
    e_total: int
    special_fibers: tuple[SpecialFiber, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "special_fibers", tuple(self.special_fibers))

    def unknowns(self) -> list[SpecialFiber]:
        return [f for f in self.special_fibers if f.is_unknown]

    def _remaining(self) -> int:
        return self.e_total - sum(f.euler_number for f in self.special_fibers)

    def with_contribution(self, label: str, value) -> "PencilScenario":
        if label not in {f.label for f in self.special_fibers}:
            raise KeyError(f"no special fiber labelled {label!r}")
        fibers = tuple(
            replace(f, direct_contribution=parse_rational(value)) if f.label == label else f
            for f in self.special_fibers
        )
        return PencilScenario(self.e_total, fibers)


def point_contribution(s: PencilScenario) -> Fraction:
    if s.unknowns():
        raise LedgerArityError(
            f"fibers {[f.label for f in s.unknowns()]} have unknown contributions; "
            "solve for them instead"
        )
    return sum((f.direct_contribution for f in s.special_fibers), Fraction(0)) + s._remaining()


def solve_fiber_contribution(s: PencilScenario, target) -> Fraction:
    """The value of the single unknown contribution that makes the count equal ``target``."""
    unknowns = s.unknowns()
    if len(unknowns) != 1:
        raise LedgerArityError(f"exactly one unknown contribution is needed, found {len(unknowns)}")
    known = sum((f.direct_contribution for f in s.special_fibers if not f.is_unknown), Fraction(0))
    return parse_rational(target) - s._remaining() - known


def scenario_from_dict(doc: dict) -> PencilScenario:
    try:
        fibers = []
        for f in doc.get("special_fibers", []):
            value = f["direct_contribution"]
            unknown = isinstance(value, str) and value.strip() == UNKNOWN_MARK
            fibers.append(
                SpecialFiber(str(f["label"]), int(f["euler_number"]), None if unknown else parse_rational(value))
            )
        return PencilScenario(int(doc["e_total"]), tuple(fibers))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"bad pencil scenario: {exc}") from exc


def scenario_to_dict(s: PencilScenario) -> dict:
    return {
        "e_total": s.e_total,
        "special_fibers": [
            {
                "label": f.label,
                "euler_number": f.euler_number,
                "direct_contribution": UNKNOWN_MARK if f.is_unknown else format_rational(f.direct_contribution),
            }
            for f in s.special_fibers
        ],
    }


def load_scenario(path: Union[str, Path]) -> PencilScenario:
    try:
        return scenario_from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: {exc}") from exc


def scenario(e_total: int, fibers: Sequence[tuple]) -> PencilScenario:
    """Shorthand: ``scenario(12, [("F0", 3, 0), ("F1", 6, None)])``."""
    return PencilScenario(e_total, tuple(SpecialFiber(l, e, c) for l, e, c in fibers))
