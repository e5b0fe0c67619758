"""Contributions of isolated components of the moduli of maximally tangent maps.

The pieces here are small and exact: gluing two rigid maximally tangent
curves through the same contact point, multiplicities of rational curves
with singularities, a pluggable multiple-cover table, and linear ledgers
that decompose a total invariant into known and unknown contributions.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional, Sequence, Union

from ._rational import format_rational, parse_rational
from .errors import (
    ConfigurationError,
    DomainError,
    LedgerMismatchError,
    MissingInvariantError,
    UnderdeterminedError,
    UnknownSingularityError,
)
from .presets import data_file

TWO_COMPONENT_ASSUMPTIONS = (
    "both components are immersed rational curves with (K+D).beta_i = 0",
    "the components meet at the contact point with intersection multiplicity min(d1, d2)",
    "the two components are distinct",
)


class Kind(enum.Enum):
    IMMERSED_A1 = "ImmersedA1"
    UNIBRANCH_A1 = "UnibranchA1"
    TWO_COMPONENT = "TwoComponent"
    MULTIPLE_COVER = "MultipleCover"


@dataclass(frozen=True)
class ComponentContribution:
    kind: Kind
    num_maps: int
    multiplicity_each: Fraction
    total: Fraction
    data: tuple = ()
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicity_each", Fraction(self.multiplicity_each))
        object.__setattr__(self, "total", Fraction(self.total))
        if self.num_maps * self.multiplicity_each != self.total:
            raise ValueError(
                f"{self.num_maps} maps of multiplicity {self.multiplicity_each} cannot total {self.total}"
            )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "num_maps": self.num_maps,
            "multiplicity_each": format_rational(self.multiplicity_each),
            "total": format_rational(self.total),
            "data": [d if isinstance(d, (int, str)) else format_rational(d) for d in self.data],
            "assumptions": list(self.assumptions),
        }


def two_component(d1: int, d2: int) -> ComponentContribution:
    """Maps glued from two rigid curves of tangencies d1, d2 at one contact point.

    There are gcd(d1, d2) such maps, each isolated with multiplicity
    min(e1, e2) where e_i = d_i / gcd, so the total is min(d1, d2). The
    geometric hypotheses cannot be checked from the degrees and are carried
    in ``assumptions``.
    """
    if d1 <= 0 or d2 <= 0:
        raise DomainError(f"tangency degrees must be positive, got ({d1}, {d2})")
    d = gcd(d1, d2)
    each = min(d1 // d, d2 // d)
    return ComponentContribution(
        Kind.TWO_COMPONENT, d, Fraction(each), Fraction(d * each), tuple(sorted((d1, d2))),
        TWO_COMPONENT_ASSUMPTIONS,
    )


@dataclass(frozen=True)
class SingularityFactorTable:
    """Factor contributed by each singularity type of a rational curve."""

    factors: dict = field(
        default_factory=lambda: {"node": 1, "immersed-branch": 1, "ordinary-cusp": 2}
    )

    def __post_init__(self):
        clean = {}
        for tag, f in self.factors.items():
            if not isinstance(f, int) or isinstance(f, bool) or f < 1:
                raise ConfigurationError(f"singularity factor for {tag!r} must be an integer >= 1")
            clean[str(tag)] = f
        object.__setattr__(self, "factors", clean)

    def factor(self, tag: str) -> int:
        try:
            return self.factors[tag]
        except KeyError:
            raise UnknownSingularityError(
                f"no factor known for singularity {tag!r}; add it to the table"
            ) from None

    def extended(self, extra: dict) -> "SingularityFactorTable":
        return SingularityFactorTable({**self.factors, **extra})

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SingularityFactorTable":
        try:
            return cls(json.loads(Path(path).read_text()))
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: {exc}") from exc

    @classmethod
    def shipped(cls, data_dir=None) -> "SingularityFactorTable":
        return cls.load(data_file("singularity-factors.json", data_dir))


def a1_multiplicity(singularities: Sequence[str], table: Optional[SingularityFactorTable] = None) -> int:
    """Multiplicity of a rigid rational curve: the product of its singularity factors."""
    table = table if table is not None else SingularityFactorTable()
    result = 1
    for tag in singularities:
        result *= table.factor(tag)
    return result


def a1_contribution(singularities: Sequence[str], table: Optional[SingularityFactorTable] = None) -> ComponentContribution:
    m = a1_multiplicity(singularities, table)
    tags = tuple(singularities)
    immersed = all(t in ("node", "immersed-branch") for t in tags)
    kind = Kind.IMMERSED_A1 if immersed else Kind.UNIBRANCH_A1
    return ComponentContribution(kind, 1, Fraction(m), Fraction(m), tags)


@dataclass(frozen=True)
class MultipleCoverTable:
    """Contributions of k-fold covers of a rigid curve, by k. Only lookups are supported."""

    values: dict = field(default_factory=dict)
    loops: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "values", {int(k): parse_rational(v) for k, v in self.values.items()})

    @classmethod
    def load(cls, path: Union[str, Path]) -> "MultipleCoverTable":
        try:
            doc = json.loads(Path(path).read_text())
            return cls(doc["values"], doc.get("loops"))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ConfigurationError(f"{path}: bad multiple-cover table: {exc}") from exc

    @classmethod
    def shipped(cls, data_dir=None) -> "MultipleCoverTable":
        return cls.load(data_file("multiple-cover.json", data_dir))


def multiple_cover(k: int, table=None) -> Fraction:
    """Look up the k-fold cover contribution; absent entries are errors, never guesses."""
    if table is None:
        table = MultipleCoverTable.shipped()
    values = table.values if isinstance(table, MultipleCoverTable) else {
        int(j): parse_rational(v) for j, v in dict(table).items()
    }
    if k not in values:
        raise MissingInvariantError(f"no multiple-cover value for k={k}; supply it in the table")
    return values[k]


# --- ledgers ----------------------------------------------------------------


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"


UNKNOWN = _Unknown()


def _is_unknown(value) -> bool:
    return value is UNKNOWN or (isinstance(value, str) and value.strip().lower() in ("unknown", "?"))


@dataclass(frozen=True)
class LinearConstraint:
    """``target = constant + sum(coefficient * label)`` over the remaining unknowns."""

    target: str
    constant: Fraction
    coefficients: dict

    def substitute(self, label: str, value) -> "LedgerResult":
        if label not in self.coefficients:
            raise KeyError(f"{label!r} is not a free unknown of this constraint")
        value = parse_rational(value)
        solved = self.constant + self.coefficients[label] * value
        return LedgerResult("solved", {label: value, self.target: solved})

    def __str__(self):
        text = f"{self.target} = {format_rational(self.constant)}"
        for label, c in self.coefficients.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            text += f" {sign} {label}" if mag == 1 else f" {sign} {format_rational(mag)}*{label}"
        return text


@dataclass(frozen=True)
class LedgerResult:
    status: str  # "checked", "solved" or "constraint"
    assignments: dict = field(default_factory=dict)
    constraint: Optional[LinearConstraint] = None

    def to_dict(self) -> dict:
        doc = {
            "status": self.status,
            "assignments": {k: format_rational(v) for k, v in self.assignments.items()},
        }
        if self.constraint is not None:
            c = self.constraint
            doc["constraint"] = {
                "target": c.target,
                "constant": format_rational(c.constant),
                "coefficients": {k: format_rational(v) for k, v in c.coefficients.items()},
                "text": str(c),
            }
        return doc


def decomposition_ledger(total, terms: Sequence[tuple], coefficients: Optional[Sequence] = None) -> LedgerResult:
    """Solve ``total = sum(coefficient_i * term_i)`` for the unknown terms.

    With no unknowns the identity is checked; one unknown is solved; two
    unknowns yield the last one as an affine function of the first.
    """
    total = parse_rational(total)
    if coefficients is None:
        coefficients = [1] * len(terms)
    if len(coefficients) != len(terms):
        raise ConfigurationError(f"{len(terms)} terms but {len(coefficients)} coefficients")
    residual = total
    unknown: list[tuple[str, Fraction]] = []
    for (label, value), c in zip(terms, coefficients):
        c = parse_rational(c)
        if _is_unknown(value):
            unknown.append((str(label), c))
        else:
            residual -= c * parse_rational(value)
    if len(unknown) > 2:
        raise UnderdeterminedError(
            f"{len(unknown)} unknowns ({', '.join(l for l, _ in unknown)}) in one linear relation"
        )
    if any(c == 0 for _, c in unknown):
        raise UnderdeterminedError("an unknown term has coefficient zero and is unconstrained")
    if not unknown:
        if residual != 0:
            raise LedgerMismatchError(f"terms sum to {total - residual}, not {total}")
        return LedgerResult("checked")
    if len(unknown) == 1:
        label, c = unknown[0]
        return LedgerResult("solved", {label: residual / c})
    (free, cf), (target, ct) = unknown
    return LedgerResult("constraint", {}, LinearConstraint(target, residual / ct, {free: -cf / ct}))


def ledger_from_dict(doc: dict) -> tuple[Fraction, list[tuple[str, object]], list[Fraction]]:
    try:
        total = parse_rational(doc["total"])
        terms = [(str(label), UNKNOWN if _is_unknown(v) else parse_rational(v)) for label, v in doc["terms"]]
        coefficients = [parse_rational(c) for c in doc.get("coefficients", [1] * len(terms))]
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"bad ledger document: {exc}") from exc
    return total, terms, coefficients


def load_ledger(path: Union[str, Path]):
    try:
        return ledger_from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: {exc}") from exc
