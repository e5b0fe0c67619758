"""Curve classes on (weak) del Pezzo and blown-up toric surfaces.

A :class:`SurfaceModel` carries a basis of H_2, its intersection form, the
canonical class and the components of the boundary divisor D. Classes are
dense integer vectors; Python ints keep every product exact.
"""
from __future__ import annotations

import configparser
import enum
import io
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import ConfigurationError, DimensionError, DomainError, InvalidClassError, ProfileError


class BoundaryKind(enum.Enum):
    SMOOTH_ELLIPTIC = "SmoothElliptic"
    NODAL_CYCLE = "NodalCycle"


@dataclass(frozen=True)
class CurveClass:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"class coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return len(self.coefficients)

    def _check(self, other: "CurveClass"):
        if len(other) != len(self):
            raise DimensionError(f"classes of rank {len(self)} and {len(other)}")

    def __add__(self, other: "CurveClass") -> "CurveClass":
        self._check(other)
        return CurveClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        self._check(other)
        return CurveClass(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "CurveClass":
        return CurveClass(tuple(-a for a in self.coefficients))

    def __mul__(self, k: int) -> "CurveClass":
        return CurveClass(tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)


@dataclass(frozen=True)
class SurfaceModel:
    basis_labels: tuple[str, ...]
    intersection_matrix: tuple[tuple[int, ...], ...]
    canonical_class: CurveClass
    boundary_components: Mapping[str, CurveClass]
    boundary_kind: BoundaryKind
    name: str = field(default="", compare=False)

    def __post_init__(self):
        labels = tuple(self.basis_labels)
        matrix = tuple(tuple(row) for row in self.intersection_matrix)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError(f"duplicate basis labels in {labels}")
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionError(f"intersection matrix must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                entry = matrix[i][j]
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise TypeError("intersection matrix entries must be integers")
                if entry != matrix[j][i]:
                    raise ValueError("intersection matrix is not symmetric")
        components = dict(self.boundary_components)
        for cls in [self.canonical_class, *components.values()]:
            if len(cls) != n:
                raise DimensionError(f"class {cls} does not have {n} coefficients")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "intersection_matrix", matrix)
        object.__setattr__(self, "boundary_components", components)
        object.__setattr__(self, "boundary_kind", BoundaryKind(self.boundary_kind))

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def boundary(self) -> CurveClass:
        total = CurveClass((0,) * self.rank)
        for cls in self.boundary_components.values():
            total = total + cls
        return total

    def curve_class(self, **coefficients: int) -> CurveClass:
        """Build a class from label keywords, e.g. ``model.curve_class(H=3, E11=-1)``."""
        unknown = set(coefficients) - set(self.basis_labels)
        if unknown:
            raise DimensionError(f"unknown basis labels {sorted(unknown)}")
        return CurveClass(tuple(coefficients.get(label, 0) for label in self.basis_labels))

    def basis_vector(self, label: str) -> CurveClass:
        return self.curve_class(**{label: 1})

    def __eq__(self, other):
        if not isinstance(other, SurfaceModel):
            return NotImplemented
        return (
            self.basis_labels == other.basis_labels
            and self.intersection_matrix == other.intersection_matrix
            and self.canonical_class == other.canonical_class
            and list(self.boundary_components.items()) == list(other.boundary_components.items())
            and self.boundary_kind == other.boundary_kind
        )

    def __hash__(self):
        return hash((self.basis_labels, self.intersection_matrix, self.canonical_class))


def intersect(model: SurfaceModel, a: CurveClass, b: CurveClass) -> int:
    if len(a) != model.rank or len(b) != model.rank:
        raise DimensionError(
            f"classes of rank {len(a)} and {len(b)} on a surface of rank {model.rank}"
        )
    M = model.intersection_matrix
    return sum(
        a.coefficients[i] * M[i][j] * b.coefficients[j]
        for i in range(model.rank)
        for j in range(model.rank)
        if a.coefficients[i] and b.coefficients[j]
    )


def tangency_weight(model: SurfaceModel, beta: CurveClass) -> int:
    """Contact order w = beta . D of a maximally tangent curve."""
    return intersect(model, beta, model.boundary)


def arithmetic_genus(model: SurfaceModel, beta: CurveClass) -> int:
    twice = intersect(model, beta, beta) + intersect(model, beta, model.canonical_class)
    if twice % 2:
        raise InvalidClassError(
            f"beta^2 + beta.K = {twice} is odd; not a curve class on this lattice"
        )
    return twice // 2 + 1


def contact_point_count(model: SurfaceModel, w: int) -> int:
    """Number of admissible contact points |D(beta)| for a class with beta.D = w.

    A smooth elliptic boundary gives a torsor under (Z/w)^2, a cycle of
    rational curves a torsor under the w-th roots of unity.
    """
    if w <= 0:
        raise DomainError(f"contact order must be positive, got {w}")
    if model.boundary_kind is BoundaryKind.SMOOTH_ELLIPTIC:
        return w * w
    if model.boundary_kind is BoundaryKind.NODAL_CYCLE:
        return w
    raise DomainError(f"no contact point count for boundary kind {model.boundary_kind}")


def _fresh_label(label: str, taken: set[str]) -> str:
    while label in taken:
        label += "'"
    return label


def blowup_transform(
    base: SurfaceModel,
    beta: CurveClass,
    tangency_profile: Sequence[tuple[str, Sequence[int]]],
) -> tuple[SurfaceModel, CurveClass]:
    """Blow up boundary points and return the new surface with the class
    ``nu^* beta - sum p_ij E_ij``.

    Each profile entry names a boundary component and an ordered partition
    of ``beta . D_i``; part ``p_ij`` is the contact order at the j-th point
    blown up on that component. Points always sit at smooth points of the
    named component, so its strict transform is ``nu^* D_i - sum_j E_ij``.
    """
    names = list(base.boundary_components)
    seen = set()
    for comp, parts in tangency_profile:
        if comp not in base.boundary_components:
            raise ProfileError(f"{comp!r} is not a boundary component of the base")
        if comp in seen:
            raise ProfileError(f"component {comp!r} listed twice")
        seen.add(comp)
        if not parts or any(p < 1 for p in parts):
            raise ProfileError(f"partition for {comp!r} must have positive parts: {parts}")
        expected = intersect(base, beta, base.boundary_components[comp])
        if sum(parts) != expected:
            raise ProfileError(
                f"partition {list(parts)} of {comp!r} sums to {sum(parts)}, "
                f"but beta.{comp} = {expected}"
            )
    if len(beta) != base.rank:
        raise DimensionError("beta does not live on the base surface")
    if not tangency_profile:
        return base, beta

    labels = list(base.basis_labels)
    taken = set(labels)
    new_labels: list[tuple[str, str, int]] = []  # (component, label, part)
    for comp, parts in tangency_profile:
        i = names.index(comp) + 1
        for j, p in enumerate(parts, start=1):
            label = _fresh_label(f"E{i}{j}", taken)
            taken.add(label)
            new_labels.append((comp, label, p))

    n, m = base.rank, len(new_labels)
    matrix = [list(row) + [0] * m for row in base.intersection_matrix]
    for k in range(m):
        matrix.append([0] * (n + m))
        matrix[n + k][n + k] = -1

    def pullback(cls: CurveClass) -> list[int]:
        return list(cls.coefficients) + [0] * m

    canonical = pullback(base.canonical_class)
    for k in range(m):
        canonical[n + k] = 1
    boundary = {}
    for comp, cls in base.boundary_components.items():
        vec = pullback(cls)
        for k, (owner, _, _) in enumerate(new_labels):
            if owner == comp:
                vec[n + k] = -1
        boundary[comp] = CurveClass(tuple(vec))
    beta_vec = pullback(beta)
    for k, (_, _, p) in enumerate(new_labels):
        beta_vec[n + k] = -p

    model = SurfaceModel(
        basis_labels=tuple(labels + [label for _, label, _ in new_labels]),
        intersection_matrix=tuple(tuple(r) for r in matrix),
        canonical_class=CurveClass(tuple(canonical)),
        boundary_components=boundary,
        boundary_kind=base.boundary_kind,
        name=f"{base.name}+blowup" if base.name else "",
    )
    return model, CurveClass(tuple(beta_vec))


# -- key-value config files -------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split())


def _parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep label case
    return parser


def loads_surface(text: str) -> SurfaceModel:
    parser = _parser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigurationError(f"unreadable surface config: {exc}") from None
    try:
        head = parser["surface"]
        labels = tuple(head["basis"].split())
        matrix_section = parser["intersection"]
        matrix = tuple(_ints(matrix_section[label]) for label in labels)
        canonical = CurveClass(_ints(head["canonical"]))
        boundary = {key: CurveClass(_ints(val)) for key, val in parser["boundary"].items()}
        kind = BoundaryKind(head["boundary_kind"])
    except KeyError as exc:
        raise ConfigurationError(f"surface config is missing {exc}") from None
    return SurfaceModel(labels, matrix, canonical, boundary, kind, name=head.get("name", ""))


def dumps_surface(model: SurfaceModel) -> str:
    parser = _parser()
    parser["surface"] = {
        "name": model.name,
        "basis": " ".join(model.basis_labels),
        "boundary_kind": model.boundary_kind.value,
        "canonical": " ".join(map(str, model.canonical_class.coefficients)),
    }
    parser["intersection"] = {
        label: " ".join(map(str, row))
        for label, row in zip(model.basis_labels, model.intersection_matrix)
    }
    parser["boundary"] = {
        name: " ".join(map(str, cls.coefficients))
        for name, cls in model.boundary_components.items()
    }
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def load_surface(path: str | Path) -> SurfaceModel:
    return loads_surface(Path(path).read_text())


def save_surface(model: SurfaceModel, path: str | Path) -> None:
    Path(path).write_text(dumps_surface(model))


def parse_class(model: SurfaceModel, text: str) -> CurveClass:
    """Read ``"3H - E11 - E12"`` or a plain vector ``"3 -1 -1"``."""
    stripped = text.strip()
    if re.fullmatch(r"[+-]?\d+(\s+[+-]?\d+)*", stripped):
        return CurveClass(tuple(int(tok) for tok in stripped.split()))
    coeffs: dict[str, int] = {}
    pos = 0
    compact = re.sub(r"\s+", "", stripped)
    for match in _TERM.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse class {text!r}")
        pos = match.end()
        sign, digits, label = match.groups()
        value = int(digits) if digits else 1
        coeffs[label] = coeffs.get(label, 0) + (-value if sign == "-" else value)
    if pos != len(compact) or not coeffs:
        raise ValueError(f"cannot parse class {text!r}")
    return model.curve_class(**coeffs)


_TERM = re.compile(r"([+-]?)(\d*)\*?([A-Za-z_][A-Za-z0-9_']*)")


def diagonal_model(
    labels: Iterable[str],
    diagonal: Iterable[int],
    canonical: Iterable[int],
    boundary: Mapping[str, Iterable[int]],
    kind: BoundaryKind,
    name: str = "",
) -> SurfaceModel:
    labels = tuple(labels)
    diag = tuple(diagonal)
    matrix = tuple(tuple(diag[i] if i == j else 0 for j in range(len(labels))) for i in range(len(labels)))
    return SurfaceModel(
        labels,
        matrix,
        CurveClass(tuple(canonical)),
        {k: CurveClass(tuple(v)) for k, v in boundary.items()},
        kind,
        name=name,
    )
