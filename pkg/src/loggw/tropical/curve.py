"""Embedded genus-0 plane tropical curves and their Mikhalkin multiplicities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from ..errors import HigherValencyError, MalformedCurveError

Point = tuple[Fraction, Fraction]
Vector = tuple[int, int]


def as_point(xy) -> Point:
    x, y = xy
    if isinstance(x, float) or isinstance(y, float):
        raise TypeError("tropical coordinates must be exact rationals, not floats")
    return (Fraction(x), Fraction(y))


def det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def is_primitive(v: Vector) -> bool:
    return gcd(v[0], v[1]) == 1


def primitive_part(v) -> tuple[Vector, int]:
    """Split an integer vector into (primitive direction, lattice length)."""
    x, y = int(v[0]), int(v[1])
    g = gcd(x, y)
    if g == 0:
        raise MalformedCurveError("zero vector has no primitive direction")
    return (x // g, y // g), g


def rational_direction(v) -> Vector:
    """Primitive integer vector pointing along a nonzero rational vector."""
    x, y = Fraction(v[0]), Fraction(v[1])
    scale = x.denominator * y.denominator
    return primitive_part((int(x * scale), int(y * scale)))[0]


@dataclass(frozen=True)
class EndCondition:
    """One unbounded end: primitive direction, weight, and an optional line.

    With ``anchor`` set the end must lie on the affine line through the
    anchor in the end's direction; without it the end is free.
    """

    direction: Vector
    weight: int = 1
    anchor: Optional[Point] = None
    label: str = ""

    def __post_init__(self):
        direction = (int(self.direction[0]), int(self.direction[1]))
        if not is_primitive(direction):
            raise ValueError(f"end direction {direction} is not primitive")
        if self.weight < 1:
            raise ValueError(f"end weight must be positive, got {self.weight}")
        object.__setattr__(self, "direction", direction)
        if self.anchor is not None:
            object.__setattr__(self, "anchor", as_point(self.anchor))

    @property
    def is_fixed(self) -> bool:
        return self.anchor is not None

    @property
    def momentum(self) -> Vector:
        return (self.weight * self.direction[0], self.weight * self.direction[1])

    def key(self):
        """Identity of the condition, ignoring the cosmetic label."""
        return (self.direction, self.weight, self.anchor)

    def translated(self, shift) -> "EndCondition":
        if self.anchor is None:
            return self
        dx, dy = as_point(shift)
        return EndCondition(
            self.direction, self.weight, (self.anchor[0] + dx, self.anchor[1] + dy), self.label
        )


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple[Point, ...]
    bounded_edges: tuple[tuple[int, int, int], ...]
    unbounded_edges: tuple[tuple[int, Vector, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in self.vertices))
        object.__setattr__(
            self, "bounded_edges", tuple((int(a), int(b), int(w)) for a, b, w in self.bounded_edges)
        )
        object.__setattr__(
            self,
            "unbounded_edges",
            tuple((int(v), (int(d[0]), int(d[1])), int(w)) for v, d, w in self.unbounded_edges),
        )

    def incident(self, vertex: int) -> list[tuple[Vector, int]]:
        """Outgoing (primitive direction, weight) of every edge at ``vertex``."""
        out = []
        here = self.vertices[vertex]
        for a, b, w in self.bounded_edges:
            if vertex in (a, b):
                other = self.vertices[b if a == vertex else a]
                delta = (other[0] - here[0], other[1] - here[1])
                if delta == (0, 0):
                    raise MalformedCurveError(f"bounded edge {(a, b)} has zero length")
                out.append((rational_direction(delta), w))
        for v, d, w in self.unbounded_edges:
            if v == vertex:
                if not is_primitive(d):
                    raise MalformedCurveError(f"stored ray direction {d} is not primitive")
                out.append((d, w))
        return out

    def valency(self, vertex: int) -> int:
        return sum(vertex in (a, b) for a, b, _ in self.bounded_edges) + sum(
            v == vertex for v, _, _ in self.unbounded_edges
        )

    def canonical(self) -> "TropicalCurve":
        """Same embedded curve with vertices sorted and edges in normal order."""
        order = sorted(range(len(self.vertices)), key=lambda i: self.vertices[i])
        new_index = {old: new for new, old in enumerate(order)}
        vertices = tuple(self.vertices[i] for i in order)
        bounded = tuple(
            sorted(
                (min(new_index[a], new_index[b]), max(new_index[a], new_index[b]), w)
                for a, b, w in self.bounded_edges
            )
        )
        rays = tuple(sorted((new_index[v], d, w) for v, d, w in self.unbounded_edges))
        return TropicalCurve(vertices, bounded, rays)

    def sort_key(self):
        c = self.canonical()
        return (c.vertices, c.bounded_edges, c.unbounded_edges)

    def translated(self, shift) -> "TropicalCurve":
        dx, dy = as_point(shift)
        return TropicalCurve(
            tuple((x + dx, y + dy) for x, y in self.vertices),
            self.bounded_edges,
            self.unbounded_edges,
        )

    def is_tree(self) -> bool:
        n = len(self.vertices)
        if len(self.bounded_edges) != n - 1:
            return False
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b, _ in self.bounded_edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def check_balancing(curve: TropicalCurve) -> bool:
    for v in range(len(curve.vertices)):
        sx = sy = 0
        for (dx, dy), w in curve.incident(v):
            sx += w * dx
            sy += w * dy
        if sx or sy:
            return False
    return True


def vertex_multiplicity(curve: TropicalCurve, vertex: int) -> int:
    """w1 * w2 * |det(u1, u2)| for two of the three edges at a trivalent vertex."""
    edges = curve.incident(vertex)
    if len(edges) != 3:
        raise HigherValencyError(
            f"vertex {vertex} has valency {len(edges)}; only trivalent vertices carry a multiplicity"
        )
    (u1, w1), (u2, w2), _ = edges
    return w1 * w2 * abs(det(u1, u2))


def curve_multiplicity(curve: TropicalCurve) -> int:
    result = 1
    for v in range(len(curve.vertices)):
        result *= vertex_multiplicity(curve, v)
    return result


def passes_through(curve: TropicalCurve, point) -> bool:
    """Whether ``point`` lies on the support of the curve."""
    p = as_point(point)
    for a, b, _ in curve.bounded_edges:
        if _on_segment(curve.vertices[a], curve.vertices[b], p):
            return True
    for v, d, _ in curve.unbounded_edges:
        q = curve.vertices[v]
        rel = (p[0] - q[0], p[1] - q[1])
        if det(d, rel) == 0 and rel[0] * d[0] + rel[1] * d[1] >= 0:
            return True
    return False


def lies_on_line(curve: TropicalCurve, end: EndCondition) -> bool:
    """Whether some unbounded edge realizes ``end`` (direction, weight, line)."""
    for v, d, w in curve.unbounded_edges:
        if d != end.direction or w != end.weight:
            continue
        if end.anchor is None:
            return True
        q = curve.vertices[v]
        if det(d, (q[0] - end.anchor[0], q[1] - end.anchor[1])) == 0:
            return True
    return False


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    ab = (b[0] - a[0], b[1] - a[1])
    ap = (p[0] - a[0], p[1] - a[1])
    if det(ab, ap) != 0:
        return False
    t = ap[0] * ab[0] + ap[1] * ab[1]
    return 0 <= t <= ab[0] * ab[0] + ab[1] * ab[1]


def end_directions(curve: TropicalCurve) -> list[tuple[Vector, int]]:
    return sorted((d, w) for _, d, w in curve.unbounded_edges)


def momentum_sum(ends: Sequence[EndCondition]) -> Vector:
    return (sum(e.momentum[0] for e in ends), sum(e.momentum[1] for e in ends))
