"""Exact enumeration of rigid genus-0 plane tropical curves.

Each marked point lies in the interior of an edge, and for a rigid curve
every connected component of the curve minus the marked points contains
exactly one unbounded end. Orienting each component toward its end turns
the curve into a flow: fragments leave every marked point in both
directions, merge pairwise at trivalent vertices and exit through the
ends. An end constrained to a fixed line behaves like a fragment that
starts at infinity along that line.

Cutting the curve at one marked point (or at a fixed end) and following
the flow gives a recursion over (multiset of ends, set of points):

* an *upward* piece feeds a known ray into its parent vertex and carries
  as many constraints as ends;
* a *downward* piece receives a known ray from its parent and carries one
  constraint fewer than it has ends.

Every vertex is then the intersection of two known rays, so the search
visits each combinatorial type together with its incidence pattern while
all positions stay exact rationals. Combinatorial types are never listed
up front, which keeps degree-3 point counts inside a few seconds.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..errors import ConfigurationError, DegenerateConfiguration
from .curve import (
    EndCondition,
    Point,
    TropicalCurve,
    as_point,
    curve_multiplicity,
    det,
    momentum_sum,
)

MAX_ENDS = 14

Multiset = tuple[int, ...]


def _proj(p: Point) -> tuple[int, int, int]:
    """Rational point as a reduced integer triple (X, Y, Z) with Z > 0."""
    x, y = p
    return _reduce(x.numerator * y.denominator, y.numerator * x.denominator, x.denominator * y.denominator)


def _reduce(X: int, Y: int, Z: int) -> tuple[int, int, int]:
    if Z < 0:
        X, Y, Z = -X, -Y, -Z
    g = gcd(X, Y, Z)
    return (X // g, Y // g, Z // g)


def _affine(q) -> Point:
    return (Fraction(q[0], q[2]), Fraction(q[1], q[2]))


def _meet(o1, ray1: bool, d1, o2, ray2: bool, d2):
    """Intersect two rays (or full lines when ``ray`` is False).

    Points are reduced integer triples. Returns ``(point, touching)`` where
    ``touching`` flags an intersection at a ray's origin, or None when the
    rays miss each other.
    """
    X1, Y1, Z1 = o1
    X2, Y2, Z2 = o2
    # o2 - o1, scaled by Z1 * Z2 > 0
    rx = X2 * Z1 - X1 * Z2
    ry = Y2 * Z1 - Y1 * Z2
    D = d1[0] * d2[1] - d1[1] * d2[0]
    if D == 0:
        if d1[0] * ry - d1[1] * rx != 0:
            return None
        if not ray1 or not ray2:
            raise DegenerateConfiguration("a fragment runs along a fixed line")
        dot = d1[0] * d2[0] + d1[1] * d2[1]
        if dot > 0 or rx * d1[0] + ry * d1[1] >= 0:
            raise DegenerateConfiguration("two fragments overlap along a line")
        return None
    # t1 = n1 / (D Z1 Z2), t2 = n2 / (D Z1 Z2)
    n1 = rx * d2[1] - ry * d2[0]
    n2 = rx * d1[1] - ry * d1[0]
    if D < 0:
        n1, n2 = -n1, -n2
    touching = False
    if ray1:
        if n1 < 0:
            return None
        touching = n1 == 0
    if ray2:
        if n2 < 0:
            return None
        touching = touching or n2 == 0
    if D < 0:
        n1 = -n1
    point = _reduce(X1 * Z2 * D + n1 * d1[0], Y1 * Z2 * D + n1 * d1[1], D * Z1 * Z2)
    return point, touching


class _FlowSolver:
    def __init__(self, ends: Sequence[EndCondition], points: Sequence[Point]):
        keys = sorted({e.key() for e in ends}, key=_end_sort_key)
        by_key = {e.key(): e for e in ends}
        self.types = [by_key[k] for k in keys]
        self.counts = tuple(sum(e.key() == k for e in ends) for k in keys)
        self.points = [_proj(p) for p in points]
        self._mom: dict[Multiset, tuple[int, int]] = {}
        self._splits: dict[Multiset, list] = {}
        self._up: dict = {}
        self._down_cut: dict = {}

    # -- multiset helpers ---------------------------------------------------
    def mom(self, ms: Multiset):
        m = self._mom.get(ms)
        if m is None:
            m = (
                sum(c * t.momentum[0] for c, t in zip(ms, self.types)),
                sum(c * t.momentum[1] for c, t in zip(ms, self.types)),
            )
            self._mom[ms] = m
        return m

    def n_fixed(self, ms: Multiset) -> int:
        return sum(c for c, t in zip(ms, self.types) if t.is_fixed)

    def splits(self, ms: Multiset):
        """Ordered pairs (a, b), a + b = ms, both nonempty with nonzero momentum."""
        out = self._splits.get(ms)
        if out is None:
            out = []
            for a in itertools.product(*(range(c + 1) for c in ms)):
                b = tuple(c - x for c, x in zip(ms, a))
                if not any(a) or not any(b):
                    continue
                if self.mom(a) == (0, 0) or self.mom(b) == (0, 0):
                    continue
                out.append((a, b, sum(a) - self.n_fixed(a), sum(b) - self.n_fixed(b)))
            self._splits[ms] = out
        return out

    # -- recursion ----------------------------------------------------------
    def up(self, ms: Multiset, P: tuple[int, ...]):
        """Pieces feeding a ray towards their parent: list of
        (origin, is_ray, node, degenerate)."""
        key = (ms, P)
        cached = self._up.get(key)
        if cached is not None:
            return cached
        out = []
        if len(P) == sum(ms) - self.n_fixed(ms):
            if sum(ms) == 1:
                t = ms.index(1)
                if self.types[t].is_fixed:
                    out.append((_proj(self.types[t].anchor), False, ("fixed", t), False))
            for i, p in enumerate(P):
                for node, deg in self.down_from_point(ms, P[:i] + P[i + 1 :], p):
                    out.append((self.points[p], True, ("cut", p, node), deg))
            for a, b, na, nb in self.splits(ms):
                if na < 0 or nb < 0 or na + nb != len(P):
                    continue
                ma, mb = self.mom(a), self.mom(b)
                da, db = (-ma[0], -ma[1]), (-mb[0], -mb[1])
                for PA in itertools.combinations(P, na):
                    PB = tuple(x for x in P if x not in PA)
                    if (a, PA) >= (b, PB):
                        continue
                    ua = self.up(a, PA)
                    if not ua:
                        continue
                    ub = self.up(b, PB)
                    for oa, ra, node_a, dga in ua:
                        for ob, rb, node_b, dgb in ub:
                            hit = _meet(oa, ra, da, ob, rb, db)
                            if hit is None:
                                continue
                            pos, touch = hit
                            node = ("vert", pos, a, node_a, b, node_b)
                            out.append((pos, True, node, dga or dgb or touch))
        self._up[key] = out
        return out

    def down_from_point(self, ms: Multiset, P: tuple[int, ...], p: int):
        key = (ms, P, p)
        cached = self._down_cut.get(key)
        if cached is None:
            cached = self.down(ms, P, self.points[p], True)
            self._down_cut[key] = cached
        return cached

    def down(self, ms: Multiset, P: tuple[int, ...], origin, is_ray: bool):
        """Pieces fed by the ray from ``origin`` along the momentum of ``ms``:
        list of (node, degenerate)."""
        if len(P) != sum(ms) - self.n_fixed(ms) - 1:
            return []
        if sum(ms) == 1:
            return [(("end", ms.index(1)), False)]
        M = self.mom(ms)
        out = []
        for a, b, na, nb in self.splits(ms):
            nb -= 1
            if na < 0 or nb < 0 or na + nb != len(P):
                continue
            ma = self.mom(a)
            da = (-ma[0], -ma[1])
            for PA in itertools.combinations(P, na):
                ua = self.up(a, PA)
                if not ua:
                    continue
                PB = tuple(x for x in P if x not in PA)
                for oa, ra, node_a, dga in ua:
                    hit = _meet(origin, is_ray, M, oa, ra, da)
                    if hit is None:
                        continue
                    pos, touch = hit
                    for node_b, dgb in self.down(b, PB, pos, True):
                        out.append((("dvert", pos, a, node_a, b, node_b), dga or dgb or touch))
        return out

    # -- top level ----------------------------------------------------------
    def tasks(self) -> list:
        """Independent top-level branches; their union is the full answer."""
        if self.points:
            rest = tuple(range(1, len(self.points)))
            out = []
            for a, b, na, nb in self.splits(self.counts):
                if a > b:
                    continue
                na, nb = na - 1, nb - 1
                if na < 0 or nb < 0 or na + nb != len(rest):
                    continue
                for PA in itertools.combinations(rest, na):
                    PB = tuple(x for x in rest if x not in PA)
                    if a == b and PA > PB:
                        continue
                    out.append(("point", a, PA, b, PB))
            return out
        fixed = [i for i, t in enumerate(self.types) if t.is_fixed]
        if not fixed:
            return []
        return [("fixed", fixed[0])]

    def run(self, task) -> list[TropicalCurve]:
        curves = []
        if task[0] == "point":
            _, a, PA, b, PB = task
            side_a = self.down_from_point(a, PA, 0)
            if not side_a:
                return []
            side_b = self.down_from_point(b, PB, 0)
            for node_a, dga in side_a:
                for node_b, dgb in side_b:
                    if dga or dgb:
                        raise DegenerateConfiguration(
                            "a solution has a vertex on a marked point or two coinciding vertices"
                        )
                    curves.append(self._assemble_point(a, node_a, b, node_b))
        else:
            i = task[1]
            rest = list(self.counts)
            rest[i] -= 1
            rest = tuple(rest)
            t = self.types[i]
            for node, deg in self.down(rest, (), _proj(t.anchor), False):
                if deg:
                    raise DegenerateConfiguration("a solution has coinciding vertices")
                b = _Builder(self)
                v = b.root_vertex(node, rest)
                b.rays.append((v, t.direction, t.weight))
                curves.append(b.curve())
        return curves

    def _assemble_point(self, a, node_a, b, node_b) -> TropicalCurve:
        builder = _Builder(self)
        if node_a[0] == "end" and node_b[0] == "end":
            raise ConfigurationError("a curve with two ends has no vertex")
        if node_a[0] == "end":
            a, node_a, b, node_b = b, node_b, a, node_a
        va = builder.root_vertex(node_a, a)
        if node_b[0] == "end":
            t = self.types[node_b[1]]
            builder.rays.append((va, t.direction, t.weight))
        else:
            vb = builder.root_vertex(node_b, b)
            builder.edge(va, vb, b)
        return builder.curve()


class _Builder:
    def __init__(self, solver: _FlowSolver):
        self.solver = solver
        self.vertices: list[Point] = []
        self.bounded: list[tuple[int, int, int]] = []
        self.rays: list = []

    def vertex(self, pos) -> int:
        self.vertices.append(_affine(pos))
        return len(self.vertices) - 1

    def edge(self, u: int, v: int, ms: Multiset):
        m = self.solver.mom(ms)
        self.bounded.append((u, v, gcd(m[0], m[1])))

    def root_vertex(self, node, ms) -> int:
        _, pos, a, node_a, b, node_b = node
        v = self.vertex(pos)
        self.attach_up(node_a, a, v)
        self.attach_down(node_b, b, v)
        return v

    def attach_up(self, node, ms, parent: int):
        kind = node[0]
        if kind == "fixed":
            t = self.solver.types[node[1]]
            self.rays.append((parent, t.direction, t.weight))
        elif kind == "cut":
            # the marked point sits inside the edge; nothing to add there
            self.attach_down(node[2], ms, parent)
        else:
            _, pos, a, node_a, b, node_b = node
            v = self.vertex(pos)
            self.edge(parent, v, ms)
            self.attach_up(node_a, a, v)
            self.attach_up(node_b, b, v)

    def attach_down(self, node, ms, parent: int):
        if node[0] == "end":
            t = self.solver.types[node[1]]
            self.rays.append((parent, t.direction, t.weight))
            return
        _, pos, a, node_a, b, node_b = node
        v = self.vertex(pos)
        self.edge(parent, v, ms)
        self.attach_up(node_a, a, v)
        self.attach_down(node_b, b, v)

    def curve(self) -> TropicalCurve:
        if len(set(self.vertices)) != len(self.vertices):
            raise DegenerateConfiguration("two vertices of a solution coincide")
        return TropicalCurve(tuple(self.vertices), tuple(self.bounded), tuple(self.rays)).canonical()


def _end_sort_key(key):
    direction, weight, anchor = key
    return (direction, weight, anchor is not None, anchor or (0, 0))


def _validate(ends: Sequence[EndCondition], points: Sequence[Point]):
    n = len(ends)
    if n < 3:
        raise ConfigurationError("at least three ends are needed for a vertex")
    if n > MAX_ENDS:
        raise ConfigurationError(
            f"{n} ends exceed the supported limit of {MAX_ENDS} (degree 4 in the plane fan)"
        )
    if momentum_sum(ends) != (0, 0):
        raise ConfigurationError(f"end momenta sum to {momentum_sum(ends)}, not zero")
    n_fixed = sum(e.is_fixed for e in ends)
    if n_fixed + len(points) != n - 1:
        raise ConfigurationError(
            f"{n} ends need {n - 1} conditions for a rigid curve; "
            f"got {n_fixed} fixed lines and {len(points)} points"
        )
    locations = [e.anchor for e in ends if e.is_fixed] + list(points)
    if len(set(locations)) != len(locations):
        raise ConfigurationError("fixed-line anchors and points must be pairwise distinct")
    fixed = [e for e in ends if e.is_fixed]
    for e, f in itertools.combinations(fixed, 2):
        if e.direction == f.direction:
            shift = (f.anchor[0] - e.anchor[0], f.anchor[1] - e.anchor[1])
            if det(e.direction, shift) == 0:
                raise DegenerateConfiguration(f"ends {e} and {f} lie on the same line")


def _run_task(args):
    ends, points, task = args
    return _FlowSolver(ends, points).run(task)


def enumerate_curves(
    ends: Sequence[EndCondition],
    point_conditions: Iterable = (),
    n_jobs: int = 1,
) -> list[tuple[TropicalCurve, int]]:
    """All rigid trivalent genus-0 curves with the given ends through the points.

    Returns ``(curve, multiplicity)`` pairs sorted by the curve's sorted
    vertex coordinates. Raises :class:`DegenerateConfiguration` when the
    conditions are not generic.
    """
    ends = list(ends)
    points = [as_point(p) for p in point_conditions]
    _validate(ends, points)
    solver = _FlowSolver(ends, points)
    tasks = solver.tasks()
    if n_jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            chunks = list(pool.map(_run_task, [(ends, points, t) for t in tasks]))
    else:
        chunks = [solver.run(t) for t in tasks]
    unique = {}
    for chunk in chunks:
        for curve in chunk:
            unique.setdefault(curve.sort_key(), curve)
    return [(unique[k], curve_multiplicity(unique[k])) for k in sorted(unique)]


def count(ends: Sequence[EndCondition], point_conditions: Iterable = (), n_jobs: int = 1) -> int:
    return sum(m for _, m in enumerate_curves(ends, point_conditions, n_jobs=n_jobs))


def plane_degree_ends(d: int) -> list[EndCondition]:
    """Free weight-1 ends of a degree-d curve in the fan of P^2."""
    if d < 1:
        raise ConfigurationError(f"degree must be positive, got {d}")
    return (
        [EndCondition((-1, 0))] * d + [EndCondition((0, -1))] * d + [EndCondition((1, 1))] * d
    )


def generic_points(k: int, seed: int = 0, spread: int = 10**6, denominator: int = 9973) -> list[Point]:
    """``k`` seeded pseudo-random rational points; generic with high probability."""
    rng = random.Random(seed)
    return [
        (
            Fraction(rng.randint(-spread, spread), denominator),
            Fraction(rng.randint(-spread, spread), denominator),
        )
        for _ in range(k)
    ]


def perturb(
    ends: Sequence[EndCondition],
    points: Iterable,
    n: int,
    seed: int = 0,
) -> tuple[list[EndCondition], list[Point]]:
    """Shift every anchor and point by a seeded rational offset of size at most 1/n."""
    if n < 1:
        raise ValueError("perturbation scale 1/n needs n >= 1")
    rng = random.Random(seed)

    def offset() -> Fraction:
        return Fraction(rng.randint(-1000, 1000), 1000 * n)

    new_ends = [
        e if not e.is_fixed else EndCondition(
            e.direction, e.weight, (e.anchor[0] + offset(), e.anchor[1] + offset()), e.label
        )
        for e in ends
    ]
    new_points = [(x + offset(), y + offset()) for x, y in (as_point(p) for p in points)]
    return new_ends, new_points


def translate(
    ends: Sequence[EndCondition], points: Iterable, shift
) -> tuple[list[EndCondition], list[Point]]:
    dx, dy = as_point(shift)
    return [e.translated((dx, dy)) for e in ends], [(x + dx, y + dy) for x, y in map(as_point, points)]
