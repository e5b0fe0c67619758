"""Brute-force tropical enumeration used to cross-check the flow solver.

Every labelled trivalent tree is tried; for each one the vertex positions,
bounded-edge lengths and the parameters locating the marked points are the
unknowns of a square linear system, solved exactly and kept when all
lengths and parameters are in range.
"""
import itertools
from fractions import Fraction

from loggw.tropical import TropicalCurve, curve_multiplicity
from loggw.tropical.curve import primitive_part


def trivalent_trees(n):
    """Labelled trivalent trees with leaves 0..n-1 as lists of node pairs."""
    def grow(edges, k, next_node):
        if k == n:
            yield edges
            return
        for i, (a, b) in enumerate(edges):
            c = next_node
            new = edges[:i] + edges[i + 1:] + [(a, c), (c, b), (c, k)]
            yield from grow(new, k + 1, next_node + 1)

    yield from grow([(0, n), (1, n), (2, n)], 3, n + 1)


def solve(matrix, rhs):
    """Unique solution of a square rational system, or None when singular."""
    n = len(matrix)
    rows = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def brute_force(ends, points):
    n = len(ends)
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    found = {}
    for edges in trivalent_trees(n):
        adj = {}
        for a, b in edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)

        def side_momentum(frm, to):
            # total end momentum beyond ``to`` when entering from ``frm``
            stack, seen, mx, my = [to], {frm, to}, 0, 0
            while stack:
                u = stack.pop()
                if u < n:
                    mx += ends[u].momentum[0]
                    my += ends[u].momentum[1]
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return mx, my

        internal = sorted(v for v in adj if v >= n)
        vindex = {v: i for i, v in enumerate(internal)}
        bounded = [(a, b) for a, b in edges if a >= n and b >= n]
        rays = [(a if b < n else b, b if b < n else a) for a, b in edges if a < n or b < n]
        moms = [side_momentum(a, b) for a, b in bounded]
        if any(m == (0, 0) for m in moms):
            continue
        slots = [("b", i) for i in range(len(bounded))] + [("r", i) for i in range(len(rays))]
        V, B, P = len(internal), len(bounded), len(points)
        size = 2 * V + B + P
        for assignment in itertools.product(range(len(slots)), repeat=P):
            A, rhs = [], []

            def row():
                return [0] * size

            for i, ((a, b), (mx, my)) in enumerate(zip(bounded, moms)):
                for axis, m in ((0, mx), (1, my)):
                    r = row()
                    r[2 * vindex[b] + axis] = 1
                    r[2 * vindex[a] + axis] = -1
                    r[2 * V + i] = -m
                    A.append(r)
                    rhs.append(0)
            for v, leaf in rays:
                e = ends[leaf]
                if e.is_fixed:
                    dx, dy = e.direction
                    r = row()
                    r[2 * vindex[v]] = -dy
                    r[2 * vindex[v] + 1] = dx
                    A.append(r)
                    rhs.append(dx * e.anchor[1] - dy * e.anchor[0])
            for k, slot in enumerate(assignment):
                kind, i = slots[slot]
                if kind == "b":
                    v, (dx, dy) = bounded[i][0], moms[i]
                else:
                    v, leaf = rays[i]
                    dx, dy = ends[leaf].direction
                for axis, d in ((0, dx), (1, dy)):
                    r = row()
                    r[2 * vindex[v] + axis] = 1
                    r[2 * V + B + k] = d
                    A.append(r)
                    rhs.append(points[k][axis])
            if len(A) != size:
                raise ValueError("conditions do not cut out a rigid problem")
            sol = solve(A, rhs)
            if sol is None:
                continue
            lengths = sol[2 * V:2 * V + B]
            params = sol[2 * V + B:]
            if any(l <= 0 for l in lengths):
                continue
            ok = True
            for k, slot in enumerate(assignment):
                kind, i = slots[slot]
                s = params[k]
                if s <= 0 or (kind == "b" and s >= lengths[i]):
                    ok = False
            if not ok:
                continue
            pos = [(sol[2 * j], sol[2 * j + 1]) for j in range(V)]
            if len(set(pos)) != V:
                continue
            curve = TropicalCurve(
                tuple(pos),
                tuple((vindex[a], vindex[b], primitive_part(m)[1]) for (a, b), m in zip(bounded, moms)),
                tuple((vindex[v], ends[leaf].direction, ends[leaf].weight) for v, leaf in rays),
            ).canonical()
            found.setdefault(curve.sort_key(), curve)
    return [(found[k], curve_multiplicity(found[k])) for k in sorted(found)]
