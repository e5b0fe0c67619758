"""JSON and SVG output for tropical curves. All numbers stay exact in JSON."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .._rational import format_rational, parse_rational
from ..errors import MalformedCurveError
from .curve import Point, TropicalCurve, rational_direction, vertex_multiplicity

VIEWPORT = 480
MARGIN = 40


def curve_to_dict(curve: TropicalCurve, multiplicity: Optional[int] = None) -> dict:
    c = curve.canonical()
    doc = {
        "vertices": [[format_rational(x), format_rational(y)] for x, y in c.vertices],
        "bounded_edges": [],
        "unbounded_edges": [
            {"vertex": v, "direction": list(d), "weight": w} for v, d, w in c.unbounded_edges
        ],
        "vertex_multiplicities": [vertex_multiplicity(c, v) for v in range(len(c.vertices))],
    }
    for a, b, w in c.bounded_edges:
        pa, pb = c.vertices[a], c.vertices[b]
        direction = rational_direction((pb[0] - pa[0], pb[1] - pa[1]))
        doc["bounded_edges"].append({"from": a, "to": b, "weight": w, "direction": list(direction)})
    if multiplicity is not None:
        doc["multiplicity"] = multiplicity
    return doc


def curve_from_dict(doc: dict) -> TropicalCurve:
    try:
        vertices = tuple((parse_rational(x), parse_rational(y)) for x, y in doc["vertices"])
        bounded = tuple((e["from"], e["to"], e["weight"]) for e in doc["bounded_edges"])
        rays = tuple((e["vertex"], tuple(e["direction"]), e["weight"]) for e in doc["unbounded_edges"])
    except (KeyError, TypeError) as exc:
        raise MalformedCurveError(f"bad curve document: {exc}") from exc
    return TropicalCurve(vertices, bounded, rays)


def curves_to_json(results: Iterable[tuple[TropicalCurve, int]]) -> dict:
    results = list(results)
    return {
        "count": sum(m for _, m in results),
        "curves": [curve_to_dict(c, m) for c, m in results],
    }


def _decimal(value: Fraction, places: int = 2) -> str:
    """Deterministic fixed-point rendering of an exact rational."""
    scale = 10**places
    n = round(value * scale)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // scale}.{n % scale:0{places}d}"


def curve_to_svg(
    curve: TropicalCurve,
    points: Sequence[Point] = (),
    title: str = "",
) -> str:
    """SVG 1.1 drawing: autoscaled to the vertices, stroke width grows with
    weight, and each vertex is labelled by its multiplicity."""
    c = curve.canonical()
    pts = list(c.vertices) + [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    ray_len = span / 3
    # include ray tips in the bounding box
    tips = []
    for v, d, _ in c.unbounded_edges:
        x, y = c.vertices[v]
        tips.append((x + ray_len * d[0], y + ray_len * d[1]))
    all_x = xs + [t[0] for t in tips]
    all_y = ys + [t[1] for t in tips]
    x0, y1 = min(all_x), max(all_y)
    extent = max(max(all_x) - x0, y1 - min(all_y), Fraction(1))
    scale = Fraction(VIEWPORT - 2 * MARGIN) / extent

    def sx(x):
        return _decimal(MARGIN + (x - x0) * scale)

    def sy(y):
        return _decimal(MARGIN + (y1 - y) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{VIEWPORT}" '
        f'height="{VIEWPORT}" viewBox="0 0 {VIEWPORT} {VIEWPORT}">',
    ]
    if title:
        lines.append(f"<title>{_escape(title)}</title>")
    lines.append('<g stroke="black" stroke-linecap="round" fill="none">')
    for a, b, w in c.bounded_edges:
        (xa, ya), (xb, yb) = c.vertices[a], c.vertices[b]
        lines.append(
            f'<line x1="{sx(xa)}" y1="{sy(ya)}" x2="{sx(xb)}" y2="{sy(yb)}" stroke-width="{1.5 * w}"/>'
        )
    for (v, _, w), (tx, ty) in zip(c.unbounded_edges, tips):
        x, y = c.vertices[v]
        lines.append(
            f'<line x1="{sx(x)}" y1="{sy(y)}" x2="{sx(tx)}" y2="{sy(ty)}" stroke-width="{1.5 * w}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="black" font-family="sans-serif" font-size="12">')
    for i, (x, y) in enumerate(c.vertices):
        lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="2.5"/>')
        lines.append(f'<text x="{sx(x)}" y="{sy(y)}" dx="5" dy="-5">{vertex_multiplicity(c, i)}</text>')
    lines.append("</g>")
    if points:
        lines.append('<g fill="red">')
        for x, y in points:
            lines.append(f'<circle cx="{sx(Fraction(x))}" cy="{sy(Fraction(y))}" r="3.5"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
