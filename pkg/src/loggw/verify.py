"""Reproduce the published worked numbers from the shipped presets.

Each check recomputes one number from the data files (so a corrupted table
shows up as a named failure) and compares it with the published value.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import bps, contrib, lattice, pencil, presets, tropical
from .errors import LogGWError


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    expected: str
    observed: str
    passed: bool
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "expected": self.expected,
            "observed": self.observed,
            "passed": self.passed,
        }


def _gps_cubic(data_dir):
    cfg = tropical.load_config(presets.preset_file(presets.TROPICAL, "gps-cubic", data_dir))
    return tropical.enumerate(cfg.ends, cfg.points)


def check_tropical_count(data_dir=None):
    mults = sorted(m for _, m in _gps_cubic(data_dir))
    return "[3, 3, 12] total 18", f"{mults} total {sum(mults)}", mults == [3, 3, 12]


def check_contact_points(data_dir=None):
    model = lattice.load_surface(presets.preset_file(presets.SURFACES, "GPS-weak-dP", data_dir))
    beta = lattice.parse_class(model, "3H - E11 - E12 - E13 - E21 - E22 - E23")
    w = lattice.tangency_weight(model, beta)
    n = lattice.contact_point_count(model, w)
    return "w = 3, 3 contact points", f"w = {w}, {n} contact points", (w, n) == (3, 3)


def _pencil(name, data_dir):
    return pencil.load_scenario(presets.preset_file(presets.PENCILS, name, data_dir))


def _pencil_check(name):
    def check(data_dir=None):
        value = pencil.point_contribution(_pencil(name, data_dir))
        return "6", str(value), value == 6

    return check


def check_three_lines(data_dir=None):
    s = _pencil("three-lines", data_dir)
    contr = pencil.solve_fiber_contribution(s, 6)
    return "3", str(contr), contr == 3


def check_classical_total(data_dir=None):
    model = lattice.load_surface(presets.preset_file(presets.SURFACES, "GPS-weak-dP", data_dir))
    beta = lattice.parse_class(model, "3H - E11 - E12 - E13 - E21 - E22 - E23")
    points = lattice.contact_point_count(model, lattice.tangency_weight(model, beta))
    per_point = [pencil.point_contribution(_pencil(n, data_dir)) for n in ("nodal", "cuspidal", "conic-line")]
    s = _pencil("three-lines", data_dir)
    per_point.append(pencil.point_contribution(s.with_contribution("F1", pencil.solve_fiber_contribution(s, 6))))
    tropical_total = sum(m for _, m in _gps_cubic(data_dir))
    totals = sorted({points * p for p in per_point})
    ok = totals == [tropical_total] == [18]
    return "3 x 6 = 18 = tropical count", f"classical {[str(t) for t in totals]}, tropical {tropical_total}", ok


def check_divisibility(data_dir=None):
    table = bps.local_p2_bps_table(data_dir)
    flags = bps.check_divisibility(table)
    ok = table.keys() == [1, 2, 3, 4, 5, 6] and all(f for _, f in flags)
    return "3d | n_d for d = 1..6", str([d for d, f in flags if f]), ok


def check_log_table(data_dir=None):
    m = bps.derived_log_bps_table(bps.local_p2_bps_table(data_dir))
    values = [int(v) if v.denominator == 1 else str(v) for v in m.values.values()]
    return "[1, 1, 3, 16, 113, 948]", str(values), values == [1, 1, 3, 16, 113, 948]


def check_roundtrips(data_dir=None):
    n = bps.local_p2_bps_table(data_dir)
    m = bps.derived_log_bps_table(n)
    ok = bps.gw_to_cy3_bps(bps.cy3_bps_to_gw(n)) == n and bps.gw_to_log_bps(bps.log_bps_to_gw(m)) == m
    return "both recursions invert exactly", "exact" if ok else "mismatch", ok


def check_two_component(data_dir=None):
    got = {}
    for d1, d2 in ((2, 2), (12, 3), (2, 1)):
        c = contrib.two_component(d1, d2)
        got[(d1, d2)] = (c.num_maps, int(c.multiplicity_each), int(c.total))
    expected = {(2, 2): (2, 1, 2), (12, 3): (3, 1, 3), (2, 1): (1, 1, 1)}
    return str(expected), str(got), got == expected


def check_cusp(data_dir=None):
    table = contrib.SingularityFactorTable.shipped(data_dir)
    v = contrib.a1_multiplicity(["ordinary-cusp"], table)
    return "2", str(v), v == 2


def check_multiple_cover(data_dir=None):
    v = contrib.multiple_cover(5, contrib.MultipleCoverTable.shipped(data_dir))
    return "5", str(v), v == 5


def check_degree5_ledger(data_dir=None):
    total, terms, coeffs = contrib.load_ledger(presets.data_file("ledger-degree5.json", data_dir))
    result = contrib.decomposition_ledger(total, terms, coeffs)
    text = str(result.constraint) if result.constraint else result.status
    return "k5 = 84 - 2*Contr(3,1^2)", text, text == "k5 = 84 - 2*Contr(3,1^2)"


CHECKS: list[tuple[str, str, Callable]] = [
    ("tropical-count", "tropical cubics in the weak del Pezzo: multiplicities 12, 3, 3", check_tropical_count),
    ("contact-points", "maximal contact points of the cubic class on the nodal boundary", check_contact_points),
    ("pencil-nodal", "pencil with a nodal member at the contact point", _pencil_check("nodal")),
    ("pencil-cuspidal", "pencil with a cuspidal member at the contact point", _pencil_check("cuspidal")),
    ("pencil-conic-line", "pencil with a conic plus line member", _pencil_check("conic-line")),
    ("pencil-three-lines", "three-line member contributes Contr(1,1,1)", check_three_lines),
    ("classical-vs-tropical", "contact points times per-point count equals the tropical count", check_classical_total),
    ("bps-divisibility", "local P^2 BPS numbers are divisible by 3d", check_divisibility),
    ("bps-log-table", "log BPS numbers of P^2 relative to a smooth cubic", check_log_table),
    ("bps-roundtrip", "local and log multiple-cover recursions invert exactly", check_roundtrips),
    ("two-component", "gluing two maximally tangent curves at one point", check_two_component),
    ("cusp-multiplicity", "a cuspidal rational curve counts twice", check_cusp),
    ("multiple-cover", "5-fold cover term of the degree-5 ledger", check_multiple_cover),
    ("degree5-ledger", "degree-5 decomposition 113 = 5 + 24 + 2 Contr + k5", check_degree5_ledger),
]


def run_checks(data_dir=None, only: Optional[list[str]] = None) -> list[CheckResult]:
    results = []
    for name, claim, fn in CHECKS:
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            expected, observed, passed = fn(data_dir)
        except (LogGWError, ValueError, KeyError, OSError) as exc:
            expected, observed, passed = "no error", f"{type(exc).__name__}: {exc}", False
        results.append(CheckResult(name, claim, expected, observed, bool(passed), time.perf_counter() - start))
    return results
