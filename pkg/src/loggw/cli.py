"""Command-line front end.

Every leaf command accepts ``--json`` (machine-readable report on stdout),
``--output PATH`` and ``--data-dir DIR``. Errors print a JSON object on
stderr and exit with status 2; failed checks exit with status 1.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import bps, contrib, lattice, pencil, presets, tropical
from ._rational import format_rational, parse_rational
from .errors import ConfigurationError, LogGWError
from .verify import run_checks


@dataclass
class RunReport:
    command: list[str]
    inputs_digest: str
    results: Any = None
    checks: list[dict] = field(default_factory=list)
    text: list[str] = field(default_factory=list)

    @property
    def status(self) -> int:
        return 0 if all(c["passed"] for c in self.checks) else 1

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "results": self.results,
            "checks": self.checks,
            "status": self.status,
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _digest(command: Sequence[str], files: Sequence[Path]) -> str:
    h = hashlib.sha256()
    h.update("\0".join(command).encode())
    for path in files:
        h.update(b"\0")
        h.update(Path(path).read_bytes())
    return "sha256:" + h.hexdigest()


class _Context:
    """Collects the files a command reads so the report can digest them."""

    def __init__(self, args):
        self.args = args
        self.files: list[Path] = []

    def use(self, path) -> Path:
        path = Path(path)
        self.files.append(path)
        return path


# --- tropical ----------------------------------------------------------------


def _tropical_inputs(ctx: _Context):
    a = ctx.args
    if a.degree is not None:
        if a.config or a.preset:
            raise ConfigurationError("--degree cannot be combined with a config or preset")
        ends = tropical.plane_degree_ends(a.degree)
        k = a.generic_points if a.generic_points is not None else 3 * a.degree - 1
        points = tropical.generic_points(k, seed=a.seed)
    else:
        if a.config and a.preset:
            raise ConfigurationError("give either a config path or --preset, not both")
        if a.config:
            path = ctx.use(a.config)
        else:
            path = ctx.use(presets.preset_file(presets.TROPICAL, a.preset or "gps-cubic", a.data_dir))
        cfg = tropical.load_config(path)
        ends, points = cfg.ends, cfg.points
    if a.perturb:
        scale = parse_rational(a.perturb)
        if scale <= 0 or scale.numerator != 1:
            raise ConfigurationError(f"--perturb expects 1/N, got {a.perturb}")
        ends, points = tropical.perturb(ends, points, scale.denominator, seed=a.seed)
    return ends, points


def cmd_tropical(ctx: _Context, report: RunReport):
    a = ctx.args
    ends, points = _tropical_inputs(ctx)
    results = tropical.enumerate(ends, points, n_jobs=a.jobs)
    total = sum(m for _, m in results)
    if a.action == "count":
        report.results = {"count": total, "curves": len(results)}
        report.text.append(str(total))
    elif a.action == "enumerate":
        report.results = tropical.curves_to_json(results)
        report.text.append(f"{len(results)} curve(s), total multiplicity {total}")
        for i, (curve, m) in enumerate(results, start=1):
            verts = ", ".join(f"({x}, {y})" for x, y in curve.vertices)
            report.text.append(f"  #{i}: multiplicity {m}; vertices {verts}")
    else:
        if not a.output:
            raise ConfigurationError("draw needs --output PATH for the SVG file(s)")
        out = Path(a.output)
        written = []
        for i, (curve, m) in enumerate(results, start=1):
            path = out if len(results) == 1 else out.with_name(f"{out.stem}-{i}{out.suffix or '.svg'}")
            path.write_text(tropical.curve_to_svg(curve, points, title=f"multiplicity {m}"))
            written.append(str(path))
        report.results = {"count": total, "files": written}
        report.text.extend(f"wrote {p}" for p in written)
        return True
    return False


# --- bps -----------------------------------------------------------------------


def _series(ctx: _Context) -> bps.InvariantSeries:
    a = ctx.args
    if getattr(a, "series", None):
        return bps.load_series(ctx.use(a.series))
    return bps.load_series(ctx.use(presets.data_file("local-p2-bps.json", a.data_dir)))


def _series_lines(series: bps.InvariantSeries) -> list[str]:
    return [f"  {k}: {format_rational(v)}" for k, v in series.values.items()]


def cmd_bps(ctx: _Context, report: RunReport):
    a = ctx.args
    if a.action == "log-local":
        if (a.m is None) == (a.n is None):
            raise ConfigurationError("give exactly one of --m (log to local) or --n (local to log)")
        if a.m is not None:
            value = bps.log_local(parse_rational(a.m), a.w)
            report.results = {"w": a.w, "m": a.m, "n": format_rational(value)}
        else:
            value = bps.local_to_log(parse_rational(a.n), a.w)
            report.results = {"w": a.w, "n": a.n, "m": format_rational(value)}
        report.text.append(format_rational(value))
        return False
    series = _series(ctx)
    if a.action == "table":
        out = bps.derived_log_bps_table(series) if a.log else series
    elif a.action == "to-gw":
        mult = [int(k) for k in a.multipliers.split(",")] if a.multipliers else None
        out = bps.log_bps_to_gw(series, mult) if a.log else bps.cy3_bps_to_gw(series)
    elif a.action == "to-bps":
        out = bps.gw_to_log_bps(series) if a.log else bps.gw_to_cy3_bps(series)
    else:
        flags = bps.check_divisibility(series)
        report.results = {"divisible": {str(d): ok for d, ok in flags}}
        report.checks = [
            {"name": f"divisible-{d}", "passed": ok, "observed": format_rational(series[d])} for d, ok in flags
        ]
        report.text.extend(f"  {d}: {'divisible' if ok else 'NOT divisible'} by {d * series.w0}" for d, ok in flags)
        return False
    report.results = bps.series_to_dict(out)
    report.text.extend(_series_lines(out))
    if a.output:
        Path(a.output).write_text(bps.dumps_series(out))
        return True
    return False


# --- contrib ------------------------------------------------------------------


def _pairs(items: Optional[list[str]], what: str) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ConfigurationError(f"{what} expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_contrib(ctx: _Context, report: RunReport):
    a = ctx.args
    if a.action == "two-component":
        c = contrib.two_component(a.d1, a.d2)
        report.results = c.to_dict()
        report.text.append(
            f"{c.num_maps} map(s) of multiplicity {c.multiplicity_each} each, total {c.total}"
        )
        report.text.extend(f"  assumes: {s}" for s in c.assumptions)
    elif a.action == "a1":
        table = (
            contrib.SingularityFactorTable.load(ctx.use(a.table))
            if a.table
            else contrib.SingularityFactorTable.shipped(a.data_dir)
        )
        extra = {k: int(v) for k, v in _pairs(a.factor, "--factor").items()}
        if extra:
            table = table.extended(extra)
        value = contrib.a1_multiplicity(a.tags, table)
        report.results = {"singularities": a.tags, "multiplicity": value}
        report.text.append(str(value))
    elif a.action == "cover":
        if a.value:
            table = contrib.MultipleCoverTable(_pairs(a.value, "--value"))
        elif a.table:
            table = contrib.MultipleCoverTable.load(ctx.use(a.table))
        else:
            table = contrib.MultipleCoverTable.shipped(a.data_dir)
        value = contrib.multiple_cover(a.k, table)
        report.results = {"k": a.k, "value": format_rational(value)}
        report.text.append(format_rational(value))
    else:
        path = a.ledger or presets.data_file("ledger-degree5.json", a.data_dir)
        total, terms, coeffs = contrib.load_ledger(ctx.use(path))
        result = contrib.decomposition_ledger(total, terms, coeffs)
        subs = _pairs(a.substitute, "--substitute")
        if subs:
            if result.constraint is None:
                raise ConfigurationError("nothing to substitute: the ledger has no free unknown")
            ((label, value),) = subs.items()
            result = result.constraint.substitute(label, value)
        report.results = result.to_dict()
        if result.constraint is not None:
            report.text.append(str(result.constraint))
        elif result.assignments:
            report.text.extend(f"{k} = {format_rational(v)}" for k, v in result.assignments.items())
        else:
            report.text.append("ledger balances")
    return False


# --- pencil -------------------------------------------------------------------


def cmd_pencil(ctx: _Context, report: RunReport):
    a = ctx.args
    if a.scenario and a.preset:
        raise ConfigurationError("give either a scenario path or --preset, not both")
    path = a.scenario or presets.preset_file(presets.PENCILS, a.preset or "nodal", a.data_dir)
    s = pencil.load_scenario(ctx.use(path))
    if a.solve is not None:
        value = pencil.solve_fiber_contribution(s, parse_rational(a.solve))
        label = s.unknowns()[0].label
        report.results = {"fiber": label, "direct_contribution": format_rational(value), "target": a.solve}
        report.text.append(f"{label}: {format_rational(value)}")
    else:
        value = pencil.point_contribution(s)
        report.results = {"point_contribution": format_rational(value)}
        report.text.append(format_rational(value))
    return False


# --- surface ------------------------------------------------------------------


def _profile(items: Optional[list[str]]):
    profile = []
    for item in items or []:
        if ":" not in item:
            raise ConfigurationError(f"--blowup expects COMPONENT:p1,p2,..., got {item!r}")
        comp, parts = item.split(":", 1)
        profile.append((comp.strip(), [int(p) for p in parts.split(",") if p.strip()]))
    return profile


def cmd_surface(ctx: _Context, report: RunReport):
    a = ctx.args
    if a.config and a.preset:
        raise ConfigurationError("give either a surface config or --preset, not both")
    path = a.config or presets.preset_file(presets.SURFACES, a.preset or "P2-elliptic", a.data_dir)
    model = lattice.load_surface(ctx.use(path))
    beta = lattice.parse_class(model, a.beta) if a.beta else None
    if a.blowup:
        if beta is None:
            raise ConfigurationError("--blowup needs a class via --class")
        model, beta = lattice.blowup_transform(model, beta, _profile(a.blowup))
    results: dict = {"surface": model.name, "basis": list(model.basis_labels), "boundary_kind": model.boundary_kind.value}
    if beta is not None:
        w = lattice.tangency_weight(model, beta)
        results["class"] = list(beta.coefficients)
        results["w"] = w
        results["arithmetic_genus"] = lattice.arithmetic_genus(model, beta)
        results["per_component"] = {
            name: lattice.intersect(model, beta, cls) for name, cls in model.boundary_components.items()
        }
        if w >= 1:
            results["contact_points"] = lattice.contact_point_count(model, w)
        report.text.extend(f"{k}: {v}" for k, v in results.items())
    else:
        report.text.append(lattice.dumps_surface(model).rstrip())
    report.results = results
    if a.output:
        Path(a.output).write_text(lattice.dumps_surface(model))
        return True
    return False


# --- verify -------------------------------------------------------------------


def cmd_verify(ctx: _Context, report: RunReport):
    results = run_checks(ctx.args.data_dir, ctx.args.only or None)
    report.checks = [r.to_dict() for r in results]
    report.results = {"passed": sum(r.passed for r in results), "total": len(results)}
    width = max(len(r.name) for r in results) if results else 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        report.text.append(f"{mark}  {r.name:<{width}}  {r.claim}: expected {r.expected}, got {r.observed}")
    report.text.append(f"{report.results['passed']}/{report.results['total']} checks passed")
    return False


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--output", help="write the main artifact to this path")
    common.add_argument("--data-dir", help="directory holding preset data files")

    parser = argparse.ArgumentParser(prog="loggw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    trop = sub.add_parser("tropical", help="enumerate plane tropical curves")
    trop_sub = trop.add_subparsers(dest="action", required=True)
    for name in ("enumerate", "count", "draw"):
        p = trop_sub.add_parser(name, parents=[common])
        p.add_argument("config", nargs="?", help="JSON end/point configuration")
        p.add_argument("--preset", choices=sorted(presets.TROPICAL))
        p.add_argument("--degree", type=int, help="free plane curves of this degree")
        p.add_argument("--generic-points", type=int, help="number of random points (default 3d-1)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--perturb", help="move anchors and points by seeded offsets of size 1/N")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.set_defaults(handler=cmd_tropical)

    b = sub.add_parser("bps", help="BPS and Gromov-Witten conversions")
    b_sub = b.add_subparsers(dest="action", required=True)
    for name in ("to-gw", "to-bps", "table", "divisibility"):
        p = b_sub.add_parser(name, parents=[common])
        p.add_argument("series", nargs="?", help="series JSON (default: shipped local P^2 table)")
        p.add_argument("--log", action="store_true", help="use the log convention at a contact point")
        if name == "to-gw":
            p.add_argument("--multipliers", help="comma-separated multipliers to evaluate")
        p.set_defaults(handler=cmd_bps)
    p = b_sub.add_parser("log-local", parents=[common])
    p.add_argument("--w", type=int, required=True, help="tangency w = beta.D")
    p.add_argument("--m", help="log BPS number")
    p.add_argument("--n", help="local BPS number")
    p.set_defaults(handler=cmd_bps)

    c = sub.add_parser("contrib", help="component contributions and ledgers")
    c_sub = c.add_subparsers(dest="action", required=True)
    p = c_sub.add_parser("two-component", parents=[common])
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.set_defaults(handler=cmd_contrib)
    p = c_sub.add_parser("a1", parents=[common])
    p.add_argument("tags", nargs="*", help="singularity tags, e.g. node ordinary-cusp")
    p.add_argument("--table", help="singularity factor JSON")
    p.add_argument("--factor", action="append", help="extra TAG=FACTOR entries")
    p.set_defaults(handler=cmd_contrib)
    p = c_sub.add_parser("cover", parents=[common])
    p.add_argument("k", type=int)
    p.add_argument("--table", help="multiple-cover table JSON")
    p.add_argument("--value", action="append", help="K=VALUE entries replacing the table")
    p.set_defaults(handler=cmd_contrib)
    p = c_sub.add_parser("ledger", parents=[common])
    p.add_argument("ledger", nargs="?", help="ledger JSON (default: the degree-5 ledger)")
    p.add_argument("--substitute", action="append", help="LABEL=VALUE for the free unknown")
    p.set_defaults(handler=cmd_contrib)

    p = sub.add_parser("pencil", parents=[common], help="Euler-characteristic ledger of a pencil")
    p.add_argument("scenario", nargs="?", help="scenario JSON")
    p.add_argument("--preset", choices=sorted(presets.PENCILS))
    p.add_argument("--solve", help="solve the unknown contribution for this target count")
    p.set_defaults(handler=cmd_pencil, action=None)

    p = sub.add_parser("surface", parents=[common], help="intersection numbers on a surface")
    p.add_argument("config", nargs="?", help="surface config file")
    p.add_argument("--preset", choices=sorted(presets.SURFACES))
    p.add_argument("--class", dest="beta", help='curve class, e.g. "3H - E11"')
    p.add_argument("--blowup", action="append", help="COMPONENT:p1,p2,... tangency profile")
    p.set_defaults(handler=cmd_surface, action=None)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the published worked numbers")
    p.add_argument("--only", action="append", help="run only the named check")
    p.set_defaults(handler=cmd_verify, action=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = _Context(args)
    report = RunReport(command=argv, inputs_digest="")
    try:
        wrote_output = args.handler(ctx, report)
        report.inputs_digest = _digest(argv, ctx.files)
    except (LogGWError, ValueError, KeyError, OSError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc).strip("'\""), "command": argv}
        sys.stderr.write(json.dumps(error, sort_keys=True) + "\n")
        return 2
    if args.output and not wrote_output:
        Path(args.output).write_text(json.dumps(_jsonable(report.results), indent=2, sort_keys=True) + "\n")
    if args.json:
        sys.stdout.write(json.dumps(_jsonable(report.to_dict()), indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(report.text) + "\n")
    return report.status


if __name__ == "__main__":
    raise SystemExit(main())
