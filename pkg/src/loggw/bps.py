"""Conversions between Gromov-Witten invariants and BPS numbers.

A series holds invariants of the classes k * beta0 indexed by the
multiplier k. Two multiple-cover conventions are implemented:

* local (Calabi-Yau threefold): ``N_K = sum_{j | K} n_{K/j} / j^3``;
* logarithmic, at a contact point: ``N_K = sum_{k | K} (-1)^{(k-1) w / k} m_{K/k} / k^2``
  where ``w = K * w0`` is the tangency of the outer class and absent
  entries of ``m`` count as zero.

The log and local BPS numbers are related by ``n = (-1)^(w-1) w m``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Union

from ._rational import format_rational, parse_rational
from .errors import ConfigurationError, DomainError, IncompleteSeriesError
from .presets import data_file


@dataclass(frozen=True)
class InvariantSeries:
    base_class: str
    w0: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.values.items():
            k = int(k)
            if k < 1:
                raise DomainError(f"multipliers must be positive, got {k}")
            clean[k] = parse_rational(v)
        object.__setattr__(self, "values", dict(sorted(clean.items())))

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def keys(self) -> list[int]:
        return list(self.values)

    def with_values(self, values: dict) -> "InvariantSeries":
        return InvariantSeries(self.base_class, self.w0, values)


def divisors(n: int) -> list[int]:
    return [j for j in range(1, n + 1) if n % j == 0]


def cy3_bps_to_gw(n: InvariantSeries) -> InvariantSeries:
    out = {}
    for K in n.keys():
        total = Fraction(0)
        for j in divisors(K):
            if K // j not in n.values:
                raise IncompleteSeriesError(f"n_{K // j} is needed for N_{K}")
            total += n.values[K // j] / j**3
        out[K] = total
    return n.with_values(out)


def gw_to_cy3_bps(N: InvariantSeries) -> InvariantSeries:
    out: dict[int, Fraction] = {}
    for K in N.keys():
        value = N.values[K]
        for j in divisors(K)[1:]:
            if K // j not in N.values:
                raise IncompleteSeriesError(f"N_{K // j} is needed for n_{K}")
            value -= out[K // j] / j**3
        out[K] = value
    return N.with_values(out)


def _log_sign(k: int, K: int, w0: int) -> int:
    return -1 if ((k - 1) * (K * w0 // k)) % 2 else 1


def log_bps_to_gw(m: InvariantSeries, multipliers: Optional[Iterable[int]] = None) -> InvariantSeries:
    """Log GW invariants from log BPS numbers, at ``multipliers`` (default: the keys of m)."""
    keys = sorted(set(multipliers)) if multipliers is not None else m.keys()
    out = {}
    for K in keys:
        total = Fraction(0)
        for k in divisors(K):
            term = m.values.get(K // k)
            if term:
                total += _log_sign(k, K, m.w0) * term / (k * k)
        out[K] = total
    return m.with_values(out)


def gw_to_log_bps(N: InvariantSeries) -> InvariantSeries:
    """Inverse of :func:`log_bps_to_gw`; multipliers absent from N count as m = 0."""
    out: dict[int, Fraction] = {}
    for K in N.keys():
        value = N.values[K]
        for k in divisors(K)[1:]:
            term = out.get(K // k)
            if term:
                value -= _log_sign(k, K, N.w0) * term / (k * k)
        out[K] = value
    return N.with_values(out)


def _sign(w: int) -> int:
    return 1 if (w - 1) % 2 == 0 else -1


def log_local(m, w: int) -> Fraction:
    """Local BPS number from the log BPS number at tangency ``w``."""
    if w <= 0:
        raise DomainError(f"tangency must be positive, got {w}")
    return _sign(w) * w * parse_rational(m)


def local_to_log(n, w: int) -> Fraction:
    if w <= 0:
        raise DomainError(f"tangency must be positive, got {w}")
    return parse_rational(n) / (_sign(w) * w)


def local_p2_bps_table(data_dir=None) -> InvariantSeries:
    """Genus-0 local BPS numbers of the canonical bundle of P^2, degrees 1..6."""
    return load_series(data_file("local-p2-bps.json", data_dir))


def derived_log_bps_table(table: Optional[InvariantSeries] = None) -> InvariantSeries:
    """Log BPS numbers obtained from a local table through ``n = (-1)^(w-1) w m``."""
    table = table if table is not None else local_p2_bps_table()
    return table.with_values({d: local_to_log(n, d * table.w0) for d, n in table.values.items()})


def check_divisibility(series: InvariantSeries) -> list[tuple[int, bool]]:
    """Whether ``d * w0`` divides the d-th entry; non-integers fail."""
    out = []
    for d, n in series.values.items():
        modulus = d * series.w0
        ok = n.denominator == 1 and modulus != 0 and n.numerator % modulus == 0
        out.append((d, ok))
    return out


def series_to_dict(series: InvariantSeries) -> dict:
    return {
        "base_class": series.base_class,
        "w0": series.w0,
        "values": {str(k): format_rational(v) for k, v in series.values.items()},
    }


def series_from_dict(doc: dict) -> InvariantSeries:
    try:
        return InvariantSeries(str(doc["base_class"]), int(doc["w0"]), dict(doc["values"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"bad series document: {exc}") from exc


def load_series(path: Union[str, Path]) -> InvariantSeries:
    try:
        return series_from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: {exc}") from exc


def dumps_series(series: InvariantSeries) -> str:
    return json.dumps(series_to_dict(series), indent=2) + "\n"
