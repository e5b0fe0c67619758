"""Plane tropical curves: validation, multiplicities and exact enumeration."""
from .config import TropicalConfig, config_from_dict, config_to_dict, load_config
from .curve import (
    EndCondition,
    TropicalCurve,
    check_balancing,
    curve_multiplicity,
    passes_through,
    lies_on_line,
    vertex_multiplicity,
)
from .enumeration import (
    count,
    enumerate_curves,
    generic_points,
    perturb,
    plane_degree_ends,
    translate,
)
from .oracle import kontsevich_oracle
from .render import curve_from_dict, curve_to_dict, curve_to_svg, curves_to_json

enumerate = enumerate_curves  # noqa: A001  (public name used by callers)

__all__ = [
    "EndCondition",
    "TropicalConfig",
    "TropicalCurve",
    "check_balancing",
    "config_from_dict",
    "config_to_dict",
    "count",
    "curve_from_dict",
    "curve_multiplicity",
    "curve_to_dict",
    "curve_to_svg",
    "curves_to_json",
    "enumerate",
    "enumerate_curves",
    "generic_points",
    "kontsevich_oracle",
    "lies_on_line",
    "load_config",
    "passes_through",
    "perturb",
    "plane_degree_ends",
    "translate",
    "vertex_multiplicity",
]
