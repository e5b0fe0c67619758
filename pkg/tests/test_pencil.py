from fractions import Fraction as F

from hypothesis import given, strategies as st
import pytest

from loggw import pencil, presets
from loggw.errors import LedgerArityError
from loggw.pencil import scenario


@pytest.mark.parametrize("name", ["nodal", "cuspidal", "conic-line"])
def test_shipped_scenarios_give_six(name):
    s = pencil.load_scenario(presets.preset_file(presets.PENCILS, name))
    assert pencil.point_contribution(s) == 6


def test_point_contribution_examples():
    assert pencil.point_contribution(scenario(12, [("F0", 3, 0), ("F1", 3, 0)])) == 6
    assert pencil.point_contribution(scenario(12, [("F0", 3, 0), ("F1", 4, 1)])) == 6
    assert pencil.point_contribution(scenario(12, [("F0", 3, 0), ("F1", 6, 3)])) == 6


def test_three_lines_contribution():
    s = pencil.load_scenario(presets.preset_file(presets.PENCILS, "three-lines"))
    assert pencil.solve_fiber_contribution(s, 6) == 3


def test_solve_examples():
    assert pencil.solve_fiber_contribution(scenario(12, [("F0", 3, 0), ("F1", 4, None)]), 6) == 1
    assert pencil.solve_fiber_contribution(scenario(0, [("F", 0, None)]), 0) == 0


def test_arity_errors():
    with pytest.raises(LedgerArityError):
        pencil.solve_fiber_contribution(scenario(12, [("F0", 3, 0)]), 6)
    with pytest.raises(LedgerArityError):
        pencil.solve_fiber_contribution(scenario(12, [("F0", 3, None), ("F1", 3, None)]), 6)
    with pytest.raises(LedgerArityError):
        pencil.point_contribution(scenario(12, [("F0", 3, None)]))


def test_json_round_trip():
    s = scenario(12, [("F0", 3, F(1, 2)), ("F1", 6, None)])
    doc = pencil.scenario_to_dict(s)
    assert doc["special_fibers"][1]["direct_contribution"] == "?"
    assert pencil.scenario_from_dict(doc) == s


@given(
    st.integers(0, 40),
    st.lists(st.tuples(st.integers(0, 10), st.fractions(max_denominator=9)), min_size=1, max_size=5),
    st.integers(0, 4),
)
def test_solve_round_trips(e_total, fibers, slot):
    slot %= len(fibers)
    full = scenario(e_total, [(f"F{i}", e, c) for i, (e, c) in enumerate(fibers)])
    target = pencil.point_contribution(full)
    hidden = scenario(e_total, [(f"F{i}", e, None if i == slot else c) for i, (e, c) in enumerate(fibers)])
    assert pencil.solve_fiber_contribution(hidden, target) == fibers[slot][1]
