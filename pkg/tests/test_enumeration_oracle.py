"""The flow solver agrees with brute force over all combinatorial types."""
from fractions import Fraction as F
import random

import pytest

from conftest import gps_ends
from loggw.errors import DegenerateConfiguration
from loggw.tropical import EndCondition, enumerate_curves
from loggw.tropical.curve import primitive_part
from loggw.tropical.enumeration import plane_degree_ends
from type_oracle import brute_force, trivalent_trees


def _random_config(rng, n, n_points):
    while True:
        moms = []
        for _ in range(n - 1):
            v = (rng.randint(-2, 2), rng.randint(-2, 2))
            if v != (0, 0):
                moms.append(v)
        if len(moms) != n - 1:
            continue
        last = (-sum(m[0] for m in moms), -sum(m[1] for m in moms))
        if last == (0, 0):
            continue
        moms.append(last)
        break
    n_fixed = n - 1 - n_points
    fixed = set(rng.sample(range(n), n_fixed))
    ends = []
    for i, m in enumerate(moms):
        d, w = primitive_part(m)
        anchor = (F(rng.randint(-60, 60), 7), F(rng.randint(-60, 60), 11)) if i in fixed else None
        ends.append(EndCondition(d, w, anchor))
    points = [(F(rng.randint(-60, 60), 13), F(rng.randint(-60, 60), 17)) for _ in range(n_points)]
    return ends, points


def test_tree_counts():
    # (2n - 5)!! labelled trivalent trees
    assert [sum(1 for _ in trivalent_trees(n)) for n in (3, 4, 5, 6)] == [1, 3, 15, 105]


def test_brute_force_reproduces_gps_count():
    assert sorted(m for _, m in brute_force(gps_ends(), [])) == [3, 3, 12]


def test_brute_force_line():
    assert [m for _, m in brute_force(plane_degree_ends(1), [(0, 0), (3, 1)])] == [1]


@pytest.mark.parametrize("seed", range(60))
def test_random_configurations_agree(seed):
    rng = random.Random(seed)
    n = rng.choice([3, 4, 5, 5, 6])
    n_points = rng.randint(0, 1 if n == 6 else min(2, n - 1))
    ends, points = _random_config(rng, n, n_points)
    try:
        fast = enumerate_curves(ends, points)
    except DegenerateConfiguration:
        pytest.skip("random configuration is not generic")
    assert fast == brute_force(ends, points)


def test_conic_agrees_with_brute_force():
    fixed = [
        EndCondition((-1, 0), 1, (0, F(1, 3))),
        EndCondition((-1, 0), 1, (0, F(17, 5))),
        EndCondition((0, -1), 1, (F(-9, 7), 0)),
        EndCondition((0, -1), 1, (F(5, 2), 0)),
    ]
    ends = fixed + [EndCondition((1, 1)), EndCondition((1, 1))]
    points = [(F(11, 3), F(23, 4))]
    fast = enumerate_curves(ends, points)
    assert fast == brute_force(ends, points)
