from fractions import Fraction as F

import pytest

from loggw import lattice, presets
from loggw.tropical import EndCondition, TropicalCurve

# Curves read off the two pictures of the cubic count: vertex positions,
# bounded edges (a, b, weight) and rays (vertex, direction, weight).
FIGURE_TWELVE = TropicalCurve(
    vertices=((-5, 1), (-4, 2), (-3, F(5, 2)), (-2, F(7, 2)), (1, F(11, 2))),
    bounded_edges=((0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1)),
    unbounded_edges=(
        (0, (-1, 0), 1), (0, (0, -1), 1), (1, (-1, 0), 1), (2, (0, -1), 1),
        (3, (-1, 0), 1), (4, (0, -1), 1), (4, (1, 1), 3),
    ),
)
FIGURE_THREE_LEFT = TropicalCurve(
    vertices=((-5, 1), (-3, 2), (F(-5, 2), F(7, 2)), (F(-1, 2), F(9, 2)), (1, F(11, 2))),
    bounded_edges=((0, 2, 1), (1, 3, 1), (2, 3, 1), (3, 4, 1)),
    unbounded_edges=(
        (0, (-1, 0), 1), (0, (0, -1), 1), (1, (-1, 0), 1), (1, (0, -1), 1),
        (2, (-1, 0), 1), (4, (0, -1), 1), (4, (1, 1), 3),
    ),
)
FIGURE_THREE_RIGHT = TropicalCurve(
    vertices=((-5, 2), (F(-7, 2), F(7, 2)), (-3, 1), (1, 5), (F(3, 2), 6)),
    bounded_edges=((0, 1, 1), (1, 4, 1), (2, 3, 1), (3, 4, 1)),
    unbounded_edges=(
        (0, (-1, 0), 1), (0, (0, -1), 1), (1, (-1, 0), 1), (2, (-1, 0), 1),
        (2, (0, -1), 1), (3, (0, -1), 1), (4, (1, 1), 3),
    ),
)


def gps_ends():
    heights = [F(7, 2), 2, 1]
    abscissae = [-5, -3, 1]
    ends = [EndCondition((-1, 0), 1, (F(-13, 2), y), f"P{i}") for i, y in enumerate(heights, 1)]
    ends += [EndCondition((0, -1), 1, (x, F(-5, 2)), f"P{i}") for i, x in enumerate(abscissae, 4)]
    ends.append(EndCondition((1, 1), 3, None, "D_out"))
    return ends


@pytest.fixture
def p2():
    return lattice.load_surface(presets.preset_file(presets.SURFACES, "P2-elliptic"))


@pytest.fixture
def p2_toric():
    return lattice.load_surface(presets.preset_file(presets.SURFACES, "P2-toric"))


@pytest.fixture
def weak_dp():
    return lattice.load_surface(presets.preset_file(presets.SURFACES, "GPS-weak-dP"))
