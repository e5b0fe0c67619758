from fractions import Fraction as F

from hypothesis import given, settings, strategies as st
import pytest

from loggw import bps
from loggw.bps import InvariantSeries
from loggw.errors import DomainError, IncompleteSeriesError

LOCAL_P2 = [3, -6, 27, -192, 1695, -17064]
LOG_P2 = [1, 1, 3, 16, 113, 948]


def series(values, w0=3):
    return InvariantSeries("H", w0, values)


def naive_cy3(n, K):
    # independent evaluation straight from the divisor sum
    return sum(F(n[K // j]) / j**3 for j in range(1, K + 1) if K % j == 0)


def test_single_entry_cy3():
    assert bps.cy3_bps_to_gw(series({1: 3}))[1] == 3


def test_local_p2_multiple_covers():
    N = bps.cy3_bps_to_gw(bps.local_p2_bps_table())
    assert N[2] == F(-45, 8)
    assert N[3] == F(244, 9)
    for K in range(1, 7):
        assert N[K] == naive_cy3(dict(enumerate(LOCAL_P2, 1)), K)


def test_cy3_inverse():
    N = bps.cy3_bps_to_gw(series({1: 3, 2: -6}))
    assert bps.gw_to_cy3_bps(N)[2] == -6
    assert bps.gw_to_cy3_bps(series({1: 5})) == series({1: 5})


def test_local_table_round_trip():
    table = bps.local_p2_bps_table()
    assert [int(v) for v in table.values.values()] == LOCAL_P2
    assert bps.gw_to_cy3_bps(bps.cy3_bps_to_gw(table)) == table


def test_missing_divisor_is_an_error():
    with pytest.raises(IncompleteSeriesError):
        bps.cy3_bps_to_gw(series({2: 1}))
    with pytest.raises(IncompleteSeriesError):
        bps.gw_to_cy3_bps(series({1: 1, 4: 1}))


def test_log_examples():
    assert bps.log_bps_to_gw(series({1: 7}))[1] == 7
    # K = 2, w = 6: sign (-1)^(1 * 6 / 2) = -1
    assert bps.log_bps_to_gw(series({1: 1, 2: 1}))[2] == F(3, 4)
    assert bps.log_bps_to_gw(series({1: 1}), [1, 2])[2] == F(-1, 4)


def test_log_inverse():
    N = bps.log_bps_to_gw(series({1: 1, 2: 1}))
    assert bps.gw_to_log_bps(N)[2] == 1
    assert bps.gw_to_log_bps(series({1: F(2, 7)})) == series({1: F(2, 7)})


def test_even_w0_has_no_signs():
    m = series({1: 2, 2: F(1, 3), 3: -1, 4: 5, 6: 1}, w0=2)
    N = bps.log_bps_to_gw(m)
    for K in m.keys():
        unsigned = sum(m.values.get(K // k, 0) / F(k * k) for k in range(1, K + 1) if K % k == 0)
        assert N[K] == unsigned


def test_log_local_examples():
    assert bps.log_local(113, 15) == 1695
    assert bps.log_local(1, 6) == -6
    assert bps.log_local(0, 4) == 0
    assert bps.local_to_log(1695, 15) == 113
    with pytest.raises(DomainError):
        bps.log_local(1, 0)
    with pytest.raises(DomainError):
        bps.local_to_log(1, -3)


def test_derived_log_table():
    m = bps.derived_log_bps_table()
    assert [int(v) for v in m.values.values()] == LOG_P2
    assert m[5] == 113
    assert all(v.denominator == 1 for v in m.values.values())


def test_divisibility():
    assert bps.check_divisibility(bps.local_p2_bps_table()) == [(d, True) for d in range(1, 7)]
    assert bps.check_divisibility(series({1: 4})) == [(1, False)]
    assert bps.check_divisibility(series({2: -6})) == [(2, True)]
    assert bps.check_divisibility(series({1: F(3, 2)})) == [(1, False)]


def test_series_json_round_trip(tmp_path):
    s = series({1: F(-45, 8), 3: 2})
    path = tmp_path / "s.json"
    path.write_text(bps.dumps_series(s))
    assert "." not in path.read_text()
    assert bps.load_series(path) == s


def test_floats_refused_in_series():
    with pytest.raises((TypeError, ValueError)):
        series({1: 0.5})
    with pytest.raises(ValueError):
        series({1: "0.5"})


rationals = st.fractions(min_value=-10**4, max_value=10**4, max_denominator=10**3)
contiguous = st.integers(1, 8).flatmap(
    lambda n: st.lists(rationals, min_size=n, max_size=n).map(lambda v: dict(enumerate(v, 1)))
)
sparse = st.dictionaries(st.integers(1, 12), rationals, min_size=1, max_size=8)


@settings(max_examples=100)
@given(contiguous, st.integers(1, 6))
def test_cy3_round_trip_random(values, w0):
    s = series(values, w0)
    assert bps.gw_to_cy3_bps(bps.cy3_bps_to_gw(s)) == s
    assert bps.cy3_bps_to_gw(bps.gw_to_cy3_bps(s)) == s


@settings(max_examples=100)
@given(sparse, st.integers(1, 6))
def test_log_round_trip_random(values, w0):
    s = series(values, w0)
    assert bps.gw_to_log_bps(bps.log_bps_to_gw(s)) == s
    assert bps.log_bps_to_gw(bps.gw_to_log_bps(s)) == s


@settings(max_examples=100)
@given(rationals, st.integers(1, 40))
def test_log_local_round_trip(m, w):
    assert bps.local_to_log(bps.log_local(m, w), w) == m


@given(contiguous)
def test_denominators_divide_cubes(values):
    # denominators only grow by factors of j^3
    s = series({k: int(v) for k, v in values.items()})
    N = bps.cy3_bps_to_gw(s)
    for K, v in N.values.items():
        assert (K**3 * v).denominator == 1
