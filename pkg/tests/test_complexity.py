import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ckit.complexity import (CutoffPolicy, One, Plus, Times, build_complexity_table,
                             build_naive_table, complexity, estimate_memory, eval_expression,
                             largest_with_complexity, parse_expression, solid_numbers,
                             witness_expression)
from ckit.errors import NotFoundError, ResourceLimitError, TableRangeError, UncertifiedError

N_SMALL = 100_000


@pytest.fixture(scope="module")
def naive_small():
    return build_naive_table(20_000)


def test_known_values(small_table):
    assert small_table[1] == 1
    assert small_table[9] == 6
    assert complexity(small_table, 73) == 13
    assert small_table[1094] == 22
    assert small_table[2188] == 22
    first = [1, 2, 3, 4, 5, 5, 6, 6, 6, 7, 8, 7, 8, 8, 8, 8, 9, 8, 9, 9]
    assert small_table.values[1:21].tolist() == first


def test_pruned_matches_naive(small_table, naive_small):
    assert np.array_equal(small_table.values[: naive_small.max_n + 1], naive_small.values)


def test_tiny_tables():
    t = build_complexity_table(1)
    assert t.max_n == 1 and t[1] == 1
    with pytest.raises(ValueError):
        build_complexity_table(0)


def test_range_errors(small_table):
    with pytest.raises(TableRangeError, match=str(N_SMALL)):
        small_table[N_SMALL + 1]
    with pytest.raises(TableRangeError):
        small_table[0]


def test_memory_guard():
    with pytest.raises(ResourceLimitError):
        build_complexity_table(10**9, memory_limit=estimate_memory(10**6))


def test_bounded_policy_is_upper_bound(small_table):
    bounded = build_complexity_table(20_000, CutoffPolicy.bounded(6))
    assert not bounded.exact
    assert np.all(bounded.values[1:] >= small_table.values[1:20_001])
    assert str(bounded.policy) == "bounded:6"
    assert CutoffPolicy.parse("bounded:6") == bounded.policy
    assert CutoffPolicy.parse("exhaustive").is_exhaustive


def test_complexity_lower_bound(small_table):
    n = np.arange(1, N_SMALL + 1)
    # ||n|| >= 3 log3 n, small slack for rounding
    assert np.all(small_table.values[1:] >= 3 * np.log(n) / math.log(3) - 1e-9)


def test_subadditive_exhaustive_small(small_table):
    v = small_table.values.astype(int)
    for a in range(1, 101):
        for b in range(1, 101):
            assert v[a * b] <= v[a] + v[b]
            assert v[a + b] <= v[a] + v[b]


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 300), st.integers(1, 300))
def test_subadditive_sampled(small_table, a, b):
    v = small_table
    assert v[a * b] <= v[a] + v[b]
    assert v[a + b] <= v[a] + v[b]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, N_SMALL // 3))
def test_times_three_costs_at_most_three(small_table, n):
    assert small_table[3 * n] <= small_table[n] + 3


@settings(max_examples=200, deadline=None)
@given(st.integers(1, N_SMALL))
def test_witness_sound(small_table, n):
    expr = witness_expression(small_table, n)
    assert eval_expression(expr) == (n, small_table[n])


def test_witness_shapes(small_table):
    assert witness_expression(small_table, 1) == One()
    assert str(witness_expression(small_table, 9)) == "(1+1+1)*(1+1+1)"
    assert eval_expression(witness_expression(small_table, 107))[1] == small_table[107]
    s = small_table.split(2)
    assert s.kind == "sum" and s.left <= s.right


def test_eval_expression_basics():
    assert eval_expression(One()) == (1, 1)
    assert eval_expression(Plus(One(), One())) == (2, 2)
    assert eval_expression(Times(Plus(One(), One()), Plus(One(), One()))) == (4, 4)


def test_parse_expression_literals():
    assert eval_expression(parse_expression("(1+1)*(1+1+1)")) == (6, 5)
    assert eval_expression(parse_expression("3^2")) == (9, 6)
    assert eval_expression(parse_expression("2^3*3+1")) == (25, 10)
    with pytest.raises(ValueError):
        parse_expression("2-1")


def test_largest_with_complexity(small_table):
    assert largest_with_complexity(small_table, 2) == 2
    assert largest_with_complexity(small_table, 8) == 18
    assert largest_with_complexity(small_table, 11) == 54
    with pytest.raises(NotFoundError):
        largest_with_complexity(build_complexity_table(10), 40)
    with pytest.raises(UncertifiedError):
        t = build_complexity_table(100)
        largest_with_complexity(t, int(t.values.max()))


def _solid_bruteforce(n_max):
    v = build_naive_table(n_max).values.astype(int)
    return [n for n in range(1, n_max + 1)
            if all(v[n] < v[a] + v[n - a] for a in range(1, n // 2 + 1))]


def test_solid_numbers(small_table):
    assert solid_numbers(small_table, 1) == [1]
    # 8 qualifies too: ||8|| = 6 while every split of 8 costs at least 7
    assert solid_numbers(small_table, 10) == [1, 6, 8, 9]
    assert solid_numbers(small_table, 100) == _solid_bruteforce(100)


def test_solid_numbers_warns_when_bounded():
    t = build_complexity_table(200, CutoffPolicy.bounded(3))
    with pytest.warns(UserWarning):
        solid_numbers(t, 50)


def test_build_is_deterministic():
    a = build_complexity_table(50_000)
    b = build_complexity_table(50_000)
    assert a.values.tobytes() == b.values.tobytes()


def test_table_is_read_only(small_table):
    with pytest.raises(ValueError):
        small_table.values[5] = 0
