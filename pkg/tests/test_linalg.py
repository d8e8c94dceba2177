from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithtutte import CapExceededError, IntMatrix, minor_gcd_oracle, rank, smith_normal_form, torsion_order


def cols(*columns, n_rows=None):
    if n_rows is None:
        n_rows = len(columns[0])
    return IntMatrix.from_columns(columns, n_rows)


EMPTY3 = IntMatrix.from_columns([], 3)
IDENTITY3 = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@st.composite
def int_matrices(draw, max_rows=4, max_cols=5, bound=12):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=r * c, max_size=r * c))
    return IntMatrix(r, c, tuple(entries))


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    m = cols((1, 2, 3), (4, 5, 6))
    assert (m.n_rows, m.n_cols) == (3, 2)
    assert m[2, 1] == 6
    assert m.columns() == [(1, 2, 3), (4, 5, 6)]
    assert m.transpose().transpose() == m


@pytest.mark.parametrize(
    "m, expected",
    [
        (cols((0, 2, -2)), 1),
        (EMPTY3, 0),
        (cols((1, -1, 0, 0), (0, -2, 2, 0), (0, 3, 0, -3), (0, 0, 6, -6)), 3),
        (IDENTITY3, 3),
        (IntMatrix(0, 0, ()), 0),
    ],
)
def test_rank(m, expected):
    assert rank(m) == expected


@pytest.mark.parametrize(
    "m, factors",
    [
        (IntMatrix.from_rows([[2, 0], [0, 3]]), (1, 6)),
        (IntMatrix.from_rows([[1, 0], [0, 1]]), (1, 1)),
        (cols((2, -2, 0), (0, -6, 6)), (2, 6)),
        (cols((2, -2, 0), (0, 2, -2)), (2, 2)),
        (EMPTY3, ()),
    ],
)
def test_smith_normal_form(m, factors):
    assert smith_normal_form(m).invariant_factors == factors


def test_snf_of_textbook_matrix():
    # the sympy test-suite matrix; invariant factors 1, 10, 30 and rank 3
    m = IntMatrix.from_rows([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    res = smith_normal_form(m)
    assert res.invariant_factors == (1, 10, 30)
    assert res.rank == 3


@pytest.mark.parametrize(
    "m, expected",
    [
        (cols((0, 0, 6, -6)), 6),
        (cols((2, -2, 0), (0, -6, 6)), 12),
        (EMPTY3, 1),
        (IntMatrix.from_rows([[0, 0], [0, 0]]), 1),
    ],
)
def test_torsion_order(m, expected):
    assert torsion_order(m) == expected


@pytest.mark.parametrize(
    "m, expected",
    [
        (cols((2, -2, 0), (0, 2, -2)), 4),
        (cols((0, 2, -2)), 2),
        (IDENTITY3, 1),
        (EMPTY3, 1),
    ],
)
def test_minor_gcd_oracle(m, expected):
    assert minor_gcd_oracle(m) == expected


def test_minor_oracle_cap():
    m = IntMatrix(6, 12, tuple((i * 7 + j * 3) % 5 - 2 for i in range(6) for j in range(12)))
    with pytest.raises(CapExceededError) as exc:
        minor_gcd_oracle(m, cap=100)
    assert exc.value.cap == 100


def test_large_entries_stay_exact():
    big = 10**30
    m = IntMatrix.from_rows([[big, 0], [0, big + 1]])
    assert smith_normal_form(m).invariant_factors == (1, big * (big + 1))
    assert rank(m) == 2


@settings(max_examples=300, deadline=None)
@given(int_matrices())
def test_torsion_matches_minor_oracle(m):
    assert torsion_order(m) == minor_gcd_oracle(m)


@settings(max_examples=300, deadline=None)
@given(int_matrices())
def test_snf_structure(m):
    res = smith_normal_form(m)
    d = res.invariant_factors
    assert res.rank == rank(m)
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


@settings(max_examples=60, deadline=None)
@given(int_matrices(max_rows=3, max_cols=4, bound=6))
def test_snf_prefix_products_are_minor_gcds(m):
    from functools import reduce
    from itertools import combinations
    from math import gcd

    from arithtutte.linalg import _det

    d = smith_normal_form(m).invariant_factors
    a = m.rows()
    for k in range(1, len(d) + 1):
        g = reduce(gcd, (
            _det([[a[i][j] for j in cs] for i in rs])
            for rs in combinations(range(m.n_rows), k)
            for cs in combinations(range(m.n_cols), k)
        ), 0)
        assert prod(d[:k]) == g


@settings(max_examples=150, deadline=None)
@given(int_matrices(), st.randoms(use_true_random=False))
def test_torsion_invariances(m, rnd):
    t = torsion_order(m)
    columns = m.columns()
    rnd.shuffle(columns)
    assert torsion_order(IntMatrix.from_columns(columns, m.n_rows)) == t
    rows = m.rows()
    rnd.shuffle(rows)
    assert torsion_order(IntMatrix.from_rows(rows, m.n_cols)) == t
    if columns:
        i = rnd.randrange(len(columns))
        columns[i] = tuple(-a for a in columns[i])
    assert torsion_order(IntMatrix.from_columns(columns, m.n_rows)) == t
    assert torsion_order(IntMatrix.from_columns(columns + [(0,) * m.n_rows], m.n_rows)) == t
