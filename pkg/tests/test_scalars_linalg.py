import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilpotent_dga import linalg
from nilpotent_dga.scalars import (Trunc, TruncatedRing, constant_part, format_scalar,
                                   in_maximal_ideal, parse_scalar)

from _support import cofactor_det, rq

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.mark.parametrize("text, value", [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)),
                                         (" 7/3 ", Fraction(7, 3)), (5, Fraction(5))])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5e", True, None])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(fractions)
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x
    assert "." not in format_scalar(x)


def test_truncated_ring_basics():
    R = TruncatedRing(3)
    t = R.t
    assert t * t * t == 0
    assert (1 + t) * (1 - t + t * t) == 1
    assert str(R(Fraction(1, 2), 0, 1)) == "1/2 + t^2"
    assert in_maximal_ideal(2 * t) and not in_maximal_ideal(R.one)
    assert constant_part(R(4, 1)) == 4
    assert R.constant(3) == 3


@given(st.lists(fractions, min_size=3, max_size=3), st.lists(fractions, min_size=3, max_size=3),
       st.lists(fractions, min_size=3, max_size=3))
def test_truncated_ring_axioms(a, b, c):
    R = TruncatedRing(3)
    x, y, z = R(*a), R(*b), R(*c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


def test_rank_matches_cofactor_determinant():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = [[rq(rng, -2, 2, 2) for _ in range(n)] for _ in range(n)]
        if n > 1 and rng.random() < 0.3:
            a[-1] = [2 * x for x in a[0]]
        assert (linalg.rank(a) == n) == (cofactor_det(a) != 0)


def test_nullspace_and_solve():
    rng = random.Random(3)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 6)
        a = [[rq(rng) for _ in range(c)] for _ in range(r)]
        ker = linalg.nullspace(a)
        assert len(ker) == c - linalg.rank(a)
        for v in ker:
            assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)
        x = [rq(rng) for _ in range(c)]
        b = [sum(p * q for p, q in zip(row, x)) for row in a]
        sol = linalg.solve(a, b)
        assert sol is not None
        assert [sum(p * q for p, q in zip(row, sol)) for row in a] == b


def test_solve_inconsistent():
    assert linalg.solve([[1, 0], [1, 0]], [1, 2]) is None


def test_mat_mul_ring_generic():
    R = TruncatedRing(2)
    a = [[R(1, 1), 0], [0, 1]]
    prod = linalg.mat_mul(a, a)
    assert prod[0][0] == R(1, 2)


def test_sparse_span_membership():
    span = linalg.SparseSpan()
    assert span.add({"x": 1, "y": 1})
    assert span.add({"y": 2, "z": -1})
    assert not span.add({"x": 2, "y": 4, "z": -1})
    assert span.contains({"x": 1, "y": -1, "z": 1})
    assert not span.contains({"z": 1})
    assert len(span) == 2
