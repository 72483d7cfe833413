from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coabelian.errors import MalformedInputError, ParseError
from coabelian.exactfield import FieldSpec, Matrix, kernel_basis, rank

from .helpers import rank_by_minors, rank_by_span

Q = FieldSpec()
GF2, GF5 = FieldSpec(2), FieldSpec(5)


def test_field_spec_roundtrip():
    assert FieldSpec.parse("Q") == Q
    assert FieldSpec.parse("GF:2") == GF2
    assert str(FieldSpec(7)) == "GF:7"
    with pytest.raises(MalformedInputError):
        FieldSpec(6)
    with pytest.raises(MalformedInputError):
        FieldSpec(2**31 + 11)
    with pytest.raises(ParseError):
        FieldSpec.parse("R")


def test_scalar_ops():
    assert GF5.inv(2) == 3
    assert Q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert Q.inv(Fraction(3, 4)) == Fraction(4, 3)
    with pytest.raises(ZeroDivisionError):
        GF5.inv(0)
    with pytest.raises(ZeroDivisionError):
        Q.inv(Q.zero)


def test_scalar_serialization():
    assert Q.parse_scalar("-3/6") == Fraction(-1, 2)
    assert Q.format_scalar(Fraction(-1, 2)) == "-1/2"
    assert Q.format_scalar(Fraction(4)) == "4"
    assert GF5.parse_scalar("1/2") == 3
    with pytest.raises(ParseError):
        Q.parse_scalar("0.5")
    with pytest.raises(MalformedInputError):
        GF5.parse_scalar("1/5")


def test_rank_examples():
    assert rank(Matrix.identity(3, Q)) == 3
    assert rank(Matrix.from_rows([[1, 1], [1, 1]], GF2)) == 1
    # augmented C4 edge boundary: edges 12,14,23,34 against vertices 1..4
    d1 = Matrix.from_rows([[-1, -1, 0, 0], [1, 0, -1, 0], [0, 0, 1, -1], [0, 1, 0, 1]], Q)
    assert rank(d1) == rank_by_minors(d1.to_rows(), Q) == 3


def test_kernel_examples():
    k = kernel_basis(Matrix.from_rows([[1, 1]], Q))
    assert k.rows == 1
    x = k.row(0)
    assert x[0] == -x[1] != 0
    assert kernel_basis(Matrix.from_rows([[1, 2], [3, 4]], GF5)).rows == 0
    assert kernel_basis(Matrix.zeros(2, 3, Q)).rows == 3


def test_mixed_field_entries_rejected():
    with pytest.raises(MalformedInputError):
        Matrix(1, 2, (Fraction(1), 1), Q)
    with pytest.raises(MalformedInputError):
        Matrix(1, 1, (7,), GF5)
    with pytest.raises(MalformedInputError):
        Matrix.from_rows([[1]], GF5) @ Matrix.from_rows([[1]], Q)


small_ints = st.integers(-3, 3)


@st.composite
def matrices(draw, field=None):
    field = field or draw(st.sampled_from([Q, GF2, FieldSpec(3), GF5]))
    r, c = draw(st.integers(0, 4)), draw(st.integers(0, 4))
    if field.is_rational:
        vals = st.builds(Fraction, small_ints, st.integers(1, 3))
    else:
        vals = st.integers(0, field.p - 1)
    rows = draw(st.lists(st.lists(vals, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, field, c)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    k = kernel_basis(m)
    assert rank(m) + k.rows == m.cols
    for i in range(k.rows):
        assert all(a == 0 for a in m.apply(k.row(i)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(m):
    assert rank(m) == rank_by_minors(m.to_rows(), m.field)


@settings(max_examples=100, deadline=None)
@given(matrices(FieldSpec(3)))
def test_rank_matches_span_oracle_gf3(m):
    if m.rows and m.cols:
        assert rank(m) == rank_by_span(m.to_rows(), 3)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_ops(m, rnd):
    rows = m.to_rows()
    rnd.shuffle(rows)
    f = m.field
    if rows:
        i = rnd.randrange(len(rows))
        c = f(rnd.randrange(1, 50)) if f.is_rational else rnd.randrange(1, f.p)
        rows[i] = [f.mul(c, a) for a in rows[i]]
    assert rank(Matrix.from_rows(rows, f, m.cols)) == rank(m)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101, 65537, 2147483647])
def test_fermat(p):
    f = FieldSpec(p)
    import random

    rnd = random.Random(p)
    for _ in range(50):
        a = rnd.randrange(1, p)
        assert pow(a, p - 1, p) == 1
        assert f.mul(f.inv(a), a) == 1
