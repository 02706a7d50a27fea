"""Exact linear algebra: fields, matrices, rank, nullspace, span solving."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from posetres import Matrix, NotInSpan, QQ, GF2, GF3, FieldSpec
from posetres.linalg import LinearSolver, nullspace_basis, rank, rref

FIELDS = [QQ, GF2, GF3, FieldSpec.gf(5)]


def mat(rows, field):
    return Matrix.from_rows([[field.of_int(x) for x in r] for r in rows],
                            field, cols=len(rows[0]) if rows else 0)


def test_field_parse_spellings():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("rationals") == QQ
    assert FieldSpec.parse("gf2") == GF2
    assert FieldSpec.parse("gf:3") == GF3
    assert FieldSpec.parse("GF(5)") == FieldSpec.gf(5)
    with pytest.raises(ValueError):
        FieldSpec.parse("bogus")


def test_field_validation():
    with pytest.raises(ValueError):
        FieldSpec.gf(4)  # not prime
    with pytest.raises(ValueError):
        FieldSpec.gf(1)
    with pytest.raises(ValueError):
        FieldSpec("rationals", 7)


def test_field_arithmetic_gf5():
    f = FieldSpec.gf(5)
    assert f.of_int(-1) == 4
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.neg(2) == 3
    assert f.mul(f.inv(3), 3) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_field_arithmetic_rationals():
    assert QQ.of_int(2) == Fraction(2)
    assert QQ.inv(Fraction(3, 4)) == Fraction(4, 3)
    assert QQ.sub(QQ.one, QQ.one) == QQ.zero


def test_matrix_construction_and_shapes():
    m = mat([[1, 2], [3, 4], [5, 6]], QQ)
    assert (m.rows, m.cols) == (3, 2)
    assert m.entry(2, 1) == 6
    assert m.column(0) == [1, 3, 5]
    assert m.transpose().to_rows() == [[1, 3, 5], [2, 4, 6]]
    ident = Matrix.identity(2, QQ)
    assert m.matmul(ident).to_rows() == m.to_rows()
    z = Matrix.zeros(3, 2, QQ)
    assert z.is_zero() and not m.is_zero()


def test_matrix_matmul_and_matvec():
    a = mat([[1, 2], [3, 4]], QQ)
    b = mat([[0, 1], [1, 0]], QQ)
    assert a.matmul(b).to_rows() == [[2, 1], [4, 3]]
    assert a.matvec([1, 1]) == [3, 7]
    with pytest.raises(ValueError):
        a.matmul(mat([[1, 2]], QQ))


def test_rank_known_matrices():
    assert rank(mat([[1, 2], [2, 4]], QQ)) == 1
    assert rank(mat([[1, 2], [3, 4]], QQ)) == 2
    assert rank(Matrix.zeros(3, 5, QQ)) == 0
    assert rank(Matrix.identity(4, GF3)) == 4
    # mod 2 the two rows coincide
    assert rank(mat([[1, 1], [3, 1]], GF2)) == 1
    assert rank(mat([[1, 1], [3, 1]], QQ)) == 2


def test_rank_needs_fractions():
    # forward elimination must not lose exactness on this matrix
    m = mat([[2, 1, 1], [4, 3, 3], [8, 7, 9]], QQ)
    assert rank(m) == 3


def test_rref_identifies_pivots():
    r = rref(mat([[0, 1, 2], [0, 2, 4]], QQ))
    assert r.rank == 1
    assert r.pivots == (1,)


def test_nullspace_annihilated():
    m = mat([[1, 2, 3], [2, 4, 6]], QQ)
    basis = nullspace_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert m.matvec(v) == [QQ.zero] * m.rows


def test_solver_roundtrip_and_not_in_span():
    cols = [[QQ.of_int(1), QQ.of_int(0)], [QQ.of_int(1), QQ.of_int(1)]]
    s = LinearSolver(cols, 2, QQ)
    x = s.solve([QQ.of_int(3), QQ.of_int(2)])
    assert x == [QQ.of_int(1), QQ.of_int(2)]
    s2 = LinearSolver([[QQ.of_int(1), QQ.of_int(0)]], 2, QQ)
    with pytest.raises(NotInSpan):
        s2.solve([QQ.of_int(0), QQ.of_int(1)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_rank_transpose_invariant(nr, nc, data):
    entries = data.draw(st.lists(
        st.integers(-4, 4), min_size=nr * nc, max_size=nr * nc))
    for field in (QQ, GF2):
        if nr == 0 or nc == 0:
            continue
        rows = [[field.of_int(entries[i * nc + j]) for j in range(nc)]
                for i in range(nr)]
        m = Matrix.from_rows(rows, field, cols=nc)
        assert rank(m) == rank(m.transpose())
        assert rank(m) <= min(nr, nc)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10_000))
def test_rank_nullity(nr, nc, seed):
    rng = random.Random(seed)
    for field in (QQ, GF3):
        rows = [[field.of_int(rng.randint(-3, 3)) for _ in range(nc)]
                for _ in range(nr)]
        m = Matrix.from_rows(rows, field, cols=nc)
        assert rank(m) + len(nullspace_basis(m)) == nc
