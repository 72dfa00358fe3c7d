from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dialgebra.linalg import (QMatrix, ShapeMismatch, SingularMatrix,
                              format_rational, invert, matadd, matmul,
                              matvec, nullspace, parse_rational, rank, rref,
                              scalar_mul, solve)

F = Fraction


def M(*rows):
    return QMatrix.from_rows(rows)


small_ints = st.integers(min_value=-3, max_value=3)
fractions = st.builds(F, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def matrices(draw, max_rows=5, max_cols=5, elements=fractions):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return QMatrix(r, c, draw(st.lists(elements, min_size=r * c, max_size=r * c)))


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


class TestRational:
    @pytest.mark.parametrize("text,value", [
        ("-3/2", F(-3, 2)), ("0", F(0)), ("7", F(7)), ("4/6", F(2, 3)), ("-0", F(0)), (" 5/10 ", F(1, 2)),
    ])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["1/0", "", "1.5", "a", "1/-2", "--1", "1/2/3", "+1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    @pytest.mark.parametrize("value,text", [(F(-3, 2), "-3/2"), (F(0), "0"), (F(7), "7"), (F(6, 4), "3/2")])
    def test_format(self, value, text):
        assert format_rational(value) == text

    @given(fractions)
    def test_roundtrip_and_canonical(self, x):
        assert parse_rational(format_rational(x)) == x
        assert x.denominator > 0
        from math import gcd
        assert gcd(abs(x.numerator), x.denominator) == 1


class TestRref:
    def test_already_reduced(self):
        reduced, piv, r = rref(M([1, 1], [0, 0]))
        assert reduced == M([1, 1], [0, 0]) and piv == (0,) and r == 1

    def test_zero(self):
        reduced, piv, r = rref(QMatrix.zeros(2))
        assert reduced == QMatrix.zeros(2) and piv == () and r == 0

    def test_full_rank(self):
        m = M([2, 4], [1, 3])
        reduced, piv, r = rref(m)
        assert reduced == QMatrix.identity(2) and piv == (0, 1) and r == 2
        # hand elimination: inverse is [[3/2, -2], [-1/2, 1]]
        assert matmul(m, M([F(3, 2), -2], [F(-1, 2), 1])) == QMatrix.identity(2)

    @given(matrices())
    def test_matches_sympy(self, m):
        reduced, piv, r = rref(m)
        ref, ref_piv = to_sympy(m).rref()
        assert to_sympy(reduced) == ref
        assert piv == tuple(ref_piv)
        assert r == len(ref_piv)

    @given(matrices())
    def test_idempotent(self, m):
        reduced = rref(m)[0]
        assert rref(reduced)[0] == reduced

    @given(matrices())
    def test_pivots_increasing(self, m):
        piv = rref(m)[1]
        assert list(piv) == sorted(set(piv))


class TestNullspace:
    def test_single_relation(self):
        assert nullspace(M([1, 1], [0, 0])) == [(F(-1), F(1))]

    def test_trivial_kernel(self):
        assert nullspace(QMatrix.identity(2)) == []

    def test_full_kernel(self):
        assert nullspace(QMatrix.zeros(2)) == [(F(1), F(0)), (F(0), F(1))]

    @given(matrices())
    def test_kernel_vectors_annihilated(self, m):
        for v in nullspace(m):
            assert all(x == 0 for x in matvec(m, v))

    @given(matrices())
    def test_rank_nullity(self, m):
        assert m.cols == rank(m) + len(nullspace(m))

    @given(matrices())
    def test_free_variable_convention(self, m):
        _, piv, _ = rref(m)
        free = [c for c in range(m.cols) if c not in piv]
        for v, f in zip(nullspace(m), free):
            assert [v[c] for c in free] == [int(c == f) for c in free]


class TestInvert:
    def test_identity(self):
        assert invert(QMatrix.identity(3)) == QMatrix.identity(3)

    def test_diagonal(self):
        assert invert(QMatrix.diag(2, 1)) == M([F(1, 2), 0], [0, 1])

    def test_shear(self):
        inv = invert(M([1, 1], [0, 1]))
        assert inv == M([1, -1], [0, 1])
        assert matmul(M([1, 1], [0, 1]), inv) == QMatrix.identity(2)

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            invert(M([1, 2], [2, 4]))

    def test_non_square(self):
        with pytest.raises(ShapeMismatch):
            invert(QMatrix.zeros(2, 3))

    @settings(max_examples=200)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(small_ints, min_size=n * n, max_size=n * n))))
    def test_roundtrip(self, data):
        n, entries = data
        m = QMatrix(n, n, entries)
        if rank(m) < n:
            with pytest.raises(SingularMatrix):
                invert(m)
            return
        inv = invert(m)
        assert matmul(m, inv) == QMatrix.identity(n)
        assert matmul(inv, m) == QMatrix.identity(n)


class TestArithmetic:
    def test_identity_left(self):
        a = M([1, 2], [3, F(1, 2)])
        assert matmul(QMatrix.identity(2), a) == a

    def test_zero(self):
        a = M([1, 2], [3, 4])
        assert matmul(QMatrix.zeros(2), a) == QMatrix.zeros(2)

    def test_units(self):
        assert matmul(M([0, 1], [0, 0]), M([0, 0], [1, 0])) == M([1, 0], [0, 0])

    def test_add_and_scale(self):
        a = M([1, 2], [3, 4])
        assert matadd(a, a) == scalar_mul(2, a)
        assert a - a == QMatrix.zeros(2)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            matmul(QMatrix.zeros(2, 3), QMatrix.zeros(2, 3))
        with pytest.raises(ShapeMismatch):
            matadd(QMatrix.zeros(2), QMatrix.zeros(3))
        with pytest.raises(ShapeMismatch):
            QMatrix(2, 2, [1, 2, 3])

    @given(matrices(max_rows=3, max_cols=3), matrices(max_rows=3, max_cols=3))
    def test_matmul_matches_sympy(self, a, b):
        if a.cols != b.rows:
            return
        assert to_sympy(matmul(a, b)) == to_sympy(a) * to_sympy(b)

    def test_immutable(self):
        a = QMatrix.identity(2)
        with pytest.raises(AttributeError):
            a.rows = 3

    @given(matrices())
    def test_vectorize_roundtrip(self, m):
        v = m.vectorize()
        assert v[:m.rows] == m.column(0)
        assert QMatrix.unvectorize(v, m.rows, m.cols) == m

    def test_solve(self):
        assert solve(M([1, 1], [0, 1]), [3, 1]) == (F(2), F(1))
        assert solve(M([1, 1], [1, 1]), [1, 2]) is None
