import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dialgebra.algebra import Algebra, change_basis, transport_map
from dialgebra.catalog import CLASS_IDS, default_sample_params, instantiate, make_spec
from dialgebra.derivations import (FAMILIES, CanonicalWeightClass, Family,
                                   InternalInconsistency, UnboundedSpace,
                                   WeightTriple, bracket, canonicalize_triple,
                                   defining_equations, der_lie_structure,
                                   derivation_space, derivation_system,
                                   family_space,
                                   is_characteristically_nilpotent,
                                   is_derivation, lower_central_series,
                                   oracle_dimension, verify_bracket_closure)
from dialgebra.generators import random_left_symmetric
from dialgebra.linalg import QMatrix, ShapeMismatch, matvec, rank

F = Fraction
T = WeightTriple.of

rationals = st.builds(F, st.integers(-9, 9), st.integers(1, 5))


def M(*rows):
    return QMatrix.from_rows(rows)


def sympy_dimension(alg, t):
    """Solve the derivation identity symbolically with sympy; independent oracle."""
    n = alg.dim
    syms = sympy.symbols(f"x0:{n * n}")
    D = sympy.Matrix(n, n, syms)
    rho, tau, sigma = (sympy.Rational(x.numerator, x.denominator) for x in t)

    def mul(tensor, x, y):
        return sympy.Matrix([sum(sympy.Rational(str(tensor[i][j][k])) * x[i] * y[j]
                                 for i in range(n) for j in range(n)) for k in range(n)])

    eqs = []
    for tensor in (alg.left, alg.right):
        for i in range(n):
            for j in range(n):
                ei, ej = sympy.eye(n)[:, i], sympy.eye(n)[:, j]
                res = rho * D * mul(tensor, ei, ej) - tau * mul(tensor, D * ei, ej) - sigma * mul(tensor, ei, D * ej)
                eqs.extend(res)
    A = sympy.Matrix([[sympy.diff(q, v) for v in syms] for q in eqs])
    return n * n - A.rank()


class TestCanonicalize:
    @pytest.mark.parametrize("raw,family,delta", [
        ((2, 2, 2), Family.D111, None),
        ((0, 0, 5), Family.D001, None),
        ((0, 2, 6), Family.D01d, 3),
        ((0, 0, 0), Family.EndS, None),
        ((2, 2, 0), Family.D110, None),
        ((3, 0, 3), Family.D101, None),
        ((-1, 0, 0), Family.D100, None),
        ((0, 4, 4), Family.D011, None),
        ((0, 4, 0), Family.D010, None),
        ((0, 1, -1), Family.D01d, -1),
        ((1, 2, 0), Family.D110, None),
    ])
    def test_examples(self, raw, family, delta):
        cls = canonicalize_triple(T(*raw))
        assert cls.family is family
        assert cls.delta == (None if delta is None else F(delta))

    def test_delta_constraint(self):
        with pytest.raises(ValueError):
            CanonicalWeightClass(Family.D01d, F(1))
        with pytest.raises(ValueError):
            CanonicalWeightClass(Family.D01d, F(0))
        with pytest.raises(ValueError):
            CanonicalWeightClass(Family.D111, F(3))

    @given(st.tuples(*[rationals] * 3), rationals.filter(lambda x: x != 0))
    def test_scaling_invariant(self, raw, c):
        t = T(*raw)
        assert canonicalize_triple(t) == canonicalize_triple(t.scaled(c))


class TestDefiningEquations:
    def test_conforming(self):
        assert defining_equations(CanonicalWeightClass(Family.D111)) == T(1, 1, 1)
        assert defining_equations(CanonicalWeightClass(Family.D001)) == T(0, 0, 1)

    def test_rho_zero_prop_reading(self):
        assert defining_equations(CanonicalWeightClass(Family.D011)) == T(0, 1, -1)
        assert defining_equations(CanonicalWeightClass(Family.D01d, F(3))) == T(0, 1, -3)

    def test_rho_zero_def_reading(self):
        assert defining_equations(Family.D011, "def") == T(0, 1, 1)
        assert defining_equations(Family.D01d, "def", 3) == T(0, 1, 3)

    def test_end_s(self):
        with pytest.raises(UnboundedSpace):
            defining_equations(CanonicalWeightClass(Family.EndS))

    def test_prop_reading_matches_displayed_equation(self):
        alg = Algebra.from_single_product(2, {(1, 0): {0: 1}})
        D = M([1, 0], [0, 0])
        # e2 * d(e1) = e1 and d(e2) * e1 = 0, so D satisfies neither (0,1,δ) reading for δ != 0
        for reading in ("prop", "def"):
            assert not is_derivation(alg, defining_equations(Family.D01d, reading, 3), D)
        # identity map: d(p)*q = p*d(q) holds, i.e. the displayed (0,1,1) equation
        assert is_derivation(alg, defining_equations(Family.D011, "prop"), QMatrix.identity(2))
        assert not is_derivation(alg, defining_equations(Family.D011, "def"), QMatrix.identity(2))


class TestIsDerivation:
    @pytest.mark.parametrize("cid", CLASS_IDS)
    def test_zero_matrix(self, cid):
        alg = instantiate(default_sample_params(cid))
        for t in [T(1, 1, 1), T(0, 1, -7), T(3, -1, 2)]:
            assert is_derivation(alg, t, QMatrix.zeros(2))

    def test_identity_on_L3(self):
        assert not is_derivation(instantiate(make_spec("L3", b=1)), T(1, 1, 1), QMatrix.identity(2))

    def test_published_L1_cell(self):
        assert is_derivation(instantiate(make_spec("L1", a=2, b=1)), T(1, 1, 1), M([1, 1], [0, 0]))

    def test_row_convention_would_fail(self):
        # transpose of the column-convention witness is not a derivation
        assert not is_derivation(instantiate(make_spec("L1", a=2, b=1)), T(1, 1, 1), M([1, 0], [1, 0]))

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            is_derivation(Algebra.zero(2), T(1, 1, 1), QMatrix.identity(3))


class TestSystem:
    def test_zero_algebra(self):
        assert derivation_system(Algebra.zero(2), T(1, 2, 3)) == QMatrix.zeros(16, 4)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_shape(self, n):
        assert derivation_system(Algebra.zero(n), T(1, 1, 1)).shape == (2 * n ** 3, n * n)

    def test_rank_L1(self):
        assert rank(derivation_system(instantiate(make_spec("L1", a=2, b=1)), T(1, 1, 1))) == 3

    @pytest.mark.parametrize("seed", range(15))
    def test_system_annihilates_exactly_derivations(self, seed):
        rng = random.Random(seed)
        alg = instantiate(default_sample_params(rng.choice(CLASS_IDS)))
        t = T(*(rng.randint(-2, 2) for _ in range(3)))
        A = derivation_system(alg, t)
        for _ in range(10):
            D = QMatrix(2, 2, (rng.randint(-2, 2) for _ in range(4)))
            image_zero = not any(matvec(A, D.vectorize()))
            assert image_zero == is_derivation(alg, t, D)


class TestSpace:
    def test_zero_algebra(self):
        assert derivation_space(Algebra.zero(2), (1, 1, 1)).dim == 4

    def test_L6_101(self):
        sp = derivation_space(instantiate(make_spec("L6", a=3)), (1, 0, 1))
        assert sp.basis == (QMatrix.diag(1, 0), QMatrix.diag(0, 1))

    def test_L1_111(self):
        sp = derivation_space(instantiate(make_spec("L1", a=2, b=1)), (1, 1, 1))
        assert sp.basis == (M([1, 1], [0, 0]),)

    def test_L1_degenerate(self):
        sp = derivation_space(instantiate(make_spec("L1", a=1, b=0)), (1, 1, 1))
        assert sp.dim == 2
        assert all(is_derivation(sp.algebra, sp.triple, b) for b in sp.basis)

    @pytest.mark.parametrize("cid", CLASS_IDS)
    @pytest.mark.parametrize("family", FAMILIES)
    def test_matches_sympy_oracle(self, cid, family):
        alg = instantiate(default_sample_params(cid))
        sp = family_space(alg, family, 7)
        assert sp.dim == sympy_dimension(alg, sp.triple) == oracle_dimension(alg, sp.triple)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2 ** 32))
    def test_random_algebras_and_triples(self, seed):
        rng = random.Random(seed)
        alg = random_left_symmetric(rng)
        t = T(*(rng.randint(-3, 3) for _ in range(3)))
        sp = derivation_space(alg, t)
        n2 = alg.dim ** 2
        assert sp.dim == n2 - rank(derivation_system(alg, t)) == oracle_dimension(alg, t)
        assert all(is_derivation(alg, t, b) for b in sp.basis)

    @pytest.mark.parametrize("cid", CLASS_IDS)
    def test_end_s(self, cid):
        assert derivation_space(instantiate(default_sample_params(cid)), (0, 0, 0)).dim == 4

    @pytest.mark.parametrize("seed", range(10))
    def test_scaling(self, seed):
        rng = random.Random(seed)
        alg = instantiate(default_sample_params(rng.choice(CLASS_IDS)))
        t = T(*(rng.randint(-2, 2) for _ in range(3)))
        c = F(rng.choice([-3, -1, 2, 5]), rng.randint(1, 3))
        assert derivation_space(alg, t).key() == derivation_space(alg, t.scaled(c)).key()

    @pytest.mark.parametrize("cid", CLASS_IDS)
    def test_conjugation_transport(self, cid):
        alg = instantiate(default_sample_params(cid))
        P = M([1, 2], [-1, 1])
        moved = change_basis(alg, P)
        for fam in FAMILIES:
            sp = family_space(alg, fam, 7)
            assert family_space(moved, fam, 7).dim == sp.dim
            for D in sp.basis:
                assert is_derivation(moved, sp.triple, transport_map(D, P))


class TestBracket:
    def test_diagonal(self):
        assert bracket(QMatrix.diag(1, 0), QMatrix.diag(0, 1)) == QMatrix.zeros(2)

    def test_self(self):
        A = M([1, 2], [3, 4])
        assert bracket(A, A) == QMatrix.zeros(2)

    def test_units(self):
        assert bracket(M([0, 1], [0, 0]), M([0, 0], [1, 0])) == QMatrix.diag(1, -1)

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            bracket(QMatrix.identity(2), QMatrix.identity(3))

    def test_closure_examples(self):
        assert verify_bracket_closure(instantiate(make_spec("L1", a=2, b=3)), (1, 1, 1))
        L4 = instantiate(make_spec("L4", c=1))
        assert derivation_space(L4, (1, 0, 1)).dim == 2
        assert verify_bracket_closure(L4, (1, 1, 0))
        assert verify_bracket_closure(L4, (1, 0, 1))
        assert verify_bracket_closure(Algebra.zero(2), (2, 3, 5))


class TestNilpotency:
    def test_zero_algebra_dim1(self):
        basis, consts = der_lie_structure(Algebra.zero(1))
        assert len(basis) == 1 and consts == (((F(0),),),)

    def test_L1(self):
        alg = instantiate(make_spec("L1", a=2, b=1))
        basis, consts = der_lie_structure(alg)
        assert len(basis) == 1 and consts == (((F(0),),),)
        assert is_characteristically_nilpotent(alg)

    def test_gl2(self):
        basis, consts = der_lie_structure(Algebra.zero(2))
        assert len(basis) == 4
        # structure constants reproduce matrix commutators
        for i in range(4):
            for j in range(4):
                combo = QMatrix.zeros(2)
                for k in range(4):
                    combo = combo + consts[i][j][k] * basis[k]
                assert combo == bracket(basis[i], basis[j])
        assert lower_central_series(consts) == [4, 3]
        assert not is_characteristically_nilpotent(Algebra.zero(2))

    def test_trivial_der(self):
        alg = instantiate(default_sample_params("L2"))
        assert derivation_space(alg, (1, 1, 1)).dim == 0
        assert is_characteristically_nilpotent(alg)

    def test_heisenberg_like_series(self):
        # strictly upper triangular 3x3 Lie algebra: series 3, 1, 0
        consts = [[[0] * 3 for _ in range(3)] for _ in range(3)]
        consts[0][1][2], consts[1][0][2] = 1, -1
        assert lower_central_series(consts) == [3, 1, 0]

    def test_inconsistent_structure_raises(self, monkeypatch):
        import dialgebra.derivations as dv
        real = dv.derivation_space

        def broken(alg, t):
            sp = real(alg, t)
            return dv.DerivationSpace(alg, sp.triple, (M([0, 1], [0, 0]), M([0, 0], [1, 0])))
        monkeypatch.setattr(dv, "derivation_space", broken)
        with pytest.raises(InternalInconsistency):
            der_lie_structure(Algebra.zero(2))
