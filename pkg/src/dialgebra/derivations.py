"""Generalized (rho, tau, sigma)-derivations of two-product algebras.

A linear map ``d`` is a (rho, tau, sigma)-derivation when, for both products
``*`` and all ``p, q``::

    rho d(p * q) = tau d(p) * q + sigma p * d(q)

The space of such maps is the kernel of a ``2 n^3 x n^2`` linear system in
the entries of ``d``. Everything here is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import NamedTuple, Sequence

from .algebra import LEFT, RIGHT, Algebra
from .linalg import (QMatrix, ShapeMismatch, matvec, nullspace, rank, solve,
                     span_rref)


class UnboundedSpace(ValueError):
    """The all-zero triple has no defining equation: its space is End S."""


class InternalInconsistency(RuntimeError):
    pass


class WeightTriple(NamedTuple):
    rho: Fraction
    tau: Fraction
    sigma: Fraction

    @classmethod
    def of(cls, rho, tau, sigma) -> "WeightTriple":
        return cls(Fraction(rho), Fraction(tau), Fraction(sigma))

    def squared(self) -> "WeightTriple":
        return WeightTriple(self.rho ** 2, self.tau ** 2, self.sigma ** 2)

    def scaled(self, c) -> "WeightTriple":
        c = Fraction(c)
        return WeightTriple(c * self.rho, c * self.tau, c * self.sigma)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self) + ")"


class Family(enum.Enum):
    D111 = "111"
    D110 = "110"
    D101 = "101"
    D100 = "100"
    D011 = "011"
    D001 = "001"
    D010 = "010"
    D01d = "01d"
    EndS = "end"

    @property
    def tag(self) -> str:
        return self.value

    @classmethod
    def from_tag(cls, tag: str) -> "Family":
        tag = tag.strip().lower()
        if tag in ("01δ", "01delta"):
            tag = "01d"
        for fam in cls:
            if fam.value == tag or fam.name.lower() == tag:
                return fam
        raise ValueError(f"unknown family tag {tag!r}")

    @property
    def label(self) -> str:
        if self is Family.EndS:
            return "End S"
        if self is Family.D01d:
            return "(0,1,δ)"
        return "(" + ",".join(self.value) + ")"


# table column order
FAMILIES = (Family.D111, Family.D110, Family.D101, Family.D100,
            Family.D011, Family.D001, Family.D010, Family.D01d)

# two readings of the rho = 0 families: "prop" solves the displayed equations
# d(p)*q = p*d(q) and d(p)*q = delta p*d(q); "def" feeds (0,1,1) and
# (0,1,delta) straight into the derivation identity.
READINGS = ("prop", "def")


@dataclass(frozen=True)
class CanonicalWeightClass:
    family: Family
    delta: Fraction | None = None

    def __post_init__(self):
        if self.family is Family.D01d:
            if self.delta is None or self.delta in (0, 1):
                raise ValueError("the (0,1,delta) family needs delta outside {0, 1}")
        elif self.delta is not None:
            raise ValueError(f"family {self.family.name} takes no delta")

    def __str__(self):
        if self.family is Family.D01d:
            return f"D01δ(delta={self.delta})"
        return self.family.name


def canonicalize_triple(t: WeightTriple) -> CanonicalWeightClass:
    """Bucket a raw triple into its canonical family.

    With rho != 0 the triple is divided by rho and each of tau/rho, sigma/rho
    is read as 1 when nonzero. With rho = 0 and tau != 0 the ratio sigma/tau
    picks (0,1,1), (0,1,0) or (0,1,delta).
    """
    rho, tau, sigma = (Fraction(x) for x in t)
    if rho != 0:
        key = (1, int(tau != 0), int(sigma != 0))
        return CanonicalWeightClass(Family("".join(map(str, key))))
    if tau != 0:
        ratio = sigma / tau
        if ratio == 0:
            return CanonicalWeightClass(Family.D010)
        if ratio == 1:
            return CanonicalWeightClass(Family.D011)
        return CanonicalWeightClass(Family.D01d, ratio)
    if sigma != 0:
        return CanonicalWeightClass(Family.D001)
    return CanonicalWeightClass(Family.EndS)


def defining_equations(cls: CanonicalWeightClass | Family, reading: str = "prop",
                       delta=None) -> WeightTriple:
    """The raw triple whose derivation identity is the family's equation."""
    if isinstance(cls, Family):
        cls = CanonicalWeightClass(cls, None if delta is None else Fraction(delta))
    fam = cls.family
    if fam is Family.EndS:
        raise UnboundedSpace("End S is not cut out by any equation")
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    sign = -1 if reading == "prop" else 1
    if fam is Family.D011:
        return WeightTriple.of(0, 1, sign)
    if fam is Family.D01d:
        return WeightTriple.of(0, 1, sign * cls.delta)
    return WeightTriple.of(*(int(ch) for ch in fam.value))


def _check_square(alg: Algebra, D: QMatrix):
    if D.shape != (alg.dim, alg.dim):
        raise ShapeMismatch(f"expected a {alg.dim}x{alg.dim} matrix, got {D.rows}x{D.cols}")


def derivation_residuals(alg: Algebra, t: WeightTriple, D: QMatrix) -> list:
    """Residual ``rho d(e_i*e_j) - tau d(e_i)*e_j - sigma e_i*d(e_j)`` per basis pair.

    Computed by direct evaluation of the products; returns
    ``[(which, i, j, vector), ...]`` over both products and all pairs.
    """
    _check_square(alg, D)
    rho, tau, sigma = t
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    images = [D.column(j) for j in range(n)]
    out = []
    for which in (LEFT, RIGHT):
        for i, j in cartesian(range(n), repeat=2):
            a = matvec(D, alg.multiply(which, e[i], e[j]))
            b = alg.multiply(which, images[i], e[j])
            c = alg.multiply(which, e[i], images[j])
            out.append((which, i, j, tuple(rho * x - tau * y - sigma * z for x, y, z in zip(a, b, c))))
    return out


def is_derivation(alg: Algebra, t: WeightTriple, D: QMatrix) -> bool:
    return all(not any(r) for *_, r in derivation_residuals(alg, t, D))


def derivation_system(alg: Algebra, t: WeightTriple) -> QMatrix:
    """Coefficient matrix of the derivation identity in the unknowns ``vec(D)``.

    Rows run over (product, i, j, k), columns over the column-major
    vectorization of ``D`` (entry ``D[r, c]`` is unknown ``c * n + r``).
    With ``D[k, m]`` the coefficient of ``e_k`` in ``d(e_m)``, the ``k``-th
    coordinate of the identity at ``(e_i, e_j)`` is::

        rho sum_m g_ijm D[k,m] - tau sum_m D[m,i] g_mjk - sigma sum_m D[m,j] g_imk
    """
    rho, tau, sigma = (Fraction(x) for x in t)
    n = alg.dim
    nn = n * n
    rows = []
    for which in (LEFT, RIGHT):
        g = alg.tensor(which)
        for i, j, k in cartesian(range(n), repeat=3):
            row = [Fraction(0)] * nn
            for m in range(n):
                row[m * n + k] += rho * g[i][j][m]
                row[i * n + m] -= tau * g[m][j][k]
                row[j * n + m] -= sigma * g[i][m][k]
            rows.append(row)
    return QMatrix.from_rows(rows, nn)


@dataclass(frozen=True)
class DerivationSpace:
    algebra: Algebra
    triple: WeightTriple
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def key(self) -> QMatrix:
        """Stacked RREF of the vectorized basis; equal keys mean equal subspaces."""
        n = self.algebra.dim
        return span_rref([b.vectorize() for b in self.basis], n * n)

    def contains(self, D: QMatrix) -> bool:
        return is_derivation(self.algebra, self.triple, D)


def derivation_space(alg: Algebra, t) -> DerivationSpace:
    t = WeightTriple.of(*t)
    n = alg.dim
    vecs = nullspace(derivation_system(alg, t))
    return DerivationSpace(alg, t, tuple(QMatrix.unvectorize(v, n) for v in vecs))


def family_space(alg: Algebra, family: Family, delta=None, reading: str = "prop") -> DerivationSpace:
    if family is Family.EndS:
        return derivation_space(alg, (0, 0, 0))
    if family is not Family.D01d:
        delta = None
    return derivation_space(alg, defining_equations(family, reading, delta))


def bracket(d1: QMatrix, d2: QMatrix) -> QMatrix:
    if d1.shape != d2.shape or d1.rows != d1.cols:
        raise ShapeMismatch("bracket needs two square matrices of the same size")
    return d1 @ d2 - d2 @ d1


def verify_bracket_closure(alg: Algebra, t) -> bool:
    """Commutators of (rho,tau,sigma)-derivations are (rho²,tau²,sigma²)-derivations."""
    space = derivation_space(alg, t)
    sq = space.triple.squared()
    B = space.basis
    return all(is_derivation(alg, sq, bracket(B[i], B[j]))
               for i in range(len(B)) for j in range(i + 1, len(B)))


def der_lie_structure(alg: Algebra) -> tuple[tuple, tuple]:
    """Bracket structure constants of Der(S) in its canonical basis.

    Returns ``(basis, c)`` with ``[B_i, B_j] = sum_k c[i][j][k] B_k``.
    """
    basis = derivation_space(alg, (1, 1, 1)).basis
    m = len(basis)
    if m == 0:
        return basis, ()
    M = QMatrix.from_columns([b.vectorize() for b in basis])
    consts = []
    for i in range(m):
        plane = []
        for j in range(m):
            coords = solve(M, bracket(basis[i], basis[j]).vectorize())
            if coords is None:
                raise InternalInconsistency(f"[B{i}, B{j}] is not a derivation")
            plane.append(coords)
        consts.append(tuple(plane))
    return basis, tuple(consts)


def lower_central_series(consts: Sequence) -> list[int]:
    """Dimensions of L, [L,L], [L,[L,L]], ... until zero or stable."""
    m = len(consts)
    current = [tuple(Fraction(int(i == k)) for k in range(m)) for i in range(m)]
    dims = [m]
    while current:
        products = []
        for i in range(m):
            for y in current:
                products.append(tuple(sum((y[j] * consts[i][j][k] for j in range(m) if y[j]), Fraction(0))
                                      for k in range(m)))
        reduced = span_rref(products, m)
        current = [reduced.row(r) for r in range(reduced.rows)]
        if len(current) == dims[-1]:
            break
        dims.append(len(current))
    return dims


def is_characteristically_nilpotent(alg: Algebra) -> bool:
    _, consts = der_lie_structure(alg)
    return lower_central_series(consts)[-1] == 0


def oracle_residual_matrix(alg: Algebra, t: WeightTriple) -> QMatrix:
    """Residuals of the elementary maps, one column each, via direct evaluation.

    By linearity its rank equals ``n^2 - dim Der``; the construction never
    touches :func:`derivation_system`, so it certifies dimensions independently.
    """
    n = alg.dim
    cols = []
    for c, r in cartesian(range(n), repeat=2):
        E = QMatrix(n, n, (int(i == r and j == c) for i in range(n) for j in range(n)))
        cols.append(tuple(x for *_, res in derivation_residuals(alg, t, E) for x in res))
    return QMatrix.from_columns(cols)


def oracle_dimension(alg: Algebra, t) -> int:
    return alg.dim ** 2 - rank(oracle_residual_matrix(alg, WeightTriple.of(*t)))
