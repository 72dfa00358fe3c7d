"""Finite-dimensional algebras with two bilinear products.

An :class:`Algebra` stores the structure constants of a left product ``⊣``
and a right product ``⊢`` on a basis ``e_0 .. e_{n-1}``:
``left[i][j][k]`` is the coefficient of ``e_k`` in ``e_i ⊣ e_j`` and
``right[i][j][k]`` the coefficient of ``e_k`` in ``e_i ⊢ e_j``.

Linear maps are matrices in the column convention: column ``j`` holds the
image of ``e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Mapping, Sequence

from .linalg import QMatrix, QVector, ShapeMismatch, invert, is_zero_vector, matvec

LEFT = "left"
RIGHT = "right"

LEFT_SYMMETRIC_AXIOMS = ("LS1", "LS2", "LS3", "LS4")
DIASSOCIATIVE_AXIOMS = ("DI1", "DI2", "DI3", "ASSOC-L", "ASSOC-R")


def _tensor(n: int, entries: Mapping | None) -> tuple:
    t = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in (entries or {}).items():
        for k, c in terms.items():
            t[i][j][k] = Fraction(c)
    return tuple(tuple(tuple(row) for row in plane) for plane in t)


@dataclass(frozen=True)
class Algebra:
    dim: int
    left: tuple
    right: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be at least 1")
        for t in (self.left, self.right):
            if len(t) != n or any(len(p) != n or any(len(r) != n for r in p) for p in t):
                raise ShapeMismatch(f"structure tensor is not {n}x{n}x{n}")

    @classmethod
    def from_products(cls, dim: int, left: Mapping | None = None, right: Mapping | None = None,
                      name: str = "") -> "Algebra":
        """Build from sparse products ``{(i, j): {k: coeff}}`` with 0-based indices."""
        return cls(dim, _tensor(dim, left), _tensor(dim, right), name)

    @classmethod
    def from_tensors(cls, left, right, name: str = "") -> "Algebra":
        n = len(left)
        lt = tuple(tuple(tuple(Fraction(c) for c in r) for r in p) for p in left)
        rt = tuple(tuple(tuple(Fraction(c) for c in r) for r in p) for p in right)
        return cls(n, lt, rt, name)

    @classmethod
    def zero(cls, dim: int) -> "Algebra":
        return cls.from_products(dim, name=f"zero{dim}")

    @classmethod
    def from_single_product(cls, dim: int, products: Mapping, name: str = "") -> "Algebra":
        """Use one product for both ``⊣`` and ``⊢``."""
        return cls.from_products(dim, products, products, name)

    def tensor(self, which: str) -> tuple:
        if which == LEFT:
            return self.left
        if which == RIGHT:
            return self.right
        raise ValueError(f"unknown product {which!r}")

    def basis_vector(self, i: int) -> QVector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def multiply(self, which: str, x: Sequence, y: Sequence) -> QVector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ShapeMismatch(f"expected vectors of length {n}")
        t = self.tensor(which)
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                s = x[i] * y[j]
                for k, c in enumerate(t[i][j]):
                    if c:
                        out[k] += s * c
        return tuple(out)

    def product_left(self, x: Sequence, y: Sequence) -> QVector:
        return self.multiply(LEFT, x, y)

    def product_right(self, x: Sequence, y: Sequence) -> QVector:
        return self.multiply(RIGHT, x, y)

    def nonzero_products(self, which: str):
        """Yield ``(i, j, k, coeff)`` for every nonzero structure constant."""
        t = self.tensor(which)
        for i, j, k in cartesian(range(self.dim), repeat=3):
            if t[i][j][k]:
                yield i, j, k, t[i][j][k]

    def is_zero(self) -> bool:
        return not any(True for w in (LEFT, RIGHT) for _ in self.nonzero_products(w))


@dataclass(frozen=True)
class Violation:
    axiom: str
    triple: tuple  # 0-based basis indices (p, q, r)
    residual: QVector


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple = ()

    @property
    def satisfied(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> list[str]:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _identities_left_symmetric(alg: Algebra) -> dict[str, Callable]:
    L = alg.product_left
    R = alg.product_right

    def ls1(p, q, r):
        return _sub(L(p, L(q, r)), L(p, R(q, r)))

    def ls2(p, q, r):
        return _sub(R(R(p, q), r), R(L(p, q), r))

    def ls3(p, q, r):
        lhs = _sub(L(p, L(q, r)), L(L(p, q), r))
        rhs = _sub(R(q, L(p, r)), L(R(q, p), r))
        return _sub(lhs, rhs)

    def ls4(p, q, r):
        lhs = _sub(R(p, R(q, r)), R(R(p, q), r))
        rhs = _sub(R(q, R(p, r)), R(R(q, p), r))
        return _sub(lhs, rhs)

    return dict(zip(LEFT_SYMMETRIC_AXIOMS, (ls1, ls2, ls3, ls4)))


def _identities_diassociative(alg: Algebra) -> dict[str, Callable]:
    L = alg.product_left
    R = alg.product_right
    return {
        "DI1": lambda p, q, r: _sub(L(p, L(q, r)), L(p, R(q, r))),
        "DI2": lambda p, q, r: _sub(L(R(p, q), r), R(p, L(q, r))),
        "DI3": lambda p, q, r: _sub(R(R(p, q), r), R(L(p, q), r)),
        "ASSOC-L": lambda p, q, r: _sub(L(L(p, q), r), L(p, L(q, r))),
        "ASSOC-R": lambda p, q, r: _sub(R(R(p, q), r), R(p, R(q, r))),
    }


def _check(alg: Algebra, identities: dict[str, Callable]) -> AxiomReport:
    # trilinear identities: checking basis triples decides them everywhere
    e = [alg.basis_vector(i) for i in range(alg.dim)]
    violations = []
    for name, identity in identities.items():
        for p, q, r in cartesian(range(alg.dim), repeat=3):
            res = identity(e[p], e[q], e[r])
            if not is_zero_vector(res):
                violations.append(Violation(name, (p, q, r), res))
    return AxiomReport(tuple(violations))


def check_left_symmetric(alg: Algebra) -> AxiomReport:
    """Evaluate the four left-symmetric dialgebra identities on all basis triples.

    LS1: p⊣(q⊣r) = p⊣(q⊢r)
    LS2: (p⊢q)⊢r = (p⊣q)⊢r
    LS3: p⊣(q⊣r) - (p⊣q)⊣r = q⊢(p⊣r) - (q⊢p)⊣r
    LS4: p⊢(q⊢r) - (p⊢q)⊢r = q⊢(p⊢r) - (q⊢p)⊢r

    Residuals are left side minus right side.
    """
    return _check(alg, _identities_left_symmetric(alg))


def check_diassociative(alg: Algebra) -> AxiomReport:
    """Diassociative algebra axioms DI1..DI3 plus associativity of each product."""
    return _check(alg, _identities_diassociative(alg))


def change_basis(alg: Algebra, P: QMatrix) -> Algebra:
    """Structure constants of ``alg`` in the basis ``f_j = sum_k P[k, j] e_k``.

    Coordinates transform as ``x_old = P x_new``, so the matrix ``P`` itself
    is an isomorphism from the returned algebra onto ``alg``.
    """
    n = alg.dim
    if P.shape != (n, n):
        raise ShapeMismatch(f"basis change must be {n}x{n}")
    Pinv = invert(P)
    f = [P.column(j) for j in range(n)]
    tensors = []
    for which in (LEFT, RIGHT):
        t = [[list(matvec(Pinv, alg.multiply(which, f[i], f[j]))) for j in range(n)] for i in range(n)]
        tensors.append(t)
    return Algebra.from_tensors(*tensors, name=alg.name)


def transport_map(D: QMatrix, P: QMatrix) -> QMatrix:
    """Matrix of the linear map ``D`` (old coordinates) in the basis given by ``P``."""
    return invert(P) @ D @ P


def is_morphism(src: Algebra, dst: Algebra, P: QMatrix) -> bool:
    """True iff the map with matrix ``P`` preserves both products on basis pairs."""
    if P.shape != (dst.dim, src.dim):
        raise ShapeMismatch(f"morphism matrix must be {dst.dim}x{src.dim}")
    img = [P.column(j) for j in range(src.dim)]
    for which in (LEFT, RIGHT):
        for i, j in cartesian(range(src.dim), repeat=2):
            lhs = matvec(P, src.multiply(which, src.basis_vector(i), src.basis_vector(j)))
            if lhs != dst.multiply(which, img[i], img[j]):
                return False
    return True
