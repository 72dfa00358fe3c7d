"""Sources of left-symmetric dialgebras for testing and experiments.

Any left-symmetric algebra gives a left-symmetric dialgebra by using its
product for both ``⊣`` and ``⊢`` (:func:`lift`). The seeds below are small
associative and left-symmetric algebras; :func:`random_left_symmetric`
perturbs them and the catalog classes by random basis changes and scalings,
both of which preserve the axioms.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Algebra, change_basis, check_left_symmetric
from .catalog import CLASS_IDS, PARAMETERS, ClassSpec, instantiate
from .linalg import QMatrix, rank


def lift(dim: int, products: dict, name: str = "") -> Algebra:
    return Algebra.from_single_product(dim, products, name)


def truncated_polynomials(n: int) -> Algebra:
    """k[x]/(x^n) on the basis 1, x, ..., x^{n-1}."""
    prods = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    return lift(n, prods, f"k[x]/(x^{n})")


def upper_triangular() -> Algebra:
    """2x2 upper triangular matrices on the basis E11, E12, E22."""
    E11, E12, E22 = 0, 1, 2
    prods = {(E11, E11): {E11: 1}, (E11, E12): {E12: 1}, (E12, E22): {E12: 1}, (E22, E22): {E22: 1}}
    return lift(3, prods, "upper triangular 2x2")


def matrix_algebra() -> Algebra:
    """All 2x2 matrices on E11, E12, E21, E22."""
    idx = {(r, c): 2 * r + c for r in range(2) for c in range(2)}
    prods = {}
    for (r, c), i in idx.items():
        for (s, t), j in idx.items():
            if c == s:
                prods[(i, j)] = {idx[(r, t)]: 1}
    return lift(4, prods, "M2")


def nonassociative_lsa() -> Algebra:
    """The 2-dimensional left-symmetric algebra with e2·e1 = e1 (not associative)."""
    return lift(2, {(1, 0): {0: 1}}, "LSA e2e1=e1")


SEEDS = (truncated_polynomials, upper_triangular, matrix_algebra, nonassociative_lsa)


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_class_spec(rng: random.Random, class_id: str | None = None) -> ClassSpec:
    """Random parameters satisfying the class constraint."""
    class_id = class_id or rng.choice(CLASS_IDS)
    while True:
        params = {p: random_rational(rng) for p in PARAMETERS[class_id]}
        spec = ClassSpec(class_id, params)
        if spec.violated_constraint() is None:
            return spec


def random_invertible(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> QMatrix:
    while True:
        P = QMatrix(n, n, (rng.randint(lo, hi) for _ in range(n * n)))
        if rank(P) == n:
            return P


def scale(alg: Algebra, c) -> Algebra:
    """Multiply both products by ``c``; the identities are homogeneous so this is safe."""
    c = Fraction(c)
    def mul(t):
        return [[[c * x for x in r] for r in p] for p in t]
    return Algebra.from_tensors(mul(alg.left), mul(alg.right), alg.name)


def random_left_symmetric(rng: random.Random) -> Algebra:
    """A random left-symmetric dialgebra, axioms verified before returning."""
    kind = rng.randrange(3)
    if kind == 0:
        seed = rng.choice(SEEDS)
        alg = seed(rng.randint(2, 3)) if seed is truncated_polynomials else seed()
    else:
        alg = instantiate(random_class_spec(rng))
    if rng.random() < 0.5:
        alg = scale(alg, random_rational(rng, 1, 5))
    alg = change_basis(alg, random_invertible(rng, alg.dim))
    if not check_left_symmetric(alg).satisfied:
        raise AssertionError(f"generator produced a non left-symmetric algebra from {alg.name}")
    return alg
