# Left-symmetric dialgebras: axioms, basis changes, morphisms
#
# An algebra is given by two structure-constant tensors, one per product.
# The axiom checkers evaluate every identity on every basis triple, which
# decides it on the whole space because the identities are trilinear.

from dialgebra import (Algebra, QMatrix, change_basis, check_diassociative,
                       check_left_symmetric, instantiate, invert, is_morphism,
                       make_spec)

L5 = instantiate(make_spec("L5", a=2, c=1))
print(L5.name, "left-symmetric:", check_left_symmetric(L5).satisfied)

# L1 is left-symmetric but not diassociative; the report says where.
L1 = instantiate(make_spec("L1", a=2, b=1))
rep = check_diassociative(L1)
for v in rep.violations:
    print("  ", v.axiom, "on basis triple", tuple(i + 1 for i in v.triple), "residual", [str(x) for x in v.residual])

# A broken algebra: e1 ⊣ e1 = e1 but e1 ⊢ e1 = e2.
bad = Algebra.from_products(2, left={(0, 0): {0: 1}}, right={(0, 0): {1: 1}})
print("broken algebra violates:", check_left_symmetric(bad).axioms_violated())

# Change of basis: f_j = sum_k P[k, j] e_k. The matrix P maps the new
# coordinates back to the old ones, so it is an isomorphism new -> old.
P = QMatrix.from_rows([[1, 1], [-1, 2]])
moved = change_basis(L5, P)
print("transported algebra still left-symmetric:", check_left_symmetric(moved).satisfied)
print("P is a morphism moved -> L5:", is_morphism(moved, L5, P))
print("P^-1 is a morphism L5 -> moved:", is_morphism(L5, moved, invert(P)))
print("round trip:", change_basis(moved, invert(P)) == L5)
