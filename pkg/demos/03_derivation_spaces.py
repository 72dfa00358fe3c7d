# (rho, tau, sigma)-derivations
#
# A linear map d is a (rho, tau, sigma)-derivation when
#     rho d(p * q) = tau d(p) * q + sigma p * d(q)
# for both products. The solver assembles this as a 2n^3 x n^2 linear system
# and returns a canonical kernel basis; matrices use the column convention
# (column j is d(e_j)).

from dialgebra import (FAMILIES, WeightTriple, canonicalize_triple,
                       defining_equations, derivation_space, family_space,
                       instantiate, is_derivation, make_spec,
                       verify_bracket_closure)

L6 = instantiate(make_spec("L6", a=3))
space = derivation_space(L6, (1, 0, 1))
print("Der_(1,0,1) of", L6.name, "has dim", space.dim, "basis", space.basis)

# Every raw triple falls into one of eight families (or End S).
for raw in [(2, 2, 2), (0, 0, 5), (0, 2, 6), (0, 0, 0)]:
    print(raw, "->", canonicalize_triple(WeightTriple.of(*raw)))

# For rho = 0 the family equations are d(p)*q = delta p*d(q); the triple
# that realizes this in the derivation identity has sigma = -delta.
cls = canonicalize_triple(WeightTriple.of(0, 2, 6))
print("realizing triple:", defining_equations(cls))

# One row of the classification table, family by family.
L1 = instantiate(make_spec("L1", a=2, b=3))
for fam in FAMILIES:
    sp = family_space(L1, fam, delta=7)
    print(f"  {fam.label:10} triple {str(sp.triple):10} dim {sp.dim}")

# The table formula for L1 at (1,1,1) divides by b; at b = 0 just solve.
for a in (1, 2):
    alg = instantiate(make_spec("L1", a=a, b=0))
    sp = derivation_space(alg, (1, 1, 1))
    print(f"L1(a={a}, b=0) at (1,1,1): dim {sp.dim}",
          all(is_derivation(alg, sp.triple, m) for m in sp.basis))

# Commutators of (rho,tau,sigma)-derivations are (rho^2,tau^2,sigma^2)-derivations.
L4 = instantiate(make_spec("L4", c=1))
print("bracket closure on L4(c=1) at (1,0,1):", verify_bracket_closure(L4, (1, 0, 1)))
