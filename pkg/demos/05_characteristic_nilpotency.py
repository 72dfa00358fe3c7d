# Is Der(S) nilpotent?
#
# The ordinary derivations form a Lie algebra under the commutator. We
# express all brackets in the canonical basis and run the lower central
# series L, [L, L], [L, [L, L]], ... until it hits zero or stabilizes.

from dialgebra import (Algebra, der_lie_structure, instantiate,
                       is_characteristically_nilpotent, lower_central_series,
                       make_spec)

for alg in [Algebra.zero(2), instantiate(make_spec("L1", a=2, b=3)),
            instantiate(make_spec("L2", b=3, c=5))]:
    basis, consts = der_lie_structure(alg)
    print(f"{alg.name}: Der dim {len(basis)}, series {lower_central_series(consts)}, "
          f"nilpotent {is_characteristically_nilpotent(alg)}")
