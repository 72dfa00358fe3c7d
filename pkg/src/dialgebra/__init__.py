"""Exact computation of (rho, tau, sigma)-derivations of left-symmetric dialgebras."""

from .algebra import (Algebra, AxiomReport, change_basis, check_diassociative,
                      check_left_symmetric, is_morphism, transport_map)
from .catalog import (ClassSpec, ConstraintViolation, claimed_basis,
                      default_sample_params, expected_dimension, instantiate,
                      make_spec)
from .derivations import (FAMILIES, CanonicalWeightClass, DerivationSpace,
                          Family, WeightTriple, bracket, canonicalize_triple,
                          defining_equations, der_lie_structure,
                          derivation_space, derivation_system, family_space,
                          is_characteristically_nilpotent, is_derivation,
                          lower_central_series, verify_bracket_closure)
from .linalg import (QMatrix, ShapeMismatch, SingularMatrix, invert, matadd,
                     matmul, nullspace, parse_rational, rref, scalar_mul)

__version__ = "0.1.0"
