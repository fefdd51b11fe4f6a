"""coxtools: exact computations with affine monoids, divisor theories,
toric Cox gradings, graded polynomial automorphisms, and finite linear
quotients.

Everything is exact: arbitrary-precision integers, rationals, and
cyclotomic numbers; no floating point anywhere.
"""

from .intlinalg import hnf, snf
from .cones import Cone, NonPointedError, NotFullDimensionalError, cone_contains, dual_cone, hilbert_basis
from .monoids import (AffineMonoid, Beta, DepthInsufficientError, DivisorTheory,
                      MonoidHom, NotAnEmbedding, NotSaturatedError, ViolationStar,
                      ViolationStarStar, divisor_theory, extend_embedding,
                      is_saturated, verify_divisor_axioms)
from .polynomials import (Poly, PolyMap, PolyParseError, UnknownVariableError,
                          compose, compose_chain, in_ideal_power, jacobian,
                          parse_map, parse_poly, poly_det, substitute)
from .gradings import (AbGroup, GradedEndo, GradedRing, GroupElem, ZERO_DEGREE,
                       anick_automorphism, check_normalizes, degree_of,
                       elementary_linear, elementary_shear, elementary_inverse,
                       nagata_polymap, quadric_grading, rho_replace, shear_family,
                       shear_map, search_tame_decomposition, transpose_map,
                       verify_inverse, wildness_certificate, wildness_machinery)
from .toric import CoxData, cox_data, pullback, respects_relations, verify_lift
from .cyclotomic import CycloNum, cyclotomic_polynomial
from .quotients import (MatGroup, QuotientReport, close_group, pseudoreflections,
                        quotient_report, reynolds_invariants)

__version__ = "0.1.0"
