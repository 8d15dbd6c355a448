"""octoforge: exact-arithmetic toolkit for finite-dimensional
nonassociative algebras.

Verifies structural hypotheses (alternativity, central commutator
squares, absence of zero-divisor commutators), constructs quaternion
and octonion frames by the central-quadratic / anticommuting-complement
method, and extracts exact zero-divisor witnesses when the hypotheses
fail.  All arithmetic is exact: arbitrary-precision rationals or odd
prime fields.
"""

from .algebra import (Algebra, Element, UnitAxiomError, vadd, vbasis,
                      vis_zero, vneg, vscale, vsub, vzero)
from .analysis import (AnalysisReport, AlternativityWitness,
                       CommutatorLawsReport, HypothesisStatus,
                       ViolationWitness, alternative_by_sampling, analyze,
                       center, check_commutator_laws,
                       find_alternativity_violation, find_zero_divisor,
                       hypothesis_check, is_alternative, is_associative,
                       is_commutative, nucleus)
from .fields import (RATIONAL, FieldMismatchError, FieldSpec, Fp, Scalar,
                     is_zero, parse_scalar, render_scalar, scalar_arith)
from .forge import (CentralQuadratic, ForgeResult, Frame, FrameCoordinates,
                    anticommute_reduce, build_octonion_frame,
                    build_quaternion_frame, central_quadratic, central_shift,
                    extend_frame, forge, frame_from_basis, norm_form,
                    norm_is_positive_definite, saturation_check,
                    validate_frame)
from .generators import (CayleyDicksonParams, GeneratorError, cayley_dickson,
                         cayley_dickson_algebra, direct_sum, disguise,
                         field_algebra, octonion_algebra, quaternion_algebra,
                         sedenion_algebra, transport)
from .io import (AlgebraFileError, algebra_from_dict, algebra_to_dict,
                 forge_result_to_json, load_algebra, save_algebra)
from .linalg import (Matrix, Subspace, determinant, inverse, kernel, rref,
                     solve, span_membership)
from .suites import (FuzzReport, SuiteReport, norm_multiplicativity_suite,
                     run_fuzz, triple_identity_suite)

__version__ = "0.1.0"
