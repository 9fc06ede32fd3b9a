"""Exact-arithmetic toolkit for triangular r-matrices, Lagrangian
subalgebras of the dual-number double, and their classification over
type-A simple Lie algebras."""

from .algebra import (
    CybkitError, DomainError, LieAlgebra, LieElement, StructuralError,
    Subspace, UnsupportedSeriesError, bracket, build_algebra, form,
    is_direct_sum_of_ambient, is_subalgebra, perp, span, span_elements,
    structure_constant, subspace_intersect, subspace_sum,
)
from .tensor import (
    Tensor2, Tensor3, ad_action2, alt3, conjugate, cyb, is_invariant,
    is_skew, is_symmetric, mixed_bracket, permute_legs, project_legs,
    simple2, wedge,
)
from .reductive import (
    RootSubset, complement_from_subset, enumerate_reductive,
    enumerate_reductive_bruteforce, is_reductive, regular_element,
    subalgebra_from_subset, verify_regular,
)
from .rmatrix import (
    Classification, OracleDisagreement, RMatrixCandidate, build_diagonal,
    classify_coefficients, coefficients_from_tensor, in_invariant_wedge,
    in_invariant_wedge_structural, in_invariant_wedge_tensor, in_moduli,
    in_moduli_structural, in_moduli_tensor,
)
from .dualnum import (
    DualElement, LagrangianVerdict, PairRejection, SubalgebraPair,
    build_root_space_lagrangian, classify_pair, coboundary_pair,
    dual_bracket, dual_form, dual_span, embed_g, eps_lines,
    g_part_subspace, is_lagrangian_subalgebra, is_poisson_homogeneous,
    lagrangian_from_bivector, lagrangian_to_pair, pair_to_lagrangian,
)
from .twist import (
    Cobracket, TwistConditionError, apply_twist, cobracket_from_r,
    s_graph, satisfies_cocycle, twist_condition_general,
    twist_condition_triangular, twist_residual_general,
    twist_residual_triangular,
)
from .dynconst import (
    Decomposition, ExampleInstance, ExampleReport, PreconditionVerdict,
    build_example, check_preconditions, project_to_v, verify_example,
)

__version__ = "0.1.0"
