"""Exact verification of frieze patterns attached to affine quivers.

The package builds the cluster exchange dynamics of the tame quiver
families (the cycle, the double-fork chain, and the three exceptional
three-armed trees), runs them over exact rationals or packed-exponent
Laurent polynomials, and checks the periodic quantities, linear
recurrences, symplectic reductions and integrability structure that the
resulting sequences carry.  Every check is an exact equality; nothing is
compared with a tolerance.
"""

from .exact import (
    Rat,
    LaurentPoly,
    DualRat,
    DivisionNotExact,
    SymbolicBudgetExceeded,
    laurent_eval,
    parse_rational,
)
from .quiver import (
    Quiver,
    NoAdmissibleOrder,
    build_affine_quiver,
    mutate_matrix,
    admissible_order,
    quiver_to_json,
    quiver_from_json,
)
from .frieze import (
    FriezeTable,
    frieze_step,
    frieze_sequence,
    a_type_sequence,
)
from .relations import (
    Verdict,
    CheckReport,
    reports_json,
    family_key,
    quantities_for,
    a_quantities,
    check_period,
    symbolic_period_check,
    trace_invariant,
    check_constant_linear_relation,
    recurrence_specs,
    check_recurrence,
    check_auxiliary_identities,
    conjecture_specs,
    probe_conjecture,
    check_kernel_matrices,
)
from .reduction import (
    ReducedSystem,
    ReductionUnsupported,
    build_reduction,
    reduced_orbit,
    first_integrals,
    poisson_bracket,
    integrability_battery,
    presymplectic_check,
    commuting_square_check,
    lift_project_check,
)

__version__ = "1.0.0"

__all__ = [
    "Rat", "LaurentPoly", "DualRat", "DivisionNotExact",
    "SymbolicBudgetExceeded", "laurent_eval", "parse_rational",
    "Quiver", "NoAdmissibleOrder", "build_affine_quiver", "mutate_matrix",
    "admissible_order", "quiver_to_json", "quiver_from_json",
    "FriezeTable", "frieze_step", "frieze_sequence", "a_type_sequence",
    "Verdict", "CheckReport", "reports_json", "family_key",
    "quantities_for", "a_quantities", "check_period",
    "symbolic_period_check", "trace_invariant",
    "check_constant_linear_relation", "recurrence_specs",
    "check_recurrence", "check_auxiliary_identities", "conjecture_specs",
    "probe_conjecture", "check_kernel_matrices",
    "ReducedSystem", "ReductionUnsupported", "build_reduction",
    "reduced_orbit", "first_integrals", "poisson_bracket",
    "integrability_battery", "presymplectic_check",
    "commuting_square_check", "lift_project_check",
    "__version__",
]
