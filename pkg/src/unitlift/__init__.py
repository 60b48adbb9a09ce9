"""Exact arithmetic on finite commutative rings, built around one question:
when does a quotient map send the units of the source onto the units of the
target?  The library answers it four independent ways, constructs the lifts
it claims exist, and ships a corpus runner that checks every advertised law
on a few hundred rings.

See the README for a tour; the CLI entry point is ``unitlift``.
"""

from .config import DEFAULT_GUARDS, Guards
from .errors import GuardExceededError, InternalDefectError, SpecSyntaxError
from .matrices import (
    Matrix,
    MatrixSpace,
    adjugate,
    dedekind_finite_check,
    det,
    gl_lift,
    matrix_inverse,
    two_sided_saturate,
)
from .rings import (
    FiniteRing,
    INTEGERS,
    Ideal,
    ModularRing,
    PolyQuotientRing,
    PresentedRing,
    ProductRing,
    QuotientRing,
    SurjectiveHom,
    build_ring,
    check_ring_axioms,
    enumerate_ideals,
    gf_polynomial_ring,
    ideal_closure,
    ideal_from_elements,
    quotient_ring,
    units,
)
from .semiunits import (
    Rho,
    SemiUnitDecomposition,
    collapse_semi_inverse_set,
    colon_into_radical,
    is_semi_inverse_set,
    is_semifield,
    is_von_neumann_regular,
    rho,
    rho_table,
    semi_inverses,
    semi_unit_decomposition,
)
from .specs import (
    ModularSpec,
    PolyQuotSpec,
    ProductSpec,
    QuotientSpec,
    parse_element_text,
    parse_ring_spec,
    spec_to_string,
)
from .spectrum import (
    CongruenceSystem,
    MaximalIdealList,
    crt_solve,
    idempotents,
    is_connected_mod_rad,
    jacobson_radical,
    maximal_ideals,
    nilpotent_elements,
    radical_quotient,
)
from .star import (
    PresentedStarCheck,
    RingStarReport,
    StarCheck,
    StarMethod,
    StarReport,
    crt_unit_lift,
    presented_star_check,
    product_fields_adjust,
    reduce_mod_rad_equiv,
    ring_has_star,
    saturate,
    star_check,
    star_report,
)
from .verify import CorpusReport, CriterionResult, corpus_rings, corpus_specs, \
    report_to_dict, run_corpus

__version__ = "0.1.0"

__all__ = [
    "CongruenceSystem",
    "CorpusReport",
    "CriterionResult",
    "DEFAULT_GUARDS",
    "FiniteRing",
    "GuardExceededError",
    "Guards",
    "INTEGERS",
    "Ideal",
    "InternalDefectError",
    "Matrix",
    "MatrixSpace",
    "MaximalIdealList",
    "ModularRing",
    "ModularSpec",
    "PolyQuotSpec",
    "PolyQuotientRing",
    "PresentedRing",
    "PresentedStarCheck",
    "ProductRing",
    "ProductSpec",
    "QuotientRing",
    "QuotientSpec",
    "Rho",
    "RingStarReport",
    "SemiUnitDecomposition",
    "SpecSyntaxError",
    "StarCheck",
    "StarMethod",
    "StarReport",
    "SurjectiveHom",
    "adjugate",
    "build_ring",
    "check_ring_axioms",
    "collapse_semi_inverse_set",
    "colon_into_radical",
    "corpus_rings",
    "corpus_specs",
    "crt_solve",
    "crt_unit_lift",
    "dedekind_finite_check",
    "det",
    "enumerate_ideals",
    "gf_polynomial_ring",
    "gl_lift",
    "ideal_closure",
    "ideal_from_elements",
    "idempotents",
    "is_connected_mod_rad",
    "is_semi_inverse_set",
    "is_semifield",
    "is_von_neumann_regular",
    "jacobson_radical",
    "matrix_inverse",
    "maximal_ideals",
    "nilpotent_elements",
    "parse_element_text",
    "parse_ring_spec",
    "presented_star_check",
    "product_fields_adjust",
    "quotient_ring",
    "radical_quotient",
    "reduce_mod_rad_equiv",
    "rho",
    "rho_table",
    "ring_has_star",
    "run_corpus",
    "report_to_dict",
    "saturate",
    "semi_inverses",
    "semi_unit_decomposition",
    "spec_to_string",
    "star_check",
    "star_report",
    "two_sided_saturate",
    "units",
]
