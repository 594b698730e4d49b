"""Exact invariant calculus for Z/3 quotients of canonical double covers."""

from .catalog import DEFAULT_CATALOG, EXAMPLES, PAIRS, pair_invariants
from .geography import check_canonical_cover_pair, check_geography
from .kunneth import (
    LineBundleShadow,
    equivariant_member_pg,
    member_pg,
    p1_cohomology,
    product_cohomology,
)
from .numeric import LinForm, Rational, linform_combine, linform_divide_exact, linform_eval
from .pipeline import PipelineError, PipelineReport, run_pipeline, symbolic_pipeline
from .quotients import (
    CharacterPair,
    FixedPointProfile,
    FixedPointType,
    classify_fixed_point,
    cyclic3_quotient,
    involution_quotient,
    solve_fixed_point_profile,
)
from .sections import (
    WeightConfig,
    coverage_check,
    eigenspace_dimensions,
    invariant_dimension,
    invariant_monomial_basis,
    symbolic_invariant_dimension,
)
from .surfaces import CohTriple, SingularLocus, SurfaceInvariants, check_identities, make_surface

__version__ = "0.1.0"
