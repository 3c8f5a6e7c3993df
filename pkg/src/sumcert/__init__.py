"""Exact-arithmetic search and certification workbench for additive
colouring problems: named colourings over rationals and sparse vectors,
finite-sum/finite-union enumeration, exhaustive and backtracking searches
with self-checking certificates, Delta-system extraction, and the greedy
constructions behind the positive results."""

from .certificate import (
    Certificate,
    COUNTEREXAMPLE,
    EXHAUSTED,
    INCONCLUSIVE,
    WITNESS,
    format_certificate,
    parse_certificate,
    strip_timing,
    write_certificate,
)
from .coloring import (
    ColoringSpec,
    ColorValue,
    DomainError,
    dyadic_color,
    dyadic_parity_color,
    evaluate,
    parse_coloring_spec,
    self_inner_color,
    signed_dyadic_color,
    support_parity_color,
)
from .delta import SetFamily, extract_delta_system, parse_set_family, verify_delta_system
from .exact import (
    Pattern,
    QVec,
    Rat,
    coef,
    dyadic_exponent,
    format_qvec,
    format_rat,
    inner_product,
    parse_qvec,
    parse_rat,
    pattern_of,
    supp,
)
from .grids import rational_grid, vector_grid
from .intervals import Interval, IntervalSet, format_interval_set, parse_interval_set
from .search import (
    Budget,
    BudgetExceeded,
    find_mono_fs_witness,
    fs_coloring_avoids,
    fs_number,
    fu_coloring_avoids,
    fu_number,
    pair_ramsey_homogeneous,
)
from .semigroup import FinSemigroup, NatCarrier, NotAssociativeError, parse_cayley_table
from .sumsets import (
    BlockSeq,
    fs_enumerate,
    fs_values,
    fu_enumerate,
    is_monochromatic,
    pairwise_sumset,
)
from .constructions import (
    PatternFixture,
    PipelinePreconditionError,
    PoolExhaustedError,
    baire_sumset_construct,
    coefficient_run_pattern,
    fin_fin_pipeline,
    greedy_fs_basis,
    owings_fixture_from_coloring,
    owings_pattern_construct,
    ramsey_pullback_fs,
    subset_sums,
    support_arithmetic_check,
)
from .audit import ALL_CLAIMS, audit_coloring_claim, recheck_certificate

__version__ = "0.1.0"
