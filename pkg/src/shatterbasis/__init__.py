"""Standard monomials, Groebner bases and shattering bounds for finite
multivalued tuple systems over the rationals.

The package computes vanishing ideals of finite subsets of {0,...,q-1}^n
exactly, exposes closed-form descriptions of the normal sets of the classic
constructions (complete uniform systems, Hamming spheres, family blow-ups),
evaluates the associated extremal bounds, and verifies everything against an
independent brute-force engine at desk scale.
"""

from .closedform import (
    BOUND_NAMES,
    BoundHypothesisError,
    BoundReport,
    bound,
    count_ballot,
    count_sphere_stratum,
    count_sphere_stratum_capped,
    gb_blowup,
    shatter_cap,
    sm_blowup,
    sm_hamming_sphere,
    sm_uniform_binary,
    uniform_leading_certificate,
)
from .compress import CompressionResult, alon_compress, is_downward_closed, trace_size
from .ideals import (
    GroebnerBasis,
    StandardMonomialSet,
    certify_groebner,
    interpolate,
    non_shatter_certificate,
    vanishing_basis,
)
from .polyring import (
    Monomial,
    Polynomial,
    TermOrder,
    binary_lift,
    field_polynomial,
    indicator_polynomial,
    leading_coefficient,
    leading_monomial,
    normal_form,
    parse_polynomial,
    render_monomial,
    render_polynomial,
)
from .tuples import (
    EmptyPointSetError,
    LevelPartition,
    PointSet,
    SetFamily,
    Uniformity,
    ballot_member,
    blow_up,
    classify,
    complete_uniform,
    full_exponent_count,
    hamming_sphere,
    km_extremal,
    level_partition,
    lower_bound_slice,
    minimal_ballot_violators,
    shattered_family,
    shatters,
    subfamily_through,
    support,
)
from .verify import SUITE_NAMES, Report, counterexample_search, oracle_diff, run_suite

__version__ = "0.1.0"

__all__ = [
    "BOUND_NAMES",
    "BoundHypothesisError",
    "BoundReport",
    "CompressionResult",
    "EmptyPointSetError",
    "GroebnerBasis",
    "LevelPartition",
    "Monomial",
    "PointSet",
    "Polynomial",
    "Report",
    "SUITE_NAMES",
    "SetFamily",
    "StandardMonomialSet",
    "TermOrder",
    "Uniformity",
    "alon_compress",
    "ballot_member",
    "binary_lift",
    "blow_up",
    "bound",
    "certify_groebner",
    "classify",
    "complete_uniform",
    "count_ballot",
    "count_sphere_stratum",
    "count_sphere_stratum_capped",
    "counterexample_search",
    "field_polynomial",
    "full_exponent_count",
    "gb_blowup",
    "hamming_sphere",
    "indicator_polynomial",
    "interpolate",
    "is_downward_closed",
    "km_extremal",
    "leading_coefficient",
    "leading_monomial",
    "level_partition",
    "lower_bound_slice",
    "minimal_ballot_violators",
    "non_shatter_certificate",
    "normal_form",
    "oracle_diff",
    "parse_polynomial",
    "render_monomial",
    "render_polynomial",
    "run_suite",
    "shatter_cap",
    "shattered_family",
    "shatters",
    "sm_blowup",
    "sm_hamming_sphere",
    "sm_uniform_binary",
    "subfamily_through",
    "support",
    "trace_size",
    "uniform_leading_certificate",
    "vanishing_basis",
    "__version__",
]
