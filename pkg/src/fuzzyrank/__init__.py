"""Fuzzy multi-criteria ranking with two methods and a deterministic core.

Candidates are scored against weighted benefit/cost criteria whose weights
and qualitative ratings are triangular fuzzy numbers; a centroid lowering
turns them into the crisp matrix consumed by a distance-to-ideal pipeline
(TOPSIS) and a weighted-product pipeline. Ships a CLI, a small HTTP
service, and bundled example schemes and data.
"""
from ._version import VERSION as __version__
from .fuzzy import (
    LinguisticScale,
    LinguisticTerm,
    OrderViolation,
    TriangularFuzzyNumber,
    UnknownTerm,
    defuzzify_centroid,
    lookup_term,
    make_tfn,
)
from .model import (
    Alternative,
    Criterion,
    CrispMatrix,
    EligibilityRule,
    InvalidDataset,
    Scheme,
    ValidationIssue,
    apply_eligibility,
    lower_to_crisp,
    orientation_vector,
    rank_descending,
    validate_dataset,
    weight_vector,
)
from .topsis import (
    DegenerateAlternativeWarning,
    DimensionMismatch,
    TopsisTrace,
    closeness,
    ideal_solutions,
    normalize,
    rank_topsis,
    separations,
    weigh,
)
from .wp import (
    NonFiniteScore,
    NonPositiveWeight,
    WpTrace,
    ZeroClampWarning,
    ZeroOnCostCriterion,
    normalize_weights,
    rank_wp,
    wp_preferences,
    wp_scores,
)
from .ingest import (
    HeaderMismatch,
    ParseError,
    SchemaViolation,
    UnknownScaleReference,
    load_dataset,
    load_scheme,
    parse_dataset,
    parse_scheme,
    serialize_scheme,
)
from .results import (
    ResultDocument,
    ResultEntry,
    document_json,
    load_result,
    rank_document,
    rank_documents,
    store_result,
)

__all__ = [name for name in dir() if not name.startswith("_")]
