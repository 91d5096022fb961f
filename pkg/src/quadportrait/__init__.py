"""Portraits of marked quadratic branched covers.

Model a cover as a finite self-map with a distinguished critical pair,
classify its portrait by combinatorial features, rewrite it with validated
half-twist moves, reduce any valid cover to the squaring-map portrait, and
build verified transposition words between any two covers.
"""

from .cover import (
    InvalidCoverError,
    MarkedCover,
    MoveError,
    OrbitProfile,
    Portrait,
    PortraitError,
    UnknownPointError,
    ValidationReport,
    Violation,
    apply_swap,
    derive_portrait,
    extend_cover,
    mint_preimage,
    orbit_profile,
    validate_cover,
)
from .features import (
    Contained,
    DisjointPrePeriods,
    FeatureVector,
    Intersecting,
    OneCycle,
    OnePrePeriod,
    TwoComponents,
    canonical_encoding,
    classify,
    features_isomorphic,
)
from .moves import (
    Move,
    MoveOutcome,
    apply_move,
    decrease_cycle,
    expected_features,
    make_periodic,
    split,
)
from .reducer import (
    BoundReport,
    ReductionTrace,
    SQUARING_FEATURES,
    StepTag,
    TraceEntry,
    reduce,
    verify_step_bounds,
)
from .connector import (
    MintRecord,
    PathCertificate,
    SwapRecord,
    TranspositionWord,
    connect,
    replay,
    reverse_word,
    transport_word,
    verify_certificate,
    word_from_moves,
)
from .oracle import (
    IsoWitness,
    brute_force_isomorphism,
    cover_from_features,
    enumerate_portraits,
    random_cover,
)
from .formats import (
    ParseError,
    TraceDocument,
    VerifyRecord,
    export_dot,
    parse_portrait,
    parse_trace,
    serialize_certificate,
    serialize_portrait,
    serialize_trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
