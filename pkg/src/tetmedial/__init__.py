"""Medial parallelogram areas of a tetrahedron from its six edge lengths."""

from tetmedial.errors import (
    DegenerateFrame,
    GeometryError,
    NegativeRadicand,
    NonPositiveLength,
    NotATriangle,
    NotRealizable,
    ParseError,
    ResamplingExhausted,
)
from tetmedial.geometry import (
    EmbeddedTet,
    MedialParallelogram,
    OppositePair,
    RealizabilityReport,
    SixEdgeLengths,
    Status,
    cayley_menger,
    cayley_menger_volume,
    embed_canonical,
    face_areas,
    heron_face_area,
    medial_area,
    medial_area_all,
    medial_parallelogram,
    opposite_edge_cosine,
    validate_edge_lengths,
)
from tetmedial.oracle import (
    ComparisonRecord,
    FourPoints,
    SweepSummary,
    compare_formula_vs_oracle,
    direct_medial_area,
    edge_lengths_of,
    embed_reference,
    random_tetrahedron,
    run_sweep,
)

__version__ = "0.1.0"
