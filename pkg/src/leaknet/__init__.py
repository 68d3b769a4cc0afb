"""Country-network reconstruction and rich-club analysis for leak dumps."""

from .core import (
    CoreReport,
    RankedCountry,
    StabilityScan,
    StrengthRanking,
    extract_core,
    jaccard,
    rank_by_strength,
    remove_and_rerank,
    stability_scan,
)
from .errors import (
    ClubTooSmall,
    CsvSyntax,
    EmptyNetwork,
    InsufficientEdges,
    LeakNetError,
    MalformedHeader,
    SelfLoopRejected,
    TooFewEdges,
    UnknownNode,
)
from .ingest import (
    IngestReport,
    LeakRecord,
    LeakRelationship,
    ProjectionMode,
    build_country_network,
    parse_records,
    parse_relationships,
)
from .network import CountryNetwork, UndirectedView, undirected_key
from .nullmodel import (
    DEFAULT_SEED,
    EnsembleConfig,
    NullSample,
    double_edge_swap,
    generate_ensemble,
    make_null_sample,
    shuffle_weights,
)
from .richclub import (
    RichClubCurve,
    RichClubPoint,
    phi,
    phi_weighted,
    rho_curve,
    top_strength_club,
)

__version__ = "0.1.0"

__all__ = [
    "ClubTooSmall",
    "CoreReport",
    "CountryNetwork",
    "CsvSyntax",
    "DEFAULT_SEED",
    "EmptyNetwork",
    "EnsembleConfig",
    "IngestReport",
    "InsufficientEdges",
    "LeakNetError",
    "LeakRecord",
    "LeakRelationship",
    "MalformedHeader",
    "NullSample",
    "ProjectionMode",
    "RankedCountry",
    "RichClubCurve",
    "RichClubPoint",
    "SelfLoopRejected",
    "StabilityScan",
    "StrengthRanking",
    "TooFewEdges",
    "UndirectedView",
    "UnknownNode",
    "build_country_network",
    "double_edge_swap",
    "extract_core",
    "generate_ensemble",
    "jaccard",
    "make_null_sample",
    "parse_records",
    "parse_relationships",
    "phi",
    "phi_weighted",
    "rank_by_strength",
    "remove_and_rerank",
    "rho_curve",
    "shuffle_weights",
    "stability_scan",
    "top_strength_club",
    "undirected_key",
]
