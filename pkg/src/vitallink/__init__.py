"""Vital linkages of order 2: oracles, XX minors and double-rail embeddings."""

from .analysis import (
    enumerate_linkages,
    enumerate_spanning_linkages,
    find_second_linkage,
    is_vital,
)
from .core import (
    ChordError,
    ContractPathEdge,
    DeleteRungEdge,
    EdgeKind,
    Graph,
    LinkageError,
    LinkedGraph,
    MinorOpError,
    MinorWitness,
    NotSpanningError,
    OracleSizeError,
    TwoLinkage,
    apply_witness,
    classify_edges,
    contract_path_edge,
    delete_rung_edge,
    is_chordless,
    left_of,
    linked_isomorphic,
    reverse_path,
    simplify,
)
from .pathwidth import PathDecomposition, exact_pathwidth, verify_path_decomposition
from .truemper import (
    NotTruemperError,
    RungPartition,
    TruemperCertificate,
    crossing,
    embed_in_truemper,
    extend_truemper,
    find_valid_partition,
    generate_truemper,
    verify_certificate,
)
from .xx import XxWitness, canonical_xx, extract_xx_from_second_linkage, has_xx_linkage_minor

__version__ = "0.1.0"
