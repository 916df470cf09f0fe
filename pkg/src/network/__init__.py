"""Networks: validated model, text format, isomorphism search, built-ins."""

from src.network.model import (
    DuplicateRelationName,
    EmptySourceOrRange,
    Network,
    NetworkError,
    NetworkIso,
    NetworkParseError,
    Relation,
    SourceRangeOverlap,
    UnknownNetwork,
    UnknownVertex,
    VertexSet,
    is_confluent_presentation,
    is_graph,
    misaligned_pairs,
    out_index,
    validate_network,
)
from src.network.parser import format_network, load_network, parse_network_text
from src.network.iso import find_isomorphism, verify_iso
from src.network.examples import (
    NETWORKS,
    ex6,
    ex6_renamed,
    g2,
    get_network,
    list_networks,
    random_graph,
    random_network,
)
