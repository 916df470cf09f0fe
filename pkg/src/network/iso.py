"""Network isomorphism search over the vertex/relation incidence digraph."""

import logging

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_node_match

from src.network.model import NetworkIso, out_index

log = logging.getLogger("netras")


def incidence_digraph(n):
    """Vertices and relations as nodes; v -> t for v in s(t), t -> v for v in r(t)."""
    graph = nx.DiGraph()
    for v in n.vertices:
        graph.add_node(("v", v), profile=("vertex",))
    for rel in n.relations:
        graph.add_node(
            ("t", rel.name),
            profile=("relation", len(rel.source), len(rel.range), out_index(n, rel.source)),
        )
        for v in rel.source:
            graph.add_edge(("v", v), ("t", rel.name))
        for v in rel.range:
            graph.add_edge(("t", rel.name), ("v", v))
    return graph


def verify_iso(g, d, iso):
    if sorted(iso.vertex_map) != list(g.vertices):
        return False
    if sorted(iso.vertex_map.values()) != list(d.vertices):
        return False
    if sorted(iso.relation_map) != sorted(rel.name for rel in g.relations):
        return False
    if sorted(iso.relation_map.values()) != sorted(rel.name for rel in d.relations):
        return False
    for rel in g.relations:
        image = d.relation_map.get(iso.relation_map[rel.name])
        if image is None:
            return False
        if iso.map_set(rel.source) != image.source or iso.map_set(rel.range) != image.range:
            return False
    return True


def _name_preserving(g, d):
    if set(g.vertices) != set(d.vertices) or set(g.relation_map) != set(d.relation_map):
        return None
    iso = NetworkIso(
        vertex_map={v: v for v in g.vertices},
        relation_map={name: name for name in g.relation_map},
    )
    return iso if verify_iso(g, d, iso) else None


def _from_mapping(mapping):
    vertex_map = {}
    relation_map = {}
    for (kind, name), (_, image) in mapping.items():
        if kind == "v":
            vertex_map[name] = image
        else:
            relation_map[name] = image
    return NetworkIso(vertex_map=vertex_map, relation_map=relation_map)


def find_isomorphism(g, d):
    """Return a NetworkIso from g to d, or None.

    The name-preserving map is returned when it already is an isomorphism.
    """
    if len(g.vertices) != len(d.vertices) or len(g.relations) != len(d.relations):
        log.debug("Size mismatch: %s vs %s", g, d)
        return None
    same = _name_preserving(g, d)
    if same is not None:
        return same

    matcher = DiGraphMatcher(
        incidence_digraph(g),
        incidence_digraph(d),
        node_match=categorical_node_match("profile", None),
    )
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    iso = _from_mapping(mapping)
    assert verify_iso(g, d, iso)
    return iso
