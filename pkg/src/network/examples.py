"""Built-in network registry and seeded random network generators."""

from src.network.model import UnknownNetwork, validate_network

_DRAWS = 50


def ex6():
    return validate_network(
        {
            "vertices": ["v1", "v2", "v3", "v4"],
            "relations": [
                {"name": "t1", "source": ["v1", "v2"], "range": ["v3"]},
                {"name": "t2", "source": ["v3"], "range": ["v4"]},
            ],
        },
        name="ex6",
    )


def ex6_renamed():
    return validate_network(
        {
            "vertices": ["v1'", "v2'", "v3'", "v4'"],
            "relations": [
                {"name": "t1'", "source": ["v1'", "v2'"], "range": ["v3'"]},
                {"name": "t2'", "source": ["v3'"], "range": ["v4'"]},
            ],
        },
        name="ex6_renamed",
    )


def g2():
    return validate_network(
        {
            "vertices": ["a", "b"],
            "relations": [{"name": "e", "source": ["a"], "range": ["b"]}],
        },
        name="g2",
    )


NETWORKS = {
    "ex6": {"name": "two relations, one with a two-vertex source", "build": ex6},
    "ex6_renamed": {"name": "ex6 with every name primed", "build": ex6_renamed},
    "g2": {"name": "one-edge graph", "build": g2},
}


def get_network(code):
    """Return a built-in network by code, or raise UnknownNetwork."""
    code = code.lower()
    if code not in NETWORKS:
        available = ", ".join(f"{k} ({v['name']})" for k, v in NETWORKS.items())
        raise UnknownNetwork(f"Unknown network '{code}'. Available: {available}")
    return NETWORKS[code]["build"]()


def list_networks():
    """Return list of (code, description) tuples for all built-in networks."""
    return [(k, v["name"]) for k, v in NETWORKS.items()]


def _aligned(relations):
    for _, _, q_range in relations:
        for _, t_source, _ in relations:
            if q_range & t_source and q_range != t_source:
                return False
    return True


def _draw_endpoints(rng, vertices, max_size):
    source_size = rng.randint(1, min(max_size, len(vertices) - 1))
    range_size = rng.randint(1, min(max_size, len(vertices) - source_size))
    picked = rng.sample(vertices, source_size + range_size)
    return frozenset(picked[:source_size]), frozenset(picked[source_size:])


def _build(vertices, relations, label):
    return validate_network(
        {
            "vertices": vertices,
            "relations": [
                {"name": name, "source": sorted(source), "range": sorted(target)}
                for name, source, target in relations
            ],
        },
        name=label,
    )


def random_network(rng, max_vertices=6, max_relations=4, max_set_size=2, aligned=True):
    """Seeded random network.

    With `aligned`, every range equals or misses every source; draws that
    break this are retried and the relation is dropped after _DRAWS tries.
    """
    vertices = [f"v{i}" for i in range(1, rng.randint(2, max_vertices) + 1)]
    relations = []
    for index in range(1, rng.randint(1, max_relations) + 1):
        for _ in range(_DRAWS):
            source, target = _draw_endpoints(rng, vertices, max_set_size)
            candidate = relations + [(f"t{index}", source, target)]
            if not aligned or _aligned(candidate):
                relations = candidate
                break
    return _build(vertices, relations, "random")


def random_graph(rng, max_vertices=5, max_relations=4):
    """Seeded random graph: singleton sources and ranges, parallel edges allowed."""
    vertices = [f"v{i}" for i in range(1, rng.randint(2, max_vertices) + 1)]
    relations = []
    for index in range(1, rng.randint(1, max_relations) + 1):
        a, b = rng.sample(vertices, 2)
        relations.append((f"e{index}", frozenset([a]), frozenset([b])))
    return _build(vertices, relations, "random-graph")
