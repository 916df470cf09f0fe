"""Network data model: vertex sets, relations, validation, derived alphabet."""

import logging
import re
from dataclasses import dataclass, field
from functools import cached_property

log = logging.getLogger("netras")

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_VERTEX_RE = re.compile(r"^[^\s,{}~|#]+$")


class NetworkError(ValueError):
    """Base class for anything wrong with a network description."""


class NetworkParseError(NetworkError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptySourceOrRange(NetworkError):
    pass


class SourceRangeOverlap(NetworkError):
    pass


class DuplicateRelationName(NetworkError):
    pass


class UnknownVertex(NetworkError):
    pass


class UnknownNetwork(NetworkError):
    pass


@dataclass(frozen=True, order=True)
class VertexSet:
    members: tuple

    @classmethod
    def of(cls, members):
        return cls(tuple(sorted(set(members))))

    @cached_property
    def as_set(self):
        return frozenset(self.members)

    def intersects(self, other):
        return not self.as_set.isdisjoint(other.as_set)

    def issubset(self, other):
        return self.as_set <= other.as_set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __str__(self):
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True)
class Relation:
    name: str
    source: VertexSet
    range: VertexSet

    def __str__(self):
        return f"{self.name} : {' '.join(self.source)} -> {' '.join(self.range)}"


@dataclass(frozen=True)
class Network:
    vertices: tuple
    relations: tuple
    name: str = field(default="", compare=False)

    @cached_property
    def t0(self):
        """Sources, ranges and vertex singletons, each once, sorted."""
        sets = {VertexSet((v,)) for v in self.vertices}
        for rel in self.relations:
            sets.add(rel.source)
            sets.add(rel.range)
        return tuple(sorted(sets))

    @cached_property
    def relation_map(self):
        return {rel.name: rel for rel in self.relations}

    def relation(self, name):
        return self.relation_map[name]

    def __str__(self):
        label = self.name or "network"
        return f"{label} (|V|={len(self.vertices)}, |T|={len(self.relations)})"


@dataclass(frozen=True)
class NetworkIso:
    vertex_map: dict
    relation_map: dict

    def map_set(self, vset):
        return VertexSet.of(self.vertex_map[v] for v in vset)

    def inverse(self):
        return NetworkIso(
            vertex_map={b: a for a, b in self.vertex_map.items()},
            relation_map={b: a for a, b in self.relation_map.items()},
        )

    def compose(self, other):
        """Apply self first, then other."""
        return NetworkIso(
            vertex_map={a: other.vertex_map[b] for a, b in self.vertex_map.items()},
            relation_map={a: other.relation_map[b] for a, b in self.relation_map.items()},
        )

    def to_dict(self):
        return {
            "vertices": dict(sorted(self.vertex_map.items())),
            "relations": dict(sorted(self.relation_map.items())),
        }


def _vertex_set(members, known, rel_name, where, line):
    missing = sorted(set(members) - known)
    if missing:
        raise UnknownVertex(
            f"{_at(line)}relation '{rel_name}' {where} uses unknown vertices: {', '.join(missing)}"
        )
    if not members:
        raise EmptySourceOrRange(f"{_at(line)}relation '{rel_name}' has an empty {where}")
    return VertexSet.of(members)


def _at(line):
    return f"line {line}: " if line is not None else ""


def validate_network(raw, name=""):
    """Build a Network from a plain description.

    `raw` is a dict: {"vertices": [...], "relations": [{"name", "source",
    "range", optional "line"}]}.
    """
    vertices = list(raw.get("vertices", []))
    for v in vertices:
        if not isinstance(v, str) or not _VERTEX_RE.match(v):
            raise NetworkError(f"invalid vertex identifier {v!r}")
    known = set(vertices)

    relations = []
    seen = set()
    for spec in raw.get("relations", []):
        rel_name = spec["name"]
        line = spec.get("line")
        if not _NAME_RE.match(rel_name):
            raise NetworkError(f"{_at(line)}invalid relation name {rel_name!r}")
        if rel_name in seen:
            raise DuplicateRelationName(f"{_at(line)}relation '{rel_name}' declared twice")
        seen.add(rel_name)
        source = _vertex_set(spec["source"], known, rel_name, "source", line)
        target = _vertex_set(spec["range"], known, rel_name, "range", line)
        if source.intersects(target):
            shared = sorted(source.as_set & target.as_set)
            raise SourceRangeOverlap(
                f"{_at(line)}relation '{rel_name}' has source and range sharing {', '.join(shared)}"
            )
        relations.append(Relation(rel_name, source, target))

    network = Network(tuple(sorted(known)), tuple(relations), name=name)
    log.debug("Validated %s, |T0|=%d", network, len(network.t0))
    return network


def out_index(n, a):
    """Number of relations whose source is exactly `a`."""
    return sum(1 for rel in n.relations if rel.source == a)


def is_graph(n):
    return all(len(rel.source) == 1 and len(rel.range) == 1 for rel in n.relations)


def misaligned_pairs(n):
    """Pairs (q, t) whose range r(q) meets s(t) without being equal to it.

    Each such pair makes t^-1 r(q) q^-1 reduce both to 0 and to the
    irreducible t^-1 q^-1, so the presentation is confluent iff this is empty.
    """
    return [
        (q.name, t.name)
        for q in n.relations
        for t in n.relations
        if q.range.intersects(t.source) and q.range != t.source
    ]


def is_confluent_presentation(n):
    return not misaligned_pairs(n)
