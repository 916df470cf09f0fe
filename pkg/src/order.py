"""L*, R and R* relations, the natural partial order, and skeleton extraction."""

import logging
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_node_match

from src.paths import Kind, invert_word, is_sub
from src.semigroup import (
    canonicalize,
    format_element,
    is_idempotent,
    is_regular,
    multiply,
)

log = logging.getLogger("netras")

# formal identity of S^1, only ever used as a probe
ONE = None


class ZeroOperand(ValueError):
    pass


class NotRegularOperand(ValueError):
    pass


class NotIdempotent(ValueError):
    pass


class InsufficientBall(ValueError):
    pass


class Verdict(Enum):
    DEFINITELY_NOT = "definitely-not"
    UNKNOWN = "unknown"


def _nonzero(*elements):
    for e in elements:
        if e.is_zero:
            raise ZeroOperand("the zero element forms its own class")


def l_star_related(a, b):
    _nonzero(a, b)
    return a.beta == b.beta


def _times(n, a, x):
    return a if x is ONE else multiply(n, a, x)


@dataclass(frozen=True)
class FalsifierResult:
    refuted_by: tuple = None

    @property
    def consistent(self):
        return self.refuted_by is None


def l_star_falsifier(n, a, b, probes):
    """Look for x, y in probes + {1} with ax = ay but bx != by, or the reverse.

    A refutation is definitive; consistency only covers the probes.
    """
    points = [ONE] + list(probes)
    row_a = [_times(n, a, x) for x in points]
    row_b = [_times(n, b, x) for x in points]
    for i, x in enumerate(points):
        for j in range(i + 1, len(points)):
            if (row_a[i] == row_a[j]) != (row_b[i] == row_b[j]):
                return FalsifierResult(refuted_by=(x, points[j]))
    return FalsifierResult()


def r_related_regular(n, a, b):
    _nonzero(a, b)
    for e in (a, b):
        if not is_regular(n, e):
            raise NotRegularOperand(f"'{format_element(e)}' is not regular")
    return a.alpha == b.alpha


def r_star_mixed(n, a, b):
    _nonzero(a, b)
    if is_regular(n, a) != is_regular(n, b):
        return Verdict.DEFINITELY_NOT
    return Verdict.UNKNOWN


def leq_natural(n, e, f):
    for x in (e, f):
        if not is_idempotent(x):
            raise NotIdempotent(f"'{format_element(x)}' is not idempotent")
    return multiply(n, e, f) == e and multiply(n, f, e) == e


def is_sub_idempotent(e):
    return not e.is_zero and is_sub(e.alpha) and e.alpha == e.beta


@dataclass
class OrderReport:
    maximal_in_eq: list
    maximal_in_e: list
    hasse_pairs: list = field(default_factory=list)

    def to_dict(self):
        return {
            "maximal_in_EQ": [format_element(e) for e in self.maximal_in_eq],
            "maximal_in_E": [format_element(e) for e in self.maximal_in_e],
            "hasse_pairs": [[format_element(e), format_element(f)] for e, f in self.hasse_pairs],
        }


def _maximal(n, idempotents):
    return [
        e for e in idempotents
        if not any(f != e and leq_natural(n, e, f) for f in idempotents)
    ]


def classify_maximal(n, ball):
    idempotents = [e for e in ball if is_idempotent(e)]
    below = {
        (e, f)
        for e in idempotents
        for f in idempotents
        if e != f and leq_natural(n, e, f)
    }
    hasse = [
        (e, f)
        for e, f in sorted(below, key=lambda p: (idempotents.index(p[0]), idempotents.index(p[1])))
        if not any((e, g) in below and (g, f) in below for g in idempotents)
    ]
    report = OrderReport(
        maximal_in_eq=_maximal(n, idempotents),
        maximal_in_e=_maximal(n, [e for e in idempotents if not is_sub_idempotent(e)]),
        hasse_pairs=hasse,
    )
    log.info(
        "Order on %d idempotents: %d maximal, %d maximal non-Sub, %d covering pairs",
        len(idempotents), len(report.maximal_in_eq), len(report.maximal_in_e), len(hasse),
    )
    return report


@dataclass
class Skeleton:
    t_idempotents: list
    source_of: dict
    range_of: dict
    sub_idempotents: list = field(default_factory=list)

    def to_dict(self):
        return {
            format_element(q): {
                "source": format_element(self.source_of[q]),
                "range": format_element(self.range_of[q]),
            }
            for q in self.t_idempotents
        }


def extract_skeleton(n, ball):
    """Recover relations, sources and ranges from the order structure of a ball."""
    report = classify_maximal(n, ball)
    subs = [e for e in report.maximal_in_eq if is_sub_idempotent(e)]
    t_idempotents = [q for q in report.maximal_in_e if not q.is_zero]
    if not subs:
        raise InsufficientBall("no Sub-idempotents in the ball; use a radius of at least 2")

    source_of, range_of = {}, {}
    for q in t_idempotents:
        if len(q.alpha) != 1 or q.alpha[0].kind is not Kind.REL:
            raise InsufficientBall(f"maximal idempotent '{format_element(q)}' is not [t t^-1]")
        range_of[q] = canonicalize(n, invert_word(q.alpha) + q.alpha)
        fixing = [s for s in subs if multiply(n, s, q) == q]
        if len(fixing) != 1 or range_of[q] not in subs:
            raise InsufficientBall(
                f"ball lacks the source or range idempotent of '{format_element(q)}'"
            )
        source_of[q] = fixing[0]
    return Skeleton(t_idempotents, source_of, range_of, subs)


def _skeleton_digraph(sk):
    graph = nx.DiGraph()
    for s in sk.sub_idempotents:
        graph.add_node(s, kind="sub")
    for q in sk.t_idempotents:
        graph.add_node(q, kind="t")
        graph.add_edge(sk.source_of[q], q)
        graph.add_edge(q, sk.range_of[q])
    return graph


def match_skeletons(first, second):
    """Bijection of skeleton idempotents preserving source/range incidence, or None."""
    matcher = DiGraphMatcher(
        _skeleton_digraph(first),
        _skeleton_digraph(second),
        node_match=categorical_node_match("kind", None),
    )
    return next(matcher.isomorphisms_iter(), None)
