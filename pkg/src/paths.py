"""Words over the alphabet T, T0, T^-1 and 0; path predicates and enumeration."""

import logging
import re
from dataclasses import dataclass
from enum import Enum

from src.network.model import VertexSet

log = logging.getLogger("netras")

_TOKEN_RE = re.compile(r"\{[^}]*\}|[^\s{}]+")


class WordSyntaxError(ValueError):
    pass


class EmptyWord(ValueError):
    pass


class NotAPath(ValueError):
    pass


class Kind(Enum):
    REL = "rel"
    INV = "inv"
    SUB = "sub"
    ZERO = "zero"


@dataclass(frozen=True)
class Symbol:
    kind: Kind
    name: str = ""
    vset: VertexSet = None

    def __str__(self):
        if self.kind is Kind.REL:
            return self.name
        if self.kind is Kind.INV:
            return "~" + self.name
        if self.kind is Kind.SUB:
            return str(self.vset)
        return "0"


ZERO = Symbol(Kind.ZERO)
ZERO_WORD = (ZERO,)


def rel(name):
    return Symbol(Kind.REL, name=name)


def inv(name):
    return Symbol(Kind.INV, name=name)


def sub(vset):
    return Symbol(Kind.SUB, vset=vset)


class PathKind(Enum):
    NOT_PATH = "not-path"
    PATH = "path"
    LINEAR = "linear-path"


@dataclass(frozen=True)
class Classification:
    kind: PathKind
    reduced: bool = None

    @property
    def is_path(self):
        return self.kind is not PathKind.NOT_PATH


def source(n, x):
    if x.kind is Kind.REL:
        return n.relation(x.name).source
    if x.kind is Kind.INV:
        return n.relation(x.name).range
    if x.kind is Kind.SUB:
        return x.vset
    raise NotAPath("0 has no source")


def range_(n, x):
    if x.kind is Kind.REL:
        return n.relation(x.name).range
    if x.kind is Kind.INV:
        return n.relation(x.name).source
    if x.kind is Kind.SUB:
        return x.vset
    raise NotAPath("0 has no range")


def is_sub(word):
    """True for a single Sub symbol, i.e. an element of T0 as a word."""
    return len(word) == 1 and word[0].kind is Kind.SUB


def invert_word(word):
    flipped = {Kind.REL: Kind.INV, Kind.INV: Kind.REL}
    return tuple(
        Symbol(flipped[x.kind], name=x.name) if x.kind in flipped else x
        for x in reversed(word)
    )


def nr1_pair(n, x, y):
    """x y matches an NR1 left-hand side: x = s(y) or y = r(x)."""
    return (x.kind is Kind.SUB and x.vset == source(n, y)) or (
        y.kind is Kind.SUB and y.vset == range_(n, x)
    )


def parse_word(n, text):
    tokens = _TOKEN_RE.findall(text)
    if not tokens:
        raise EmptyWord("empty word")
    word = []
    for token in tokens:
        if token == "0":
            word.append(ZERO)
        elif token.startswith("{"):
            members = [m.strip() for m in token[1:-1].split(",") if m.strip()]
            vset = VertexSet.of(members)
            if vset not in n.t0:
                raise WordSyntaxError(f"{token} is not a source, range or vertex of {n}")
            word.append(sub(vset))
        else:
            inverse = token.startswith("~")
            name = token[1:] if inverse else token
            if name not in n.relation_map:
                available = ", ".join(n.relation_map) or "none"
                raise WordSyntaxError(f"unknown relation '{name}'. Available: {available}")
            word.append(inv(name) if inverse else rel(name))
    return tuple(word)


def format_word(word):
    return " ".join(str(x) for x in word)


def classify_word(n, word):
    if not word:
        raise EmptyWord("cannot classify the empty word")
    if any(x.kind in (Kind.INV, Kind.ZERO) for x in word):
        return Classification(PathKind.NOT_PATH)
    linear = True
    reduced = True
    for x, y in zip(word, word[1:]):
        r, s = range_(n, x), source(n, y)
        if not r.intersects(s):
            return Classification(PathKind.NOT_PATH)
        linear = linear and r == s
        reduced = reduced and not nr1_pair(n, x, y)
    return Classification(PathKind.LINEAR if linear else PathKind.PATH, reduced)


def source_range(n, word):
    if not classify_word(n, word).is_path:
        raise NotAPath(f"'{format_word(word)}' is not a path")
    return source(n, word[0]), range_(n, word[-1])


def compose_paths(n, a, b):
    """Concatenate two paths, or ZERO_WORD when r(a) misses s(b)."""
    _, r = source_range(n, a)
    s, _ = source_range(n, b)
    if not r.intersects(s):
        return ZERO_WORD
    return tuple(a) + tuple(b)


def path_symbols(n):
    """Symbol order: relations as declared, then T0 sorted."""
    return [rel(t.name) for t in n.relations] + [sub(a) for a in n.t0]


def enumerate_paths(n, max_len, kind="RP"):
    """Reduced paths (RP) or reduced linear paths (RLP) up to max_len symbols.

    Ordered by length, then lexicographically by path_symbols order.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if kind not in ("RP", "RLP"):
        raise ValueError(f"unknown path kind '{kind}', expected RP or RLP")
    linear_only = kind == "RLP"
    symbols = path_symbols(n)

    level = [(x,) for x in symbols]
    found = list(level)
    for _ in range(max_len - 1):
        nxt = []
        for word in level:
            last = word[-1]
            r = range_(n, last)
            for y in symbols:
                s = source(n, y)
                if not r.intersects(s) or nr1_pair(n, last, y):
                    continue
                if linear_only and r != s:
                    continue
                nxt.append(word + (y,))
        if not nxt:
            break
        found.extend(nxt)
        level = nxt
    log.debug("Enumerated %d %s words of length <= %d", len(found), kind, max_len)
    return found


def map_word(iso, word):
    """Rename a word along a NetworkIso."""
    mapped = []
    for x in word:
        if x.kind in (Kind.REL, Kind.INV):
            mapped.append(Symbol(x.kind, name=iso.relation_map[x.name]))
        elif x.kind is Kind.SUB:
            mapped.append(sub(iso.map_set(x.vset)))
        else:
            mapped.append(x)
    return tuple(mapped)
