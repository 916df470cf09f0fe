"""Elements of Q in right normal form and their arithmetic.

A nonzero element is a pair (alpha, beta): alpha a reduced path, beta a
reduced linear path, r(alpha) = r(beta). It stands for the class of the
word alpha beta^-1.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from src.network.model import misaligned_pairs
from src.paths import (
    ZERO_WORD,
    Kind,
    PathKind,
    classify_word,
    enumerate_paths,
    format_word,
    invert_word,
    is_sub,
    map_word,
    parse_word,
    range_,
    source,
    sub,
)
from src.rewrite import normal_form

log = logging.getLogger("netras")


class NonCanonicalOperand(ValueError):
    pass


class NonConfluentPresentation(ValueError):
    pass


class ElementSyntaxError(ValueError):
    pass


class Carrier(Enum):
    Q = "Q"
    S = "S"
    R = "R"


@dataclass(frozen=True)
class QElement:
    alpha: tuple = ()
    beta: tuple = ()

    @property
    def is_zero(self):
        return not self.alpha

    @property
    def size(self):
        return len(self.alpha) + len(self.beta)

    def word(self):
        """The representative word alpha beta^-1 (a Sub beta is its own inverse)."""
        if self.is_zero:
            return ZERO_WORD
        if is_sub(self.beta):
            return self.alpha + self.beta
        return self.alpha + invert_word(self.beta)

    def __str__(self):
        return format_element(self)


ZERO_ELEMENT = QElement()


@dataclass(frozen=True)
class SubsemigroupTag:
    in_s: bool
    in_r: bool
    in_q: bool = True


def format_element(e):
    if e.is_zero:
        return "0"
    return f"{format_word(e.alpha)} | {format_word(e.beta)}"


def parse_element(n, text):
    """`alpha | beta`, `0`, or any word (then canonicalized)."""
    text = text.strip()
    if text == "0":
        return ZERO_ELEMENT
    if "|" not in text:
        return canonicalize(n, parse_word(n, text))
    left, _, right = text.partition("|")
    element = QElement(parse_word(n, left), parse_word(n, right))
    if not is_canonical(n, element):
        raise ElementSyntaxError(f"'{text}' is not a right normal form")
    return element


def require_confluent(n):
    pairs = _misaligned(n)
    if pairs:
        listed = ", ".join(f"r({q}) vs s({t})" for q, t in pairs)
        log.warning("%s is not confluent: %s", n, listed)
        raise NonConfluentPresentation(
            f"{n}: ranges meet sources without equality ({listed}); normal forms are not unique"
        )


@lru_cache(maxsize=64)
def _misaligned(n):
    return tuple(misaligned_pairs(n))


def canonicalize(n, word):
    require_confluent(n)
    nf, _ = normal_form(n, word)
    if nf == ZERO_WORD:
        return ZERO_ELEMENT
    split = len(nf)
    while split > 0 and nf[split - 1].kind is Kind.INV:
        split -= 1
    alpha, inverses = nf[:split], nf[split:]
    if any(x.kind is Kind.INV for x in alpha):
        raise NonConfluentPresentation(f"irreducible word '{format_word(nf)}' has no right normal form")
    if not inverses:
        return QElement(alpha, (sub(range_(n, alpha[-1])),))
    beta = invert_word(inverses)
    r_beta = range_(n, beta[-1])
    if not alpha:
        return QElement((sub(r_beta),), beta)
    if range_(n, alpha[-1]) != r_beta:
        alpha, _ = normal_form(n, alpha + (sub(r_beta),))
    return QElement(alpha, beta)


@lru_cache(maxsize=1 << 14)
def is_canonical(n, e):
    if e.is_zero:
        return e.beta == ()
    if not e.alpha or not e.beta:
        return False
    try:
        shape_alpha = classify_word(n, e.alpha)
        shape_beta = classify_word(n, e.beta)
    except KeyError:
        return False
    return (
        shape_alpha.is_path
        and shape_alpha.reduced
        and shape_beta.kind is PathKind.LINEAR
        and shape_beta.reduced
        and range_(n, e.alpha[-1]) == range_(n, e.beta[-1])
    )


def _check_operands(n, *elements):
    for e in elements:
        if not is_canonical(n, e):
            raise NonCanonicalOperand(f"'{format_element(e)}' is not in right normal form")


@lru_cache(maxsize=1 << 18)
def multiply(n, a, b):
    """Closed-form product of two right normal forms."""
    _check_operands(n, a, b)
    if a.is_zero or b.is_zero:
        return ZERO_ELEMENT
    alpha, beta, mu, nu = a.alpha, a.beta, b.alpha, b.beta
    nu_inv = nu if is_sub(nu) else invert_word(nu)

    if is_sub(beta):
        if range_(n, alpha[-1]).intersects(source(n, mu[0])):
            return canonicalize(n, alpha + mu + nu_inv)
        return ZERO_ELEMENT
    if is_sub(mu):
        if mu[0].vset == source(n, beta[0]):
            return canonicalize(n, alpha + invert_word(nu + beta))
        return ZERO_ELEMENT
    if mu[:len(beta)] == beta:
        xi = mu[len(beta):] or (sub(range_(n, beta[-1])),)
        return canonicalize(n, alpha + xi + nu_inv)
    if beta[:len(mu)] == mu:
        eta = beta[len(mu):]
        return canonicalize(n, alpha + invert_word(nu + eta))
    return ZERO_ELEMENT


def multiply_oracle(n, a, b):
    """Product by rewriting the concatenated representative words."""
    _check_operands(n, a, b)
    return canonicalize(n, a.word() + b.word())


def star(e):
    if e.is_zero:
        return ZERO_ELEMENT
    return QElement(e.beta, e.beta)


def is_idempotent(e):
    return e.is_zero or e.alpha == e.beta


def _is_rlp(n, word):
    return classify_word(n, word).kind is PathKind.LINEAR


def is_regular(n, e):
    return e.is_zero or _is_rlp(n, e.alpha)


def inverse(n, e):
    if e.is_zero:
        return ZERO_ELEMENT
    if not is_regular(n, e):
        return None
    return QElement(e.beta, e.alpha)


def tag(n, e):
    if e.is_zero:
        return SubsemigroupTag(in_s=True, in_r=True)
    in_s = not is_sub(e.beta)
    in_r = in_s and not is_sub(e.alpha) and _is_rlp(n, e.alpha)
    return SubsemigroupTag(in_s=in_s, in_r=in_r)


def in_carrier(n, e, carrier):
    carrier = Carrier(carrier)
    if carrier is Carrier.Q:
        return True
    t = tag(n, e)
    return t.in_s if carrier is Carrier.S else t.in_r


def enumerate_ball(n, max_len, which=Carrier.Q):
    """ZERO_ELEMENT, then every canonical pair with |alpha| + |beta| <= max_len."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    require_confluent(n)
    which = Carrier(which)
    elements = [ZERO_ELEMENT]
    if max_len < 2:
        return elements

    alphas = enumerate_paths(n, max_len - 1, "RP")
    betas = enumerate_paths(n, max_len - 1, "RLP")
    by_range = {}
    for position, beta in enumerate(betas):
        by_range.setdefault(range_(n, beta[-1]), []).append((position, beta))

    pairs = []
    for a_pos, alpha in enumerate(alphas):
        for b_pos, beta in by_range.get(range_(n, alpha[-1]), []):
            if len(alpha) + len(beta) <= max_len:
                pairs.append((len(alpha) + len(beta), a_pos, b_pos, QElement(alpha, beta)))
    pairs.sort(key=lambda p: p[:3])
    elements.extend(e for *_, e in pairs if in_carrier(n, e, which))
    log.debug("Ball %s(%d) on %s: %d elements", which.value, max_len, n, len(elements))
    return elements


def map_element(iso, e):
    """Push an element forward along a NetworkIso."""
    if e.is_zero:
        return ZERO_ELEMENT
    return QElement(map_word(iso, e.alpha), map_word(iso, e.beta))
