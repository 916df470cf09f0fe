"""Ideals of Q, S and R, their Rees congruences, and ball-level checks."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from src.network.model import out_index
from src.paths import PathKind, classify_word, range_, rel
from src.semigroup import (
    Carrier,
    QElement,
    format_element,
    in_carrier,
    is_idempotent,
    multiply,
    star,
)

log = logging.getLogger("netras")


class HypothesisViolated(ValueError):
    def __init__(self, failed):
        super().__init__("hypothesis violated: " + "; ".join(failed))
        self.failed = failed


class IdealCheckFailed(ValueError):
    pass


@dataclass(frozen=True)
class NonLinearIdeal:
    label: str = "nonlinear"


@dataclass(frozen=True)
class Principal:
    relation: str
    out_index_zero: bool
    no_covering_set: bool
    singleton_range: bool
    several_relations: Optional[bool] = None
    distinct_range: Optional[bool] = None

    @property
    def label(self):
        return f"principal:{self.relation}"


@dataclass(frozen=True)
class IdealSpec:
    carrier: Carrier
    membership: Callable[[QElement], bool]
    hypothesis: object = None

    def __contains__(self, e):
        return self.membership(e)

    @property
    def label(self):
        return getattr(self.hypothesis, "label", "custom")


def nonlinear_ideal(n, carrier=Carrier.Q):
    """Zero together with every element whose alpha is a non-linear reduced path."""
    carrier = Carrier(carrier)
    if carrier is Carrier.R:
        raise ValueError("the nonlinear ideal lives in Q or S; R has no non-linear alpha")

    def membership(e):
        if e.is_zero:
            return True
        return (
            in_carrier(n, e, carrier)
            and classify_word(n, e.alpha).kind is not PathKind.LINEAR
        )

    return IdealSpec(carrier, membership, NonLinearIdeal())


def principal_star_ideal(n, t, carrier=Carrier.Q):
    """The ideal generated by [t t^-1]: zero and everything with r(alpha) = r(t)."""
    carrier = Carrier(carrier)
    if t not in n.relation_map:
        available = ", ".join(n.relation_map) or "none"
        raise ValueError(f"Unknown relation '{t}'. Available: {available}")
    target = n.relation(t).range

    failed = []
    zero_out = out_index(n, target) == 0
    if not zero_out:
        failed.append(f"out-index of r({t}) = {target} is {out_index(n, target)}, not 0")
    covering = [a for a in n.t0 if len(a) > 1 and target.issubset(a)]
    if covering:
        failed.append(f"r({t}) = {target} lies inside {', '.join(map(str, covering))}")

    several = distinct = None
    if carrier is not Carrier.Q:
        several = len(n.relations) > 1
        distinct = any(q.range != target for q in n.relations)
        if not several:
            failed.append("only one relation")
        if not distinct:
            failed.append(f"every relation has range {target}")
    if failed:
        raise HypothesisViolated(failed)

    # a wider r(t) is itself a covering set, so r(t) is a singleton from here on
    singleton = len(target) == 1

    def membership(e):
        if e.is_zero:
            return True
        return range_(n, e.alpha[-1]) == target and in_carrier(n, e, carrier)

    hypothesis = Principal(t, zero_out, not covering, singleton, several, distinct)
    return IdealSpec(carrier, membership, hypothesis)


@dataclass
class IdealReport:
    label: str
    carrier: Carrier
    trace: list
    absorption_violations: list = field(default_factory=list)
    outside_witness: Optional[QElement] = None
    star_violations: list = field(default_factory=list)
    idempotents_in_ideal: list = field(default_factory=list)
    generated_matches: Optional[bool] = None

    @property
    def proper(self):
        return self.outside_witness is not None

    @property
    def idempotent_separating(self):
        return len(self.idempotents_in_ideal) <= 1

    @property
    def passed(self):
        return (
            not self.absorption_violations
            and self.proper
            and not self.star_violations
            and self.generated_matches is not False
        )

    def to_dict(self):
        return {
            "ideal": self.label,
            "carrier": self.carrier.value,
            "passed": self.passed,
            "trace": [format_element(e) for e in self.trace],
            "absorption_violations": [
                [format_element(a), format_element(s), side, format_element(p)]
                for a, s, side, p in self.absorption_violations
            ],
            "outside_witness": (
                format_element(self.outside_witness) if self.proper else None
            ),
            "star_violations": [format_element(a) for a in self.star_violations],
            "idempotents_in_ideal": [format_element(e) for e in self.idempotents_in_ideal],
            "generated_matches": self.generated_matches,
        }


def _generated(n, generator, ball):
    """Ball elements of the form x g y with x, y in the ball or the identity."""
    members = set(ball)
    left = {generator} | {multiply(n, x, generator) for x in ball}
    found = set()
    for g in left:
        if g in members:
            found.add(g)
        for y in ball:
            product = multiply(n, g, y)
            if product in members:
                found.add(product)
    return found


def verify_ideal(n, spec, ball):
    trace = [e for e in ball if e in spec]
    report = IdealReport(spec.label, spec.carrier, trace)

    for a in trace:
        for s in ball:
            for side, product in (("right", multiply(n, a, s)), ("left", multiply(n, s, a))):
                if product not in spec:
                    report.absorption_violations.append((a, s, side, product))

    report.outside_witness = next((e for e in ball if e not in spec), None)
    report.idempotents_in_ideal = [e for e in trace if is_idempotent(e)]

    if isinstance(spec.hypothesis, Principal):
        report.star_violations = [a for a in trace if star(a) not in spec]
        t = spec.hypothesis.relation
        generator = QElement((rel(t),), (rel(t),))
        report.generated_matches = _generated(n, generator, ball) == set(trace)

    log.info(
        "Ideal %s on %s-ball of %d: trace %d, %s",
        spec.label, spec.carrier.value, len(ball), len(trace),
        "PASS" if report.passed else "FAIL",
    )
    return report


@dataclass
class CongruenceClasses:
    classes: list
    ideal_class: int
    violations: list = field(default_factory=list)
    star_violations: list = field(default_factory=list)

    @property
    def compatible(self):
        return not self.violations

    @property
    def star_compatible(self):
        return not self.star_violations

    def to_dict(self):
        return {
            "classes": [[format_element(e) for e in c] for c in self.classes],
            "ideal_class": self.ideal_class,
            "compatible": self.compatible,
            "star_compatible": self.star_compatible,
        }


def rees_quotient(n, spec, ball):
    """Partition the ball by (I x I) plus equality and check it is a congruence."""
    report = verify_ideal(n, spec, ball)
    if not report.passed:
        raise IdealCheckFailed(f"{spec.label} is not a proper ideal on the ball")

    trace = report.trace
    classes = [list(trace)] + [[e] for e in ball if e not in spec]

    def related(x, y):
        return x == y or (x in spec and y in spec)

    result = CongruenceClasses(classes, ideal_class=0)
    for a in trace:
        for a2 in trace:
            if a == a2:
                continue
            for b in ball:
                if not related(multiply(n, a, b), multiply(n, a2, b)):
                    result.violations.append((a, a2, b, "right"))
                if not related(multiply(n, b, a), multiply(n, b, a2)):
                    result.violations.append((a, a2, b, "left"))
            if not related(star(a), star(a2)):
                result.star_violations.append((a, a2))
    log.info(
        "Rees quotient by %s: %d classes, compatible=%s",
        spec.label, len(classes), result.compatible,
    )
    return result
