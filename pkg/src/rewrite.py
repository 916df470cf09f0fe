"""The presentation NR1-NR6 as a length-reducing string rewriting system."""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from src.config import STATE_BUDGET, WORKERS
from src.paths import ZERO, Kind, format_word, path_symbols, range_, source, sub, inv

log = logging.getLogger("netras")


class BudgetExceeded(RuntimeError):
    pass


class Rule(Enum):
    NR6a = "NR6a"  # 0 x -> 0
    NR6b = "NR6b"  # x 0 -> 0
    NR1a = "NR1a"  # s(x) x -> x
    NR1b = "NR1b"  # x r(x) -> x
    NR4 = "NR4"  # t^-1 t -> r(t)
    NR3 = "NR3"  # t1^-1 t2 -> 0, t1 != t2
    NR5 = "NR5"  # t^-1 A -> 0, A != s(t)
    NR2 = "NR2"  # x y -> 0, r(x) and s(y) disjoint


@dataclass(frozen=True)
class Step:
    position: int
    rule: Rule
    result: tuple


@dataclass(frozen=True)
class RewriteTrace:
    start: tuple
    steps: tuple = ()

    @property
    def result(self):
        return self.steps[-1].result if self.steps else self.start

    def lines(self):
        return [
            f"{i}. pos={step.position} rule={step.rule.value} : {format_word(step.result)}"
            for i, step in enumerate(self.steps, start=1)
        ]


def pair_rules(n, x, y):
    """Rules whose left-hand side is x y, in precedence order."""
    if x.kind is Kind.ZERO or y.kind is Kind.ZERO:
        rules = []
        if x.kind is Kind.ZERO:
            rules.append(Rule.NR6a)
        if y.kind is Kind.ZERO:
            rules.append(Rule.NR6b)
        return rules

    rules = []
    if x.kind is Kind.SUB and x.vset == source(n, y):
        rules.append(Rule.NR1a)
    if y.kind is Kind.SUB and y.vset == range_(n, x):
        rules.append(Rule.NR1b)
    if x.kind is Kind.INV and y.kind is Kind.REL:
        rules.append(Rule.NR4 if x.name == y.name else Rule.NR3)
    if x.kind is Kind.INV and y.kind is Kind.SUB and y.vset != n.relation(x.name).source:
        rules.append(Rule.NR5)
    if not rules and not range_(n, x).intersects(source(n, y)):
        rules.append(Rule.NR2)
    return rules


def contract(n, rule, x, y):
    if rule is Rule.NR1a:
        return (y,)
    if rule is Rule.NR1b:
        return (x,)
    if rule is Rule.NR4:
        return (sub(n.relation(x.name).range),)
    return (ZERO,)


def find_redexes(n, word):
    return [
        (i, rule)
        for i, (x, y) in enumerate(zip(word, word[1:]))
        for rule in pair_rules(n, x, y)
    ]


def rewrite_at(n, word, position, rule):
    x, y = word[position], word[position + 1]
    return word[:position] + contract(n, rule, x, y) + word[position + 2:]


@lru_cache(maxsize=1 << 16)
def _reduce(n, word):
    steps = []
    current = word
    i = 0
    while i < len(current) - 1:
        rules = pair_rules(n, current[i], current[i + 1])
        if not rules:
            i += 1
            continue
        reduced = rewrite_at(n, current, i, rules[0])
        assert len(reduced) < len(current)
        steps.append(Step(i, rules[0], reduced))
        current = reduced
        i = max(i - 1, 0)
    return current, tuple(steps)


def normal_form(n, word):
    """Leftmost-first reduction to an irreducible word, with its trace."""
    word = tuple(word)
    if not word:
        raise ValueError("cannot normalize the empty word")
    result, steps = _reduce(n, word)
    return result, RewriteTrace(word, steps)


def normal_forms_all_orders(n, word, budget=STATE_BUDGET):
    """Every irreducible word reachable from `word` along any redex choice."""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    forms = set()
    while queue:
        current = queue.popleft()
        redexes = find_redexes(n, current)
        if not redexes:
            forms.add(current)
            continue
        for position, rule in redexes:
            nxt = rewrite_at(n, current, position, rule)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceeded(
                        f"more than {budget} states reached from '{format_word(word)}'"
                    )
                queue.append(nxt)
    return frozenset(forms)


@lru_cache(maxsize=1 << 18)
def all_normal_forms(n, word):
    """The same set as normal_forms_all_orders, memoized per word and without a budget.

    The forms of a word are the union of the forms of its one-step rewrites.
    """
    redexes = find_redexes(n, word)
    if not redexes:
        return frozenset((word,))
    return frozenset().union(
        *(all_normal_forms(n, rewrite_at(n, word, position, rule)) for position, rule in redexes)
    )


def classify_case(left, right):
    """Name the critical-pair case by the rules fired on x y and on y z."""
    nr1 = (Rule.NR1a, Rule.NR1b)
    zeroing = (Rule.NR2, Rule.NR3, Rule.NR5)
    sub_case = {Rule.NR1a: "a1", Rule.NR1b: "a2"}
    if left in nr1 and right in nr1:
        index = {(Rule.NR1a, Rule.NR1a): "a1", (Rule.NR1a, Rule.NR1b): "a2",
                 (Rule.NR1b, Rule.NR1a): "a3", (Rule.NR1b, Rule.NR1b): "a4"}
        return f"case 1({index[(left, right)]})"
    numbered = {Rule.NR2: 2, Rule.NR3: 3, Rule.NR4: 4, Rule.NR5: 5}
    if left in nr1 and right in numbered:
        return f"case {numbered[right]}({sub_case[left]})"
    if right in nr1 and left in numbered:
        return f"case {numbered[left]}({sub_case[right]}, dual)"
    if Rule.NR4 in (left, right) and Rule.NR2 in (left, right):
        return "case 7"
    if left in zeroing and right in zeroing:
        return "case 6"
    return "unclassified"


@dataclass(frozen=True)
class TripleCheck:
    triple: tuple
    left_rule: Rule
    right_rule: Rule
    case: str
    left_forms: frozenset
    right_forms: frozenset

    @property
    def joinable(self):
        return bool(self.left_forms & self.right_forms)

    def to_dict(self):
        return {
            "triple": format_word(self.triple),
            "rules": [self.left_rule.value, self.right_rule.value],
            "case": self.case,
            "joinable": self.joinable,
            "left_forms": sorted(format_word(w) for w in self.left_forms),
            "right_forms": sorted(format_word(w) for w in self.right_forms),
        }


@dataclass
class ConfluenceReport:
    network: str
    checks: list = field(default_factory=list)

    @property
    def failures(self):
        return [c for c in self.checks if not c.joinable]

    @property
    def passed(self):
        return not self.failures

    def case_counts(self):
        counts = {}
        for check in self.checks:
            counts[check.case] = counts.get(check.case, 0) + 1
        return dict(sorted(counts.items()))

    def find(self, triple):
        return [c for c in self.checks if c.triple == tuple(triple)]

    def to_dict(self):
        return {
            "passed": self.passed,
            "triples_checked": len(self.checks),
            "cases": self.case_counts(),
            "failures": [c.to_dict() for c in self.failures],
        }


def alphabet(n):
    """X without 0: relations, T0, then inverses."""
    return path_symbols(n) + [inv(t.name) for t in n.relations]


def _scan_middle(n, y, symbols, rules):
    checks = []
    for x in symbols:
        left_rules = rules[(x, y)]
        if not left_rules:
            continue
        for z in symbols:
            for left in left_rules:
                for right in rules[(y, z)]:
                    left_child = contract(n, left, x, y) + (z,)
                    right_child = (x,) + contract(n, right, y, z)
                    checks.append(
                        TripleCheck(
                            triple=(x, y, z),
                            left_rule=left,
                            right_rule=right,
                            case=classify_case(left, right),
                            left_forms=normal_forms_all_orders(n, left_child),
                            right_forms=normal_forms_all_orders(n, right_child),
                        )
                    )
    return checks


def check_local_confluence(n, workers=WORKERS):
    """Check every overlap x y z of two redexes for joinability."""
    symbols = alphabet(n)
    rules = {(x, y): pair_rules(n, x, y) for x in symbols for y in symbols}
    report = ConfluenceReport(network=n.name)
    with ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
        for checks in pool.map(lambda y: _scan_middle(n, y, symbols, rules), symbols):
            report.checks.extend(checks)
    # pool.map keeps middle-symbol order; restore x, y, z order
    order = {x: i for i, x in enumerate(symbols)}
    report.checks.sort(key=lambda c: tuple(order[s] for s in c.triple))
    log.info(
        "Confluence on %s: %d overlaps, %d not joinable",
        n, len(report.checks), len(report.failures),
    )
    return report
