"""Command-line front end; `run(argv)` returns the exit status."""

import argparse
import json
import logging
import sys

from src.config import DEFAULT_BALL, ISO_BALL
from src.ideals import (
    HypothesisViolated,
    IdealCheckFailed,
    nonlinear_ideal,
    principal_star_ideal,
    rees_quotient,
    verify_ideal,
)
from src.network import (
    ex6,
    find_isomorphism,
    get_network,
    list_networks,
    load_network,
)
from src.order import InsufficientBall, classify_maximal, extract_skeleton, match_skeletons
from src.paths import enumerate_paths, format_word, parse_word
from src.rewrite import BudgetExceeded, check_local_confluence, normal_form
from src.semigroup import (
    Carrier,
    NonConfluentPresentation,
    enumerate_ball,
    format_element,
    inverse,
    is_idempotent,
    is_regular,
    map_element,
    multiply,
    parse_element,
    star,
    tag,
)

log = logging.getLogger("netras")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_VERIFICATION_ERRORS = (
    NonConfluentPresentation,
    HypothesisViolated,
    IdealCheckFailed,
    InsufficientBall,
    BudgetExceeded,
)


class UsageError(ValueError):
    pass


def open_network(spec):
    """A file path, or @code for a built-in network."""
    if spec is None:
        raise UsageError("this command needs --network FILE (or @code for a built-in)")
    if spec.startswith("@"):
        return get_network(spec[1:])
    return load_network(spec)


def _outcome(ok):
    return "PASS" if ok else "FAIL"


def cmd_nf(args, n):
    word = parse_word(n, args.word)
    result, trace = normal_form(n, word)
    text = [format_word(result)]
    if args.trace:
        text = trace.lines() + text
    witnesses = trace.lines() if args.trace else []
    return EXIT_OK, {"normal_form": format_word(result)}, witnesses, text


def cmd_mul(args, n):
    a, b = parse_element(n, args.left), parse_element(n, args.right)
    product = format_element(multiply(n, a, b))
    return EXIT_OK, {"product": product}, [], [product]


def cmd_star(args, n):
    result = format_element(star(parse_element(n, args.element)))
    return EXIT_OK, {"star": result}, [], [result]


def cmd_props(args, n):
    e = parse_element(n, args.element)
    flags = tag(n, e)
    inv = inverse(n, e)
    result = {
        "element": format_element(e),
        "idempotent": is_idempotent(e),
        "regular": is_regular(n, e),
        "in_S": flags.in_s,
        "in_R": flags.in_r,
        "inverse": format_element(inv) if inv is not None else None,
    }
    text = [f"{key:<11} {value}" for key, value in result.items()]
    return EXIT_OK, result, [], text


def cmd_enum(args, n):
    ball = enumerate_ball(n, args.ball, Carrier(args.sub))
    listed = [format_element(e) for e in ball]
    return EXIT_OK, {"carrier": args.sub, "ball": args.ball, "elements": listed}, [], listed


def cmd_order(args, n):
    report = classify_maximal(n, enumerate_ball(n, args.ball))
    data = report.to_dict()
    text = ["maximal in E(Q):"] + [f"  {e}" for e in data["maximal_in_EQ"]]
    text += ["maximal in E minus Sub-idempotents:"] + [f"  {e}" for e in data["maximal_in_E"]]
    text += ["covering pairs:"] + [f"  {e}  <  {f}" for e, f in data["hasse_pairs"]]
    return EXIT_OK, data, [], text


def cmd_skeleton(args, n):
    skeleton = extract_skeleton(n, enumerate_ball(n, args.ball))
    data = skeleton.to_dict()
    text = [f"{'idempotent':<24} {'source':<16} range"]
    text += [f"{q:<24} {row['source']:<16} {row['range']}" for q, row in data.items()]
    return EXIT_OK, data, [], text


def cmd_confluence(args, n):
    report = check_local_confluence(n)
    data = report.to_dict()
    text = [f"{case:<20} {count:6d} overlaps" for case, count in data["cases"].items()]
    for failure in data["failures"]:
        text.append(
            f"not joinable: {failure['triple']} ({'/'.join(failure['rules'])}) "
            f"-> {failure['left_forms']} vs {failure['right_forms']}"
        )
    text.append(f"local confluence: {_outcome(report.passed)}")
    status = EXIT_OK if report.passed else EXIT_FAILED
    return status, data, data["failures"], text


def _ideal_spec(n, kind, carrier):
    if kind == "nonlinear":
        return nonlinear_ideal(n, carrier)
    if kind.startswith("principal:"):
        return principal_star_ideal(n, kind.split(":", 1)[1], carrier)
    raise UsageError(f"unknown ideal '{kind}', expected nonlinear or principal:<relation>")


def cmd_ideal(args, n):
    carrier = Carrier(args.carrier)
    spec = _ideal_spec(n, args.kind, carrier)
    ball = enumerate_ball(n, args.ball, carrier)
    trace = [format_element(e) for e in ball if e in spec]
    result = {"ideal": spec.label, "carrier": carrier.value, "trace": trace}
    text = [f"{spec.label} in {carrier.value}, ball {args.ball}:"] + [f"  {e}" for e in trace]
    if not args.verify:
        return EXIT_OK, result, [], text

    report = verify_ideal(n, spec, ball)
    quotient = rees_quotient(n, spec, ball) if report.passed else None
    result["verification"] = report.to_dict()
    result["congruence"] = quotient.to_dict() if quotient else None
    ok = report.passed and quotient.compatible if quotient else False
    text += [
        f"absorption:       {_outcome(not report.absorption_violations)}",
        f"proper:           {_outcome(report.proper)}",
        f"star closed:      {_outcome(not report.star_violations)}",
        f"idempotents in I: {len(report.idempotents_in_ideal)}",
    ]
    if quotient is not None:
        text.append(f"Rees congruence:  {_outcome(quotient.compatible)} "
                    f"({len(quotient.classes)} classes)")
    witnesses = result["verification"]["absorption_violations"]
    return (EXIT_OK if ok else EXIT_FAILED), result, witnesses, text


def products_preserved(g, d, iso, radius=ISO_BALL):
    """Check phi(ab) = phi(a) phi(b) on the radius ball of g; return failures."""
    ball = enumerate_ball(g, radius)
    target = set(enumerate_ball(d, radius))
    failures = []
    for a in ball:
        if map_element(iso, a) not in target:
            failures.append((a, None))
            continue
        for b in ball:
            lhs = map_element(iso, multiply(g, a, b))
            rhs = multiply(d, map_element(iso, a), map_element(iso, b))
            if lhs != rhs:
                failures.append((a, b))
    return failures


def skeletons_correspond(g, d, radius=2):
    first = extract_skeleton(g, enumerate_ball(g, radius))
    second = extract_skeleton(d, enumerate_ball(d, radius))
    return match_skeletons(first, second) is not None


def cmd_iso(args, _):
    g, d = open_network(args.first), open_network(args.second)
    iso = find_isomorphism(g, d)
    structural = skeletons_correspond(g, d)
    result = {"isomorphic": iso is not None, "skeletons_correspond": structural}
    if iso is None:
        text = [f"{g} and {d} are not isomorphic",
                f"skeletons correspond: {'yes' if structural else 'no'}"]
        return EXIT_FAILED, result, [], text

    failures = products_preserved(g, d, iso, args.ball or ISO_BALL)
    result["bijection"] = iso.to_dict()
    result["products_preserved"] = not failures
    text = [f"  {a} -> {b}" for a, b in sorted(iso.vertex_map.items())]
    text += [f"  {a} -> {b}" for a, b in sorted(iso.relation_map.items())]
    text.append(f"products preserved on ball {args.ball or ISO_BALL}: {_outcome(not failures)}")
    text.append(f"skeletons correspond: {'yes' if structural else 'no'}")
    witnesses = [
        [format_element(a), format_element(b) if b is not None else None] for a, b in failures
    ]
    ok = not failures and structural
    return (EXIT_OK if ok else EXIT_FAILED), result, witnesses, text


def example6(radius=DEFAULT_BALL):
    """Everything about the two-relation example network, as a report dict."""
    n = ex6()
    balls = {c: enumerate_ball(n, radius, c) for c in Carrier}
    ideals = {
        "I1": principal_star_ideal(n, "t2", Carrier.Q),
        "I2": principal_star_ideal(n, "t2", Carrier.S),
        "I3": principal_star_ideal(n, "t2", Carrier.R),
    }
    reports = {name: verify_ideal(n, spec, balls[spec.carrier]) for name, spec in ideals.items()}

    q, s, r = (set(balls[c]) for c in Carrier)
    s_minus_r = [e for e in balls[Carrier.S] if e not in r]
    q_minus_s = [e for e in balls[Carrier.Q] if e not in s]
    inclusions = r <= s <= q and bool(s_minus_r) and bool(q_minus_s)

    result = {
        "t0": [str(a) for a in n.t0],
        "rlp_2": [format_word(w) for w in enumerate_paths(n, 2, "RLP")],
        "ball": radius,
        "R": [format_element(e) for e in balls[Carrier.R]],
        "ideals": {name: report.to_dict() for name, report in reports.items()},
        "strict_inclusions": inclusions,
        "witness_S_not_R": format_element(s_minus_r[0]) if s_minus_r else None,
        "witness_Q_not_S": format_element(q_minus_s[0]) if q_minus_s else None,
    }
    result["passed"] = inclusions and all(rep.passed for rep in reports.values())
    return result


def cmd_example6(args, _):
    result = example6(args.ball)
    text = ["T0: " + "  ".join(result["t0"]),
            "RLP up to length 2: " + "  ".join(result["rlp_2"]),
            f"R ball {result['ball']}:"]
    text += [f"  {e}" for e in result["R"]]
    for name, report in result["ideals"].items():
        text.append(f"{name} = {report['ideal']} in {report['carrier']}: "
                    f"{len(report['trace'])} elements, {_outcome(report['passed'])}")
        text += [f"  {e}" for e in report["trace"]]
    text.append(f"R < S < Q strict: {_outcome(result['strict_inclusions'])} "
                f"(S\\R: {result['witness_S_not_R']}; Q\\S: {result['witness_Q_not_S']})")
    witnesses = [result["witness_S_not_R"], result["witness_Q_not_S"]]
    return (EXIT_OK if result["passed"] else EXIT_FAILED), result, witnesses, text


COMMANDS = {
    "nf": cmd_nf,
    "mul": cmd_mul,
    "star": cmd_star,
    "props": cmd_props,
    "enum": cmd_enum,
    "order": cmd_order,
    "skeleton": cmd_skeleton,
    "confluence": cmd_confluence,
    "ideal": cmd_ideal,
    "iso": cmd_iso,
    "example6": cmd_example6,
}

_NO_NETWORK = ("iso", "example6")


def build_parser():
    builtins = ", ".join(f"@{code}" for code, _ in list_networks())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--network", type=str, default=None,
                        help=f"Network file, or a built-in: {builtins}")
    common.add_argument("--ball", type=int, default=None,
                        help=f"Ball radius |alpha|+|beta| (default {DEFAULT_BALL})")
    common.add_argument("--trace", action="store_true", help="Show rewriting steps")
    common.add_argument("--json", action="store_true", help="Emit a JSON report")

    parser = argparse.ArgumentParser(
        prog="netras", description="Compute in the semigroup of a finite network."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("nf", parents=[common], help="Normal form of a word").add_argument("word")
    p = sub.add_parser("mul", parents=[common], help="Multiply two elements")
    p.add_argument("left")
    p.add_argument("right")
    sub.add_parser("star", parents=[common], help="Idempotent a*").add_argument("element")
    sub.add_parser("props", parents=[common], help="Element properties").add_argument("element")
    p = sub.add_parser("enum", parents=[common], help="List a ball")
    p.add_argument("--sub", choices=[c.value for c in Carrier], default="Q")
    sub.add_parser("order", parents=[common], help="Maximal idempotents and covers")
    sub.add_parser("skeleton", parents=[common], help="Relations recovered from the order")
    sub.add_parser("confluence", parents=[common], help="Check all critical overlaps")
    p = sub.add_parser("ideal", parents=[common], help="Ideal trace and checks")
    p.add_argument("kind", help="nonlinear or principal:<relation>")
    p.add_argument("--carrier", choices=[c.value for c in Carrier], default="Q")
    p.add_argument("--verify", action="store_true")
    p = sub.add_parser("iso", parents=[common], help="Isomorphism of two networks")
    p.add_argument("first")
    p.add_argument("second")
    sub.add_parser("example6", parents=[common], help="The two-relation worked example")
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.ball is None and args.command != "iso":
        args.ball = DEFAULT_BALL
    try:
        n = None if args.command in _NO_NETWORK else open_network(args.network)
        status, result, witnesses, text = COMMANDS[args.command](args, n)
    except _VERIFICATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        report = {
            "command": args.command,
            "network": n.name if n is not None else None,
            "result": result,
            "witnesses": witnesses,
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(text))
    return status
