import pytest

from src.ideals import (
    HypothesisViolated,
    IdealCheckFailed,
    IdealSpec,
    nonlinear_ideal,
    principal_star_ideal,
    rees_quotient,
    verify_ideal,
)
from src.network import parse_network_text
from src.semigroup import Carrier, enumerate_ball, format_element, is_canonical

I1_TRACE = {
    "0",
    "{v4} | {v4}",
    "{v4} | t2",
    "{v4} | t1 t2",
    "t2 | {v4}",
    "t2 | t2",
    "t2 | t1 t2",
    "t1 t2 | {v4}",
    "t1 t2 | t2",
    "t1 t2 | t1 t2",
    "{v1} t1 t2 | {v4}",
    "{v1} t1 t2 | t2",
    "{v2} t1 t2 | {v4}",
    "{v2} t1 t2 | t2",
}
I3_TRACE = {"0", "t2 | t2", "t2 | t1 t2", "t1 t2 | t2", "t1 t2 | t1 t2"}


def trace(report):
    return {format_element(e) for e in report.trace}


class TestNonLinear:
    @staticmethod
    def test_ex6(ex6, ball4):
        report = verify_ideal(ex6, nonlinear_ideal(ex6), ball4)
        assert report.passed
        assert report.idempotent_separating
        assert "{v1} t1 | t1" in trace(report)
        assert "t1 t2 | t2" not in trace(report)

    @staticmethod
    def test_in_s(ex6, s_ball4):
        report = verify_ideal(ex6, nonlinear_ideal(ex6, Carrier.S), s_ball4)
        assert report.passed
        assert trace(report) <= trace(verify_ideal(ex6, nonlinear_ideal(ex6), s_ball4))

    @staticmethod
    def test_graph_has_only_zero(g2):
        report = verify_ideal(g2, nonlinear_ideal(g2), enumerate_ball(g2, 3))
        assert trace(report) == {"0"}
        assert report.proper

    @staticmethod
    def test_not_defined_on_r(ex6):
        with pytest.raises(ValueError):
            nonlinear_ideal(ex6, Carrier.R)


class TestPrincipal:
    @staticmethod
    def test_q(ex6, ball4):
        spec = principal_star_ideal(ex6, "t2", Carrier.Q)
        report = verify_ideal(ex6, spec, ball4)
        assert trace(report) == I1_TRACE
        assert report.passed
        assert report.generated_matches
        assert spec.hypothesis.singleton_range

    @staticmethod
    def test_s(ex6, s_ball4):
        report = verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.S), s_ball4)
        assert len(report.trace) == 9
        assert all(e.is_zero or format_element(e).endswith(("| t2", "| t1 t2")) for e in report.trace)
        assert report.passed
        assert not report.star_violations

    @staticmethod
    def test_r(ex6, r_ball4):
        report = verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.R), r_ball4)
        assert trace(report) == I3_TRACE
        assert report.passed

    @staticmethod
    def test_nested(ex6, ball4, s_ball4, r_ball4):
        i1 = trace(verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.Q), ball4))
        i2 = trace(verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.S), s_ball4))
        i3 = trace(verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.R), r_ball4))
        assert i3 < i2 < i1

    @staticmethod
    def test_hypothesis_violated(ex6):
        with pytest.raises(HypothesisViolated) as info:
            principal_star_ideal(ex6, "t1")
        assert any("out-index" in reason for reason in info.value.failed)

    @staticmethod
    def test_single_relation_not_enough_for_s(g2):
        assert principal_star_ideal(g2, "e", Carrier.Q).hypothesis.out_index_zero
        with pytest.raises(HypothesisViolated, match="only one relation"):
            principal_star_ideal(g2, "e", Carrier.S)

    @staticmethod
    def test_wide_range_covers_itself():
        n = parse_network_text("vertices a b c\nrel t : a -> b c\n")
        with pytest.raises(HypothesisViolated) as info:
            principal_star_ideal(n, "t")
        assert info.value.failed == ["r(t) = {b,c} lies inside {b,c}"]

    @staticmethod
    def test_unknown_relation(ex6):
        with pytest.raises(ValueError, match="Available: t1, t2"):
            principal_star_ideal(ex6, "t9")

    @staticmethod
    def test_report_dict(ex6, r_ball4):
        data = verify_ideal(ex6, principal_star_ideal(ex6, "t2", Carrier.R), r_ball4).to_dict()
        assert data["ideal"] == "principal:t2"
        assert data["carrier"] == "R"
        assert data["outside_witness"] == "t1 | t1"
        assert data["idempotents_in_ideal"] == ["0", "t2 | t2", "t1 t2 | t1 t2"]


class TestReesQuotient:
    @staticmethod
    def test_nonlinear(ex6, ball4):
        spec = nonlinear_ideal(ex6)
        quotient = rees_quotient(ex6, spec, ball4)
        members = [e for e in ball4 if e in spec]
        assert quotient.compatible
        assert not quotient.star_compatible
        assert len(quotient.classes) == len(ball4) - len(members) + 1
        assert quotient.classes[quotient.ideal_class] == members

    @staticmethod
    def test_principal_in_s_respects_star(ex6, s_ball4):
        quotient = rees_quotient(ex6, principal_star_ideal(ex6, "t2", Carrier.S), s_ball4)
        assert quotient.compatible
        assert quotient.star_compatible

    @staticmethod
    def test_zero_ideal_gives_identity(ex6, ball3):
        spec = IdealSpec(Carrier.Q, lambda e: e.is_zero)
        quotient = rees_quotient(ex6, spec, ball3)
        assert quotient.compatible
        assert all(len(c) == 1 for c in quotient.classes)
        assert len(quotient.classes) == len(ball3)

    @staticmethod
    def test_whole_ball_is_not_proper(ex6, ball3):
        spec = IdealSpec(Carrier.Q, lambda e: True)
        report = verify_ideal(ex6, spec, ball3)
        assert not report.proper
        assert not report.passed
        with pytest.raises(IdealCheckFailed):
            rees_quotient(ex6, spec, ball3)

    @staticmethod
    def test_non_ideal_reports_absorption(ex6, el, ball3):
        spec = IdealSpec(Carrier.Q, lambda e: e.is_zero or e == el("t1 | t1"))
        report = verify_ideal(ex6, spec, ball3)
        assert report.absorption_violations
        a, s, side, product = report.absorption_violations[0]
        assert a == el("t1 | t1")
        assert is_canonical(ex6, product)
        assert side in ("left", "right")


class TestRadius:
    @staticmethod
    def test_traces_grow_with_radius(ex6):
        ideals = [
            nonlinear_ideal(ex6, Carrier.Q),
            nonlinear_ideal(ex6, Carrier.S),
            principal_star_ideal(ex6, "t2", Carrier.Q),
            principal_star_ideal(ex6, "t2", Carrier.S),
            principal_star_ideal(ex6, "t2", Carrier.R),
        ]
        for spec in ideals:
            for k in (2, 3):
                small = enumerate_ball(ex6, k, spec.carrier)
                large = enumerate_ball(ex6, k + 1, spec.carrier)
                inner = set(small)
                assert {e for e in small if e in spec} == {e for e in large if e in spec and e in inner}
