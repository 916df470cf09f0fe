import itertools
import random

import pytest

from src.config import DATA_DIR
from src.network import load_network
from src.paths import ZERO_WORD, format_word, parse_word
from src.rewrite import (
    BudgetExceeded,
    Rule,
    all_normal_forms,
    alphabet,
    check_local_confluence,
    find_redexes,
    normal_form,
    normal_forms_all_orders,
)


def nf(n, text):
    return format_word(normal_form(n, parse_word(n, text))[0])


class TestRedexes:
    @staticmethod
    def test_examples(ex6):
        assert find_redexes(ex6, parse_word(ex6, "~t1 t1")) == [(0, Rule.NR4)]
        assert find_redexes(ex6, parse_word(ex6, "{v1,v2} t1 {v3}")) == [(0, Rule.NR1a), (1, Rule.NR1b)]
        assert find_redexes(ex6, parse_word(ex6, "t1 t2")) == []

    @staticmethod
    def test_specific_rule_shadows_nr2(ex6):
        assert find_redexes(ex6, parse_word(ex6, "~t1 t2")) == [(0, Rule.NR3)]
        assert find_redexes(ex6, parse_word(ex6, "~t2 {v4}")) == [(0, Rule.NR5)]
        assert find_redexes(ex6, parse_word(ex6, "t2 t1")) == [(0, Rule.NR2)]

    @staticmethod
    def test_zero_rules(ex6):
        assert find_redexes(ex6, parse_word(ex6, "0 0")) == [(0, Rule.NR6a), (0, Rule.NR6b)]
        assert find_redexes(ex6, parse_word(ex6, "t1 0")) == [(0, Rule.NR6b)]


class TestNormalForm:
    @staticmethod
    def test_examples(ex6):
        assert nf(ex6, "~t2 ~t1 t1 t2") == "{v4}"
        assert nf(ex6, "~t1 t2") == "0"
        assert nf(ex6, "~t1 {v1,v2}") == "~t1"
        assert nf(ex6, "0 t1") == "0"
        assert nf(ex6, "{v1,v2} {v1,v2} {v1,v2}") == "{v1,v2}"

    @staticmethod
    def test_trace(ex6):
        result, trace = normal_form(ex6, parse_word(ex6, "~t2 ~t1 t1 t2"))
        assert [s.rule for s in trace.steps] == [Rule.NR4, Rule.NR1b, Rule.NR4]
        assert trace.lines() == [
            "1. pos=1 rule=NR4 : ~t2 {v3} t2",
            "2. pos=0 rule=NR1b : ~t2 t2",
            "3. pos=0 rule=NR4 : {v4}",
        ]
        assert trace.result == result
        lengths = [len(trace.start)] + [len(s.result) for s in trace.steps]
        assert lengths == sorted(lengths, reverse=True)
        assert len(set(lengths)) == len(lengths)

    @staticmethod
    def test_zero_absorbs(ex6):
        rng = random.Random(5)
        symbols = alphabet(ex6)
        for _ in range(200):
            word = [rng.choice(symbols) for _ in range(rng.randint(1, 6))]
            word.insert(rng.randint(0, len(word)), ZERO_WORD[0])
            assert normal_form(ex6, tuple(word))[0] == ZERO_WORD

    @staticmethod
    def test_empty_word(ex6):
        with pytest.raises(ValueError):
            normal_form(ex6, ())


class TestAllOrders:
    @staticmethod
    def test_examples(ex6):
        assert normal_forms_all_orders(ex6, parse_word(ex6, "~t2 ~t1 t1 t2")) == {parse_word(ex6, "{v4}")}
        assert normal_forms_all_orders(ex6, parse_word(ex6, "t1 t2")) == {parse_word(ex6, "t1 t2")}
        assert normal_forms_all_orders(ex6, parse_word(ex6, "{v1,v2} t1 {v3}")) == {parse_word(ex6, "t1")}

    @staticmethod
    def test_budget(ex6):
        with pytest.raises(BudgetExceeded):
            normal_forms_all_orders(ex6, parse_word(ex6, "{v1,v2} {v1,v2} {v1,v2} {v1,v2}"), budget=2)

    @staticmethod
    def test_unique_up_to_length_four(ex6):
        symbols = alphabet(ex6) + list(ZERO_WORD)
        for length in range(1, 5):
            for word in itertools.product(symbols, repeat=length):
                forms = normal_forms_all_orders(ex6, word)
                assert forms == {normal_form(ex6, word)[0]}

    @staticmethod
    def test_unique_on_sampled_long_words(ex6):
        rng = random.Random(11)
        symbols = alphabet(ex6) + list(ZERO_WORD)
        for _ in range(1500):
            word = tuple(rng.choice(symbols) for _ in range(rng.choice((5, 6))))
            assert normal_forms_all_orders(ex6, word) == {normal_form(ex6, word)[0]}

    @staticmethod
    def test_memoized_forms_agree(ex6):
        rng = random.Random(13)
        symbols = alphabet(ex6) + list(ZERO_WORD)
        for _ in range(300):
            word = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 6)))
            assert all_normal_forms(ex6, word) == normal_forms_all_orders(ex6, word)

    @staticmethod
    def test_unique_up_to_length_six(ex6):
        symbols = alphabet(ex6) + list(ZERO_WORD)
        assert len(symbols) == 10
        for length in range(1, 7):
            for word in itertools.product(symbols, repeat=length):
                assert len(all_normal_forms(ex6, word)) == 1, format_word(word)


class TestConfluence:
    @staticmethod
    def test_ex6(ex6):
        report = check_local_confluence(ex6)
        assert report.passed
        [check] = report.find(parse_word(ex6, "{v1,v2} t1 {v3}"))
        assert check.case == "case 1(a2)"
        assert check.left_forms == check.right_forms == {parse_word(ex6, "t1")}

    @staticmethod
    def test_disjoint_sub_before_inverse(ex6):
        # {v1,v2} ~t1 is itself an NR2 redex, overlapping the NR4 on ~t1 t1
        report = check_local_confluence(ex6)
        [check] = report.find(parse_word(ex6, "{v1,v2} ~t1 t1"))
        assert (check.left_rule, check.right_rule) == (Rule.NR2, Rule.NR4)
        assert check.case == "case 7"
        assert check.left_forms == check.right_forms == {ZERO_WORD}
        assert nf(ex6, "{v1,v2} ~t1 t1") == "0"

    @staticmethod
    def test_graph(g2):
        assert check_local_confluence(g2).passed

    @staticmethod
    def test_random_networks(random_networks):
        for n in random_networks:
            assert check_local_confluence(n, workers=2).passed, str(n)

    @staticmethod
    def test_random_graphs(random_graphs):
        assert all(check_local_confluence(n).passed for n in random_graphs)

    @staticmethod
    def test_misaligned_network_fails_on_expected_triple():
        n = load_network(DATA_DIR / "misaligned.net")
        report = check_local_confluence(n)
        assert not report.passed
        triples = {format_word(c.triple) for c in report.failures}
        assert triples == {"~t {b,c} ~q"}
        [failure] = report.failures
        assert failure.case == "case 5(a1, dual)"
        assert failure.left_forms == {ZERO_WORD}
        assert failure.right_forms == {parse_word(n, "~t ~q")}

    @staticmethod
    def test_report_dict(ex6):
        data = check_local_confluence(ex6).to_dict()
        assert data["passed"] is True
        assert data["failures"] == []
        assert sum(data["cases"].values()) == data["triples_checked"]
