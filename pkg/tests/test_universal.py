"""Tests for the complementation-free universal quantification pipeline."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from unaryfol.automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    LassoWord,
    VariableSignature,
    accepts_empty_word,
    buchi_is_empty,
    finite_is_empty,
    finite_membership,
    lasso_membership,
    trim,
)
from unaryfol.encoding import project_variable, valid_encodings_automaton
from unaryfol.errors import NoAcceptingMember, NotFirstOrder, UnknownState
from unaryfol.graphs import reachable
from unaryfol.oracle import (
    brute_force_universal_membership,
    enumerate_lassos,
    finite_languages_equal,
    languages_equal_on_lassos,
    random_automaton,
)
from unaryfol.universal import (
    acyclic_fo_normalize,
    assemble,
    component_automata,
    cycle_language_with_accept,
    reduce_finite,
    subset_construction,
    u_language,
    universal_quantify,
    universal_quantify_with_artifacts,
    widget_language,
)

from reference_automata import exists_later_member, forall_result, infinitely_often
from regex_nfa import regex_nfa

SIG = VariableSignature(("x",), ("X",))


def _fo_on_cycle(a: BuchiAutomaton, k: int) -> bool:
    """Does a transition setting one of the first ``k`` tracks lie on a cycle?"""
    succ = lambda q: [d for _, d in a.out[q]]
    for s, lab, d in a.transitions:
        if lab is not None and any(lab[:k]) and s in reachable([d], succ):
            return True
    return False


def _random(seed, n=None, sig=SIG):
    rng = random.Random(seed)
    return random_automaton(rng, n or rng.randint(1, 3), sig)


class TestNormalize:
    def test_inner_example_unchanged(self):
        a = exists_later_member()
        n = acyclic_fo_normalize(a)
        assert languages_equal_on_lassos(n, a, 3, 3) is None

    def test_no_first_order_tracks(self):
        a = infinitely_often()
        n = acyclic_fo_normalize(a)
        assert n.num_states == a.num_states
        assert n.num_transitions == a.num_transitions

    def test_self_loop_on_first_order_transition(self):
        rows = [(0, "00", 0), (0, "01", 0), (0, "10", 1), (0, "11", 1), (0, "10", 0),
                (1, "00", 1), (1, "01", 1)]
        a = BuchiAutomaton.build(SIG, rows, [0], [1])
        assert _fo_on_cycle(a, 1)
        n = acyclic_fo_normalize(a)
        assert not _fo_on_cycle(n, 1)
        # the x-loop only ever fires once on an accepted word
        for w in enumerate_lassos(2, 3, 3):
            assert lasso_membership(n, w) == lasso_membership(a, w) or \
                sum(s[0] for s in w.prefix + w.period) != 1

    @pytest.mark.parametrize("seed", range(20))
    def test_random_acyclic_and_equal_on_valid(self, seed):
        a = _random(seed)
        n = acyclic_fo_normalize(a)
        assert not _fo_on_cycle(n, 1)
        valid = valid_encodings_automaton(SIG)
        for w in enumerate_lassos(2, 2, 2):
            if lasso_membership(valid, w):
                assert lasso_membership(n, w) == lasso_membership(a, w), w


class TestSubsetConstruction:
    def test_subset_of_inner_example(self):
        sub = trim(subset_construction(exists_later_member(), "x1"))
        members = {q: tuple(sorted(sub.info[q])) for q in sub.states}
        assert sorted(members.values()) == [(0,), (0, 1), (0, 1, 2)]
        by = {v: k for k, v in members.items()}
        edges = {(members[s], lab[0], members[d]) for s, lab, d in sub.transitions}
        assert edges == {
            ((0,), 0, (0, 1)), ((0,), 1, (0, 1)),
            ((0, 1), 0, (0, 1)), ((0, 1), 1, (0, 1)), ((0, 1), 1, (0, 1, 2)),
            ((0, 1, 2), 0, (0, 1, 2)), ((0, 1, 2), 1, (0, 1, 2)),
        }
        assert sub.initial == {by[(0,)]}

    def test_all_states_accepting(self):
        sub = subset_construction(exists_later_member(), "x1")
        assert sub.accepting == sub.states

    def test_second_order_rejected(self):
        with pytest.raises(NotFirstOrder):
            subset_construction(exists_later_member(), "X1")

    def test_empty_language(self):
        a = BuchiAutomaton.build(SIG, [(0, "00", 0)], [0], [])
        assert buchi_is_empty(universal_quantify(a, "x"))

    def test_epsilon_moves_both_ways(self):
        a = BuchiAutomaton.build(SIG, [(0, "eps", 1), (1, "10", 1)], [0], [1])
        sub = subset_construction(a, "x")
        eps = {(tuple(sorted(sub.info[s])), tuple(sorted(sub.info[d])))
               for s, lab, d in sub.transitions if lab is None}
        assert ((0,), (0, 1)) in eps and ((0,), (1,)) in eps

    def test_full_construction_has_every_subset(self):
        sub = subset_construction(exists_later_member(), "x1", lazy=False)
        assert sub.num_states == 7
        assert {tuple(sorted(sub.info[q])) for q in sub.initial} == {(0,)}

    def test_deterministic_numbering(self):
        a = _random(5, 3)
        assert subset_construction(a, "x") == subset_construction(a, "x")


class TestCycleLanguages:
    def test_inner_example(self):
        a = exists_later_member()
        expected = {0: "@", 1: "@", 2: "(0+1)^+"}
        for q, regex in expected.items():
            diff = finite_languages_equal(cycle_language_with_accept(a, q, "x1"),
                                          regex_nfa(regex))
            assert diff is None, (q, diff)

    def test_no_cycle(self):
        a = BuchiAutomaton.build(SIG, [(0, "01", 1)], [0], [0, 1])
        assert finite_is_empty(cycle_language_with_accept(a, 0, "x"))

    def test_accepting_self_loop(self):
        rows = [(0, "01", 0), (0, "00", 1), (1, "01", 0), (1, "00", 1)]
        a = BuchiAutomaton.build(SIG, rows, [0], [0])
        # cycles on 1 must pass through 0, entered by a 1 on X
        n = cycle_language_with_accept(a, 1, "x")
        for length in range(1, 5):
            for k in range(2 ** length):
                word = [((k >> j) & 1,) for j in range(length)]
                text = "".join(str(b[0]) for b in word)
                expected = "1" in text and text.endswith("0")
                assert finite_membership(n, word) == expected, text

    def test_unknown_state(self):
        with pytest.raises(UnknownState):
            cycle_language_with_accept(exists_later_member(), 7, "x1")


class TestULanguage:
    def test_inner_example(self):
        a = exists_later_member()
        expected = {0: "(0+1)^+ 1 (0+1)*", 1: "(0+1)* 1 (0+1)*", 2: "(0+1)^+"}
        for q, regex in expected.items():
            assert finite_languages_equal(u_language(a, q, "x1"), regex_nfa(regex)) is None

    def test_no_accepting_state(self):
        a = BuchiAutomaton.build(SIG, [(0, "00", 0), (0, "10", 0)], [0], [])
        assert finite_is_empty(u_language(a, 0, "x"))

    def test_unknown_state(self):
        with pytest.raises(UnknownState):
            u_language(exists_later_member(), 9, "x1")

    @pytest.mark.parametrize("seed", range(15))
    def test_members_repeat_into_acceptance(self, seed):
        a = acyclic_fo_normalize(_random(seed))
        projected = project_variable(a, "x")
        for q in sorted(a.states):
            u = u_language(a, q, "x")
            rooted = projected.with_states(initial=[q])
            for w in enumerate_lassos(1, 0, 3):
                if finite_membership(u, w.period):
                    assert lasso_membership(rooted, w), (q, w)


class TestWidgets:
    def test_inner_example(self):
        a = exists_later_member()
        full = subset_construction(a, "x1", lazy=False)
        u = {q: u_language(a, q, "x1") for q in a.states}
        by = {tuple(sorted(full.info[s])): s for s in full.states}
        assert finite_is_empty(widget_language(full, by[1, 2], u, a.accepting))
        assert finite_languages_equal(widget_language(full, by[0, 1, 2], u, a.accepting),
                                      regex_nfa("(0+1)^+ 1 (0+1)*")) is None

    def test_member_with_empty_u(self):
        a = BuchiAutomaton.build(SIG, [(0, "10", 1), (1, "00", 1)], [0], [0])
        sub = subset_construction(a, "x")
        u = {q: u_language(a, q, "x") for q in a.states}
        (q0,) = [s for s in sub.states if sub.info[s] == {0}]
        assert finite_is_empty(widget_language(sub, q0, u, a.accepting))

    def test_requires_accepting_member(self):
        a = exists_later_member()
        sub = subset_construction(a, "x1")
        (q0,) = [s for s in sub.states if sub.info[s] == {0}]
        with pytest.raises(NoAcceptingMember):
            widget_language(sub, q0, {}, a.accepting)

    @pytest.mark.parametrize("seed", range(10))
    def test_component_restriction_keeps_language(self, seed):
        art = universal_quantify_with_artifacts(_random(seed), "x")
        n, sub = art.normalized, art.subset
        comps = component_automata(sub)
        for qp in art.widget_languages:
            whole = widget_language(sub, qp, art.u_languages, n.accepting)
            assert finite_languages_equal(whole, art.widget_languages[qp]) is None
            assert qp in comps[qp].states
            assert comps[qp].transitions <= sub.transitions

    @pytest.mark.parametrize("seed", range(10))
    def test_widget_words_label_cycles(self, seed):
        art = universal_quantify_with_artifacts(_random(seed), "x")
        sub = art.subset
        for qp, lang in art.widget_languages.items():
            loop = FiniteAutomaton(sub.signature, sub.states, sub.transitions,
                                   frozenset([qp]), frozenset([qp]))
            assert not accepts_empty_word(lang)
            for w in enumerate_lassos(1, 4, 1):
                word = w.prefix
                if finite_membership(lang, word):
                    assert finite_membership(loop, word), (qp, word)


class TestAssemble:
    def test_running_example_is_forall_result(self):
        art = universal_quantify_with_artifacts(exists_later_member(), "x1")
        assert languages_equal_on_lassos(art.result, forall_result(), 4, 4) is None

    def test_no_widgets(self):
        sub = subset_construction(exists_later_member(), "x1")
        assert buchi_is_empty(assemble(sub, {}))

    @pytest.mark.parametrize("seed", range(10))
    def test_accepted_lassos_pass_oracle(self, seed):
        a = _random(seed)
        result = universal_quantify(a, "x")
        for w in enumerate_lassos(1, 3, 3):
            if lasso_membership(result, w):
                assert brute_force_universal_membership(a, "x", w), w

    @pytest.mark.parametrize("seed", range(10))
    def test_widgets_mutually_unreachable(self, seed):
        art = universal_quantify_with_artifacts(_random(seed), "x")
        r = art.result
        hubs = [q for q in r.states
                if isinstance(r.info.get(q), tuple) and r.info[q][0] == "repeat"]
        assert set(hubs) == set(r.accepting)
        succ = lambda q: [d for _, d in r.out[q]]
        for h in hubs:
            assert reachable([h], succ) & set(hubs) == {h}


class TestUniversalQuantify:
    def test_running_example(self):
        result = universal_quantify(exists_later_member(), "x1")
        assert result.signature == VariableSignature((), ("X1",))
        assert lasso_membership(result, LassoWord.of("", "1"))
        assert not lasso_membership(result, LassoWord.of("1", "0"))
        assert languages_equal_on_lassos(result, infinitely_often(), 3, 3) is None

    def test_forall_true(self):
        result = universal_quantify(valid_encodings_automaton(SIG), "x")
        assert all(lasso_membership(result, w) for w in enumerate_lassos(1, 2, 2))

    def test_artifact_invariants(self):
        a = exists_later_member()
        art = universal_quantify_with_artifacts(a, "x1")
        assert art.var == "x1"
        for qp, lang in art.widget_languages.items():
            assert art.subset.info[qp] & art.normalized.accepting
            assert not accepts_empty_word(lang)

    def test_second_order_rejected(self):
        with pytest.raises(NotFirstOrder):
            universal_quantify(exists_later_member(), "X1")

    def test_deterministic(self):
        a = _random(11, 3)
        assert universal_quantify(a, "x") == universal_quantify(a, "x")

    @pytest.mark.parametrize("seed", range(30))
    def test_oracle_agreement(self, seed):
        a = acyclic_fo_normalize(_random(seed))
        result = universal_quantify(a, "x")
        for w in enumerate_lassos(1, 3, 3):
            assert lasso_membership(result, w) == brute_force_universal_membership(a, "x", w)

    @pytest.mark.parametrize("seed", range(15))
    def test_forall_within_exists(self, seed):
        a = _random(seed)
        forall, exists = universal_quantify(a, "x"), project_variable(a, "x")
        for w in enumerate_lassos(1, 3, 3):
            if lasso_membership(forall, w):
                assert lasso_membership(exists, w)

    @pytest.mark.parametrize("seed", range(6))
    def test_quantifiers_commute(self, seed):
        sig = VariableSignature(("x", "y"), ("X",))
        a = _random(seed, 2, sig)
        xy = universal_quantify(universal_quantify(a, "x"), "y")
        yx = universal_quantify(universal_quantify(a, "y"), "x")
        assert languages_equal_on_lassos(xy, yx, 3, 3) is None


class TestReduceFinite:
    @pytest.mark.parametrize("regex", ["(0+1)^+ 1 (0+1)*", "(0+1)*", "@", "(01)^+ + 1"])
    def test_language_kept(self, regex):
        n = regex_nfa(regex)
        assert finite_languages_equal(reduce_finite(n), n) is None

    def test_minimal(self):
        assert reduce_finite(regex_nfa("(0+1)* 1 (0+1)*")).num_states == 2
        assert reduce_finite(regex_nfa("@")).num_states == 0


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10 ** 6),
           prefix=st.lists(st.integers(0, 1), max_size=3),
           period=st.lists(st.integers(0, 1), min_size=1, max_size=3))
    def test_pipeline_matches_oracle(self, seed, prefix, period):
        a = _random(seed)
        w = LassoWord(tuple((b,) for b in prefix), tuple((b,) for b in period))
        assert lasso_membership(universal_quantify(a, "x"), w) == \
            brute_force_universal_membership(a, "x", w)
