"""Universal first-order quantification on Büchi automata, without
complementation.

Given an automaton ``A`` for the models of ``phi`` and a first-order
variable ``x``, :func:`universal_quantify` returns an automaton for the
models of ``forall x. phi``.  The pipeline:

1. normalise ``A`` so that no transition setting a first-order track lies on
   a cycle (:func:`acyclic_fo_normalize`);
2. run the subset construction that simulates, in lock-step, one copy of
   ``A`` per value ``n`` of ``x`` (:func:`subset_construction`); each subset
   state records where the copies currently are;
3. for every state ``q`` of ``A`` compute its U language, the finite words whose
   infinite repetition ``A`` accepts from ``q`` through a reach-then-loop
   decomposition (:func:`cycle_language_with_accept`, :func:`u_language`);
4. for every subset state holding an accepting state, intersect its own
   cycle language with the U languages of its members (:func:`widget_language`);
5. graft the omega-closure of each such language next to its subset state
   and make the widget hubs the only accepting states (:func:`assemble`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    all_symbols,
    explore,
    finite_is_empty,
    finite_multi_intersection,
    juxtapose,
    label_key,
    omega_closure,
    paths_automaton,
    trim,
)
from .encoding import project_variable
from .errors import NoAcceptingMember, NotFirstOrder, UnknownState
from .graphs import strongly_connected_components


def _nonempty_subsets(items) -> list:
    items = sorted(items)
    return [frozenset(c) for r in range(1, len(items) + 1) for c in combinations(items, r)]


def _subset_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


def reduce_finite(n: FiniteAutomaton) -> FiniteAutomaton:
    """Smallest deterministic automaton with the same finite-word language.

    Only used to keep the intermediate finite languages small before they
    are intersected; the Büchi side is never determinized.  The rejecting
    sink is left out, so the result is trimmed.
    """
    symbols = all_symbols(n.signature.width)

    def step(cur, sym):
        nxt = set()
        for q in cur:
            nxt.update(n.delta[q].get(sym, ()))
        return n.eps_closure(nxt)

    def successors(cur):
        out = []
        for sym in symbols:
            nxt = step(cur, sym)
            if nxt:
                out.append((sym, nxt))
        return out

    start = n.eps_closure(n.initial)
    if not start:
        return FiniteAutomaton(n.signature, frozenset(), frozenset(), frozenset(), frozenset())
    dfa = trim(explore(FiniteAutomaton, n.signature, [start], successors,
                       lambda cur: bool(cur & n.accepting)))
    if not dfa.states:
        return dfa
    # Moore refinement; a missing move goes to the implicit sink, class -1.
    block = {q: int(q in dfa.accepting) for q in dfa.states}
    while True:
        sig = {q: (block[q],) + tuple(
            block[next(iter(dfa.delta[q][sym]))] if sym in dfa.delta[q] else -1
            for sym in symbols) for q in dfa.states}
        ids: dict = {}
        refined = {q: ids.setdefault(sig[q], len(ids)) for q in sorted(dfa.states)}
        if len(ids) == len(set(block.values())):
            break
        block = refined
    block = refined
    transitions = frozenset((block[s], lab, block[d]) for s, lab, d in dfa.transitions)
    return FiniteAutomaton(n.signature, frozenset(block.values()), transitions,
                           frozenset(block[q] for q in dfa.initial),
                           frozenset(block[q] for q in dfa.accepting))


def acyclic_fo_normalize(a: BuchiAutomaton) -> BuchiAutomaton:
    """Equivalent automaton (on valid encodings) in which transitions that
    set a first-order track never lie on a cycle.

    Product with the lattice of already-consumed first-order tracks: a
    transition may only set tracks not consumed yet, and acceptance requires
    all of them consumed.  ``info`` maps each new state to ``(old, mask)``.
    """
    k = len(a.signature.fo)
    full = (1 << k) - 1

    def successors(key):
        q, mask = key
        out = []
        for lab, d in a.out[q]:
            if lab is None:
                out.append((None, (d, mask)))
                continue
            bits = sum(b << j for j, b in enumerate(lab[:k]))
            if not bits & mask:
                out.append((lab, (d, mask | bits)))
        return out

    return explore(
        BuchiAutomaton, a.signature, [(q, 0) for q in sorted(a.initial)], successors,
        lambda key: key[1] == full and key[0] in a.accepting,
        info=lambda key: key,
    )


def _split_by_track(a: BuchiAutomaton, i: int) -> dict:
    """state -> {projected symbol: (dsts with bit i = 0, dsts with bit i = 1)}."""
    table = {q: {} for q in a.states}
    for s, lab, d in a.transitions:
        if lab is None:
            continue
        proj = lab[:i] + lab[i + 1:]
        entry = table[s].setdefault(proj, (set(), set()))
        entry[lab[i]].add(d)
    return table


def _targets(sources: frozenset, options: dict) -> set:
    """All target sets of witness sets of transitions leaving exactly
    ``sources``, with exactly one transition setting the quantified track.

    ``options`` maps each source to its ``(zero_dsts, one_dsts)``.
    """
    result = set()
    for star in sorted(sources):
        zeros_star, ones_star = options.get(star, ((), ()))
        if not ones_star:
            continue
        others = [q for q in sorted(sources) if q != star]
        if any(not options.get(q, ((), ()))[0] for q in others):
            continue
        unions = {frozenset()}
        for q in others:
            unions = {u | s for u in unions for s in _nonempty_subsets(options[q][0])}
        star_parts = {frozenset([t]) | s for t in ones_star
                      for s in [frozenset()] + _nonempty_subsets(zeros_star)}
        result |= {u | s for u in unions for s in star_parts}
    return result


def subset_construction(a: BuchiAutomaton, var: str, lazy: bool = True) -> BuchiAutomaton:
    """Subset automaton simulating every copy of ``a`` in which ``var``'s
    transition fires after exactly ``n`` symbols, for all ``n`` at once.

    Every state is accepting for now; ``info`` maps each state to its
    ``frozenset`` of states of ``a``.  With ``lazy=False`` every non-empty
    subset becomes a state, reachable or not.
    """
    if not a.signature.is_first_order(var):
        raise NotFirstOrder(f"{var!r} is a second-order variable")
    i = a.signature.index(var)
    split = _split_by_track(a, i)
    eps = a.eps

    def successors(subset):
        out = set()
        for q in sorted(subset):
            for d in eps[q]:
                out.add((None, subset | {d}))
                out.add((None, (subset - {q}) | {d}))
        candidates = set()
        for q in subset:
            candidates.update(split[q])
        for sym in candidates:
            options = {q: split[q][sym] for q in subset if sym in split[q]}
            if len(options) < len(subset):
                continue
            for target in _targets(subset, options):
                out.add((sym, target))
        return sorted(out, key=lambda t: (label_key(t[0]), _subset_key(t[1])))

    roots = _nonempty_subsets(a.initial)
    if not lazy:
        initial = set(roots)
        roots = roots + [s for s in _nonempty_subsets(a.states) if s not in initial]
    result = explore(BuchiAutomaton, a.signature.without(var), roots, successors,
                     lambda s: True, info=lambda s: s)
    if not lazy:
        first = {s for s in _nonempty_subsets(a.initial)}
        result = result.with_states(initial=[q for q, s in result.info.items() if s in first])
    return result


def cycle_language_with_accept(a: BuchiAutomaton, q, var: str) -> FiniteAutomaton:
    """Non-empty projected words read along cycles ``q -> q`` of ``a`` that
    visit an accepting state (``q`` itself counts)."""
    if q not in a.states:
        raise UnknownState(f"state {q!r} not in automaton")
    i = a.signature.index(var)
    acc = a.accepting

    def successors(key):
        p, seen, read = key
        out = []
        for lab, d in a.out[p]:
            proj = None if lab is None else lab[:i] + lab[i + 1:]
            out.append((proj, (d, seen or d in acc, read or lab is not None)))
        return out

    return trim(explore(FiniteAutomaton, a.signature.without(var),
                        [(q, q in acc, False)], successors,
                        lambda key: key == (q, True, True)))


def projected_paths(a: BuchiAutomaton, q1, q2, var: str) -> FiniteAutomaton:
    """Projection of ``L(a, q1, q2)`` onto the remaining tracks."""
    return trim(project_variable(paths_automaton(a, q1, q2), var))


def u_language(a: BuchiAutomaton, q, var: str, cycle_languages: Optional[dict] = None,
               path_languages: Optional[dict] = None) -> FiniteAutomaton:
    """U language of ``q``: union over states ``r`` of (paths ``q -> r``)
    intersected with (accepting cycles on ``r``), all projected."""
    if q not in a.states:
        raise UnknownState(f"state {q!r} not in automaton")
    parts = []
    for r in sorted(a.states):
        cyc = (cycle_languages or {}).get(r)
        if cyc is None:
            cyc = cycle_language_with_accept(a, r, var)
        if finite_is_empty(cyc):
            continue
        path = (path_languages or {}).get((q, r))
        if path is None:
            path = projected_paths(a, q, r, var)
        if finite_is_empty(path):
            continue
        part = finite_multi_intersection([path, cyc])
        if not finite_is_empty(part):
            parts.append(part)
    sig = a.signature.without(var)
    if not parts:
        return FiniteAutomaton(sig, frozenset(), frozenset(), frozenset(), frozenset())
    return reduce_finite(juxtapose(FiniteAutomaton, parts))


def component_automata(a) -> dict:
    """Map every state of ``a`` to ``a`` restricted to that state's
    strongly connected component (states, internal transitions, info)."""
    succ: dict = {q: set() for q in a.states}
    for p, _, q in a.transitions:
        succ[p].add(q)
    comps = strongly_connected_components(sorted(a.states), succ.__getitem__)
    where = {q: i for i, comp in enumerate(comps) for q in comp}
    inside: list = [set() for _ in comps]
    for t in a.transitions:
        if where[t[0]] == where[t[2]]:
            inside[where[t[0]]].add(t)
    out = {}
    for i, comp in enumerate(comps):
        sub = FiniteAutomaton(a.signature, frozenset(comp), frozenset(inside[i]),
                              frozenset(), frozenset(), {q: a.info.get(q) for q in comp})
        for q in comp:
            out[q] = sub
    return out


def widget_language(a_prime: BuchiAutomaton, q_prime, u_languages: dict,
                    accepting: frozenset, component: Optional[FiniteAutomaton] = None
                    ) -> FiniteAutomaton:
    """Widget language of ``q_prime``: words labelling a cycle on it in the
    subset automaton and lying in the U language of every member.

    ``accepting`` is the accepting set of the automaton being quantified;
    the subset state must contain one of its states.  Every cycle stays in
    one strongly connected component, so passing the subset automaton cut
    down to the component of ``q_prime`` (see ``component_automata``) as
    ``component`` narrows the search without changing the language.
    """
    members = a_prime.info[q_prime]
    if not members & accepting:
        raise NoAcceptingMember(f"subset {sorted(members)} holds no accepting state")
    langs = [u_languages[q] for q in sorted(members)]
    if any(finite_is_empty(n) for n in langs):
        return FiniteAutomaton(a_prime.signature, frozenset(), frozenset(),
                               frozenset(), frozenset())
    graph = a_prime if component is None else component
    result = reduce_finite(paths_automaton(graph, q_prime, q_prime))
    for lang in sorted(langs, key=lambda n: n.num_states):
        result = reduce_finite(finite_multi_intersection([result, lang]))
        if not result.states:
            break
    return result


def assemble(a_prime: BuchiAutomaton, widgets: dict) -> BuchiAutomaton:
    """Graft each widget's omega-closure beside its subset state through an
    epsilon edge; the widget hubs become the only accepting states.

    ``widgets`` maps subset states of ``a_prime`` to widget languages; empty
    ones are skipped.
    """
    states = set(a_prime.states)
    transitions = set(a_prime.transitions)
    info = {q: a_prime.info.get(q) for q in a_prime.states}
    accepting = set()
    offset = max(a_prime.states, default=-1) + 1
    for q_prime in sorted(widgets):
        lang = widgets[q_prime]
        if finite_is_empty(lang):
            continue
        closed = omega_closure(lang, repeat_info=("repeat", q_prime))
        m = {s: offset + j for j, s in enumerate(sorted(closed.states))}
        offset += len(m)
        states.update(m.values())
        transitions.update((m[s], l, m[d]) for s, l, d in closed.transitions)
        for s in closed.states:
            v = closed.info.get(s)
            info[m[s]] = v if s in closed.initial else ("widget", q_prime)
        (hub,) = closed.initial
        transitions.add((q_prime, None, m[hub]))
        accepting.add(m[hub])
    result = BuchiAutomaton(a_prime.signature, frozenset(states), frozenset(transitions),
                            a_prime.initial, frozenset(accepting), info)
    return trim(result)


@dataclass
class QuantPipelineArtifacts:
    """Intermediate automata of one universal quantification."""

    var: str
    normalized: BuchiAutomaton
    subset: BuchiAutomaton
    cycle_languages: dict = field(default_factory=dict)
    path_languages: dict = field(default_factory=dict)
    u_languages: dict = field(default_factory=dict)
    widget_languages: dict = field(default_factory=dict)
    result: Optional[BuchiAutomaton] = None


def universal_quantify_with_artifacts(a: BuchiAutomaton, var: str) -> QuantPipelineArtifacts:
    if not a.signature.is_first_order(var):
        raise NotFirstOrder(f"{var!r} is a second-order variable")
    normalized = trim(acyclic_fo_normalize(a))
    subset = trim(subset_construction(normalized, var))
    art = QuantPipelineArtifacts(var, normalized, subset)
    states = sorted(normalized.states)
    for q in states:
        art.cycle_languages[q] = cycle_language_with_accept(normalized, q, var)
    useful = [r for r in states if not finite_is_empty(art.cycle_languages[r])]
    for q1 in states:
        for q2 in states:
            art.path_languages[q1, q2] = projected_paths(normalized, q1, q2, var)
    for q in states:
        art.u_languages[q] = u_language(normalized, q, var, art.cycle_languages,
                                        {(q, r): art.path_languages[q, r] for r in useful})
    components = component_automata(subset)
    for q_prime in sorted(subset.states):
        if subset.info[q_prime] & normalized.accepting:
            art.widget_languages[q_prime] = widget_language(
                subset, q_prime, art.u_languages, normalized.accepting, components[q_prime])
    art.result = assemble(subset, art.widget_languages)
    return art


def universal_quantify(a: BuchiAutomaton, var: str) -> BuchiAutomaton:
    """Automaton for ``forall var. phi`` given one for ``phi``.

    ``a`` must recognise a set of valid encodings and ``var`` must be one of
    its first-order variables.
    """
    return universal_quantify_with_artifacts(a, var).result


__all__ = [
    "QuantPipelineArtifacts",
    "acyclic_fo_normalize",
    "assemble",
    "component_automata",
    "cycle_language_with_accept",
    "projected_paths",
    "subset_construction",
    "u_language",
    "universal_quantify",
    "universal_quantify_with_artifacts",
    "widget_language",
]
