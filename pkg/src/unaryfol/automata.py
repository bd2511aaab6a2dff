"""Automata over multi-track {0,1} alphabets, with epsilon transitions.

Two flavours share one data model: :class:`BuchiAutomaton` reads infinite
words and :class:`FiniteAutomaton` reads finite ones.  Every operation here
is pure and returns a fresh automaton.

A Büchi run is accepting when it visits an accepting state infinitely often
*and* follows infinitely many symbol transitions, so that it actually reads
an infinite word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping, Optional, Sequence

from .errors import (
    DuplicateVariable,
    EpsilonInLanguage,
    SignatureMismatch,
    UnknownState,
    UnknownVariable,
    WidthMismatch,
)
from .graphs import accepting_cycle_nodes, reachable

Symbol = tuple  # tuple[int, ...] of 0/1, one entry per track
Label = Optional[Symbol]  # None is epsilon
Transition = tuple  # (src, label, dst)

EPSILON = None


def label_key(label: Label) -> tuple:
    return (0,) if label is None else (1,) + tuple(label)


def parse_symbol(text: str) -> Symbol:
    """``"01"`` -> ``(0, 1)``; ``"_"`` or ``""`` is the width-0 symbol."""
    if text in ("", "_"):
        return ()
    if any(c not in "01" for c in text):
        raise ValueError(f"not a bitstring: {text!r}")
    return tuple(int(c) for c in text)


def format_symbol(sym: Symbol) -> str:
    return "".join(str(b) for b in sym) if sym else "_"


def _coerce_label(label) -> Label:
    if label is None or label == "eps":
        return None
    if isinstance(label, str):
        return parse_symbol(label)
    return tuple(int(b) for b in label)


@dataclass(frozen=True)
class VariableSignature:
    """Ordered first-order and second-order variable names.

    Track ``j`` carries ``fo[j]`` for ``j < len(fo)`` and ``so[j - len(fo)]``
    otherwise.
    """

    fo: tuple = ()
    so: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "fo", tuple(self.fo))
        object.__setattr__(self, "so", tuple(self.so))
        names = self.fo + self.so
        if len(set(names)) != len(names):
            raise DuplicateVariable(f"duplicate variable names in {names}")

    @property
    def width(self) -> int:
        return len(self.fo) + len(self.so)

    @property
    def names(self) -> tuple:
        return self.fo + self.so

    def __contains__(self, name) -> bool:
        return name in self.fo or name in self.so

    def index(self, name: str) -> int:
        if name in self.fo:
            return self.fo.index(name)
        if name in self.so:
            return len(self.fo) + self.so.index(name)
        raise UnknownVariable(f"{name!r} not in signature {self}")

    def is_first_order(self, name: str) -> bool:
        if name not in self:
            raise UnknownVariable(f"{name!r} not in signature {self}")
        return name in self.fo

    def without(self, name: str) -> "VariableSignature":
        if name not in self:
            raise UnknownVariable(f"{name!r} not in signature {self}")
        return VariableSignature(
            tuple(v for v in self.fo if v != name),
            tuple(v for v in self.so if v != name),
        )

    def __str__(self):
        return f"(fo: {', '.join(self.fo)}; so: {', '.join(self.so)})"


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``prefix . period^omega``."""

    prefix: tuple
    period: tuple

    def __post_init__(self):
        prefix = tuple(tuple(s) for s in self.prefix)
        period = tuple(tuple(s) for s in self.period)
        if not period:
            raise ValueError("lasso period must be non-empty")
        widths = {len(s) for s in prefix + period}
        if len(widths) != 1:
            raise WidthMismatch(f"lasso symbols of mixed widths {sorted(widths)}")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    @classmethod
    def of(cls, prefix: Iterable, period: Iterable) -> "LassoWord":
        """Build from bitstrings: ``LassoWord.of("001", "0")`` or
        ``LassoWord.of(["01", "10"], ["01", "00"])``."""
        conv = lambda s: parse_symbol(s) if isinstance(s, str) else tuple(s)
        return cls(tuple(conv(s) for s in prefix), tuple(conv(s) for s in period))

    @property
    def width(self) -> int:
        return len(self.period[0])

    def __len__(self):
        return len(self.prefix) + len(self.period)

    def symbol_at(self, n: int) -> Symbol:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def __str__(self):
        u = " ".join(format_symbol(s) for s in self.prefix) or "ε"
        v = " ".join(format_symbol(s) for s in self.period)
        return f"{u} ({v})^ω"


@dataclass(frozen=True)
class _Automaton:
    signature: VariableSignature
    states: frozenset
    transitions: frozenset
    initial: frozenset
    accepting: frozenset
    info: Mapping[int, Any] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        states = frozenset(self.states)
        transitions = frozenset(
            (s, _coerce_label(a), d) for s, a, d in self.transitions
        )
        initial = frozenset(self.initial)
        accepting = frozenset(self.accepting)
        width = self.signature.width
        for s, a, d in transitions:
            if s not in states or d not in states:
                raise UnknownState(f"transition ({s}, {a}, {d}) leaves the state set")
            if a is not None and len(a) != width:
                raise WidthMismatch(
                    f"label {format_symbol(a)} has width {len(a)}, signature has {width}"
                )
        if not initial <= states or not accepting <= states:
            raise UnknownState("initial/accepting states must be declared states")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "accepting", accepting)
        object.__setattr__(self, "info", dict(self.info))

    @classmethod
    def build(cls, signature, transitions, initial, accepting, states=None, info=None):
        """Convenience constructor; labels may be bitstrings or ``"eps"``,
        and the state set defaults to every state mentioned."""
        transitions = [(s, _coerce_label(a), d) for s, a, d in transitions]
        if states is None:
            states = set(initial) | set(accepting)
            for s, _, d in transitions:
                states.update((s, d))
        return cls(signature, frozenset(states), frozenset(transitions),
                   frozenset(initial), frozenset(accepting), info or {})

    @property
    def num_states(self) -> int:
        return len(self.states)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    @cached_property
    def out(self) -> dict:
        """state -> sorted tuple of ``(label, dst)``."""
        table = {q: [] for q in self.states}
        for s, a, d in self.transitions:
            table[s].append((a, d))
        return {q: tuple(sorted(v, key=lambda t: (label_key(t[0]), t[1])))
                for q, v in table.items()}

    @cached_property
    def eps(self) -> dict:
        return {q: tuple(d for a, d in outs if a is None) for q, outs in self.out.items()}

    @cached_property
    def delta(self) -> dict:
        """state -> {symbol: tuple of destinations}."""
        table = {}
        for q, outs in self.out.items():
            row = {}
            for a, d in outs:
                if a is not None:
                    row.setdefault(a, []).append(d)
            table[q] = {a: tuple(ds) for a, ds in row.items()}
        return table

    def edges(self, q) -> list:
        """``(dst, reads_symbol)`` pairs, the shape graph routines expect."""
        return [(d, a is not None) for a, d in self.out[q]]

    def eps_closure(self, states: Iterable) -> frozenset:
        return frozenset(reachable(states, lambda q: self.eps[q]))

    def restrict(self, keep: Iterable) -> "_Automaton":
        keep = frozenset(keep)
        return type(self)(
            self.signature,
            keep,
            frozenset(t for t in self.transitions if t[0] in keep and t[2] in keep),
            self.initial & keep,
            self.accepting & keep,
            {q: v for q, v in self.info.items() if q in keep},
        )

    def with_states(self, initial=None, accepting=None, kind=None):
        cls = kind or type(self)
        return cls(
            self.signature,
            self.states,
            self.transitions,
            self.initial if initial is None else frozenset(initial),
            self.accepting if accepting is None else frozenset(accepting),
            self.info,
        )

    def __repr__(self):
        return (f"{type(self).__name__}(sig={self.signature}, states={self.num_states}, "
                f"transitions={self.num_transitions}, initial={sorted(self.initial)}, "
                f"accepting={sorted(self.accepting)})")


class BuchiAutomaton(_Automaton):
    """Infinite-word automaton with state-based Büchi acceptance."""


class FiniteAutomaton(_Automaton):
    """Finite-word automaton; a path is accepting when it ends in ``accepting``."""


def explore(
    cls,
    signature: VariableSignature,
    roots: Sequence[Hashable],
    successors: Callable[[Hashable], Iterable[tuple[Label, Hashable]]],
    is_accepting: Callable[[Hashable], bool],
    info: Optional[Callable[[Hashable], Any]] = None,
):
    """Build the part of an implicitly given automaton reachable from ``roots``.

    States are numbered in breadth-first discovery order, so the numbering is
    deterministic whenever ``successors`` yields in a deterministic order.
    """
    ids: dict = {}
    order: list = []
    queue = deque()
    for r in roots:
        if r not in ids:
            ids[r] = len(order)
            order.append(r)
            queue.append(r)
    transitions = []
    while queue:
        key = queue.popleft()
        src = ids[key]
        for label, nxt in successors(key):
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            transitions.append((src, label, ids[nxt]))
    return cls(
        signature,
        frozenset(range(len(order))),
        frozenset(transitions),
        frozenset(ids[r] for r in roots),
        frozenset(ids[k] for k in order if is_accepting(k)),
        {ids[k]: info(k) for k in order} if info else {},
    )


def compact(a: _Automaton) -> _Automaton:
    """Renumber states as ``0..n-1`` in increasing order of the old ids."""
    order = sorted(a.states)
    if order == list(range(len(order))):
        return a
    m = {q: i for i, q in enumerate(order)}
    return type(a)(
        a.signature,
        frozenset(range(len(order))),
        frozenset((m[s], l, m[d]) for s, l, d in a.transitions),
        frozenset(m[q] for q in a.initial),
        frozenset(m[q] for q in a.accepting),
        {m[q]: v for q, v in a.info.items()},
    )


def _check_same_signature(a: _Automaton, b: _Automaton):
    if a.signature != b.signature:
        raise SignatureMismatch(f"{a.signature} != {b.signature}")


def _check_state(a: _Automaton, q):
    if q not in a.states:
        raise UnknownState(f"state {q!r} not in automaton")


# --------------------------------------------------------------------------
# Büchi automata


def accepting_sccs(a: BuchiAutomaton) -> set:
    """States in reachable SCCs that contain an accepting state and an
    internal symbol transition."""
    return accepting_cycle_nodes(sorted(a.initial), a.edges, a.accepting.__contains__)


def buchi_is_empty(a: BuchiAutomaton) -> bool:
    return not accepting_sccs(a)


def lasso_membership(a: BuchiAutomaton, w: LassoWord) -> bool:
    """Does ``a`` accept ``w.prefix . w.period^omega``?

    Searches the synchronised product of automaton states with positions in
    the lasso for a reachable accepting cycle that reads a symbol.
    """
    if w.width != a.signature.width:
        raise WidthMismatch(f"lasso width {w.width} != automaton width {a.signature.width}")
    word = w.prefix + w.period
    n = len(word)
    loop = len(w.prefix)
    delta, eps = a.delta, a.eps

    def edges(node):
        q, pos = node
        out = [((d, pos), False) for d in eps[q]]
        nxt = pos + 1 if pos + 1 < n else loop
        out.extend(((d, nxt), True) for d in delta[q].get(word[pos], ()))
        return out

    roots = [(q, 0) for q in sorted(a.initial)]
    return bool(accepting_cycle_nodes(roots, edges, lambda node: node[0] in a.accepting))


def _coreachable(a: _Automaton, targets: Iterable, within: Iterable) -> set:
    within = set(within)
    pred = {q: [] for q in within}
    for s, _, d in a.transitions:
        if s in within and d in within:
            pred[d].append(s)
    return reachable([t for t in targets if t in within], lambda q: pred[q])


def trim(a: _Automaton) -> _Automaton:
    """Drop unreachable states and states with no accepting continuation."""
    reach = reachable(a.initial, lambda q: [d for _, d in a.out[q]])
    if isinstance(a, BuchiAutomaton):
        goal = accepting_sccs(a)
    else:
        goal = a.accepting & reach
    keep = _coreachable(a, goal, reach)
    if keep == set(a.states):
        return a
    return a.restrict(keep)


def _flag_product_successors(a1, a2):
    """Successor function of the two-phase flag product used for Büchi
    intersection: flag 0 waits for ``a1`` to accept, flag 1 for ``a2``."""
    f1, f2 = a1.accepting, a2.accepting

    def successors(key):
        p1, p2, flag = key
        if flag == 0 and p1 in f1:
            nflag = 1
        elif flag == 1 and p2 in f2:
            nflag = 0
        else:
            nflag = flag
        out = []
        for d in a1.eps[p1]:
            out.append((None, (d, p2, nflag)))
        for d in a2.eps[p2]:
            out.append((None, (p1, d, nflag)))
        row2 = a2.delta[p2]
        for sym, ds1 in a1.delta[p1].items():
            for d2 in row2.get(sym, ()):
                for d1 in ds1:
                    out.append((sym, (d1, d2, nflag)))
        out.sort(key=lambda t: (label_key(t[0]), t[1]))
        return out

    return successors


def buchi_intersection(a1: BuchiAutomaton, a2: BuchiAutomaton) -> BuchiAutomaton:
    _check_same_signature(a1, a2)
    roots = [(p, q, 0) for p in sorted(a1.initial) for q in sorted(a2.initial)]
    return explore(
        BuchiAutomaton, a1.signature, roots, _flag_product_successors(a1, a2),
        lambda k: k[2] == 0 and k[0] in a1.accepting,
    )


def juxtapose(cls, automata: Sequence[_Automaton]):
    states, transitions, initial, accepting, info = set(), set(), set(), set(), {}
    offset = 0
    for a in automata:
        m = {q: offset + i for i, q in enumerate(sorted(a.states))}
        states.update(m.values())
        transitions.update((m[s], l, m[d]) for s, l, d in a.transitions)
        initial.update(m[q] for q in a.initial)
        accepting.update(m[q] for q in a.accepting)
        info.update({m[q]: v for q, v in a.info.items()})
        offset += len(m)
    return cls(automata[0].signature, frozenset(states), frozenset(transitions),
               frozenset(initial), frozenset(accepting), info)


def buchi_union(a1: BuchiAutomaton, a2: BuchiAutomaton) -> BuchiAutomaton:
    _check_same_signature(a1, a2)
    return juxtapose(BuchiAutomaton, [a1, a2])


def buchi_witness(a: BuchiAutomaton) -> Optional[LassoWord]:
    """A lasso accepted by ``a``, or ``None`` when the language is empty.

    Breadth-first over transitions in label order, so the result is
    deterministic: shortest stem to an accepting state of an accepting SCC,
    then the shortest symbol-reading cycle back to it inside that SCC.
    """
    good = accepting_sccs(a)
    if not good:
        return None
    parent: dict = {}
    queue = deque()
    for q in sorted(a.initial):
        if q not in parent:
            parent[q] = None
            queue.append(q)
    target = None
    while queue:
        q = queue.popleft()
        if q in good and q in a.accepting:
            target = q
            break
        for lab, d in a.out[q]:
            if d not in parent:
                parent[d] = (q, lab)
                queue.append(d)
    stem = []
    q = target
    while parent[q] is not None:
        q, lab = parent[q]
        if lab is not None:
            stem.append(lab)
    stem.reverse()

    # the SCC of target is the set of good states mutually reachable with it
    fwd = reachable([target], lambda s: [d for _, d in a.out[s] if d in good])
    start = (target, False)
    cparent = {start: None}
    queue = deque([start])
    end = (target, True)
    while queue:
        node = queue.popleft()
        if node == end:
            break
        s, read = node
        for lab, d in a.out[s]:
            if d not in fwd:
                continue
            nxt = (d, read or lab is not None)
            if nxt not in cparent:
                cparent[nxt] = (node, lab)
                queue.append(nxt)
    cycle = []
    node = end
    while cparent[node] is not None:
        node, lab = cparent[node]
        if lab is not None:
            cycle.append(lab)
    cycle.reverse()
    return LassoWord(tuple(stem), tuple(cycle))


# --------------------------------------------------------------------------
# Finite automata


def finite_membership(n: FiniteAutomaton, word: Sequence) -> bool:
    word = [parse_symbol(s) if isinstance(s, str) else tuple(s) for s in word]
    for s in word:
        if len(s) != n.signature.width:
            raise WidthMismatch(f"symbol width {len(s)} != {n.signature.width}")
    current = n.eps_closure(n.initial)
    for sym in word:
        step = set()
        for q in current:
            step.update(n.delta[q].get(sym, ()))
        current = n.eps_closure(step)
        if not current:
            return False
    return bool(current & n.accepting)


def finite_is_empty(n: FiniteAutomaton) -> bool:
    reach = reachable(n.initial, lambda q: [d for _, d in n.out[q]])
    return not (reach & n.accepting)


def finite_intersection(n1: FiniteAutomaton, n2: FiniteAutomaton) -> FiniteAutomaton:
    _check_same_signature(n1, n2)

    def successors(key):
        p1, p2 = key
        out = [(None, (d, p2)) for d in n1.eps[p1]]
        out += [(None, (p1, d)) for d in n2.eps[p2]]
        row2 = n2.delta[p2]
        for sym, ds1 in n1.delta[p1].items():
            for d2 in row2.get(sym, ()):
                out += [(sym, (d1, d2)) for d1 in ds1]
        out.sort(key=lambda t: (label_key(t[0]), t[1]))
        return out

    roots = [(p, q) for p in sorted(n1.initial) for q in sorted(n2.initial)]
    return explore(FiniteAutomaton, n1.signature, roots, successors,
                   lambda k: k[0] in n1.accepting and k[1] in n2.accepting)


def finite_multi_intersection(automata: Sequence[FiniteAutomaton]) -> FiniteAutomaton:
    """Intersection of several epsilon-free automata as one synchronous
    product over tuples, trimmed."""
    automata = list(automata)
    for b in automata[1:]:
        _check_same_signature(automata[0], b)
    if any(b.eps[q] for b in automata for q in b.states):
        automata = [remove_epsilon(b) for b in automata]
    if len(automata) == 1:
        return automata[0]

    def successors(key):
        rows = [b.delta[q] for b, q in zip(automata, key)]
        common = set(rows[0])
        for row in rows[1:]:
            common &= row.keys()
        out = []
        for sym in sorted(common):
            combos = [()]
            for row in rows:
                combos = [c + (d,) for c in combos for d in row[sym]]
            out.extend((sym, c) for c in combos)
        return out

    roots = [()]
    for b in automata:
        roots = [r + (q,) for r in roots for q in sorted(b.initial)]
    accepting = [b.accepting for b in automata]
    return trim(explore(
        FiniteAutomaton, automata[0].signature, roots, successors,
        lambda k: all(q in f for q, f in zip(k, accepting)),
    ))


def finite_union(n1: FiniteAutomaton, n2: FiniteAutomaton) -> FiniteAutomaton:
    _check_same_signature(n1, n2)
    return juxtapose(FiniteAutomaton, [n1, n2])


def remove_epsilon(n: FiniteAutomaton) -> FiniteAutomaton:
    """Equivalent epsilon-free automaton on the same states, trimmed."""
    closure = {q: n.eps_closure([q]) for q in n.states}
    transitions = set()
    accepting = set()
    for p in n.states:
        for q in closure[p]:
            for sym, ds in n.delta[q].items():
                transitions.update((p, sym, d) for d in ds)
        if closure[p] & n.accepting:
            accepting.add(p)
    return trim(FiniteAutomaton(n.signature, n.states, frozenset(transitions),
                                n.initial, frozenset(accepting), n.info))


def buchi_remove_epsilon(a: BuchiAutomaton) -> BuchiAutomaton:
    """Equivalent epsilon-free Büchi automaton.

    A state is a pair ``(q, seen)`` where ``seen`` records whether the
    epsilon path taken since the last symbol visited an accepting state;
    the pairs with ``seen`` set are the accepting ones.
    """
    if not any(a.eps[q] for q in a.states):
        return a
    closure = {}
    for q in a.states:
        start = (q, q in a.accepting)
        closure[q] = reachable([start], lambda k: [(d, k[1] or d in a.accepting)
                                                   for d in a.eps[k[0]]])

    def successors(key):
        out = []
        for sym, ds in sorted(a.delta[key[0]].items()):
            for d in sorted(ds):
                out.extend((sym, k) for k in sorted(closure[d]))
        return out

    roots = sorted(set().union(*[closure[q] for q in a.initial]))
    return explore(BuchiAutomaton, a.signature, roots, successors, lambda k: k[1])


def bisimulation_quotient(a: _Automaton) -> _Automaton:
    """Merge states that are bisimilar and agree on acceptance.

    Epsilon counts as an ordinary label here, so the quotient is exact for
    both automaton kinds; it is most effective on epsilon-free input.
    """
    order = sorted(a.states)
    block = {q: int(q in a.accepting) for q in order}
    count = len(set(block.values()))
    while True:
        sigs = {q: (block[q], frozenset((label_key(lab), block[d]) for lab, d in a.out[q]))
                for q in order}
        ids: dict = {}
        block = {q: ids.setdefault(sigs[q], len(ids)) for q in order}
        if len(ids) == count:
            break
        count = len(ids)
    transitions = frozenset((block[s], lab, block[d]) for s, lab, d in a.transitions)
    return type(a)(a.signature, frozenset(block.values()), transitions,
                   frozenset(block[q] for q in a.initial),
                   frozenset(block[q] for q in a.accepting))


def direct_simulation(a: BuchiAutomaton) -> dict:
    """Largest direct simulation of an epsilon-free automaton.

    ``r in result[q]`` means ``r`` simulates ``q``: ``r`` is accepting
    whenever ``q`` is, and every move of ``q`` is matched by a move of ``r``
    on the same symbol into a simulating state.
    """
    order = sorted(a.states)
    sim = {q: {r for r in order if q not in a.accepting or r in a.accepting} for q in order}
    changed = True
    while changed:
        changed = False
        for q in order:
            moves = a.out[q]
            for r in sorted(sim[q]):
                row = a.delta[r]
                if not all(any(r2 in sim[q2] for r2 in row.get(sym, ())) for sym, q2 in moves):
                    sim[q].discard(r)
                    changed = True
    return sim


def simulation_reduce(a: BuchiAutomaton) -> BuchiAutomaton:
    """Quotient by mutual direct simulation, then drop every transition (and
    initial state) whose target is strictly simulated by a sibling's."""
    a = buchi_remove_epsilon(a)
    sim = direct_simulation(a)
    order = sorted(a.states)
    cls = {}
    for q in order:
        cls[q] = next((cls[r] for r in order if r < q and r in sim[q] and q in sim[r]), q)
    reps = sorted(set(cls.values()))
    below = {c: {cls[r] for r in sim[c]} for c in reps}

    def prune(targets):
        return {d for d in targets
                if not any(d != e and e in below[d] and d not in below[e] for e in targets)}

    grouped: dict = {}
    for s, lab, d in a.transitions:
        grouped.setdefault((cls[s], lab), set()).add(cls[d])
    transitions = frozenset((s, lab, d) for (s, lab), ds in grouped.items() for d in prune(ds))
    return BuchiAutomaton(a.signature, frozenset(reps), transitions,
                          frozenset(prune({cls[q] for q in a.initial})),
                          frozenset(c for c in reps if c in a.accepting))


SIMULATION_LIMIT = 400


def reduce_buchi(a: BuchiAutomaton) -> BuchiAutomaton:
    """Smaller automaton with the same language.

    Epsilon removal, trimming and a bisimulation quotient always; the
    direct-simulation reduction too when the automaton has at most
    ``SIMULATION_LIMIT`` states.  Not a minimization.
    """
    a = trim(bisimulation_quotient(trim(buchi_remove_epsilon(trim(a)))))
    if a.num_states <= SIMULATION_LIMIT:
        a = trim(simulation_reduce(a))
    return compact(a)


def paths_automaton(a: _Automaton, q1, q2) -> FiniteAutomaton:
    """Finite words read along paths from ``q1`` to ``q2``."""
    _check_state(a, q1)
    _check_state(a, q2)
    return FiniteAutomaton(a.signature, a.states, a.transitions,
                           frozenset([q1]), frozenset([q2]), a.info)


def accepts_empty_word(n: FiniteAutomaton) -> bool:
    return bool(n.eps_closure(n.initial) & n.accepting)


def omega_closure(n: FiniteAutomaton, repeat_info: Any = "repeat") -> BuchiAutomaton:
    """Büchi automaton for ``L(n)^omega`` through a fresh hub state.

    The hub has epsilon edges to every initial state of ``n`` and receives
    one from every accepting state; it is the only initial and accepting
    state of the result.
    """
    if accepts_empty_word(n):
        raise EpsilonInLanguage("omega closure needs a language without the empty word")
    repeat = max(n.states, default=-1) + 1
    transitions = set(n.transitions)
    transitions.update((repeat, None, q) for q in n.initial)
    transitions.update((q, None, repeat) for q in n.accepting)
    info = dict(n.info)
    info[repeat] = repeat_info
    return BuchiAutomaton(n.signature, n.states | {repeat}, frozenset(transitions),
                          frozenset([repeat]), frozenset([repeat]), info)


def universal_buchi(signature: VariableSignature) -> BuchiAutomaton:
    """One accepting state looping on every symbol (no validity constraint)."""
    return BuchiAutomaton(signature, frozenset([0]),
                          frozenset((0, s, 0) for s in all_symbols(signature.width)),
                          frozenset([0]), frozenset([0]))


def empty_buchi(signature: VariableSignature) -> BuchiAutomaton:
    return BuchiAutomaton(signature, frozenset(), frozenset(), frozenset(), frozenset())


def all_symbols(width: int) -> list:
    syms = [()]
    for _ in range(width):
        syms = [s + (b,) for s in syms for b in (0, 1)]
    return syms
