"""Brute-force reference procedures for checking the main pipeline on small
instances.  Nothing here calls into the universal-quantification code."""
from __future__ import annotations

import random
from collections import deque
from itertools import product
from math import lcm
from typing import Iterator, Optional

from .automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    LassoWord,
    VariableSignature,
    all_symbols,
    lasso_membership,
)
from .errors import SignatureMismatch, WidthMismatch


def insert_track(w: LassoWord, index: int, position: int) -> LassoWord:
    """Insert at ``index`` a first-order track carrying ``0^position 1 0^omega``."""
    reps = 0
    while len(w.prefix) + reps * len(w.period) <= position:
        reps += 1
    unrolled = w.prefix + w.period * reps

    def widen(sym, bit):
        return sym[:index] + (bit,) + sym[index:]

    return LassoWord(
        tuple(widen(s, int(p == position)) for p, s in enumerate(unrolled)),
        tuple(widen(s, 0) for s in w.period),
    )


def _step(a: BuchiAutomaton, current: frozenset, sym) -> frozenset:
    nxt = set()
    for q in current:
        nxt.update(a.delta[q].get(sym, ()))
    return a.eps_closure(nxt)


def candidate_positions(a: BuchiAutomaton, index: int, w: LassoWord) -> range:
    """Values of the inserted track that cover every behaviour of ``a``.

    Reading ``u v^j`` with the inserted track at 0 leads to a state set
    ``f(j)``; acceptance with the 1 at ``|u| + j|v| + r`` depends only on
    ``f(j)`` and ``r``.  The sequence ``f`` is eventually periodic, and the
    first repeat bounds the ``j`` worth trying.
    """
    widen = lambda s: s[:index] + (0,) + s[index:]
    current = a.eps_closure(a.initial)
    for s in w.prefix:
        current = _step(a, current, widen(s))
    seen = {}
    j = 0
    while current not in seen:
        seen[current] = j
        for s in w.period:
            current = _step(a, current, widen(s))
        j += 1
    # j = preperiod + period of the state-set sequence
    return range(len(w.prefix) + len(w.period) * j)


def brute_force_universal_membership(a: BuchiAutomaton, var: str, w: LassoWord) -> bool:
    """Is ``w`` accepted for every value of the first-order variable ``var``?

    Each candidate value is checked by plain lasso membership on ``a``.
    """
    if not a.signature.is_first_order(var):
        raise ValueError(f"{var!r} is not first-order")
    if w.width != a.signature.width - 1:
        raise WidthMismatch(f"lasso width {w.width} != {a.signature.width - 1}")
    index = a.signature.index(var)
    return all(lasso_membership(a, insert_track(w, index, n))
               for n in candidate_positions(a, index, w))


def enumerate_lassos(width: int, max_u: int, max_v: int) -> Iterator[LassoWord]:
    """All lassos with ``|u| <= max_u`` and ``1 <= |v| <= max_v``."""
    symbols = all_symbols(width)
    for lu in range(max_u + 1):
        for u in product(symbols, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in product(symbols, repeat=lv):
                    yield LassoWord(u, v)


def languages_equal_on_lassos(a: BuchiAutomaton, b: BuchiAutomaton,
                              max_u: int = 3, max_v: int = 3) -> Optional[LassoWord]:
    """First lasso (within the bounds) on which ``a`` and ``b`` disagree, or
    ``None``.  Agreement is necessary for equality but not sufficient."""
    if a.signature != b.signature:
        raise SignatureMismatch(f"{a.signature} != {b.signature}")
    for w in enumerate_lassos(a.signature.width, max_u, max_v):
        if lasso_membership(a, w) != lasso_membership(b, w):
            return w
    return None


def finite_languages_equal(n1: FiniteAutomaton, n2: FiniteAutomaton) -> Optional[tuple]:
    """Exact equivalence of finite-word languages.

    Explores pairs of reachable epsilon-closed state sets breadth first;
    returns a shortest distinguishing word, or ``None`` when equal.
    """
    if n1.signature != n2.signature:
        raise SignatureMismatch(f"{n1.signature} != {n2.signature}")

    def step(n, cur, sym):
        nxt = set()
        for q in cur:
            nxt.update(n.delta[q].get(sym, ()))
        return n.eps_closure(nxt)

    start = (n1.eps_closure(n1.initial), n2.eps_closure(n2.initial))
    parent = {start: None}
    queue = deque([start])
    symbols = all_symbols(n1.signature.width)
    while queue:
        pair = queue.popleft()
        s1, s2 = pair
        if bool(s1 & n1.accepting) != bool(s2 & n2.accepting):
            word = []
            while parent[pair] is not None:
                pair, sym = parent[pair]
                word.append(sym)
            return tuple(reversed(word))
        for sym in symbols:
            nxt = (step(n1, s1, sym), step(n2, s2, sym))
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def random_automaton(rng: random.Random, n_states: int, signature: VariableSignature,
                     p_transition: float = 0.3, p_accepting: float = 0.5,
                     epsilon: bool = True) -> BuchiAutomaton:
    """Each possible transition (every symbol, and epsilon when enabled)
    present with ``p_transition``; each state accepting with ``p_accepting``;
    state 0 initial."""
    labels = ([None] if epsilon else []) + all_symbols(signature.width)
    transitions = [(s, lab, d) for s in range(n_states) for lab in labels
                   for d in range(n_states) if rng.random() < p_transition]
    accepting = [q for q in range(n_states) if rng.random() < p_accepting]
    return BuchiAutomaton(signature, frozenset(range(n_states)), frozenset(transitions),
                          frozenset([0]), frozenset(accepting))


# --------------------------------------------------------------------------
# Direct semantics of formulas over lasso-valued interpretations


def _depth(f) -> int:
    from . import logic as L
    if isinstance(f, (L.Exists, L.Forall)):
        return 1 + _depth(f.body)
    if isinstance(f, L.Not):
        return _depth(f.arg)
    if isinstance(f, (L.And, L.Or, L.Iff)):
        return max(_depth(f.left), _depth(f.right))
    return 0


def _max_offset(f) -> int:
    from . import logic as L
    if isinstance(f, L.OffsetEq):
        return f.offset
    if isinstance(f, (L.Exists, L.Forall)):
        return _max_offset(f.body)
    if isinstance(f, L.Not):
        return _max_offset(f.arg)
    if isinstance(f, (L.And, L.Or, L.Iff)):
        return max(_max_offset(f.left), _max_offset(f.right))
    return 0


def evaluate(formula, interp) -> bool:
    """Truth of ``formula`` under ``interp`` by recursive evaluation.

    A quantified value ranges over ``[0, B)`` where ``B`` is the largest
    value or second-order prefix in scope plus ``2^(d+1) (L + c + 1)``, with
    ``d`` the remaining quantifier depth, ``L`` the common period of the
    second-order sets and ``c`` the largest offset constant.  Past that
    point a new value is indistinguishable (to the remaining quantifiers)
    from one a period earlier.
    """
    from . import logic as L

    period = lcm(*[len(s.period) for s in interp.so.values()]) if interp.so else 1
    prefix = max([len(s.prefix) for s in interp.so.values()] + [0])
    c = _max_offset(formula)

    def ev(f, fo) -> bool:
        if isinstance(f, L.Top):
            return True
        if isinstance(f, L.Bottom):
            return False
        if isinstance(f, L.EqFO):
            return fo[f.left] == fo[f.right]
        if isinstance(f, L.Less):
            return fo[f.left] < fo[f.right]
        if isinstance(f, L.OffsetEq):
            return fo[f.left] == fo[f.right] + f.offset
        if isinstance(f, L.Member):
            return fo[f.var] in interp.so[f.pred]
        if isinstance(f, L.EqSO):
            a, b = interp.so[f.left], interp.so[f.right]
            horizon = max(len(a.prefix), len(b.prefix)) + lcm(len(a.period), len(b.period))
            return all((n in a) == (n in b) for n in range(horizon))
        if isinstance(f, L.Not):
            return not ev(f.arg, fo)
        if isinstance(f, L.And):
            return ev(f.left, fo) and ev(f.right, fo)
        if isinstance(f, L.Or):
            return ev(f.left, fo) or ev(f.right, fo)
        if isinstance(f, L.Iff):
            return ev(f.left, fo) == ev(f.right, fo)
        if isinstance(f, (L.Exists, L.Forall)):
            base = max(list(fo.values()) + [prefix - 1, -1]) + 1
            bound = base + 2 ** (_depth(f.body) + 1) * (period + c + 1)
            values = (ev(f.body, {**fo, f.var: n}) for n in range(bound))
            return any(values) if isinstance(f, L.Exists) else all(values)
        raise TypeError(f"cannot evaluate {f!r}")

    return ev(formula, dict(interp.fo))
