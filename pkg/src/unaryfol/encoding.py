"""Unary encodings of interpretations and track surgery on automata.

A natural number ``n`` on a first-order track reads ``0^n 1 0^omega``; a set
``P`` of naturals on a second-order track reads its characteristic word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Optional

from .automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    LassoWord,
    VariableSignature,
    _Automaton,
    all_symbols,
    buchi_intersection,
    finite_intersection,
)
from .errors import (
    DuplicateVariable,
    InvalidEncoding,
    InvalidPermutation,
    SignatureMismatch,
    UnknownVariable,
    WidthMismatch,
)


def _minimal_period(bits: tuple) -> tuple:
    n = len(bits)
    for p in range(1, n + 1):
        if n % p == 0 and bits == bits[:p] * (n // p):
            return bits[:p]
    return bits


@dataclass(frozen=True)
class UltimatelyPeriodicSet:
    """A set of naturals whose characteristic word is ``prefix . period^omega``.

    Stored in canonical form (shortest prefix, primitive period), so equality
    of instances is equality of sets.
    """

    prefix: tuple = ()
    period: tuple = (0,)

    def __post_init__(self):
        prefix = tuple(int(b) for b in self.prefix)
        period = _minimal_period(tuple(int(b) for b in self.period))
        if not period:
            raise ValueError("period must be non-empty")
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    @classmethod
    def finite(cls, members) -> "UltimatelyPeriodicSet":
        members = set(members)
        size = max(members) + 1 if members else 0
        return cls(tuple(int(i in members) for i in range(size)), (0,))

    @classmethod
    def from_bits(cls, prefix: str, period: str) -> "UltimatelyPeriodicSet":
        return cls(tuple(int(c) for c in prefix), tuple(int(c) for c in period))

    def __contains__(self, n: int) -> bool:
        if n < len(self.prefix):
            return bool(self.prefix[n])
        return bool(self.period[(n - len(self.prefix)) % len(self.period)])

    def bit(self, n: int) -> int:
        return int(n in self)

    @property
    def is_finite(self) -> bool:
        return not any(self.period)

    def members_below(self, bound: int) -> list:
        return [n for n in range(bound) if n in self]

    def __str__(self):
        if self.is_finite:
            return "{" + ",".join(map(str, self.members_below(len(self.prefix)))) + "}"
        # the prefix's members plus at least three from the periodic part
        per_block = sum(self.period)
        blocks = -(-3 // per_block)
        shown = self.members_below(len(self.prefix) + blocks * len(self.period))
        return "{" + ",".join(map(str, shown)) + ",...}"


@dataclass
class Interpretation:
    fo: dict = field(default_factory=dict)
    so: dict = field(default_factory=dict)

    def matches(self, sig: VariableSignature) -> bool:
        return set(self.fo) == set(sig.fo) and set(self.so) == set(sig.so)

    def extended(self, name: str, value: int) -> "Interpretation":
        fo = dict(self.fo)
        fo[name] = value
        return Interpretation(fo, dict(self.so))

    def lines(self) -> list:
        """One ``name = value`` line per variable, FO first, sorted by name."""
        out = [f"{x} = {self.fo[x]}" for x in sorted(self.fo)]
        for name in sorted(self.so):
            s = self.so[name]
            pre = "".join(map(str, s.prefix))
            per = "".join(map(str, s.period))
            out.append(f"{name} = {s} (prefix={pre}, period={per})")
        return out


def encode_interpretation(interp: Interpretation, sig: VariableSignature) -> LassoWord:
    if not interp.matches(sig):
        raise SignatureMismatch(f"interpretation does not match signature {sig}")
    for x in sig.fo:
        if int(interp.fo[x]) < 0:
            raise ValueError(f"{x} must be a natural number")
    sets = [interp.so[X] for X in sig.so]
    plen = max([interp.fo[x] + 1 for x in sig.fo] + [len(s.prefix) for s in sets] + [0])
    vlen = lcm(*[len(s.period) for s in sets]) if sets else 1

    def symbol(pos):
        return tuple(int(interp.fo[x] == pos) for x in sig.fo) + tuple(s.bit(pos) for s in sets)

    return LassoWord(tuple(symbol(p) for p in range(plen)),
                     tuple(symbol(p) for p in range(plen, plen + vlen)))


def decode_lasso(w: LassoWord, sig: VariableSignature) -> Interpretation:
    if w.width != sig.width:
        raise WidthMismatch(f"lasso width {w.width} != signature width {sig.width}")
    fo = {}
    for j, x in enumerate(sig.fo):
        if any(s[j] for s in w.period):
            raise InvalidEncoding(x, "infinitely many ones")
        ones = [p for p, s in enumerate(w.prefix) if s[j]]
        if len(ones) != 1:
            raise InvalidEncoding(x, f"{len(ones)} ones on a first-order track")
        fo[x] = ones[0]
    so = {}
    for j, X in enumerate(sig.so, start=len(sig.fo)):
        so[X] = UltimatelyPeriodicSet(tuple(s[j] for s in w.prefix),
                                      tuple(s[j] for s in w.period))
    return Interpretation(fo, so)


def valid_encodings_automaton(sig: VariableSignature) -> BuchiAutomaton:
    """Words in which every first-order track carries exactly one 1.

    State ``m`` is the bit-mask of first-order tracks already consumed.
    """
    k = len(sig.fo)
    full = (1 << k) - 1
    symbols = all_symbols(sig.width)
    masks = [sum(b << j for j, b in enumerate(s[:k])) for s in symbols]
    transitions = set()
    for m in range(full + 1):
        for s, bits in zip(symbols, masks):
            if not bits & m:
                transitions.add((m, s, m | bits))
    return BuchiAutomaton(sig, frozenset(range(full + 1)), frozenset(transitions),
                          frozenset([0]), frozenset([full]))


def _one_on_track(sig: VariableSignature, track: int, cls):
    """Exactly one 1 on ``track``; other tracks unconstrained."""
    transitions = set()
    for s in all_symbols(sig.width):
        if s[track]:
            transitions.add((0, s, 1))
        else:
            transitions.update({(0, s, 0), (1, s, 1)})
    return cls(sig, frozenset([0, 1]), frozenset(transitions), frozenset([0]), frozenset([1]))


def _map_labels(a: _Automaton, sig: VariableSignature, fn) -> _Automaton:
    transitions = set()
    for s, lab, d in a.transitions:
        if lab is None:
            transitions.add((s, None, d))
        else:
            transitions.update((s, new, d) for new in fn(lab))
    return type(a)(sig, a.states, frozenset(transitions), a.initial, a.accepting, a.info)


def project_variable(a: _Automaton, var: str) -> _Automaton:
    """Delete ``var``'s track from every label (existential projection for a
    first-order variable)."""
    i = a.signature.index(var)
    return _map_labels(a, a.signature.without(var), lambda lab: [lab[:i] + lab[i + 1:]])


def add_variable(a: _Automaton, var: str, kind: str = "so",
                 position: Optional[int] = None) -> _Automaton:
    """Insert a fresh track for ``var``.

    ``kind`` is ``"fo"`` or ``"so"``; ``position`` indexes into that kind's
    name list (default: append).  A second-order track is unconstrained; a
    first-order track is constrained to carry exactly one 1.
    """
    if var in a.signature:
        raise DuplicateVariable(f"{var!r} already in {a.signature}")
    if kind not in ("fo", "so"):
        raise ValueError(f"kind must be 'fo' or 'so', not {kind!r}")
    fo, so = list(a.signature.fo), list(a.signature.so)
    names = fo if kind == "fo" else so
    names.insert(len(names) if position is None else position, var)
    sig = VariableSignature(fo, so)
    i = sig.index(var)
    widened = _map_labels(a, sig, lambda lab: [lab[:i] + (b,) + lab[i:] for b in (0, 1)])
    if kind == "so":
        return widened
    if isinstance(a, BuchiAutomaton):
        return buchi_intersection(widened, _one_on_track(sig, i, BuchiAutomaton))
    return finite_intersection(widened, _one_on_track(sig, i, FiniteAutomaton))


def reorder_variables(a: _Automaton, sig: VariableSignature) -> _Automaton:
    """Permute tracks so that the automaton reads over ``sig``."""
    old = a.signature
    if sig == old:
        return a
    if set(sig.fo) != set(old.fo) or set(sig.so) != set(old.so):
        raise InvalidPermutation(f"{sig} is not a reordering of {old}")
    perm = [old.index(name) for name in sig.names]
    return _map_labels(a, sig, lambda lab: [tuple(lab[j] for j in perm)])


def align_signature(a: _Automaton, sig: VariableSignature) -> _Automaton:
    """Add the variables of ``sig`` missing from ``a`` and reorder to ``sig``."""
    missing = [v for v in sig.names if v not in a.signature]
    extra = [v for v in a.signature.names if v not in sig]
    if extra:
        raise UnknownVariable(f"{extra} not in target signature {sig}")
    for v in missing:
        a = add_variable(a, v, "fo" if v in sig.fo else "so")
    return reorder_variables(a, sig)
