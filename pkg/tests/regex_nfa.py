"""Tiny regular-expression compiler used as an independent oracle.

Syntax over single-track bit symbols: ``0`` and ``1`` are letters,
``+`` between two expressions is union (the textbook notation), a postfix
``*`` is Kleene star, a postfix ``^+`` is one-or-more, and ``@`` is the
empty language.  Spaces are ignored.  Thompson's construction, so the result
has epsilon edges and is built without touching the library's own operations
apart from the automaton container.
"""
from __future__ import annotations

import re

from unaryfol.automata import FiniteAutomaton, VariableSignature


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def state(self):
        self.n += 1
        return self.n - 1

    def letter(self, bit):
        s, t = self.state(), self.state()
        self.edges.append((s, (bit,), t))
        return s, t

    def empty(self):
        return self.state(), self.state()

    def concat(self, a, b):
        self.edges.append((a[1], None, b[0]))
        return a[0], b[1]

    def union(self, a, b):
        s, t = self.state(), self.state()
        self.edges += [(s, None, a[0]), (s, None, b[0]), (a[1], None, t), (b[1], None, t)]
        return s, t

    def star(self, a):
        s, t = self.state(), self.state()
        self.edges += [(s, None, a[0]), (a[1], None, t), (s, None, t), (a[1], None, a[0])]
        return s, t

    def plus(self, a):
        s, t = self.state(), self.state()
        self.edges += [(s, None, a[0]), (a[1], None, t), (a[1], None, a[0])]
        return s, t


def regex_nfa(text: str, track: str = "X1") -> FiniteAutomaton:
    tokens = re.findall(r"\^\+|[01()*+@]", text.replace(" ", ""))
    b = _Builder()
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def union():
        nonlocal pos
        left = concat()
        while peek() == "+":
            pos += 1
            left = b.union(left, concat())
        return left

    def concat():
        left = postfix()
        while peek() in ("0", "1", "(", "@"):
            left = b.concat(left, postfix())
        return left

    def postfix():
        nonlocal pos
        base = atom()
        while peek() in ("*", "^+"):
            base = b.star(base) if tokens[pos] == "*" else b.plus(base)
            pos += 1
        return base

    def atom():
        nonlocal pos
        tok = peek()
        pos += 1
        if tok in ("0", "1"):
            return b.letter(int(tok))
        if tok == "@":
            return b.empty()
        if tok == "(":
            inner = union()
            assert peek() == ")", text
            pos += 1
            return inner
        raise ValueError(f"bad regex {text!r} at token {pos}")

    start, end = union()
    assert pos == len(tokens), text
    return FiniteAutomaton(VariableSignature((), (track,)), frozenset(range(b.n)),
                           frozenset(b.edges), frozenset([start]), frozenset([end]))


def regex_matches(text: str, word: str) -> bool:
    """Membership through Python's ``re`` after rewriting to its syntax."""
    # union '+' sits between expressions; the one-or-more '^+' never does
    py = re.sub(r"(?<=[01)*])\+(?=[01(@])", "|", text.replace(" ", "").replace("@", "(?!)"))
    py = py.replace("^+", "+")
    return re.fullmatch(py, word) is not None
