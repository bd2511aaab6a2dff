"""Formulas over (N, <, +c) with monadic second-order free variables.

Concrete syntax::

    phi ::= forall x. phi | exists x. phi
          | phi <-> phi | phi "|" phi | phi & phi | !phi | (phi)
          | true | false | x = y | X = Y | X(x) | x < y | y = x + c

First-order names start with a lowercase letter, second-order names with an
uppercase one.  Precedence from tightest: ``!``, ``&``, ``|``, ``<->``; a
quantifier's scope extends as far right as possible.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import FormulaSyntaxError, ScopeError


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "true"


@dataclass(frozen=True)
class Bottom:
    def __str__(self):
        return "false"


@dataclass(frozen=True)
class EqFO:
    left: str
    right: str

    def __str__(self):
        return f"{self.left} = {self.right}"


@dataclass(frozen=True)
class EqSO:
    left: str
    right: str

    def __str__(self):
        return f"{self.left} = {self.right}"


@dataclass(frozen=True)
class Member:
    pred: str
    var: str

    def __str__(self):
        return f"{self.pred}({self.var})"


@dataclass(frozen=True)
class Less:
    left: str
    right: str

    def __str__(self):
        return f"{self.left} < {self.right}"


@dataclass(frozen=True)
class OffsetEq:
    """``left = right + offset`` with ``offset >= 1``."""

    left: str
    right: str
    offset: int

    def __str__(self):
        return f"{self.left} = {self.right} + {self.offset}"


@dataclass(frozen=True)
class Relation:
    """Application of a relation registered with
    :func:`unaryfol.compiler.register_relation`."""

    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({', '.join(self.args)})"


@dataclass(frozen=True)
class Not:
    arg: "Formula"

    def __str__(self):
        return f"!{_wrap(self.arg)}"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} & {_wrap(self.right)}"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} | {_wrap(self.right)}"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} <-> {_wrap(self.right)}"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"

    def __str__(self):
        return f"exists {self.var}. {self.body}"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"

    def __str__(self):
        return f"forall {self.var}. {self.body}"


ATOMS = (Top, Bottom, EqFO, EqSO, Member, Less, OffsetEq, Relation)
Formula = Union[Top, Bottom, EqFO, EqSO, Member, Less, OffsetEq, Relation,
                Not, And, Or, Iff, Exists, Forall]


def _wrap(f) -> str:
    return str(f) if isinstance(f, ATOMS + (Not,)) else f"({f})"


def is_first_order_name(name: str) -> bool:
    return name[:1].islower()


def atom_variables(f) -> tuple:
    if isinstance(f, (EqFO, EqSO, Less)):
        return (f.left, f.right)
    if isinstance(f, OffsetEq):
        return (f.left, f.right)
    if isinstance(f, Member):
        return (f.var, f.pred)
    if isinstance(f, Relation):
        return f.args
    return ()


def free_variables(f) -> set:
    if isinstance(f, ATOMS):
        return set(atom_variables(f))
    if isinstance(f, Not):
        return free_variables(f.arg)
    if isinstance(f, (And, Or, Iff)):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def check_scope(f) -> None:
    """Reject rebinding a bound name and names used both free and bound."""
    free = free_variables(f)

    def walk(g, bound):
        if isinstance(g, (Exists, Forall)):
            if g.var in bound:
                raise ScopeError(f"{g.var!r} is rebound inside its own scope")
            if g.var in free:
                raise ScopeError(f"{g.var!r} occurs both free and bound")
            if not is_first_order_name(g.var):
                raise ScopeError(f"cannot quantify second-order variable {g.var!r}")
            walk(g.body, bound | {g.var})
        elif isinstance(g, Not):
            walk(g.arg, bound)
        elif isinstance(g, (And, Or, Iff)):
            walk(g.left, bound)
            walk(g.right, bound)

    walk(f, frozenset())


# --------------------------------------------------------------------------
# Parser

_TOKEN = re.compile(r"\s*(?:(<->)|(forall|exists|true|false)\b|([A-Za-z_][A-Za-z0-9_]*)"
                    r"|(\d+)|([()&|!<=+.,]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        iff, kw, ident, num, punct = m.groups()
        if iff:
            tokens.append(("op", iff, start))
        elif kw:
            tokens.append(("kw", kw, start))
        elif ident:
            tokens.append(("id", ident, start))
        elif num:
            tokens.append(("num", int(num), start))
        else:
            tokens.append(("op", punct, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value) -> bool:
        if self.peek()[1] == value and self.peek()[0] in ("op", "kw"):
            self.i += 1
            return True
        return False

    def expect(self, value):
        tok = self.peek()
        if not self.accept(value):
            raise FormulaSyntaxError(f"expected {value!r}", tok[2])

    def ident(self, kind=None):
        tok = self.take()
        if tok[0] != "id":
            raise FormulaSyntaxError("expected a variable name", tok[2])
        name = tok[1]
        if kind == "fo" and not is_first_order_name(name):
            raise FormulaSyntaxError(f"{name!r} is not a first-order name", tok[2])
        if kind == "so" and is_first_order_name(name):
            raise FormulaSyntaxError(f"{name!r} is not a second-order name", tok[2])
        return name

    def formula(self):
        f = self.iff()
        tok = self.peek()
        if tok[0] != "end":
            raise FormulaSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def iff(self):
        left = self.disj()
        if self.accept("<->"):
            return Iff(left, self.iff())
        return left

    def disj(self):
        f = self.conj()
        while self.accept("|"):
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self):
        if self.accept("!"):
            return Not(self.unary())
        tok = self.peek()
        if tok[0] == "kw" and tok[1] in ("forall", "exists"):
            self.take()
            var = self.ident("fo")
            self.expect(".")
            body = self.iff()
            return Forall(var, body) if tok[1] == "forall" else Exists(var, body)
        return self.primary()

    def primary(self):
        tok = self.peek()
        if self.accept("("):
            f = self.iff()
            self.expect(")")
            return f
        if self.accept("true"):
            return Top()
        if self.accept("false"):
            return Bottom()
        if tok[0] != "id":
            raise FormulaSyntaxError("expected a formula", tok[2])
        name = self.take()[1]
        if self.accept("("):
            args = [self.ident("fo")]
            while self.accept(","):
                args.append(self.ident("fo"))
            self.expect(")")
            if is_first_order_name(name):
                return Relation(name, tuple(args))
            if len(args) != 1:
                raise FormulaSyntaxError(f"{name} takes one argument", tok[2])
            return Member(name, args[0])
        if self.accept("<"):
            if not is_first_order_name(name):
                raise FormulaSyntaxError("'<' compares first-order variables", tok[2])
            return Less(name, self.ident("fo"))
        if self.accept("="):
            if not is_first_order_name(name):
                return EqSO(name, self.ident("so"))
            right = self.ident("fo")
            if self.accept("+"):
                num = self.take()
                if num[0] != "num" or num[1] < 1:
                    raise FormulaSyntaxError("expected a positive constant", num[2])
                return OffsetEq(name, right, num[1])
            return EqFO(name, right)
        nxt = self.peek()
        raise FormulaSyntaxError(f"unexpected {nxt[1]!r} after {name!r}", nxt[2])


def parse(text: str):
    """Parse a formula and check its variable scoping."""
    f = _Parser(text).formula()
    check_scope(f)
    return f


# --------------------------------------------------------------------------
# Negation normal form


def to_nnf(f, negate: bool = False):
    """Push negations down to atoms; ``Iff`` is expanded on the way."""
    if isinstance(f, Top):
        return Bottom() if negate else f
    if isinstance(f, Bottom):
        return Top() if negate else f
    if isinstance(f, ATOMS):
        return Not(f) if negate else f
    if isinstance(f, Not):
        return to_nnf(f.arg, not negate)
    if isinstance(f, And):
        l, r = to_nnf(f.left, negate), to_nnf(f.right, negate)
        return Or(l, r) if negate else And(l, r)
    if isinstance(f, Or):
        l, r = to_nnf(f.left, negate), to_nnf(f.right, negate)
        return And(l, r) if negate else Or(l, r)
    if isinstance(f, Iff):
        a, b = f.left, f.right
        if negate:
            return Or(to_nnf(And(a, Not(b))), to_nnf(And(Not(a), b)))
        return Or(to_nnf(And(a, b)), to_nnf(And(Not(a), Not(b))))
    if isinstance(f, Exists):
        body = to_nnf(f.body, negate)
        return Forall(f.var, body) if negate else Exists(f.var, body)
    if isinstance(f, Forall):
        body = to_nnf(f.body, negate)
        return Exists(f.var, body) if negate else Forall(f.var, body)
    raise TypeError(f"not a formula: {f!r}")


def is_nnf(f) -> bool:
    if isinstance(f, Not):
        return isinstance(f.arg, ATOMS) and not isinstance(f.arg, (Top, Bottom))
    if isinstance(f, Iff):
        return False
    if isinstance(f, (And, Or)):
        return is_nnf(f.left) and is_nnf(f.right)
    if isinstance(f, (Exists, Forall)):
        return is_nnf(f.body)
    return True
