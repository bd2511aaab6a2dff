"""Formula -> Büchi automaton by structural induction, and the satisfiability
check built on it.

Universal quantifiers go through :func:`unaryfol.universal.universal_quantify`;
there is no complementation anywhere in the pipeline.  Negations are pushed
to atoms first and negated atoms have their own direct automata.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import logic as L
from .automata import (
    BuchiAutomaton,
    VariableSignature,
    buchi_intersection,
    buchi_union,
    buchi_witness,
    empty_buchi,
    reduce_buchi,
    trim,
)
from .encoding import (
    Interpretation,
    align_signature,
    decode_lasso,
    project_variable,
    valid_encodings_automaton,
)
from .errors import UnknownVariable
from .universal import QuantPipelineArtifacts, universal_quantify_with_artifacts

DEFAULT_MAX_OFFSET = 64


def canonical_signature(names) -> VariableSignature:
    fo = sorted(n for n in names if L.is_first_order_name(n))
    so = sorted(n for n in names if not L.is_first_order_name(n))
    return VariableSignature(fo, so)


def _automaton(sig, transitions, accepting, initial=(0,)):
    return BuchiAutomaton.build(sig, transitions, initial, accepting)


def _fo_pair(left, right, rows, accepting):
    """Automaton over tracks ``(left, right)`` from ``(src, label, dst)`` rows."""
    return _automaton(VariableSignature((left, right)), rows, accepting)


def _less(x, y, negated):
    if not negated:  # x < y
        rows = [(0, "00", 0), (0, "10", 1), (1, "00", 1), (1, "01", 2), (2, "00", 2)]
    else:  # y <= x
        rows = [(0, "00", 0), (0, "11", 2), (0, "01", 1), (1, "00", 1), (1, "10", 2),
                (2, "00", 2)]
    return _fo_pair(x, y, rows, [2])


def _eq_fo(x, y, negated):
    if not negated:
        rows = [(0, "00", 0), (0, "11", 1), (1, "00", 1)]
        return _fo_pair(x, y, rows, [1])
    rows = [(0, "00", 0), (0, "10", 1), (1, "00", 1), (1, "01", 3),
            (0, "01", 2), (2, "00", 2), (2, "10", 3), (3, "00", 3)]
    return _fo_pair(x, y, rows, [3])


def _offset_eq(y, x, c, negated):
    """``y = x + c`` over tracks ``(x, y)``: a chain of ``c`` steps after x's 1."""
    sig = VariableSignature((x, y))
    done = c + 1
    rows = [(0, "00", 0), (0, "10", 1), (done, "00", done)]
    for j in range(1, c):
        rows.append((j, "00", j + 1))
    if not negated:
        rows.append((c, "01", done))
        return _automaton(sig, rows, [done])
    late, early = c + 2, c + 3
    rows += [(0, "11", done), (0, "01", early), (early, "00", early), (early, "10", done)]
    rows += [(j, "01", done) for j in range(1, c)]
    rows += [(c, "00", late), (late, "00", late), (late, "01", done)]
    return _automaton(sig, rows, [done])


def _member(X, x, negated):
    sig = VariableSignature((x,), (X,))
    hit = "10" if negated else "11"
    rows = [(0, "00", 0), (0, "01", 0), (0, hit, 1), (1, "00", 1), (1, "01", 1)]
    return _automaton(sig, rows, [1])


def _eq_so(X, Y, negated):
    sig = VariableSignature((), (X, Y))
    if not negated:
        return _automaton(sig, [(0, "00", 0), (0, "11", 0)], [0])
    rows = [(0, "00", 0), (0, "11", 0), (0, "01", 1), (0, "10", 1)]
    rows += [(1, s, 1) for s in ("00", "01", "10", "11")]
    return _automaton(sig, rows, [1])


RELATIONS: dict = {}


def register_relation(name: str, arity: int,
                      positive: Callable[..., BuchiAutomaton],
                      negative: Callable[..., BuchiAutomaton]) -> None:
    """Make ``name(x1, ..., xn)`` usable in formulas.

    ``positive(*args)`` and ``negative(*args)`` receive the argument names and
    return automata over the first-order signature ``args`` (in that order)
    recognising the tuples in, respectively not in, the relation.
    """
    if not L.is_first_order_name(name):
        raise ValueError("relation names start with a lowercase letter")
    RELATIONS[name] = (arity, positive, negative)


def atom_automaton(atom, negated: bool, sig: VariableSignature,
                   max_offset: int = DEFAULT_MAX_OFFSET) -> BuchiAutomaton:
    """Models of ``atom`` (or of its negation) over ``sig``, valid encodings only."""
    for v in L.atom_variables(atom):
        if v not in sig:
            raise UnknownVariable(f"{v!r} not in signature {sig}")
    if isinstance(atom, (L.Top, L.Bottom)):
        truth = isinstance(atom, L.Top) != negated
        return valid_encodings_automaton(sig) if truth else empty_buchi(sig)
    if isinstance(atom, (L.EqFO, L.EqSO, L.Less, L.OffsetEq)) and atom.left == atom.right:
        truth = isinstance(atom, (L.EqFO, L.EqSO)) != negated
        return valid_encodings_automaton(sig) if truth else empty_buchi(sig)
    if isinstance(atom, L.Less):
        a = _less(atom.left, atom.right, negated)
    elif isinstance(atom, L.EqFO):
        a = _eq_fo(atom.left, atom.right, negated)
    elif isinstance(atom, L.OffsetEq):
        if atom.offset > max_offset:
            raise ValueError(f"offset {atom.offset} exceeds the limit {max_offset}")
        a = _offset_eq(atom.left, atom.right, atom.offset, negated)
    elif isinstance(atom, L.Member):
        a = _member(atom.pred, atom.var, negated)
    elif isinstance(atom, L.EqSO):
        a = _eq_so(atom.left, atom.right, negated)
    elif isinstance(atom, L.Relation):
        if atom.name not in RELATIONS:
            raise UnknownVariable(f"unknown relation {atom.name!r}")
        arity, pos, neg = RELATIONS[atom.name]
        if len(atom.args) != arity or len(set(atom.args)) != arity:
            raise ValueError(f"{atom.name} expects {arity} distinct arguments")
        a = (neg if negated else pos)(*atom.args)
    else:
        raise TypeError(f"not an atom: {atom!r}")
    return trim(align_signature(a, sig))


@dataclass
class CompileTrace:
    """Per-node sizes and the artifacts of every universal quantification."""

    steps: list = field(default_factory=list)
    quantifications: list = field(default_factory=list)

    def record(self, what: str, a: BuchiAutomaton):
        self.steps.append((what, a.num_states, a.num_transitions))


def compile_formula(formula, max_offset: int = DEFAULT_MAX_OFFSET,
                    trace: Optional[CompileTrace] = None) -> BuchiAutomaton:
    """Automaton accepting the encodings of the models of ``formula``, over
    its free variables in canonical order (first-order sorted, then
    second-order sorted)."""
    L.check_scope(formula)
    nnf = L.to_nnf(formula)

    def rec(f) -> BuchiAutomaton:
        sig = canonical_signature(L.free_variables(f))
        if isinstance(f, L.Not):
            a = atom_automaton(f.arg, True, sig, max_offset)
        elif isinstance(f, L.ATOMS):
            a = atom_automaton(f, False, sig, max_offset)
        elif isinstance(f, (L.And, L.Or)):
            left = align_signature(rec(f.left), sig)
            right = align_signature(rec(f.right), sig)
            op = buchi_intersection if isinstance(f, L.And) else buchi_union
            a = trim(op(left, right))
        elif isinstance(f, (L.Exists, L.Forall)):
            body = rec(f.body)
            if f.var not in body.signature:
                a = body
            elif isinstance(f, L.Exists):
                a = trim(project_variable(body, f.var))
            else:
                art = universal_quantify_with_artifacts(body, f.var)
                if trace is not None:
                    trace.quantifications.append(art)
                a = art.result
        else:
            raise TypeError(f"unexpected node {f!r}")
        a = reduce_buchi(a)
        if trace is not None:
            trace.record(type(f).__name__ + (f" {f.var}" if hasattr(f, "var") and
                                             isinstance(f, (L.Exists, L.Forall)) else ""), a)
        return a

    return rec(nnf)


@dataclass
class SatResult:
    satisfiable: bool
    witness: Optional[Interpretation]
    lasso: Optional[object]
    automaton: BuchiAutomaton

    def __bool__(self):
        return self.satisfiable


def decide_sat(formula, max_offset: int = DEFAULT_MAX_OFFSET,
               trace: Optional[CompileTrace] = None) -> SatResult:
    """Compile, trim and test emptiness; decode a witness when non-empty."""
    if isinstance(formula, str):
        formula = L.parse(formula)
    a = trim(compile_formula(formula, max_offset, trace))
    lasso = buchi_witness(a)
    if lasso is None:
        return SatResult(False, None, None, a)
    return SatResult(True, decode_lasso(lasso, a.signature), lasso, a)


__all__ = [
    "CompileTrace",
    "QuantPipelineArtifacts",
    "SatResult",
    "atom_automaton",
    "canonical_signature",
    "compile_formula",
    "decide_sat",
    "register_relation",
]
