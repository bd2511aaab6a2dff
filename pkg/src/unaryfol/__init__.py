"""Automata-based satisfiability for first-order formulas over (N, <, +1)
with monadic predicates, where universal quantifiers are applied directly
to Büchi automata instead of through complementation."""

from .automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    LassoWord,
    VariableSignature,
    buchi_intersection,
    buchi_is_empty,
    buchi_union,
    buchi_witness,
    finite_intersection,
    finite_is_empty,
    finite_membership,
    finite_union,
    lasso_membership,
    omega_closure,
    paths_automaton,
    trim,
)
from .compiler import compile_formula, decide_sat
from .encoding import (
    Interpretation,
    UltimatelyPeriodicSet,
    add_variable,
    decode_lasso,
    encode_interpretation,
    project_variable,
    reorder_variables,
    valid_encodings_automaton,
)
from .logic import parse, to_nnf
from .universal import universal_quantify

__version__ = "0.1.0"

__all__ = [
    "add_variable",
    "buchi_intersection",
    "buchi_is_empty",
    "buchi_union",
    "buchi_witness",
    "BuchiAutomaton",
    "compile_formula",
    "decide_sat",
    "decode_lasso",
    "encode_interpretation",
    "finite_intersection",
    "finite_is_empty",
    "finite_membership",
    "finite_union",
    "FiniteAutomaton",
    "Interpretation",
    "lasso_membership",
    "LassoWord",
    "omega_closure",
    "parse",
    "paths_automaton",
    "project_variable",
    "reorder_variables",
    "to_nnf",
    "trim",
    "UltimatelyPeriodicSet",
    "universal_quantify",
    "valid_encodings_automaton",
    "VariableSignature",
]
