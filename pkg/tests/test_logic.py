"""Parser, scoping and negation normal form."""
import pytest
from hypothesis import given, settings, strategies as st

from unaryfol.errors import FormulaSyntaxError, ScopeError
from unaryfol.logic import (
    And,
    Bottom,
    EqFO,
    EqSO,
    Exists,
    Forall,
    Iff,
    Less,
    Member,
    Not,
    OffsetEq,
    Or,
    Relation,
    Top,
    free_variables,
    is_nnf,
    parse,
    to_nnf,
)


class TestParse:
    def test_running_example(self):
        f = parse("forall x1. exists x2. (x1 < x2 & X1(x2))")
        assert f == Forall("x1", Exists("x2", And(Less("x1", "x2"), Member("X1", "x2"))))

    def test_blowup_formula(self):
        f = parse("forall x1. exists x2. (x2 = x1 + 2 & (X1(x1) <-> X1(x2)))")
        body = And(OffsetEq("x2", "x1", 2), Iff(Member("X1", "x1"), Member("X1", "x2")))
        assert f == Forall("x1", Exists("x2", body))

    def test_atoms(self):
        assert parse("x = y") == EqFO("x", "y")
        assert parse("X = Y") == EqSO("X", "Y")
        assert parse("true") == Top() and parse("false") == Bottom()
        assert parse("succ(x, y)") == Relation("succ", ("x", "y"))

    def test_precedence(self):
        f = parse("!X(x) & X(y) | x < y <-> y < x")
        left = Or(And(Not(Member("X", "x")), Member("X", "y")), Less("x", "y"))
        assert f == Iff(left, Less("y", "x"))

    def test_iff_right_associative(self):
        assert parse("true <-> false <-> true") == Iff(Top(), Iff(Bottom(), Top()))

    def test_quantifier_scope_extends_right(self):
        f = parse("exists x. X(x) & x < y")
        assert f == Exists("x", And(Member("X", "x"), Less("x", "y")))

    def test_round_trip_through_str(self):
        text = "forall x1. exists x2. (x2 = x1 + 3 & (X1(x1) <-> !X1(x2)))"
        f = parse(text)
        assert parse(str(f)) == f

    @pytest.mark.parametrize("text", ["x1 <", "X < Y", "x = Y", "x = y + 0", "(x < y",
                                      "exists X. X(x)", "x < y)", "x $ y", "X(x, y)"])
    def test_syntax_errors(self, text):
        with pytest.raises(FormulaSyntaxError) as err:
            parse(text)
        assert err.value.position >= 0

    def test_error_position(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse("x < y & ?")
        assert err.value.position == 8


class TestScope:
    def test_rebinding(self):
        with pytest.raises(ScopeError):
            parse("exists x. forall x. x < x")

    def test_free_and_bound(self):
        with pytest.raises(ScopeError):
            parse("x < y & exists x. X(x)")

    def test_free_variables_allowed(self):
        f = parse("exists x2. (x1 < x2 & X1(x2))")
        assert free_variables(f) == {"x1", "X1"}

    def test_sibling_binders_allowed(self):
        parse("(exists x. X(x)) & (forall x. X(x))")


class TestNNF:
    def test_de_morgan(self):
        f = to_nnf(parse("!(X(x) & Y(x))"))
        assert f == Or(Not(Member("X", "x")), Not(Member("Y", "x")))

    def test_quantifier_duality(self):
        assert to_nnf(parse("!forall x. X(x)")) == Exists("x", Not(Member("X", "x")))
        assert to_nnf(parse("!exists x. X(x)")) == Forall("x", Not(Member("X", "x")))

    def test_double_negation(self):
        assert to_nnf(parse("!!X(x)")) == Member("X", "x")

    def test_constants(self):
        assert to_nnf(parse("!true")) == Bottom()
        assert to_nnf(parse("!false")) == Top()

    def test_iff_expanded(self):
        f = to_nnf(parse("X(x) <-> Y(x)"))
        assert is_nnf(f)
        assert not is_nnf(parse("X(x) <-> Y(x)"))


_atom = st.sampled_from(["X(x)", "Y(x)", "x < y", "x = y", "y = x + 1", "true", "false"])


@st.composite
def formulas(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(_atom)
    op = draw(st.sampled_from(["!", "&", "|", "<->"]))
    if op == "!":
        return f"!({draw(formulas(depth - 1))})"
    return f"({draw(formulas(depth - 1))}) {op} ({draw(formulas(depth - 1))})"


class TestProperties:
    @settings(max_examples=100, deadline=None)
    @given(text=formulas())
    def test_nnf_shape(self, text):
        for negate in (False, True):
            assert is_nnf(to_nnf(parse(text), negate))

    @settings(max_examples=100, deadline=None)
    @given(text=formulas())
    def test_nnf_keeps_free_variables(self, text):
        f = parse(text)
        assert free_variables(to_nnf(f)) <= free_variables(f)
