import pytest
from hypothesis import given, settings

from generators import formulas
from kripkecheck.interpolation import DELTA, GAMMA, THETA
from kripkecheck.syntax import (
    BOTTOM,
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Implies,
    Or,
    ParseError,
    depth,
    format_formula,
    free_variables,
    is_negation,
    parse,
    predicate_symbols,
    subformulas,
)

P = lambda v: Atom("P", v)  # noqa: E731
Q = lambda v: Atom("Q", v)  # noqa: E731
R = lambda v: Atom("R", v)  # noqa: E731


def test_parse_atom():
    assert parse("P(x)") == Atom("P", "x")


def test_parse_gamma():
    expected = Forall(
        "x",
        Exists(
            "y",
            And(
                And(P("y"), Implies(Q("y"), R("x"))),
                Implies(Forall("x", R("x")), BOTTOM),
            ),
        ),
    )
    assert parse("forall x. exists y. (P(y) & (Q(y) -> R(x))) & ~forall x. R(x)") == expected
    assert GAMMA == expected


def test_implication_is_right_associative():
    assert parse("P(x) -> Q(x) -> false") == Implies(P("x"), Implies(Q("x"), BOTTOM))


def test_false_and_negation():
    assert parse("false") == BOTTOM
    assert parse("~P(x)") == Implies(P("x"), BOTTOM)
    assert parse("~~P(x)") == Implies(Implies(P("x"), BOTTOM), BOTTOM)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("P(x) & Q(x) | R(x)", Or(And(P("x"), Q("x")), R("x"))),
        ("P(x) | Q(x) & R(x)", Or(P("x"), And(Q("x"), R("x")))),
        ("P(x) & Q(x) & R(x)", And(And(P("x"), Q("x")), R("x"))),
        ("P(x) | Q(x) | R(x)", Or(Or(P("x"), Q("x")), R("x"))),
        ("~P(x) & Q(x)", And(Implies(P("x"), BOTTOM), Q("x"))),
        ("P(x) | Q(x) -> R(x)", Implies(Or(P("x"), Q("x")), R("x"))),
        ("P(x) -> forall y. Q(y) -> R(y)", Implies(P("x"), Forall("y", Implies(Q("y"), R("y"))))),
        ("P(x) & exists y. Q(y) | R(x)", And(P("x"), Exists("y", Or(Q("y"), R("x"))))),
        ("(forall y. Q(y)) & P(x)", And(Forall("y", Q("y")), P("x"))),
    ],
)
def test_precedence_and_scope(text, expected):
    assert parse(text) == expected


def test_whitespace_and_newlines_are_insignificant():
    assert parse("forall x.\n  P(x)\t->Q(x)") == Forall("x", Implies(P("x"), Q("x")))


def test_shadowing_is_allowed():
    phi = parse("forall x. exists x. P(x)")
    assert phi == Forall("x", Exists("x", P("x")))
    assert free_variables(phi) == frozenset()


@pytest.mark.parametrize(
    "text, line, column, expected",
    [
        ("P(x) &", 1, 7, {"~", "(", "false", "forall", "exists", "identifier"}),
        ("P(x", 1, 4, {")"}),
        ("P(x) Q(x)", 1, 6, {"&", "|", "->", "end of input"}),
        ("(P(x)", 1, 6, {"&", "|", "->", ")"}),
        ("forall . P(x)", 1, 8, {"identifier"}),
        ("P(x) ->\n  $", 2, 3, set()),
        ("forall(x)", 1, 7, {"identifier"}),
    ],
)
def test_syntax_errors_report_position(text, line, column, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert err.expected == frozenset(expected)


def test_free_variables():
    assert free_variables(Atom("P", "x")) == {"x"}
    assert free_variables(GAMMA) == frozenset()
    assert free_variables(Exists("y", And(P("y"), Q("x")))) == {"x"}


def test_predicate_symbols():
    assert predicate_symbols(GAMMA) == {"P", "Q", "R"}
    assert predicate_symbols(THETA) == {"P", "Q"}
    assert predicate_symbols(DELTA) == {"P", "Q", "S"}
    assert predicate_symbols(BOTTOM) == frozenset()


def test_format_basic():
    assert format_formula(Atom("P", "x")) == "P(x)"
    assert format_formula(Implies(Atom("P", "x"), BOTTOM)) == "~P(x)"
    assert str(Implies(P("x"), Implies(Q("x"), BOTTOM))) == "P(x) -> ~Q(x)"


@pytest.mark.parametrize(
    "phi",
    [
        And(Forall("x", P("x")), Q("y")),
        And(And(P("x"), Forall("x", P("x"))), Q("y")),
        Or(And(P("x"), Exists("y", Q("y"))), R("x")),
        Implies(Implies(P("x"), Q("x")), R("x")),
        Implies(Exists("x", P("x")), BOTTOM),
        And(Implies(Forall("x", P("x")), BOTTOM), Q("x")),
        Implies(BOTTOM, BOTTOM),
        And(P("x"), And(Q("x"), R("x"))),
        Or(P("x"), Or(Q("x"), R("x"))),
    ],
)
def test_format_reparses(phi):
    assert parse(format_formula(phi)) == phi


@settings(max_examples=500)
@given(formulas)
def test_roundtrip(phi):
    assert parse(format_formula(phi)) == phi


@given(formulas)
def test_parse_never_builds_negation_nodes(phi):
    # negations only ever exist as implications into false
    for node in subformulas(parse(format_formula(phi))):
        assert isinstance(node, (Atom, Bottom, And, Or, Implies, Exists, Forall))
        if is_negation(node):
            assert node.rhs == BOTTOM


def test_invalid_names_rejected():
    with pytest.raises(ValueError):
        Atom("forall", "x")
    with pytest.raises(ValueError):
        Atom("P", "1x")


def test_operator_sugar():
    assert (P("x") & Q("x")) == And(P("x"), Q("x"))
    assert (P("x") | Q("x")) == Or(P("x"), Q("x"))
    assert ~P("x") == Implies(P("x"), BOTTOM)
    assert P("x").implies(Q("x")) == Implies(P("x"), Q("x"))


def test_depth():
    assert depth(P("x")) == 0
    assert depth(parse("forall x. P(x) & Q(x)")) == 2
