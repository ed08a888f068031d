import pytest
from hypothesis import given, strategies as st

from pathemb.expr import (
    Add,
    Div,
    Integer,
    Mul,
    Neg,
    ParseError,
    Pow,
    Variable,
    canonical_string,
    canonicalize,
    depth,
    node_count,
    parse,
    structurally_equal,
)


def test_parse_flat_sum():
    got = parse("11+55+y+89+45")
    want = Add(Integer(11), Integer(55), Variable("y"), Integer(89), Integer(45))
    assert got == want


def test_parse_single_variable():
    assert parse("x") == Variable("x")


def test_parse_precedence_with_parens():
    assert parse("2*(x+1)") == Mul(Integer(2), Add(Variable("x"), Integer(1)))


def test_parse_dangling_operator_position():
    with pytest.raises(ParseError) as exc:
        parse("x+")
    assert exc.value.position == 2


@pytest.mark.parametrize(
    "text,expected",
    [
        ("a-b", Add(Variable("a"), Neg(Variable("b")))),
        ("a-b-c", Add(Variable("a"), Neg(Variable("b")), Neg(Variable("c")))),
        ("-x", Neg(Variable("x"))),
        ("-x^2", Neg(Pow(Variable("x"), Integer(2)))),
        ("-x*y", Mul(Neg(Variable("x")), Variable("y"))),
        ("a*b/c", Div(Mul(Variable("a"), Variable("b")), Variable("c"))),
        ("a/b*c", Mul(Div(Variable("a"), Variable("b")), Variable("c"))),
        ("a/b/c", Div(Div(Variable("a"), Variable("b")), Variable("c"))),
        ("2^3^2", Pow(Integer(2), Pow(Integer(3), Integer(2)))),
        ("2^-3", Pow(Integer(2), Neg(Integer(3)))),
        ("a+-b", Add(Variable("a"), Neg(Variable("b")))),
        ("a--b", Add(Variable("a"), Neg(Neg(Variable("b"))))),
        (" 1 + x ", Add(Integer(1), Variable("x"))),
    ],
)
def test_parse_shapes(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text",
    ["", "   ", "x+", "+x", "xy", "2 3", "(x", "x)", "x^", "X", "x$1", "()", "1.5", "2x"],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse(text)


def test_canonical_string_examples():
    assert canonical_string(Add(Integer(11), Integer(55), Variable("y"), Integer(89), Integer(45))) == "11+55+y+89+45"
    assert canonical_string(Neg(Variable("x"))) == "-x"
    assert canonical_string(Mul(Integer(2), Add(Variable("x"), Integer(1)))) == "2*(x+1)"


@pytest.mark.parametrize(
    "e,s",
    [
        (Add(Variable("a"), Neg(Variable("b"))), "a-b"),
        (Add(Neg(Variable("a")), Variable("b")), "-a+b"),
        (Neg(Add(Variable("a"), Variable("b"))), "-(a+b)"),
        (Neg(Mul(Variable("a"), Variable("b"))), "-(a*b)"),
        (Mul(Variable("a"), Neg(Variable("b"))), "a*-b"),
        (Mul(Variable("a"), Div(Variable("b"), Variable("c"))), "a*(b/c)"),
        (Div(Mul(Variable("a"), Variable("b")), Variable("c")), "a*b/c"),
        (Div(Variable("a"), Mul(Variable("b"), Variable("c"))), "a/(b*c)"),
        (Div(Variable("a"), Div(Variable("b"), Variable("c"))), "a/(b/c)"),
        (Pow(Neg(Variable("a")), Variable("b")), "(-a)^b"),
        (Pow(Variable("a"), Neg(Variable("b"))), "a^-b"),
        (Pow(Pow(Variable("a"), Variable("b")), Variable("c")), "(a^b)^c"),
        (Pow(Variable("a"), Pow(Variable("b"), Variable("c"))), "a^b^c"),
        (Add(Variable("a"), Neg(Mul(Variable("b"), Variable("c")))), "a-b*c"),
        (Add(Variable("a"), Integer(-5)), "a-5"),
        (Integer(-7), "-7"),
        (Pow(Integer(-3), Integer(2)), "(-3)^2"),
    ],
)
def test_canonical_string_parens(e, s):
    assert canonical_string(e) == s
    # the rendering must parse back to the canonical tree
    assert parse(s) == canonicalize(e)


def test_canonicalize_flattens():
    nested = Add(Variable("a"), Add(Variable("b"), Variable("c")))
    assert canonicalize(nested) == Add(Variable("a"), Variable("b"), Variable("c"))
    nested_mul = Mul(Mul(Variable("a"), Variable("b")), Variable("c"))
    assert canonicalize(nested_mul) == Mul(Variable("a"), Variable("b"), Variable("c"))


def test_structural_equality_is_order_sensitive():
    assert structurally_equal(parse("x+1"), parse("x+1"))
    assert not structurally_equal(parse("x+1"), parse("1+x"))
    assert not structurally_equal(parse("x+1"), parse("x+2"))


def test_helpers():
    e = parse("2*(x+1)")
    assert node_count(e) == 5
    assert depth(e) == 3
    assert node_count(parse("x")) == 1
    assert depth(parse("x")) == 1


# ---------------------------------------------------------------------------
# Properties

_expressions = st.deferred(
    lambda: st.one_of(
        st.integers(min_value=0, max_value=999).map(Integer),
        st.sampled_from("abcxyz").map(Variable),
        st.lists(_expressions, min_size=2, max_size=4).map(lambda cs: Add(*cs)),
        st.lists(_expressions, min_size=2, max_size=3).map(lambda cs: Mul(*cs)),
        st.tuples(_expressions, _expressions).map(lambda t: Div(*t)),
        st.tuples(_expressions, _expressions).map(lambda t: Pow(*t)),
        _expressions.map(Neg),
    )
)


@given(_expressions)
def test_round_trip_fixpoint(e):
    s = canonical_string(e)
    reparsed = parse(s)
    assert structurally_equal(reparsed, canonicalize(e))
    assert canonical_string(reparsed) == s


@given(st.text(max_size=80))
def test_parser_total(text):
    try:
        parse(text)
    except ParseError:
        pass
