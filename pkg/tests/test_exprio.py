import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leviscope.errors import ParseError
from leviscope.exprio import dump_poly, load_poly, parse_poly, print_poly
from leviscope.poly import Poly, VarSpace

from strategies import polys

Y = VarSpace(("x", "y1", "y2"))
Z = VarSpace.paired(("z1", "z2"))
D = VarSpace(("x", "y1", "y2", "z", "w1", "w2"))


def test_two_terms():
    p = parse_poly("y1^2 + y2^2", Y)
    assert len(p) == 2


def test_q24_sigil_and_conj():
    a = parse_poly("z1*~z2 - ~z1*z2", Z)
    b = parse_poly("z1*conj(z2) - conj(z1)*z2", Z)
    assert a == b and len(a) == 2


def test_a_inf_head():
    p = parse_poly("1/2*(y1^2+y2^2) + 1/2*(w1^2+w2^2)", D)
    assert print_poly(p) == "1/2*y1^2 + 1/2*y2^2 + 1/2*w1^2 + 1/2*w2^2"


def test_zero_and_reorder():
    assert print_poly(Poly.zero(Y)) == "0"
    assert print_poly(parse_poly("y2^2+y1^2", Y)) == "y1^2 + y2^2"


def test_coefficients_printed():
    assert print_poly(parse_poly("i*x - (1/2 + 3*i)*y1", Y)) == "i*x - (1/2 + 3*i)*y1"
    assert print_poly(parse_poly("-x^2/2", Y)) == "-1/2*x^2"


def test_power_alias():
    assert parse_poly("x**3", Y) == parse_poly("x^3", Y)


@pytest.mark.parametrize("text,col", [
    ("x^-1", 3), ("x^(1/2)", 3), ("x^1.5", 3), ("x +", 4), ("(x", 3), ("x $ y1", 3),
    ("q + x", 1), ("x/y1", 3), ("x/0", 3),
])
def test_errors_have_positions(text, col):
    with pytest.raises(ParseError) as e:
        parse_poly(text, Y)
    assert e.value.line == 1
    assert e.value.column >= 1


def test_conj_without_partner():
    with pytest.raises(ParseError):
        parse_poly("~x", Y)


def test_multiline_position():
    with pytest.raises(ParseError) as e:
        parse_poly("x +\n  y1 ^ ^", Y)
    assert e.value.line == 2


@given(polys(Y, max_deg=4, max_terms=6))
@settings(max_examples=200)
def test_round_trip_holomorphic(p):
    assert parse_poly(print_poly(p), Y) == p


@given(polys(Z, max_deg=3, max_terms=6))
@settings(max_examples=200)
def test_round_trip_paired(p):
    text = print_poly(p)
    assert parse_poly(text, Z) == p
    assert print_poly(parse_poly(text, Z)) == text


@given(st.text(alphabet="xy12~()^*+-/i 0123", max_size=20))
@settings(max_examples=300)
def test_fuzz_only_parse_errors(text):
    try:
        parse_poly(text, Y)
    except ParseError:
        pass


def test_files():
    pf = load_poly("# A-infinity\nvars: n=2\ny1^2 + y2^2\n")
    assert pf.coords == ("x", "y1", "y2") and pf.n == 2
    pf = load_poly("coords: z1, z2\nz1*~z2 - ~z1*z2")
    assert pf.poly.space == Z
    pf = load_poly("x*w1 + z*y1", ("x", "y1"))
    assert pf.poly.space.names == ("x", "y1", "z", "w1")
    with pytest.raises(ParseError):
        load_poly("vars: n=zero\nx")
    with pytest.raises(ParseError):
        load_poly("# nothing\n")


def test_dump_round_trip():
    p = parse_poly("z1*~z2 - ~z1*z2 + 1/3", Z)
    assert load_poly(dump_poly(p)).poly == p
