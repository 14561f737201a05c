import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leviscope.errors import InconsistentSplitError
from leviscope.exprio import parse_poly
from leviscope.forms import (DiffForm, Split, alpha_beta, d_anti, d_full, d_holo, levi_form,
                             levi_form_complexified)
from leviscope.gaussian import I
from leviscope.hermitian import HermitianPoly, complexified, complexify, make_hermitian, re_part
from leviscope.ils import catalog_germs
from leviscope.poly import Poly, VarSpace

from strategies import polys

Z1 = VarSpace.paired(("z",))
Z2 = VarSpace.paired(("z1", "z2"))
D2 = VarSpace(("x", "y1", "y2", "z", "w1", "w2"))


def P(text, sp=Z1):
    return parse_poly(text, sp)


def basis(sp, *names):
    return DiffForm.basis(sp, *names)


def test_wirtinger_examples():
    f = P("z*~z")
    assert d_holo(f) == basis(Z1, "z").scale(P("~z"))
    assert d_anti(f) == basis(Z1, "~z").scale(P("z"))
    assert d_holo(d_anti(f)) == basis(Z1, "z", "~z")


def test_wedge_examples():
    dz, dzb = basis(Z1, "z"), basis(Z1, "~z")
    assert dz.wedge(dz).is_zero()
    assert dz.wedge(dzb) == -dzb.wedge(dz)
    assert dz.scale(P("~z")).wedge(dzb.scale(P("z"))) == basis(Z1, "z", "~z").scale(P("z*~z"))


def test_levi_form_examples():
    F = re_part(parse_poly("z1", VarSpace(("z1", "z2"))))
    half = Poly.const(Z2, 1) / 2
    expected = (basis(Z2, "z1") - basis(Z2, "~z1")).scale(half).scale(I)
    assert levi_form(F) == expected
    F = make_hermitian(P("z1*~z1", Z2))
    expected = (basis(Z2, "z1").scale(P("~z1", Z2)) - basis(Z2, "~z1").scale(P("z1", Z2))).scale(I)
    assert levi_form(F) == expected
    assert levi_form(HermitianPoly(Poly.const(Z2, 3))).is_zero()


def test_alpha_beta_a_inf():
    F = re_part(parse_poly("y1^2 + y2^2", VarSpace(("x", "y1", "y2"))))
    ab = alpha_beta(complexify(F))
    assert str(ab.alpha) == "(y1)*dy1 + (y2)*dy2"
    assert str(ab.beta) == "(w1)*dw1 + (w2)*dw2"
    assert ab.theta1.is_zero() and ab.theta2.is_zero()


def test_alpha_beta_trivial():
    Fc = complexified(Poly.var(VarSpace(("x", "z")), "x"), ("x",))
    ab = alpha_beta(Fc)
    assert ab.alpha == DiffForm.basis(Fc.space, "x") and ab.beta.is_zero()


def test_split_thetas():
    hol = VarSpace(("x", "y1"))
    Pp = parse_poly("x*y1^2", hol)
    F = re_part(Pp + parse_poly("y1^4", hol))
    Fc = complexify(F)
    from leviscope.forms import split_head
    H = Fc.poly - split_head(Fc, Pp)
    ab = alpha_beta(Fc, Split(Pp, H))
    assert ab.theta1 == DiffForm.basis(Fc.space, "y1").scale(parse_poly("2*y1^3", Fc.space))
    assert ab.theta2 == DiffForm.basis(Fc.space, "w1").scale(parse_poly("2*w1^3", Fc.space))
    with pytest.raises(InconsistentSplitError):
        alpha_beta(Fc, Split(Pp, H + Poly.var(Fc.space, "x")))


@given(polys(Z2, max_terms=4))
@settings(max_examples=50)
def test_d_squared_zero(p):
    assert d_full(d_full(p)).is_zero()
    assert d_holo(d_holo(p)).is_zero()
    assert d_anti(d_anti(p)).is_zero()
    assert d_holo(d_anti(p)) == -d_anti(d_holo(p))
    assert d_full(p) == d_holo(p) + d_anti(p)


@given(polys(Z2, max_terms=3), polys(Z2, max_terms=3))
@settings(max_examples=200)
def test_leibniz(f, g):
    assert d_full(f * g) == d_full(g).scale(f) + d_full(f).scale(g)
    assert d_holo(f * g) == d_holo(g).scale(f) + d_holo(f).scale(g)


@given(polys(Z2, max_terms=3), polys(Z2, max_terms=3), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=200)
def test_graded_anticommutativity(f, g, ka, kb):
    def form(h, k):
        out = DiffForm.function(h)
        for name in ("z1", "~z2")[:k]:
            out = out.wedge(d_full(Poly.var(Z2, name)).scale(h))
        return out
    a = form(f, ka)
    b = form(g, kb)
    sign = (-1) ** (a.degree * b.degree)
    assert a.wedge(b) == b.wedge(a).scale(sign)


@given(polys(D2, max_terms=5, max_deg=3))
@settings(max_examples=200)
def test_levi_identities_identities(p):
    Fc = complexified(p, ("x", "y1", "y2"))
    eta = levi_form_complexified(Fc)
    ab = alpha_beta(Fc)
    dF = d_full(Fc.poly)
    assert eta + dF.scale(I) == ab.alpha.scale(2 * I)
    assert eta - dF.scale(I) == ab.beta.scale(-2 * I)
    assert ab.alpha + ab.beta == dF


def test_levi_identities_catalog():
    for _, _, g in catalog_germs(3):
        Fc = complexify(re_part(g.poly))
        eta = levi_form_complexified(Fc)
        ab = alpha_beta(Fc)
        dF = d_full(Fc.poly)
        assert eta + dF.scale(I) == ab.alpha.scale(2 * I)
        assert eta - dF.scale(I) == ab.beta.scale(-2 * I)
