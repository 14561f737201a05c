from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leviscope.config import set_limits
from leviscope.errors import EmptyVarietyError, ResourceLimitError, SpaceMismatchError
from leviscope.gaussian import I, ONE, ZERO, GaussianRational
from leviscope.groebner import (Ideal, buchberger, ideal_dimension, ideal_member, poly_divmod,
                                truncated_quotient_dim, truncated_quotient_dims)
from leviscope.ils import build_normal_form, line_ideal_squared, tau_ideal
from leviscope.poly import ORDERS, Poly, VarSpace, order_key

from oracles import brute_force_member, sympy_member
from strategies import gaussians, nonzero_polys, polys

S3 = VarSpace(("a", "b", "c"))
XY = VarSpace(("x", "y"))
Y12 = VarSpace(("y1", "y2"))


def P(text, space):
    from leviscope.exprio import parse_poly
    return parse_poly(text, space)


# -- Gaussian rationals --------------------------------------------------------

class TestGaussian:
    def test_exact_arithmetic(self):
        a = GaussianRational(Fraction(1, 3), 2)
        b = GaussianRational(-1, Fraction(1, 2))
        assert a * b == GaussianRational(Fraction(-1, 3) - 1, Fraction(1, 6) - 2)
        assert (a / b) * b == a
        assert I * I == -ONE

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            GaussianRational(0.5)
        with pytest.raises(TypeError):
            GaussianRational.coerce(1j)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_str(self):
        assert str(I) == "i"
        assert str(-I) == "-i"
        assert str(GaussianRational(Fraction(1, 2), -3)) == "1/2-3*i"

    @given(gaussians(), gaussians(), gaussians())
    def test_field_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a.conj().conj() == a
        if b:
            assert (a / b) * b == a

    @given(gaussians(), gaussians())
    def test_hash_consistent(self, a, b):
        if a == b:
            assert hash(a) == hash(b)


# -- polynomials -----------------------------------------------------------------

class TestPoly:
    @given(polys(S3), polys(S3), polys(S3))
    @settings(max_examples=60)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == Poly.zero(S3)

    def test_no_zero_coefficients_stored(self):
        p = P("a + b", S3) - P("b", S3)
        assert list(p.terms) == [(1, 0, 0)]

    def test_space_mismatch(self):
        with pytest.raises(SpaceMismatchError):
            Poly.var(S3, "a") + Poly.var(XY, "x")

    def test_orders(self):
        a2, ab, c3 = (2, 0, 0), (1, 1, 0), (0, 0, 3)
        assert max([a2, ab, c3], key=order_key("grevlex")) == c3
        assert max([a2, ab], key=order_key("lex")) == a2
        assert max([a2, ab, c3], key=order_key("local")) in (a2, ab)
        assert set(ORDERS) >= {"grevlex", "lex"}

    def test_term_cap(self):
        old = set_limits(term_cap=10)
        try:
            with pytest.raises(ResourceLimitError):
                P("(a + b + c + 1)^4", S3)
        finally:
            set_limits(**old.__dict__)

    @given(polys(XY))
    def test_diff_product_rule(self, p):
        q = P("x^2*y + i*y", XY)
        assert (p * q).diff("x") == p.diff("x") * q + p * q.diff("x")


# -- division --------------------------------------------------------------------

class TestDivision:
    def test_exact_factorization(self):
        (q,), r = poly_divmod(P("x^2 - y^2", XY), [P("x - y", XY)])
        assert q == P("x + y", XY) and r.is_zero()

    def test_generator_divides_itself(self):
        gens = [P(t, Y12) for t in ("y1^2", "y1*y2", "y2^2")]
        _, r = poly_divmod(P("y1*y2", Y12), gens)
        assert r.is_zero()

    def test_no_division(self):
        sp = VarSpace(("x", "y1"))
        (q,), r = poly_divmod(P("x", sp), [P("y1", sp)])
        assert q.is_zero() and r == P("x", sp)

    def test_mixed_spaces(self):
        with pytest.raises(SpaceMismatchError):
            poly_divmod(P("x", XY), [P("y1", Y12)])

    @given(polys(S3), st.lists(nonzero_polys(S3, max_terms=3, max_deg=2), min_size=1, max_size=3),
           st.sampled_from(["grevlex", "lex", "grlex"]))
    @settings(max_examples=200)
    def test_division_identity(self, f, divs, order):
        qs, r = poly_divmod(f, divs, order)
        total = r
        for q, d in zip(qs, divs):
            total = total + q * d
        assert total == f
        key = order_key(order)
        lms = [max(d.terms, key=key) for d in divs]
        for m in r.terms:
            assert not any(all(a >= b for a, b in zip(m, lm)) for lm in lms)


# -- Groebner bases ----------------------------------------------------------------

def _spoly_reduces(gb):
    from leviscope.poly import mono_lcm, mono_div
    basis = list(gb.basis)
    for f, g in combinations(basis, 2):
        mf, cf = f.leading_term(gb.order)
        mg, cg = g.leading_term(gb.order)
        lcm = mono_lcm(mf, mg)
        s = f.mul_term(mono_div(lcm, mf), ONE / cf) - g.mul_term(mono_div(lcm, mg), ONE / cg)
        if not gb.reduce(s).is_zero():
            return False
    return True


class TestGroebner:
    def test_already_groebner(self):
        gb = buchberger(Ideal([P("y1", Y12), P("y2", Y12)]))
        assert set(gb.basis) == {P("y1", Y12), P("y2", Y12)}

    def test_s_poly_chain(self):
        gb = buchberger(Ideal([P("y1^2", Y12), P("y1*y2 + y2^2", Y12)]))
        assert P("y2^3", Y12) in gb.basis

    def test_monomial_ideal(self):
        gens = [P(t, Y12) for t in ("y1^2", "y1*y2", "y2^2")]
        assert set(buchberger(Ideal(gens)).basis) == set(gens)

    def test_reduced_and_monic(self):
        gb = buchberger(Ideal([P("a^2 + b", S3), P("a*b - c", S3), P("b^2 + i*c", S3)]))
        for g in gb.basis:
            assert g.leading_term()[1] == ONE
            others = [h for h in gb.basis if h is not g]
            _, r = poly_divmod(g, others)
            assert r == g
        assert _spoly_reduces(gb)

    def test_membership_examples(self):
        I2 = line_ideal_squared(2)
        sp = I2.space
        assert ideal_member(Poly.monomial(sp, {"y1": 1, "y2": 1}), I2)
        assert not ideal_member(Poly.var(sp, "y1"), I2)
        tau = tau_ideal(build_normal_form("D_inf", {}, 2))
        assert not ideal_member(Poly.monomial(sp, {"y1": 2}), tau)

    @given(st.lists(nonzero_polys(S3, max_terms=3, max_deg=3), min_size=1, max_size=3),
           st.lists(polys(S3, max_terms=2, max_deg=1), min_size=3, max_size=3), st.booleans(),
           polys(S3, max_terms=2, max_deg=2))
    @settings(max_examples=200)
    def test_membership_agrees_with_oracles(self, gens, mults, build, noise):
        ideal = Ideal(gens)
        gb = ideal.groebner()
        for g in gens:
            assert gb.reduce(g).is_zero()
        if build:
            f = sum((m * g for m, g in zip(mults, gens)), Poly.zero(S3))
        else:
            f = noise
        ours = ideal_member(f, ideal)
        assert ours == sympy_member(f, gens)
        if build:
            assert ours and brute_force_member(f, gens, 1)
        elif brute_force_member(f, gens, 2):
            assert ours

    def test_generator_order_irrelevant(self):
        gens = [P("a^2 + b", S3), P("a*b - c", S3)]
        f = P("a^3*b + a*b^2", S3)
        assert ideal_member(f, Ideal(gens)) == ideal_member(f, Ideal(gens[::-1]))


# -- dimension -----------------------------------------------------------------------

def _min_vertex_cover(n, supports):
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            if all(s & set(combo) for s in supports):
                return size


class TestDimension:
    def test_line_dimension(self):
        sp = VarSpace(("x", "y1", "y2", "z", "w1", "w2"))
        ideal = Ideal([Poly.var(sp, v) for v in ("y1", "y2", "w1", "w2")])
        assert ideal_dimension(ideal) == 2

    def test_point(self):
        sp = VarSpace(("x",))
        assert ideal_dimension(Ideal([Poly.var(sp, "x")])) == 0

    def test_hypersurface(self):
        assert ideal_dimension(Ideal([P("y1*y2", Y12)])) == 1

    def test_unit_ideal(self):
        with pytest.raises(EmptyVarietyError):
            ideal_dimension(Ideal([P("a - 1", S3), P("a", S3)]))

    @given(st.integers(1, 6).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n)
                 .filter(lambda e: any(e)), min_size=1, max_size=4))))
    @settings(max_examples=100)
    def test_monomial_ideal_vertex_cover(self, data):
        n, exps = data
        sp = VarSpace(tuple(f"v{k}" for k in range(n)))
        ideal = Ideal([Poly.monomial(sp, tuple(e)) for e in exps])
        supports = [{k for k, x in enumerate(e) if x} for e in exps]
        assert ideal_dimension(ideal) == n - _min_vertex_cover(n, supports)


# -- truncated quotients ----------------------------------------------------------------

class TestTruncated:
    def test_a_inf(self):
        f = build_normal_form("A_inf", {}, 2)
        assert truncated_quotient_dim(line_ideal_squared(2), tau_ideal(f), 6) == 0

    def test_d_inf(self):
        f = build_normal_form("D_inf", {}, 2)
        assert truncated_quotient_dim(line_ideal_squared(2), tau_ideal(f), 6) == 1

    @pytest.mark.parametrize("N", [1, 3, 7])
    def test_same_ideal(self, N):
        I2 = line_ideal_squared(3)
        assert truncated_quotient_dim(I2, I2, N) == 0

    def test_cap(self):
        I2 = line_ideal_squared(1)
        with pytest.raises(ResourceLimitError):
            truncated_quotient_dim(I2, I2, 65)

    @pytest.mark.parametrize("tag,params", [("J_k_inf", {"k": 2}), ("Z_k_inf", {"k": 1}),
                                            ("T_inf_q_r", {"q": 3, "r": 3})])
    def test_monotone(self, tag, params):
        f = build_normal_form(tag, params, 2)
        dims = truncated_quotient_dims(line_ideal_squared(2), tau_ideal(f), 10)
        assert all(a <= b for a, b in zip(dims, dims[1:]))
        assert dims[-1] == dims[-2] == dims[-3]

    def test_dims_match_single_bound(self):
        f = build_normal_form("W_1_inf", {}, 2)
        dims = truncated_quotient_dims(line_ideal_squared(2), tau_ideal(f), 8)
        for N in range(1, 9):
            assert dims[N - 1] == truncated_quotient_dim(line_ideal_squared(2), tau_ideal(f), N)
