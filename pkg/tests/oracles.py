"""Independent reference computations built on sympy.

Nothing here uses leviscope's Groebner engine or truncated quotients.
"""

from itertools import product

import sympy as sp

from leviscope.poly import Poly


def to_sympy(p: Poly):
    syms = sp.symbols([n.replace("~", "c_") for n in p.space.names])
    expr = 0
    for mono, c in p.terms.items():
        re, im = c.as_fraction_pair()
        term = sp.Rational(re.numerator, re.denominator) + sp.I * sp.Rational(im.numerator, im.denominator)
        for s, e in zip(syms, mono):
            term *= s ** e
        expr += term
    return sp.expand(expr), syms


def sympy_member(f: Poly, gens: list[Poly]) -> bool:
    fe, syms = to_sympy(f)
    ge = [to_sympy(g)[0] for g in gens]
    G = sp.groebner(ge, *syms, order="grevlex", domain=sp.QQ_I)
    return G.contains(fe)


def monomials_upto(nvars: int, bound: int):
    """All exponent tuples of total degree < bound."""
    return [m for m in product(range(bound), repeat=nvars) if sum(m) < bound]


def _rows(gens: list[Poly], bound: int, columns: dict):
    nvars = len(gens[0].space)
    rows = []
    for g in gens:
        for m in monomials_upto(nvars, bound):
            row = [0] * len(columns)
            nonzero = False
            for gm, c in g.terms.items():
                mm = tuple(a + b for a, b in zip(gm, m))
                if sum(mm) < bound:
                    re, im = c.as_fraction_pair()
                    row[columns[mm]] += sp.Rational(re.numerator, re.denominator) + \
                        sp.I * sp.Rational(im.numerator, im.denominator)
                    nonzero = True
            if nonzero:
                rows.append(row)
    return rows


def dense_quotient_dim(numerator: list[Poly], denominator: list[Poly], bound: int) -> int:
    """dim (N + m^bound) / (D + m^bound) by dense matrix ranks, assuming D ⊆ N."""
    nvars = len(numerator[0].space)
    cols = {m: k for k, m in enumerate(monomials_upto(nvars, bound))}
    num = _rows(numerator, bound, cols)
    den = _rows(denominator, bound, cols)
    r_all = sp.Matrix(num + den).rank() if num + den else 0
    r_den = sp.Matrix(den).rank() if den else 0
    return r_all - r_den


def brute_force_member(f: Poly, gens: list[Poly], extra_degree: int) -> bool:
    """f in the span of {m*g : deg(m) <= extra_degree} (certificate search)."""
    nvars = len(f.space)
    cols = {}
    vecs = []
    for g in gens:
        for m in monomials_upto(nvars, extra_degree + 1):
            v = {}
            for gm, c in g.terms.items():
                v[tuple(a + b for a, b in zip(gm, m))] = c
            vecs.append(v)
    for v in vecs + [f.terms]:
        for mono in v:
            cols.setdefault(mono, len(cols))

    def dense(v):
        row = [0] * len(cols)
        for mono, c in v.items():
            re, im = c.as_fraction_pair()
            row[cols[mono]] = sp.Rational(re.numerator, re.denominator) + \
                sp.I * sp.Rational(im.numerator, im.denominator)
        return row
    if not vecs:
        return f.is_zero()
    A = sp.Matrix([dense(v) for v in vecs])
    B = A.col_join(sp.Matrix([dense(f.terms)]))
    return A.rank() == B.rank()
