"""Ideals, multivariate division, Buchberger's algorithm and ideal invariants.

Local questions (quotients of the local ring) are answered by working modulo
``m^N``: all polynomials are truncated to degree ``< N`` and linear algebra
over monomials is exact, so no standard-basis engine is needed.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .config import check_degree, get_limits
from .errors import EmptyVarietyError, ResourceLimitError, SpaceMismatchError
from .gaussian import GaussianRational
from .poly import (Monomial, Poly, VarSpace, mono_div, mono_divides, mono_lcm,
                   mono_mul, order_key)

_Terms = dict  # Monomial -> GaussianRational


def _same_space(polys: Iterable[Poly]) -> VarSpace:
    polys = list(polys)
    space = polys[0].space
    for p in polys[1:]:
        if p.space != space:
            raise SpaceMismatchError(f"{p.space!r} vs {space!r}")
    return space


class Ideal:
    """Finitely generated ideal with a monomial-order tag."""

    __slots__ = ("space", "generators", "order", "_gb")

    def __init__(self, generators: Iterable[Poly], order: str = "grevlex",
                 space: VarSpace | None = None):
        gens = [g for g in generators]
        if not gens and space is None:
            raise ValueError("an ideal needs at least one generator or an explicit space")
        if gens:
            sp = _same_space(gens)
            if space is not None and sp != space:
                raise SpaceMismatchError(f"{sp!r} vs {space!r}")
            space = sp
        order_key(order)
        self.space = space
        # zero generators contribute nothing
        self.generators = tuple(g for g in gens if g)
        self.order = order
        self._gb = None

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, order={self.order!r})"

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.space != self.space:
            raise SpaceMismatchError(f"{self.space!r} vs {other.space!r}")
        return Ideal(self.generators + other.generators, self.order, self.space)

    def with_generators(self, extra: Iterable[Poly]) -> "Ideal":
        return Ideal(self.generators + tuple(extra), self.order, self.space)

    def is_zero(self) -> bool:
        return not self.generators

    def groebner(self) -> "GroebnerBasis":
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def contains(self, f: Poly) -> bool:
        return ideal_member(f, self)

    def dimension(self) -> int:
        return ideal_dimension(self)


class GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` with respect to ``order``."""

    __slots__ = ("ideal", "basis", "order")

    def __init__(self, ideal: Ideal, basis: Sequence[Poly], order: str):
        self.ideal = ideal
        self.basis = tuple(basis)
        self.order = order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.basis]}, order={self.order!r})"

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_term(self.order)[0] for g in self.basis]

    def reduce(self, f: Poly) -> Poly:
        if f.space != self.ideal.space:
            raise SpaceMismatchError(f"{f.space!r} vs {self.ideal.space!r}")
        _, r = poly_divmod(f, self.basis, self.order)
        return r

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()


# -- division ----------------------------------------------------------------


def _sub_scaled(p: _Terms, g: _Terms, shift: Monomial, factor: GaussianRational) -> None:
    """In place: p -= factor * x^shift * g."""
    for m, c in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        s = p.get(mm)
        v = -(c * factor) if s is None else s - c * factor
        if v:
            p[mm] = v
        else:
            del p[mm]


def poly_divmod(f: Poly, divisors: Sequence[Poly], order: str = "grevlex"
                ) -> tuple[list[Poly], Poly]:
    """Multivariate division: ``f = sum(q_i * d_i) + r``.

    No term of ``r`` is divisible by the leading monomial of any divisor.
    """
    divisors = list(divisors)
    if divisors:
        _same_space([f] + divisors)
    if any(d.is_zero() for d in divisors):
        raise ValueError("divisors must be nonzero")
    space = f.space
    key = order_key(order)
    leads = [d.leading_term(order) for d in divisors]
    inv = [c.inverse() for _, c in leads]
    quot: list[_Terms] = [dict() for _ in divisors]
    p = dict(f.terms)
    rem: _Terms = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for k, (lm, _) in enumerate(leads):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c * inv[k]
                q = quot[k]
                s = q.get(shift)
                q[shift] = factor if s is None else s + factor
                _sub_scaled(p, divisors[k].terms, shift, factor)
                break
        else:
            rem[m] = c
            del p[m]
    quotients = [Poly(space, {m: c for m, c in q.items() if c}) for q in quot]
    return quotients, Poly(space, rem)


def _normal_form(p: _Terms, basis: list, key) -> _Terms:
    """Full reduction of ``p`` against monic ``basis`` entries ``(lm, terms)``."""
    p = dict(p)
    rem: _Terms = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if mono_divides(lm, m):
                _sub_scaled(p, g, mono_div(m, lm), c)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(terms: _Terms, key) -> tuple[Monomial, _Terms]:
    lm = max(terms, key=key)
    inv = terms[lm].inverse()
    return lm, {m: c * inv for m, c in terms.items()}


# -- Buchberger ---------------------------------------------------------------


def buchberger(ideal: Ideal) -> GroebnerBasis:
    """Reduced Gröbner basis (monic, pairwise irreducible).

    Pairs are processed smallest-lcm first; the product and chain criteria
    discard pairs that are known to reduce to zero.
    """
    order = ideal.order
    key = order_key(order)
    space = ideal.space
    term_cap = get_limits().term_cap
    if not ideal.generators:
        return GroebnerBasis(ideal, [], order)

    basis: list[tuple[Monomial, _Terms]] = []
    pairs: set[tuple[int, int]] = set()
    total_terms = 0

    def add(terms: _Terms):
        nonlocal total_terms
        lm, g = _monic(terms, key)
        k = len(basis)
        basis.append((lm, g))
        total_terms += len(g)
        if total_terms > term_cap:
            raise ResourceLimitError(f"Gröbner basis exceeded term cap ({term_cap})")
        for j in range(k):
            pairs.add((j, k))

    for g in ideal.generators:
        r = _normal_form(g.terms, basis, key)
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij))
        pairs.discard((i, j))
        lmi, gi = basis[i]
        lmj, gj = basis[j]
        lcm = mono_lcm(lmi, lmj)
        if lcm == mono_mul(lmi, lmj):
            continue
        chain = False
        for k, (lmk, _) in enumerate(basis):
            if k in (i, j) or not mono_divides(lmk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s: _Terms = {}
        _sub_scaled(s, gi, mono_div(lcm, lmi), GaussianRational(-1))
        _sub_scaled(s, gj, mono_div(lcm, lmj), GaussianRational(1))
        r = _normal_form(s, basis, key)
        if r:
            add(r)

    # minimalize then interreduce
    lms = [lm for lm, _ in basis]
    keep = []
    for k, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if j == k or not mono_divides(other, lm):
                continue
            if other != lm or j < k:
                dominated = True
                break
        if not dominated:
            keep.append(basis[k])
    reduced = []
    for k, (lm, g) in enumerate(keep):
        others = [b for j, b in enumerate(keep) if j != k]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _normal_form(tail, others, key)
        tail[lm] = g[lm]
        reduced.append((lm, tail))
    reduced.sort(key=lambda b: key(b[0]), reverse=True)
    polys = [Poly._make(space, g) for _, g in reduced]
    return GroebnerBasis(ideal, polys, order)


def ideal_member(f: Poly, ideal: Ideal) -> bool:
    if f.space != ideal.space:
        raise SpaceMismatchError(f"{f.space!r} vs {ideal.space!r}")
    if f.is_zero():
        return True
    if ideal.is_zero():
        return False
    return ideal.groebner().reduce(f).is_zero()


# -- dimension ----------------------------------------------------------------


def max_independent_set(space: VarSpace, monomials: Iterable[Monomial]) -> tuple[str, ...]:
    """Largest variable set containing the support of none of ``monomials``."""
    n = len(space)
    supports = {sum(1 << k for k, e in enumerate(m) if e) for m in monomials}
    full = (1 << n) - 1
    best = 0
    best_size = -1
    # search by decreasing size; first hit is maximum
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            mask = sum(1 << k for k in combo)
            if all(s & (full ^ mask) for s in supports):
                best, best_size = mask, size
                break
        if best_size >= 0:
            break
    return tuple(space.names[k] for k in range(n) if best >> k & 1)


def ideal_dimension(ideal: Ideal) -> int:
    """Krull dimension of the zero set over C.

    Equals the size of a maximal independent variable set of the initial
    ideal under a degree-compatible order.
    """
    if ideal.is_zero():
        return len(ideal.space)
    work = ideal if ideal.order == "grevlex" else Ideal(ideal.generators, "grevlex")
    gb = work.groebner()
    if gb.is_unit_ideal():
        raise EmptyVarietyError("1 is in the ideal; the zero set is empty")
    return len(max_independent_set(ideal.space, gb.leading_monomials()))


# -- truncated quotients -----------------------------------------------------


def monomials_below(n: int, bound: int) -> list[Monomial]:
    """All exponent tuples in ``n`` variables of total degree < ``bound``,
    listed by increasing degree."""
    out: list[Monomial] = []
    layer = [(0,) * n]
    for _ in range(bound):
        out.extend(sorted(layer, key=order_key("grevlex"), reverse=True))
        nxt = set()
        for m in layer:
            for k in range(n):
                nxt.add(m[:k] + (m[k] + 1,) + m[k + 1:])
        layer = list(nxt)
    return out


class _Echelon:
    """Incremental sparse row echelon form; pivots are lowest column ids."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def insert(self, row: dict) -> int | None:
        row = dict(row)
        pivots = self.pivots
        while row:
            p = min(row)
            piv = pivots.get(p)
            if piv is None:
                inv = row[p].inverse()
                pivots[p] = {k: v * inv for k, v in row.items()}
                return p
            c = row[p]
            for k, v in piv.items():
                s = row.get(k)
                nv = -(v * c) if s is None else s - v * c
                if nv:
                    row[k] = nv
                else:
                    del row[k]
        return None


def _span_rows(ideal: Ideal, bound: int, column: dict, monos: list[Monomial]):
    by_degree: dict[int, list[Monomial]] = {}
    for m in monos:
        by_degree.setdefault(sum(m), []).append(m)
    for g in ideal.generators:
        g = g.truncate(bound)
        if g.is_zero():
            continue
        low = g.order()
        for d in range(bound - low):
            for shift in by_degree.get(d, ()):
                row = {}
                for m, c in g.terms.items():
                    mm = mono_mul(m, shift)
                    if sum(mm) < bound:
                        row[column[mm]] = c
                if row:
                    yield row


def _truncated_quotient(numerator: Ideal, denominator: Ideal, bound: int):
    if bound < 1:
        raise ValueError("degree bound must be >= 1")
    check_degree(bound)
    if numerator.space != denominator.space:
        raise SpaceMismatchError(f"{numerator.space!r} vs {denominator.space!r}")
    n = len(numerator.space)
    monos = monomials_below(n, bound)
    column = {m: k for k, m in enumerate(monos)}
    degree_of = [sum(m) for m in monos]

    ech = _Echelon()
    for row in _span_rows(denominator, bound, column, monos):
        ech.insert(row)
    den_pivots = set(ech.pivots)
    for row in _span_rows(numerator, bound, column, monos):
        ech.insert(row)
    new_pivots = sorted(set(ech.pivots) - den_pivots)
    count = [0] * (bound + 1)
    for p in new_pivots:
        count[degree_of[p] + 1] += 1
    dims = []
    acc = 0
    for N in range(1, bound + 1):
        acc += count[N]
        dims.append(acc)
    return dims, [monos[p] for p in new_pivots]


def truncated_quotient_dims(numerator: Ideal, denominator: Ideal, bound: int) -> list[int]:
    """``[d_1, ..., d_bound]`` with ``d_N = dim (num + den + m^N) / (den + m^N)``.

    One elimination at ``bound`` serves every ``N <= bound``: columns are
    ordered by increasing degree, so the pivots of degree < N describe the
    projection modulo ``m^N``.
    """
    return _truncated_quotient(numerator, denominator, bound)[0]


def truncated_quotient_basis(numerator: Ideal, denominator: Ideal, bound: int) -> list[Poly]:
    """Monomials whose classes form a basis of the quotient modulo ``m^bound``."""
    _, monos = _truncated_quotient(numerator, denominator, bound)
    return [Poly.monomial(numerator.space, m) for m in monos]


def truncated_quotient_dim(numerator: Ideal, denominator: Ideal, degree_bound: int) -> int:
    """``dim_C (numerator + m^N) / (denominator + m^N)`` for ``N = degree_bound``.

    When the denominator is not contained in the numerator the numerator is
    replaced by the sum of both ideals.
    """
    return _truncated_quotient(numerator, denominator, degree_bound)[0][-1]
