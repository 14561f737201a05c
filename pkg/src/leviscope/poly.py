"""Variable spaces, monomial orders and sparse multivariate polynomials.

A :class:`Poly` maps exponent tuples (aligned with ``space.names``) to
nonzero :class:`GaussianRational` coefficients. Polynomials are immutable
values; every operation returns a new object.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .config import get_limits
from .errors import ResourceLimitError, SpaceMismatchError
from .gaussian import ONE, ZERO, GaussianRational

Monomial = tuple  # exponent tuple aligned with VarSpace.names

CONJ_PREFIX = "~"


class VarSpace:
    """Ordered variable names with an optional conjugation pairing.

    ``pairs`` lists ``(holomorphic, conjugate)`` name pairs; the pairing is a
    fixed-point-free involution on the paired names.
    """

    __slots__ = ("names", "pairs", "_index", "_partner", "_hash")

    def __init__(self, names: Iterable[str], pairs: Iterable[tuple[str, str]] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        pairs = tuple(tuple(p) for p in pairs)
        partner: dict[str, str] = {}
        for a, b in pairs:
            if a == b or a in partner or b in partner:
                raise ValueError(f"invalid conjugation pairing {pairs}")
            if a not in names or b not in names:
                raise ValueError(f"paired variable not declared: {a}, {b}")
            partner[a] = b
            partner[b] = a
        self.names = names
        self.pairs = pairs
        self._index = {n: k for k, n in enumerate(names)}
        self._partner = partner
        self._hash = hash((names, pairs))

    @classmethod
    def paired(cls, coords: Iterable[str]) -> "VarSpace":
        """Holomorphic ``coords`` followed by their conjugates ``~c``."""
        coords = tuple(coords)
        conj = tuple(CONJ_PREFIX + c for c in coords)
        return cls(coords + conj, zip(coords, conj))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (isinstance(other, VarSpace) and self.names == other.names
                and self.pairs == other.pairs)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.pairs:
            return f"VarSpace({list(self.names)}, paired)"
        return f"VarSpace({list(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in {self!r}") from None

    def partner(self, name: str) -> str | None:
        return self._partner.get(name)

    @property
    def is_paired(self) -> bool:
        return bool(self.pairs)

    @property
    def holomorphic(self) -> tuple[str, ...]:
        """Unconjugated variables (every variable of an unpaired space)."""
        conj = {b for _, b in self.pairs}
        return tuple(n for n in self.names if n not in conj)

    @property
    def conjugated(self) -> tuple[str, ...]:
        return tuple(b for _, b in self.pairs)

    def monomial(self, exps: Mapping[str, int]) -> Monomial:
        e = [0] * len(self.names)
        for name, k in exps.items():
            if k < 0:
                raise ValueError("exponents must be nonnegative")
            e[self.index(name)] += k
        return tuple(e)

    def monomial_map(self, mono: Monomial) -> dict[str, int]:
        """Sparse ``{name: exponent}`` view, zero exponents omitted."""
        return {n: k for n, k in zip(self.names, mono) if k}


# -- monomial orders -------------------------------------------------------


def _grevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex(m):
    return m


def _grlex(m):
    return (sum(m), m)


def _local(m):
    # lowest total degree leads; grevlex breaks ties inside a degree
    return (-sum(m), tuple(-e for e in reversed(m)))


ORDERS: dict[str, Callable[[Monomial], tuple]] = {
    "grevlex": _grevlex,
    "lex": _lex,
    "grlex": _grlex,
    "local": _local,
}


def order_key(order: str) -> Callable[[Monomial], tuple]:
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; choose from {sorted(ORDERS)}") from None


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


# -- polynomials -------------------------------------------------------------


def _coerce_coeff(c) -> GaussianRational:
    return c if isinstance(c, GaussianRational) else GaussianRational.coerce(c)


class Poly:
    """Sparse polynomial over the Gaussian rationals."""

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: VarSpace, terms: Mapping[Monomial, object] | None = None):
        self.space = space
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            n = len(space)
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(k < 0 for k in m):
                    raise ValueError(f"bad exponent tuple {m} for {space!r}")
                c = _coerce_coeff(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, space: VarSpace, terms: dict) -> "Poly":
        """Trusted constructor: ``terms`` is already clean and owned."""
        p = object.__new__(cls)
        p.space = space
        p.terms = terms
        p._hash = None
        if len(terms) > get_limits().term_cap:
            raise ResourceLimitError(f"polynomial with {len(terms)} terms exceeds term cap")
        return p

    @classmethod
    def zero(cls, space: VarSpace) -> "Poly":
        return cls._make(space, {})

    @classmethod
    def const(cls, space: VarSpace, c=1) -> "Poly":
        c = _coerce_coeff(c)
        return cls._make(space, {(0,) * len(space): c} if c else {})

    @classmethod
    def var(cls, space: VarSpace, name: str) -> "Poly":
        e = [0] * len(space)
        e[space.index(name)] = 1
        return cls._make(space, {tuple(e): ONE})

    @classmethod
    def monomial(cls, space: VarSpace, exps: Mapping[str, int] | Monomial, c=1) -> "Poly":
        m = space.monomial(exps) if isinstance(exps, Mapping) else tuple(exps)
        return cls(space, {m: c})

    # -- basic queries ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * len(self.space), ZERO)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the m-adic order); -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        k = self.space.index(name)
        return max((m[k] for m in self.terms), default=-1)

    def variables(self) -> tuple[str, ...]:
        used = [False] * len(self.space)
        for m in self.terms:
            for k, e in enumerate(m):
                if e:
                    used[k] = True
        return tuple(n for n, u in zip(self.space.names, used) if u)

    def leading_term(self, order: str = "grevlex") -> tuple[Monomial, GaussianRational]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order_key(order))
        return m, self.terms[m]

    def sorted_terms(self, order: str = "grevlex") -> list[tuple[Monomial, GaussianRational]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def coeff(self, mono: Monomial | Mapping[str, int]) -> GaussianRational:
        if isinstance(mono, Mapping):
            mono = self.space.monomial(mono)
        return self.terms.get(tuple(mono), ZERO)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if other.space != self.space:
            raise SpaceMismatchError(f"{self.space!r} vs {other.space!r}")

    def _lift(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly.const(self.space, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._make(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Poly":
        c = _coerce_coeff(c)
        if not c:
            return Poly.zero(self.space)
        return Poly._make(self.space, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c: GaussianRational) -> "Poly":
        if not c:
            return Poly.zero(self.space)
        return Poly._make(self.space, {mono_mul(m, mono): a * c for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
        else:
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if len(self.terms) * len(other.terms) > get_limits().term_cap:
            raise ResourceLimitError("product would exceed term cap")
        out: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                out[m] = c if s is None else s + c
        return Poly._make(self.space, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise TypeError("division only by nonzero constants")
            other = other.constant_term()
        return self.scale(_coerce_coeff(other).inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(self.space, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self.terms == Poly.const(self.space, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def diff(self, name: str) -> "Poly":
        k = self.space.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                mm = m[:k] + (e - 1,) + m[k + 1:]
                out[mm] = c * e
        return Poly._make(self.space, out)

    def conj_coeffs(self) -> "Poly":
        return Poly._make(self.space, {m: c.conjugate() for m, c in self.terms.items()})

    def map_coeffs(self, fn: Callable[[GaussianRational], GaussianRational]) -> "Poly":
        return Poly(self.space, {m: fn(c) for m, c in self.terms.items()})

    def truncate(self, bound: int) -> "Poly":
        """Drop every term of total degree >= ``bound``."""
        return Poly._make(self.space, {m: c for m, c in self.terms.items() if sum(m) < bound})

    def rename(self, target: VarSpace, mapping: Mapping[str, str] | None = None) -> "Poly":
        """Move into ``target`` sending variable ``v`` to ``mapping.get(v, v)``.

        Variables of ``self`` that do not occur in the result must have zero
        exponent everywhere.
        """
        mapping = mapping or {}
        pos = []
        for n in self.space.names:
            t = mapping.get(n, n)
            pos.append(target.index(t) if t in target else None)
        out: dict[Monomial, GaussianRational] = {}
        width = len(target)
        for m, c in self.terms.items():
            e = [0] * width
            for k, x in enumerate(m):
                if x:
                    if pos[k] is None:
                        raise SpaceMismatchError(
                            f"variable {self.space.names[k]!r} has no image in {target!r}")
                    e[pos[k]] += x
            mm = tuple(e)
            s = out.get(mm)
            out[mm] = c if s is None else s + c
        return Poly._make(target, {m: c for m, c in out.items() if c})

    def compose(self, target: VarSpace, images: Mapping[str, "Poly"]) -> "Poly":
        """Ring map: substitute ``images[v]`` (polys in ``target``) for each variable.

        Variables without an image are sent to the same-named variable of
        ``target``.
        """
        imgs = []
        for n in self.space.names:
            if n in images:
                p = images[n]
                if p.space != target:
                    raise SpaceMismatchError(f"image of {n!r} is not in {target!r}")
                imgs.append(p)
            else:
                imgs.append(Poly.var(target, n) if n in target else None)
        powers: list[dict[int, Poly]] = [dict() for _ in imgs]

        def power(k: int, e: int) -> Poly:
            cache = powers[k]
            if e not in cache:
                if imgs[k] is None:
                    raise SpaceMismatchError(
                        f"variable {self.space.names[k]!r} has no image in {target!r}")
                cache[e] = imgs[k] ** e
            return cache[e]

        acc: dict[Monomial, GaussianRational] = {}
        for m, c in self.terms.items():
            t = Poly.const(target, c)
            for k, e in enumerate(m):
                if e:
                    t = t * power(k, e)
            for mm, cc in t.terms.items():
                s = acc.get(mm)
                acc[mm] = cc if s is None else s + cc
        return Poly._make(target, {m: c for m, c in acc.items() if c})

    def subs(self, values: Mapping[str, object]) -> "Poly":
        """Partial evaluation at scalar values; the space is unchanged."""
        idx = {self.space.index(n): _coerce_coeff(v) for n, v in values.items()}
        out: dict[Monomial, GaussianRational] = {}
        for m, c in self.terms.items():
            e = list(m)
            for k, v in idx.items():
                if e[k]:
                    c = c * v ** e[k]
                    e[k] = 0
            if not c:
                continue
            mm = tuple(e)
            s = out.get(mm)
            out[mm] = c if s is None else s + c
        return Poly._make(self.space, {m: c for m, c in out.items() if c})

    def evaluate(self, point: Mapping[str, object]) -> GaussianRational:
        missing = set(self.variables()) - set(point)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        return self.subs({n: point[n] for n in self.variables()}).constant_term()

    def mirror(self) -> "Poly":
        """Swap each paired variable with its partner and conjugate coefficients."""
        sp = self.space
        perm = [sp.index(sp.partner(n)) if sp.partner(n) else k for k, n in enumerate(sp.names)]
        out = {}
        for m, c in self.terms.items():
            e = [0] * len(m)
            for k, x in enumerate(m):
                e[perm[k]] = x
            out[tuple(e)] = c.conjugate()
        return Poly._make(sp, out)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        from .exprio import print_poly
        return print_poly(self)
