"""Exterior forms with polynomial coefficients and the Wirtinger operators.

A form is stored as ``{sorted index tuple: Poly}``; indices refer to
``space.names`` and every variable (conjugated or not) has its own
covector ``dv``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .errors import InconsistentSplitError, SpaceMismatchError
from .gaussian import I, GaussianRational
from .hermitian import ComplexifiedPoly, HermitianPoly
from .poly import Poly, VarSpace


def _sort_sign(idx: Iterable[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the sorting permutation; None if an index repeats."""
    idx = list(idx)
    sign = 1
    for a in range(len(idx)):
        for b in range(len(idx) - 1 - a):
            if idx[b] > idx[b + 1]:
                idx[b], idx[b + 1] = idx[b + 1], idx[b]
                sign = -sign
            elif idx[b] == idx[b + 1]:
                return None
    if len(set(idx)) != len(idx):
        return None
    return sign, tuple(idx)


class DiffForm:
    """Homogeneous exterior form of fixed degree."""

    __slots__ = ("space", "degree", "terms")

    def __init__(self, space: VarSpace, degree: int, terms: Mapping[tuple, Poly] | None = None):
        self.space = space
        self.degree = degree
        clean: dict[tuple[int, ...], Poly] = {}
        for idx, c in (terms or {}).items():
            if len(idx) != degree:
                raise ValueError(f"basis tuple {idx} does not have degree {degree}")
            if c.space != space:
                raise SpaceMismatchError(f"{c.space!r} vs {space!r}")
            res = _sort_sign(idx)
            if res is None or not c:
                continue
            sign, key = res
            c = c if sign > 0 else -c
            prev = clean.get(key)
            c = c if prev is None else prev + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def zero(cls, space: VarSpace, degree: int) -> "DiffForm":
        return cls(space, degree)

    @classmethod
    def function(cls, f: Poly) -> "DiffForm":
        return cls(f.space, 0, {(): f})

    @classmethod
    def basis(cls, space: VarSpace, *names: str) -> "DiffForm":
        """``d names[0] ^ d names[1] ^ ...`` with coefficient 1."""
        idx = tuple(space.index(n) for n in names)
        return cls(space, len(idx), {idx: Poly.const(space, 1)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *names: str) -> Poly:
        idx = tuple(self.space.index(n) for n in names)
        res = _sort_sign(idx)
        if res is None:
            return Poly.zero(self.space)
        sign, key = res
        c = self.terms.get(key, Poly.zero(self.space))
        return c if sign > 0 else -c

    def coefficients(self) -> list[Poly]:
        return [self.terms[k] for k in sorted(self.terms)]

    def _check(self, other: "DiffForm"):
        if other.space != self.space:
            raise SpaceMismatchError(f"{self.space!r} vs {other.space!r}")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError("cannot add forms of different degree")
        deg = self.degree if self.terms else other.degree
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            terms[k] = c if s is None else s + c
        return DiffForm(self.space, deg, terms)

    def __neg__(self):
        return DiffForm(self.space, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffForm":
        """Multiply every coefficient by a scalar or a polynomial."""
        if isinstance(c, Poly):
            if c.space != self.space:
                raise SpaceMismatchError(f"{c.space!r} vs {self.space!r}")
            return DiffForm(self.space, self.degree, {k: v * c for k, v in self.terms.items()})
        return DiffForm(self.space, self.degree, {k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        out: dict[tuple, Poly] = {}
        for ka, ca in self.terms.items():
            sa = set(ka)
            for kb, cb in other.terms.items():
                if sa.intersection(kb):
                    continue
                res = _sort_sign(ka + kb)
                sign, key = res
                c = ca * cb
                if sign < 0:
                    c = -c
                s = out.get(key)
                out[key] = c if s is None else s + c
        return DiffForm(self.space, self.degree + other.degree, out)

    __xor__ = wedge

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.space != other.space:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.terms.items())))

    def map_coeffs(self, fn) -> "DiffForm":
        return DiffForm(self.space, self.degree, {k: fn(c) for k, c in self.terms.items()})

    def __repr__(self):
        return f"DiffForm({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            basis = "^".join("d" + self.space.names[k] for k in key)
            if not basis:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{basis}")
        return " + ".join(parts)


def _partials(f: Poly, names: Iterable[str]) -> DiffForm:
    sp = f.space
    return DiffForm(sp, 1, {(sp.index(n),): f.diff(n) for n in names})


def _apply(form: DiffForm, names: tuple[str, ...]) -> DiffForm:
    """Exterior derivative restricted to the variables ``names``."""
    sp = form.space
    out = DiffForm.zero(sp, form.degree + 1)
    for key, c in form.terms.items():
        basis = DiffForm(sp, form.degree, {key: Poly.const(sp, 1)})
        out = out + _partials(c, names).wedge(basis)
    return out


def _as_form(obj) -> DiffForm:
    if isinstance(obj, DiffForm):
        return obj
    if isinstance(obj, HermitianPoly):
        obj = obj.poly
    return DiffForm.function(obj)


def d_holo(F) -> DiffForm:
    """∂: differentiate in the unconjugated variables only."""
    form = _as_form(F)
    return _apply(form, form.space.holomorphic)


def d_anti(F) -> DiffForm:
    """∂̄: differentiate in the conjugated variables only."""
    form = _as_form(F)
    return _apply(form, form.space.conjugated)


def d_full(F) -> DiffForm:
    form = _as_form(F)
    return _apply(form, form.space.names)


def d_vars(F, names: Iterable[str]) -> DiffForm:
    form = _as_form(F)
    return _apply(form, tuple(names))


def levi_form(F: HermitianPoly) -> DiffForm:
    """η = i(∂F - ∂̄F)."""
    return (d_holo(F) - d_anti(F)).scale(I)


def levi_form_complexified(Fc: ComplexifiedPoly) -> DiffForm:
    """η_C = i[(∂_x + ∂_y)F_C - (∂_z + ∂_w)F_C]."""
    a = d_vars(Fc.poly, Fc.holo_side)
    b = d_vars(Fc.poly, Fc.partner_side)
    return (a - b).scale(I)


def mirror_form(form: DiffForm) -> DiffForm:
    """Complex conjugate of a form on a paired space: swap every variable and
    covector with its partner and conjugate coefficients."""
    sp = form.space
    perm = [sp.index(sp.partner(n)) if sp.partner(n) else k for k, n in enumerate(sp.names)]
    return DiffForm(sp, form.degree,
                    {tuple(perm[k] for k in key): c.mirror() for key, c in form.terms.items()})


class Split(NamedTuple):
    """F_C = P(x, y)/2 + P(z, w)/2 + H_C; ``P`` lives on the holomorphic
    coordinates, ``H`` in the doubled space."""

    P: Poly
    H: Poly


class AlphaBeta(NamedTuple):
    alpha: DiffForm
    beta: DiffForm
    theta1: DiffForm
    theta2: DiffForm


def split_head(Fc: ComplexifiedPoly, P: Poly) -> Poly:
    """P(x, y)/2 + P(z, w)/2 written in the doubled space of ``Fc``."""
    sp = Fc.space
    half = GaussianRational(1, 0) / 2
    p1 = P.rename(sp)
    p2 = P.rename(sp, dict(Fc.partner))
    return (p1 + p2).scale(half)


def check_split(Fc: ComplexifiedPoly, split: Split) -> None:
    head = split_head(Fc, split.P)
    H = split.H if split.H.space == Fc.space else split.H.rename(Fc.space)
    if head + H != Fc.poly:
        raise InconsistentSplitError("P/2 + P(z,w)/2 + H_C does not equal F_C")


def alpha_beta(Fc: ComplexifiedPoly, split: Split | None = None) -> AlphaBeta:
    """dF_C = α + β with α in (dx, dy) and β in (dz, dw).

    With a split, θ₁ and θ₂ are the (dx, dy) and (dz, dw) parts of dH_C;
    without one they are zero.
    """
    sp = Fc.space
    alpha = d_vars(Fc.poly, Fc.holo_side)
    beta = d_vars(Fc.poly, Fc.partner_side)
    if split is None:
        zero = DiffForm.zero(sp, 1)
        return AlphaBeta(alpha, beta, zero, zero)
    check_split(Fc, split)
    H = split.H if split.H.space == sp else split.H.rename(sp)
    return AlphaBeta(alpha, beta, d_vars(H, Fc.holo_side), d_vars(H, Fc.partner_side))
