"""Real-valued polynomials F(z, z̄) and their complexifications."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DegenerateInputError, NotRealValuedError, PreconditionError
from .exprio import complexified_names
from .gaussian import I, ONE, UNITS, GaussianRational
from .poly import Poly, VarSpace


def is_real(p: Poly) -> bool:
    """Reality condition: swapping conjugate pairs and conjugating
    coefficients leaves ``p`` unchanged."""
    return p.mirror() == p


def _violation(p: Poly):
    mir = p.mirror()
    sp = p.space
    for m in sorted(set(p.terms) | set(mir.terms)):
        if p.coeff(m) != mir.coeff(m):
            perm = [sp.index(sp.partner(n)) if sp.partner(n) else k
                    for k, n in enumerate(sp.names)]
            mm = [0] * len(m)
            for k, x in enumerate(m):
                mm[perm[k]] = x
            return m, p.coeff(m), tuple(mm), p.coeff(tuple(mm))
    return None


@dataclass(frozen=True)
class HermitianPoly:
    """A real-valued polynomial in a conjugate-paired space.

    ``normalization`` is the unit applied to the user's input to make it
    real; the zero set is that of the input.
    """

    poly: Poly
    normalization: GaussianRational = ONE

    def __post_init__(self):
        if not self.poly.space.is_paired:
            raise PreconditionError("HermitianPoly needs a conjugate-paired variable space")
        if not is_real(self.poly):
            raise NotRealValuedError(_describe(self.poly))

    @property
    def space(self) -> VarSpace:
        return self.poly.space

    @property
    def coords(self) -> tuple[str, ...]:
        return self.space.holomorphic

    def __str__(self):
        return str(self.poly)

    def evaluate(self, point) -> GaussianRational:
        """Value at holomorphic coordinates ``point`` (sequence or mapping)."""
        if not isinstance(point, Mapping):
            point = dict(zip(self.coords, point))
        values = {}
        for c in self.coords:
            v = GaussianRational.coerce(point[c])
            values[c] = v
            values[self.space.partner(c)] = v.conjugate()
        return self.poly.evaluate(values)


def _describe(p: Poly) -> str:
    v = _violation(p)
    if v is None:
        return "polynomial is real"
    m, c, mm, cc = v
    sp = p.space
    from .exprio import _monomial_text
    a = _monomial_text(sp, m) or "1"
    b = _monomial_text(sp, mm) or "1"
    return (f"not real-valued: coefficient {c} of {a} is not the conjugate of "
            f"coefficient {cc} of {b}")


def make_hermitian(p: Poly) -> HermitianPoly:
    """Accept ``p`` or the first unit multiple ``u*p`` that is real."""
    if not p.space.is_paired:
        raise PreconditionError("make_hermitian needs a conjugate-paired variable space")
    if p.is_zero():
        raise DegenerateInputError("the zero polynomial does not define a hypersurface")
    for u in UNITS:
        q = p.scale(u)
        if is_real(q):
            return HermitianPoly(q, u)
    raise NotRealValuedError(_describe(p))


@dataclass(frozen=True)
class ComplexifiedPoly:
    """F_C in the doubled space; ``partner`` maps each holomorphic coordinate
    to its independent complexified partner (x -> z, y_j -> w_j)."""

    poly: Poly
    partner: Mapping[str, str]
    origin: HermitianPoly | None = field(default=None, compare=False)

    @property
    def space(self) -> VarSpace:
        return self.poly.space

    @property
    def holo_side(self) -> tuple[str, ...]:
        return tuple(self.partner)

    @property
    def partner_side(self) -> tuple[str, ...]:
        return tuple(self.partner[c] for c in self.partner)

    def __str__(self):
        return str(self.poly)

    def swapped(self) -> Poly:
        """F_C with the two sides exchanged and coefficients conjugated."""
        mapping = dict(self.partner)
        mapping.update({b: a for a, b in self.partner.items()})
        return self.poly.rename(self.space, mapping).conj_coeffs()

    def is_real(self) -> bool:
        return self.swapped() == self.poly


def doubled_space(coords) -> tuple[VarSpace, dict[str, str]]:
    coords = tuple(coords)
    partner = complexified_names(coords)
    return VarSpace(coords + tuple(partner[c] for c in coords)), partner


def complexify(F: HermitianPoly) -> ComplexifiedPoly:
    """Rename each conjugated variable to its independent partner."""
    coords = F.coords
    space, partner = doubled_space(coords)
    mapping = {F.space.partner(c): partner[c] for c in coords}
    return ComplexifiedPoly(F.poly.rename(space, mapping), partner, F)


def complexified(poly: Poly, coords=None) -> ComplexifiedPoly:
    """Wrap a polynomial already written in the doubled space."""
    if coords is None:
        coords = poly.space.names[: len(poly.space) // 2]
    space, partner = doubled_space(coords)
    if poly.space != space:
        poly = poly.rename(space)
    return ComplexifiedPoly(poly, partner)


def diagonal_restrict(Fc: ComplexifiedPoly) -> HermitianPoly:
    """Set each partner variable to the conjugate of its coordinate."""
    coords = Fc.holo_side
    paired = VarSpace.paired(coords)
    mapping = {Fc.partner[c]: paired.partner(c) for c in coords}
    poly = Fc.poly.rename(paired, mapping)
    if Fc.origin is not None:
        return HermitianPoly(poly, Fc.origin.normalization)
    return HermitianPoly(poly)


def re_part(h: Poly, coords=None) -> HermitianPoly:
    """Re(h) = h/2 + conj(h)/2 for a holomorphic polynomial ``h``."""
    sp = h.space
    if sp.is_paired:
        used = set(h.variables()) & set(sp.conjugated)
        if used:
            raise PreconditionError(f"re_part needs a holomorphic polynomial; uses {sorted(used)}")
        coords = sp.holomorphic
    elif coords is None:
        coords = sp.names
    paired = VarSpace.paired(coords)
    hp = h.rename(paired)
    half = GaussianRational(1, 0) / 2
    return HermitianPoly((hp + hp.mirror()).scale(half))


def im_part(h: Poly, coords=None) -> HermitianPoly:
    """Im(h) = (h - conj(h)) / 2i."""
    return re_part(h.scale(-I), coords)
