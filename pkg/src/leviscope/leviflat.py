"""Levi-flatness, singular sets and Segre varieties of real hypersurfaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInputError, PreconditionError
from .forms import DiffForm, Split, alpha_beta, d_anti, d_full, d_holo
from .gaussian import GaussianRational
from .groebner import Ideal, ideal_member, poly_divmod
from .hermitian import ComplexifiedPoly, HermitianPoly, complexify
from .poly import Poly


@dataclass(frozen=True)
class LeviFlatReport:
    is_levi_flat: bool
    witness: Poly | None
    obstruction_degree: int
    # F is assumed irreducible; this is never verified
    assumes_irreducible: bool = True

    def __bool__(self):
        return self.is_levi_flat


def obstruction_form(F: HermitianPoly) -> DiffForm:
    """Ω = (∂F - ∂̄F) ∧ ∂∂̄F ∧ dF, a 4-form."""
    p = F.poly
    ddbar = d_holo(d_anti(p))
    return (d_holo(p) - d_anti(p)).wedge(ddbar).wedge(d_full(p))


def is_levi_flat(F: HermitianPoly) -> LeviFlatReport:
    """Decide whether Ω vanishes along {F = 0}, i.e. every coefficient of Ω
    is divisible by F.

    Wedging with dF encodes the restriction to the smooth part of the
    hypersurface. Divisibility is equivalent to vanishing there only when F
    is irreducible, which is assumed and not checked.

    ``obstruction_degree`` is the largest total degree among the
    coefficients of Ω (-1 when Ω is identically zero).
    """
    if F.poly.is_constant():
        raise DegenerateInputError("F is constant; {F = 0} is not a hypersurface")
    omega = obstruction_form(F)
    degree = max((c.total_degree() for c in omega.terms.values()), default=-1)
    for key in sorted(omega.terms):
        c = omega.terms[key]
        _, r = poly_divmod(c, [F.poly])
        if not r.is_zero():
            return LeviFlatReport(False, c, degree)
    return LeviFlatReport(True, None, degree)


def sing_ideal(F: HermitianPoly) -> Ideal:
    """(F_C, ∂F_C/∂v for every v) in the doubled space; presents Sing(M_C)."""
    Fc = complexify(F)
    p = Fc.poly
    return Ideal([p] + [p.diff(v) for v in p.space.names], space=p.space)


def algebraic_dimension(F: HermitianPoly) -> int:
    """Complex dimension of Sing(M_C)."""
    return sing_ideal(F).dimension()


@dataclass(frozen=True)
class EtaComponents:
    X1: Ideal
    X2: Ideal
    # open conditions defining M1 and M2, not imposed on the ideals
    M1_nonvanishing: tuple[Poly, ...]
    M2_nonvanishing: tuple[Poly, ...]


def sing_eta_components(Fc: ComplexifiedPoly, split: Split | None = None) -> EtaComponents:
    """X₁ = (F_C, coefficients of α) and X₂ = (F_C, coefficients of β)."""
    ab = alpha_beta(Fc, split)
    sp = Fc.space
    a_coeffs = [ab.alpha.coefficient(v) for v in Fc.holo_side]
    b_coeffs = [ab.beta.coefficient(v) for v in Fc.partner_side]
    X1 = Ideal([Fc.poly] + a_coeffs, space=sp)
    X2 = Ideal([Fc.poly] + b_coeffs, space=sp)
    return EtaComponents(X1, X2, tuple(c for c in b_coeffs if c), tuple(c for c in a_coeffs if c))


@dataclass(frozen=True)
class SegreReport:
    point: tuple[GaussianRational, ...]
    variety: Poly
    degenerate: bool


def segre_variety(F: HermitianPoly, point: Sequence) -> SegreReport:
    """Q_p = {z : F_C(z, p̄) = 0}, as a polynomial on the holomorphic coordinates."""
    coords = F.coords
    if len(point) != len(coords):
        raise PreconditionError(f"point has {len(point)} coordinates, space has {len(coords)}")
    p = tuple(GaussianRational.coerce(c) for c in point)
    values = {F.space.partner(c): v.conjugate() for c, v in zip(coords, p)}
    from .poly import VarSpace
    holo = VarSpace(coords)
    variety = F.poly.subs(values).rename(holo)
    return SegreReport(p, variety, variety.is_zero())


def _sing_generators(F: HermitianPoly) -> list[tuple[str, Poly]]:
    p = complexify(F).poly
    return [("F_C", p)] + [(f"dF_C/d{v}", p.diff(v)) for v in p.space.names]


def degenerate_locus_scan(F: HermitianPoly, sample: Iterable[Sequence]) -> dict:
    """Segre degeneracy at each sample point of Sing(M)."""
    Fc = complexify(F)
    gens = _sing_generators(F)
    coords = F.coords
    out = {}
    for point in sample:
        p = tuple(GaussianRational.coerce(c) for c in point)
        if len(p) != len(coords):
            raise PreconditionError(f"point has {len(p)} coordinates, space has {len(coords)}")
        values = {}
        for c, v in zip(coords, p):
            values[c] = v
            values[Fc.partner[c]] = v.conjugate()
        for label, g in gens:
            if g.evaluate({k: values[k] for k in g.variables()}):
                raise PreconditionError(
                    f"point {tuple(str(c) for c in p)} is not in Sing(M): {label} does not vanish")
        out[p] = segre_variety(F, p).degenerate
    return out


def branch_in_M(F: HermitianPoly, g: Poly) -> bool:
    """Sufficient test for {g = 0} ⊆ M: F_C ∈ (g(z), ḡ(w)).

    True proves containment; False is inconclusive.
    """
    sp = g.space
    if sp.is_paired:
        if set(g.variables()) & set(sp.conjugated):
            raise PreconditionError("g must be holomorphic")
    if g.is_constant():
        raise DegenerateInputError("g must be nonconstant")
    Fc = complexify(F)
    dsp = Fc.space
    g1 = g.rename(dsp)
    g2 = g.rename(dsp, dict(Fc.partner)).conj_coeffs()
    return ideal_member(Fc.poly, Ideal([g1, g2], space=dsp))
