"""Blow-ups along coordinate centers: chart maps and strict transforms of
polynomials and 1-forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BlowupError, DegenerateInputError, PreconditionError, SpaceMismatchError
from .forms import DiffForm, Split, check_split, d_full, split_head
from .groebner import Ideal
from .hermitian import ComplexifiedPoly
from .poly import Poly, VarSpace

DEFAULT_CENTER = ("y1", "y2", "w1", "w2")
DEFAULT_NAMES = ("t", "s", "u", "v")


@dataclass(frozen=True)
class BlowupChart:
    """Chart of the blow-up of ``source`` along {c = 0 for c in center}.

    ``chart_var`` goes to the exceptional coordinate, every other center
    variable c goes to ``new_name(c) * u``. Variables keep their positions,
    so the default chart on (x, y1, y2, z, w1, w2) is
    (x, t, s, z, u, v) -> (x, t*u, s*u, z, u, v*u).
    """

    source: VarSpace
    center: tuple[str, ...]
    chart_var: str
    new_names: tuple[str, ...]  # aligned with center

    def __post_init__(self):
        if len(self.center) != len(self.new_names):
            raise PreconditionError("center and new names differ in length")
        if len(set(self.center)) != len(self.center) or len(self.center) < 2:
            raise PreconditionError("center needs at least two distinct variables")
        missing = [c for c in self.center if c not in self.source]
        if missing:
            raise PreconditionError(f"center variables {missing} are not in {self.source.names}")
        if self.chart_var not in self.center:
            raise PreconditionError(f"chart variable {self.chart_var!r} is not in the center")
        kept = [v for v in self.source.names if v not in self.center]
        clash = set(kept) & set(self.new_names)
        if clash or len(set(self.new_names)) != len(self.new_names):
            raise PreconditionError(f"new variable names clash: {sorted(clash) or self.new_names}")

    @classmethod
    def default(cls, source: VarSpace, center: Sequence[str] = DEFAULT_CENTER,
                new_names: Sequence[str] = DEFAULT_NAMES, chart_var: str | None = None
                ) -> "BlowupChart":
        center, new_names = tuple(center), tuple(new_names)
        if len(center) != len(new_names):
            raise PreconditionError(
                f"center has {len(center)} variables but {len(new_names)} new names were given")
        if chart_var is None:
            if "u" in new_names:
                chart_var = center[new_names.index("u")]
            else:
                chart_var = center[0]
        return cls(source, center, chart_var, new_names)

    @property
    def rename(self) -> dict[str, str]:
        return dict(zip(self.center, self.new_names))

    @property
    def u(self) -> str:
        return self.rename[self.chart_var]

    @property
    def target(self) -> VarSpace:
        r = self.rename
        return VarSpace(tuple(r.get(v, v) for v in self.source.names))

    def images(self) -> dict[str, Poly]:
        tgt = self.target
        u = Poly.var(tgt, self.u)
        out = {}
        for v in self.source.names:
            if v == self.chart_var:
                out[v] = u
            elif v in self.center:
                out[v] = Poly.var(tgt, self.rename[v]) * u
            else:
                out[v] = Poly.var(tgt, v)
        return out

    def describe(self) -> str:
        imgs = self.images()
        return "pi(" + ", ".join(self.target.names) + ") = (" + \
            ", ".join(str(imgs[v]) for v in self.source.names) + ")"


def _check_source(chart: BlowupChart, space: VarSpace):
    if space.names != chart.source.names:
        raise SpaceMismatchError(f"{space.names} is not the chart's source {chart.source.names}")


def pullback(chart: BlowupChart, p: Poly) -> Poly:
    _check_source(chart, p.space)
    return p.compose(chart.target, chart.images())


def _u_order(chart: BlowupChart, polys) -> int:
    k = chart.target.index(chart.u)
    return min((m[k] for q in polys for m in q.terms), default=0)


def _divide_u(chart: BlowupChart, q: Poly, m: int) -> Poly:
    if not m:
        return q
    k = chart.target.index(chart.u)
    return Poly(q.space, {mono[:k] + (mono[k] - m,) + mono[k + 1:]: c for mono, c in q.terms.items()})


def strict_transform(chart: BlowupChart, p: Poly) -> tuple[Poly, int]:
    """Pullback divided by the largest power u^m dividing it."""
    if p.is_zero():
        raise DegenerateInputError("the strict transform of 0 is undefined")
    q = pullback(chart, p)
    m = _u_order(chart, [q])
    return _divide_u(chart, q, m), m


def pullback_form(chart: BlowupChart, omega: DiffForm) -> DiffForm:
    """π*ω, using d(t*u) = t*du + u*dt and so on."""
    _check_source(chart, omega.space)
    tgt = chart.target
    imgs = chart.images()
    diffs = {v: d_full(imgs[v]) for v in chart.source.names}
    out = DiffForm.zero(tgt, omega.degree)
    for key, c in omega.terms.items():
        piece = DiffForm.function(c.compose(tgt, imgs))
        for k in key:
            piece = piece.wedge(diffs[chart.source.names[k]])
        out = out + piece
    return out


def strict_transform_form(chart: BlowupChart, omega: DiffForm) -> tuple[DiffForm, int]:
    """π*ω divided by the largest power of u dividing every coefficient."""
    pulled = pullback_form(chart, omega)
    m = _u_order(chart, pulled.terms.values())
    if not m:
        return pulled, 0
    return pulled.map_coeffs(lambda q: _divide_u(chart, q, m)), m


@dataclass(frozen=True)
class SplitTransform:
    head: Poly  # strict transform of P(x,y)/2 + P(z,w)/2
    H1: Poly  # π*H_C / u^(m+1)
    multiplicity: int
    u: str = "u"

    @property
    def total(self) -> Poly:
        """Strict transform of F_C: head + u*H1."""
        return self.head + Poly.var(self.head.space, self.u) * self.H1


def split_strict_transform(chart: BlowupChart, Fc: ComplexifiedPoly, split: Split) -> SplitTransform:
    """Strict transform of F_C = P/2 + P(z,w)/2 + H_C in the form head + u*H1.

    The head is the strict transform of the P part with multiplicity m;
    π*H_C must be divisible by u^(m+1), otherwise BlowupError carries the
    multiplicity actually found.
    """
    check_split(Fc, split)
    head, m = strict_transform(chart, split_head(Fc, split.P))
    H = split.H if split.H.space == Fc.space else split.H.rename(Fc.space)
    if H.is_zero():
        return SplitTransform(head, Poly.zero(head.space), m, chart.u)
    pulled = pullback(chart, H)
    mh = _u_order(chart, [pulled])
    if mh < m + 1:
        raise BlowupError(f"pullback of H_C is divisible only by u^{mh}, need u^{m + 1}", mh)
    return SplitTransform(head, _divide_u(chart, pulled, m + 1), m, chart.u)


def transform_singular_ideal(chart: BlowupChart, omega: DiffForm, Fc: Poly | None = None) -> Ideal:
    """Ideal of the transformed polynomial together with every coefficient
    of the transformed 1-form; without ``Fc`` only the form's coefficients."""
    tgt = chart.target
    gens = list(omega.coefficients())
    if Fc is not None:
        if Fc.space != tgt:
            raise SpaceMismatchError(f"{Fc.space.names} is not the chart space {tgt.names}")
        gens = [Fc] + gens
    if omega.space != tgt:
        raise SpaceMismatchError(f"form lives on {omega.space.names}, chart on {tgt.names}")
    return Ideal(gens, space=tgt)


def form_singular_ideal(chart: BlowupChart, omega: DiffForm) -> Ideal:
    """Zeros of the transformed 1-form alone (its singular set in the chart)."""
    return transform_singular_ideal(chart, omega)


def vanishes_on(gens: Sequence[Poly], branch: Mapping[str, Poly]) -> bool:
    """True if every generator becomes 0 after substituting the parametrized
    branch ``{variable: polynomial}``."""
    for g in gens:
        sp = g.space
        images = {v: branch.get(v, Poly.var(sp, v)) for v in sp.names}
        if not g.compose(sp, images).is_zero():
            return False
    return True


def is_u_saturated(chart: BlowupChart, polys: Sequence[Poly]) -> bool:
    """Whether the ideal I spanned by ``polys`` satisfies I : u^inf = I.

    With u last in a grevlex order, dividing each Groebner basis element by
    its largest power of u gives generators of I : u^inf.
    """
    nonzero = [q for q in polys if not q.is_zero()]
    if not nonzero:
        return True
    tgt = chart.target
    last = VarSpace(tuple(n for n in tgt.names if n != chart.u) + (chart.u,))
    moved = [q.rename(last) for q in nonzero]
    gb = Ideal(moved).groebner()
    k = len(last) - 1
    for g in gb.basis:
        m = min(mono[k] for mono in g.terms)
        if m and not gb.reduce(Poly(last, {mono[:k] + (mono[k] - m,): c
                                           for mono, c in g.terms.items()})).is_zero():
            return False
    return True


def normalized(p: Poly) -> Poly:
    """``p`` divided by its grevlex leading coefficient.

    Equations of hypersurfaces are compared in this form: the complexified
    A∞ germ carries a factor 1/2 that is dropped when writing 1 + t^2 + s^2 + v^2.
    """
    if p.is_zero():
        return p
    return p / p.leading_term()[1]
