"""Line singularities: the ideals I and τ(f), the codimension c(f), the two
normal-form catalogs, exact-form classification and the hypothesis checker
for the Levi-flat normal-form theorems.

Germs live in the coordinates ``x, y1..yn``; the line is ``L = {y = 0}``
and ``I = (y1, ..., yn)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Mapping

from .config import get_limits
from .errors import DegenerateInputError, ParameterError, PreconditionError
from .exprio import family_coords
from .gaussian import GaussianRational
from .groebner import Ideal, _truncated_quotient
from .hermitian import HermitianPoly, make_hermitian, re_part
from .leviflat import is_levi_flat
from .poly import Poly, VarSpace


def germ_space(n: int) -> VarSpace:
    return VarSpace(family_coords(n))


@dataclass(frozen=True)
class Germ:
    """Polynomial germ at 0 in ``x, y1..yn``."""

    poly: Poly
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.poly.space != germ_space(self.n):
            object.__setattr__(self, "poly", self.poly.rename(germ_space(self.n)))

    @classmethod
    def from_poly(cls, poly: Poly) -> "Germ":
        names = poly.space.names
        n = len(names) - 1
        if names != family_coords(n):
            poly = poly.rename(germ_space(_infer_n(poly)))
            n = len(poly.space) - 1
        return cls(poly, n)

    @property
    def space(self) -> VarSpace:
        return self.poly.space

    def on_line(self) -> Poly:
        """f(x, 0) as a polynomial in x."""
        return self.poly.subs({f"y{j}": 0 for j in range(1, self.n + 1)})

    def __str__(self):
        return str(self.poly)


def _infer_n(poly: Poly) -> int:
    n = 0
    for name in poly.variables():
        if name.startswith("y") and name[1:].isdigit():
            n = max(n, int(name[1:]))
        elif name != "x":
            raise PreconditionError(f"germ variable {name!r} is not one of x, y1..yn")
    return max(n, 1)


def _as_germ(f) -> Germ:
    return f if isinstance(f, Germ) else Germ.from_poly(f)


def line_ideal(n: int) -> Ideal:
    """I = (y1, ..., yn)."""
    sp = germ_space(n)
    return Ideal([Poly.var(sp, f"y{j}") for j in range(1, n + 1)], space=sp)


def line_ideal_squared(n: int) -> Ideal:
    sp = germ_space(n)
    ys = [Poly.var(sp, f"y{j}") for j in range(1, n + 1)]
    return Ideal([ys[a] * ys[b] for a in range(n) for b in range(a, n)], space=sp)


def maximal_ideal(n: int) -> Ideal:
    sp = germ_space(n)
    return Ideal([Poly.var(sp, v) for v in sp.names], space=sp)


def in_I2(f) -> bool:
    """Every term divisible by some y_i*y_j."""
    g = _as_germ(f)
    return all(sum(m[1:]) >= 2 for m in g.poly.terms)


def tau_ideal(f) -> Ideal:
    """τ(f) = m·∂f/∂x + I·∂f/∂y."""
    g = _as_germ(f)
    if g.poly.is_zero():
        raise DegenerateInputError("f = 0 is not a singularity germ")
    if not in_I2(g):
        raise DegenerateInputError("f is not in I^2, so it is not a line singularity")
    sp = g.space
    fx = g.poly.diff("x")
    ys = [f"y{j}" for j in range(1, g.n + 1)]
    gens = [Poly.var(sp, v) * fx for v in sp.names]
    gens += [Poly.var(sp, yi) * g.poly.diff(yj) for yi in ys for yj in ys]
    return Ideal(gens, space=sp)


@dataclass(frozen=True)
class IlsReport:
    in_I2: bool
    c_value: int | None  # None: not stabilized within the bound
    stabilized_at: int | None
    is_ils: bool | None  # None: unknown (possibly infinite codimension)
    dims: tuple[int, ...] = ()  # d_N for N = 1..bound
    residue_basis: tuple[Poly, ...] = ()
    bound: int = 0

    @property
    def stabilized(self) -> bool:
        return self.c_value is not None

    def c_text(self) -> str:
        return str(self.c_value) if self.stabilized else "not stabilized by bound"


def codim_c(f, window: int = 2, bound: int | None = None) -> IlsReport:
    """c(f) = dim I²/τ(f) by truncation modulo m^N.

    ``d_N`` is computed for every N up to ``bound``; the first N >= 3 with
    ``d_N = d_{N+1} = ... = d_{N+window}`` is reported. If no such N exists
    within the bound the report says "not stabilized" and ``is_ils`` is None.
    """
    g = _as_germ(f)
    if window < 1:
        raise ValueError("window must be >= 1")
    if bound is None:
        bound = get_limits().truncation_bound
    tau = tau_ideal(g)
    dims, monos = _truncated_quotient(line_ideal_squared(g.n), tau, bound)
    # dims[k] is d_{k+1}
    for N in range(3, bound - window + 1):
        vals = dims[N - 1: N + window]
        if len(set(vals)) == 1:
            c = dims[N - 1]
            basis = tuple(Poly.monomial(g.space, m) for m in monos if sum(m) < N)
            return IlsReport(True, c, N, True, tuple(dims), basis, bound)
    return IlsReport(True, None, None, None, tuple(dims), (), bound)


# -- ILS normal forms --------------------------------------------------------


def _tail(sp: VarSpace, start: int, n: int) -> Poly:
    return sum((Poly.var(sp, f"y{j}") ** 2 for j in range(start, n + 1)), Poly.zero(sp))


def _monos(n: int, spec: list[tuple[int, dict[str, int]]], tail_from: int) -> Poly:
    sp = germ_space(n)
    p = Poly.zero(sp)
    for c, exps in spec:
        p = p + Poly.monomial(sp, exps, c)
    return p + _tail(sp, tail_from, n)


@dataclass(frozen=True)
class NormalFormEntry:
    tag: str
    label: str
    params: tuple[str, ...]
    constraint: Callable[[Mapping[str, int]], bool]
    constraint_text: str
    min_n: int
    formula: str
    _build: Callable[[int, Mapping[str, int]], Poly] = field(repr=False)

    def build(self, n: int, params: Mapping[str, int] | None = None) -> Germ:
        params = dict(params or {})
        if set(params) != set(self.params):
            raise ParameterError(f"{self.tag} takes parameters {self.params}, got {sorted(params)}")
        if any(not isinstance(v, int) for v in params.values()):
            raise ParameterError(f"{self.tag} parameters must be integers")
        if not self.constraint(params):
            raise ParameterError(f"{self.tag} requires {self.constraint_text}; got {params}")
        if n < self.min_n:
            raise ParameterError(f"{self.tag} needs n >= {self.min_n}")
        return Germ(self._build(n, params), n)

    def smallest_params(self) -> dict[str, int]:
        return dict(SMALLEST_PARAMS[self.tag])


def _always(_p):
    return True


TABLE1: dict[str, NormalFormEntry] = {e.tag: e for e in [
    NormalFormEntry("A_inf", "A∞", (), _always, "", 1,
                    "y1^2 + ... + yn^2",
                    lambda n, p: _tail(germ_space(n), 1, n)),
    NormalFormEntry("D_inf", "D∞", (), _always, "", 1,
                    "x*y1^2 + y2^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 1, "y1": 2})], 2)),
    NormalFormEntry("J_k_inf", "J_{k,∞}", ("k",), lambda p: p["k"] >= 2, "k >= 2", 1,
                    "x^k*y1^2 + y1^3 + y2^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": p["k"], "y1": 2}), (1, {"y1": 3})], 2)),
    NormalFormEntry("T_inf_k_2", "T_{∞,k,2}", ("k",), lambda p: p["k"] >= 4, "k >= 4", 1,
                    "x^2*y1^2 + y1^k + y2^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 2, "y1": 2}), (1, {"y1": p["k"]})], 2)),
    NormalFormEntry("Z_k_inf", "Z_{k,∞}", ("k",), lambda p: p["k"] >= 1, "k >= 1", 1,
                    "x*y1^3 + x^(k+2)*y1^2 + y2^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 1, "y1": 3}),
                                            (1, {"x": p["k"] + 2, "y1": 2})], 2)),
    NormalFormEntry("W_1_inf", "W_{1,∞}", (), _always, "", 1,
                    "x^3*y1^2 + y1^4 + y2^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 3, "y1": 2}), (1, {"y1": 4})], 2)),
    NormalFormEntry("T_inf_q_r", "T_{∞,q,r}", ("q", "r"),
                    lambda p: p["q"] >= p["r"] >= 3, "q >= r >= 3", 2,
                    "x*y1*y2 + y1^q + y2^r + y3^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 1, "y1": 1, "y2": 1}), (1, {"y1": p["q"]}),
                                            (1, {"y2": p["r"]})], 3)),
    NormalFormEntry("Q_k_inf", "Q_{k,∞}", ("k",), lambda p: p["k"] >= 2, "k >= 2", 2,
                    "x^k*y1^2 + y1^3 + x*y2^2 + y3^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": p["k"], "y1": 2}), (1, {"y1": 3}),
                                            (1, {"x": 1, "y2": 2})], 3)),
    # The usual printing of this row drops the x*y2^2 term; without it the
    # singular locus is {y1 = 0}, not the line, and c is infinite.
    NormalFormEntry("S_1_inf", "S_{1,∞}", (), _always, "", 2,
                    "x^2*y1^2 + y1^2*y2 + x*y2^2 + y3^2 + ... + yn^2",
                    lambda n, p: _monos(n, [(1, {"x": 2, "y1": 2}), (1, {"y1": 2, "y2": 1}),
                                            (1, {"x": 1, "y2": 2})], 3)),
]}


def printed_s_row(n: int = 3) -> Germ:
    """x^2*y1^2 + y1^2*y2 + y3^2 + ... exactly as the row is usually printed.

    Not a line singularity with isolated singular locus; kept for comparison.
    """
    if n < 2:
        raise ParameterError("S_{1,∞} needs n >= 2")
    return Germ(_monos(n, [(1, {"x": 2, "y1": 2}), (1, {"y1": 2, "y2": 1})], 3), n)

SMALLEST_PARAMS: dict[str, dict[str, int]] = {
    "A_inf": {}, "D_inf": {}, "J_k_inf": {"k": 2}, "T_inf_k_2": {"k": 4},
    "Z_k_inf": {"k": 1}, "W_1_inf": {}, "T_inf_q_r": {"q": 3, "r": 3},
    "Q_k_inf": {"k": 2}, "S_1_inf": {},
}

# short names accepted on the command line
ALIASES = {
    "A": "A_inf", "D": "D_inf", "J": "J_k_inf", "Z": "Z_k_inf", "W": "W_1_inf",
    "Q": "Q_k_inf", "S": "S_1_inf",
}


def resolve_tag(tag: str, params: Mapping[str, int] | None = None) -> str:
    """Canonical ILS table tag for a tag, label or short alias.

    ``T`` is resolved by its parameters: ``k`` selects T_{∞,k,2}, ``q, r``
    selects T_{∞,q,r}.
    """
    if tag in TABLE1:
        return tag
    for e in TABLE1.values():
        if tag == e.label:
            return e.tag
    if tag in ALIASES:
        return ALIASES[tag]
    if tag == "T":
        keys = set(params or {})
        if keys == {"k"}:
            return "T_inf_k_2"
        if keys == {"q", "r"}:
            return "T_inf_q_r"
        raise ParameterError("T needs either k=<int> or q=<int> r=<int>")
    raise ParameterError(f"unknown normal form {tag!r}")


def build_normal_form(tag: str, params: Mapping[str, int] | None = None, n: int = 3) -> Germ:
    params = dict(params or {})
    return TABLE1[resolve_tag(tag, params)].build(n, params)


def catalog_germs(n: int = 3) -> list[tuple[str, dict[str, int], Germ]]:
    """Every ILS table row at its smallest legal parameters."""
    return [(tag, dict(SMALLEST_PARAMS[tag]), e.build(n, SMALLEST_PARAMS[tag]))
            for tag, e in TABLE1.items() if n >= e.min_n]


# -- Levi-flat quadrics -------------------------------------------------------


def quadric_space(n: int) -> VarSpace:
    return VarSpace.paired(tuple(f"z{j}" for j in range(1, n + 1)))


@dataclass(frozen=True)
class QuadricEntry:
    tag: str
    params: Mapping[str, object]
    n: int
    poly: HermitianPoly
    singular_set: str  # third column of the quadric table
    label: str = ""

    def singular_set_for_n(self) -> str:
        k = self.params.get("k")
        text = self.singular_set.replace("n-k", str(self.n - k) if k is not None else "n-k")
        for d in (1, 2):
            text = text.replace(f"n-{d}", str(self.n - d))
        return text


QUADRIC_TAGS = ("Q_0_2k", "Q_1_1", "Q_1_2_lambda", "Q_2_2", "Q_2_4")
QUADRIC_LABELS = {"Q_0_2k": "Q_{0,2k}", "Q_1_1": "Q_{1,1}", "Q_1_2_lambda": "Q^λ_{1,2}",
                  "Q_2_2": "Q_{2,2}", "Q_2_4": "Q_{2,4}"}
_SING_TEXT = {"Q_0_2k": "C^{n-k}", "Q_1_1": "empty", "Q_1_2_lambda": "C^{n-1}",
              "Q_2_2": "R^2 x C^{n-2}", "Q_2_4": "C^{n-2}"}


def build_quadric(tag: str, params: Mapping[str, object] | None = None, n: int = 3) -> QuadricEntry:
    """Levi-flat quadric normal form in ``z1..zn``, unit-normalized to be real.

    The rows ``Q_{1,1}`` and ``Q^λ_{1,2}`` are ``z1^2 + 2λ z1 z̄1 + z̄1^2``
    with λ = 1 and 0 < λ < 1 respectively.
    """
    params = dict(params or {})
    for t, lab in QUADRIC_LABELS.items():
        if tag == lab:
            tag = t
    if tag not in QUADRIC_TAGS:
        raise ParameterError(f"unknown quadric {tag!r}")
    sp = quadric_space(n)
    z = {j: Poly.var(sp, f"z{j}") for j in range(1, n + 1)}
    zb = {j: Poly.var(sp, f"~z{j}") for j in range(1, n + 1)}

    def need(k):
        if n < k:
            raise ParameterError(f"{tag} needs n >= {k}")

    if tag == "Q_0_2k":
        if set(params) != {"k"}:
            raise ParameterError("Q_{0,2k} takes parameter k")
        k = params["k"]
        if not isinstance(k, int) or not 1 <= k <= n:
            raise ParameterError(f"Q_{{0,2k}} requires 1 <= k <= n; got k={k}")
        holo = VarSpace(sp.holomorphic)
        h = sum((Poly.var(holo, f"z{j}") ** 2 for j in range(1, k + 1)), Poly.zero(holo))
        F = re_part(h)
    elif tag in ("Q_1_1", "Q_1_2_lambda"):
        if tag == "Q_1_1":
            if params:
                raise ParameterError("Q_{1,1} takes no parameters")
            lam = Fraction(1)
        else:
            if set(params) != {"lambda"}:
                raise ParameterError("Q^λ_{1,2} takes parameter lambda")
            lam = Fraction(params["lambda"])
            if not 0 < lam < 1:
                raise ParameterError(f"Q^λ_{{1,2}} requires 0 < λ < 1; got {lam}")
        F = make_hermitian(z[1] ** 2 + (z[1] * zb[1]).scale(2 * lam) + zb[1] ** 2)
    elif tag == "Q_2_2":
        need(2)
        if params:
            raise ParameterError("Q_{2,2} takes no parameters")
        F = make_hermitian((z[1] + zb[1]) * (z[2] + zb[2]))
    else:
        need(2)
        if params:
            raise ParameterError("Q_{2,4} takes no parameters")
        F = make_hermitian(z[1] * zb[2] - zb[1] * z[2])
    return QuadricEntry(tag, params, n, F, _SING_TEXT[tag], QUADRIC_LABELS[tag])


def quadric_catalog(n: int = 3, lam: Fraction = Fraction(1, 2), k: int | None = None
                    ) -> list[QuadricEntry]:
    """The five quadric rows for ``z1..zn``."""
    return [
        build_quadric("Q_0_2k", {"k": k if k is not None else n - 1}, n),
        build_quadric("Q_1_1", {}, n),
        build_quadric("Q_1_2_lambda", {"lambda": lam}, n),
        build_quadric("Q_2_2", {}, n),
        build_quadric("Q_2_4", {}, n),
    ]


def quadric_models_for_line(n: int) -> list[QuadricEntry]:
    """Quadric Levi-flat models whose singular set is {z1 = ... = z_{n-1} = 0}.

    Labels follow the classification statement (``Q_{0,2}`` and ``Q_{2,4}``
    for n = 3, ``Q_{0,2(n-1)}`` for n >= 4); the polynomial attached to the
    ``Q_{0,*}`` label is Re(z1^2 + ... + z_{n-1}^2), whose singular set is
    the line.
    """
    if n < 3:
        raise PreconditionError("the line models are stated for n >= 3")
    q0 = build_quadric("Q_0_2k", {"k": n - 1}, n)
    if n == 3:
        return [_relabel(q0, "Q_{0,2}"), build_quadric("Q_2_4", {}, n)]
    return [_relabel(q0, f"Q_{{0,{2 * (n - 1)}}}")]


def _relabel(entry: QuadricEntry, label: str) -> QuadricEntry:
    return QuadricEntry(entry.tag, entry.params, entry.n, entry.poly, entry.singular_set, label)


# -- exact-form classification -------------------------------------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _solve_integer(E: list[list[int]], k: list[int]) -> list[int] | None:
    """Some integer u with E u = k, or None."""
    rows, cols = len(E), len(E[0]) if E else 0
    H = [list(r) for r in E]
    U = [[int(a == b) for b in range(cols)] for a in range(cols)]

    def colop(dst, src, q):  # column dst -= q * column src
        for r in H:
            r[dst] -= q * r[src]
        for r in U:
            r[dst] -= q * r[src]

    def swap(a, b):
        for r in H:
            r[a], r[b] = r[b], r[a]
        for r in U:
            r[a], r[b] = r[b], r[a]

    pivots: list[tuple[int, int]] = []
    pc = 0
    for i in range(rows):
        if pc >= cols:
            break
        for j in range(pc + 1, cols):
            while H[i][j]:
                q = H[i][pc] // H[i][j]
                colop(pc, j, q)
                swap(pc, j)
        if H[i][pc]:
            pivots.append((i, pc))
            pc += 1
    y = [0] * cols
    piv_of_row = dict(pivots)
    for i in range(rows):
        s = sum(H[i][j] * y[j] for j in range(cols))
        if i in piv_of_row:
            p = piv_of_row[i]
            rem = k[i] - s
            if rem % H[i][p]:
                return None
            y[p] = rem // H[i][p]
        elif s != k[i]:
            return None
    return [sum(U[a][b] * y[b] for b in range(cols)) for a in range(cols)]


def _solve_multiplicative(E: list[list[int]], ratios: list[Fraction]) -> list[Fraction] | None:
    """Nonzero rationals u with prod_j u_j^E[i][j] = ratios[i] for every i."""
    cols = len(E[0])
    primes: set[int] = set()
    for r in ratios:
        if r == 0:
            return None
        for v in (r.numerator, r.denominator):
            if abs(v) > 10**12:
                return None
            primes.update(_factor(abs(v)))
    values = [Fraction(1)] * cols
    for p in sorted(primes):
        k = []
        for r in ratios:
            e = _factor(abs(r.numerator)).get(p, 0) - _factor(r.denominator).get(p, 0)
            k.append(e)
        u = _solve_integer(E, k)
        if u is None:
            return None
        values = [v * Fraction(p) ** e for v, e in zip(values, u)]
    # signs: E s + 2 t = sigma over the integers
    rows = len(E)
    sigma = [int(r < 0) for r in ratios]
    aug = [list(E[i]) + [2 * int(i == j) for j in range(rows)] for i in range(rows)]
    s = _solve_integer(aug, sigma)
    if s is None:
        return None
    return [v * (-1) ** (s[j] % 2) for j, v in enumerate(values)]


@dataclass(frozen=True)
class Classification:
    tag: str
    params: dict[str, int]
    scale: Fraction  # overall factor
    x_scale: Fraction
    y_map: tuple[tuple[int, Fraction], ...]  # normal form's y_j -> scale * y_{target}

    @property
    def label(self) -> str:
        return TABLE1[self.tag].label

    def describe(self) -> str:
        parts = [f"x -> {self.x_scale}*x"]
        for j, (t, b) in enumerate(self.y_map, start=1):
            parts.append(f"y{j} -> {b}*y{t}")
        return f"f = {self.scale} * P({', '.join(parts)})"

    def is_identity(self) -> bool:
        return (self.scale == 1 and self.x_scale == 1
                and all(t == j and b == 1 for j, (t, b) in enumerate(self.y_map, start=1)))


def _param_candidates(entry: NormalFormEntry, degree: int):
    if not entry.params:
        yield {}
        return
    if entry.tag == "T_inf_q_r":
        for r in range(3, degree + 1):
            for q in range(r, degree + 1):
                yield {"q": q, "r": r}
        return
    for k in range(1, degree + 1):
        p = {"k": k}
        if entry.constraint(p):
            yield p


def classify_exact(f) -> Classification | None:
    """Match ``f`` against the ILS table up to permutations of the y variables and
    nonzero rational scalings of x, each y_j and f itself.

    Parameters are read off the support. Returns the first match in table
    order, or None.
    """
    g = _as_germ(f)
    if g.poly.is_zero() or not in_I2(g):
        return None
    n = g.n
    target = g.poly.terms
    if any(c.im for c in target.values()):
        return None
    support = set(target)
    degree = g.poly.total_degree()
    for tag, entry in TABLE1.items():
        if n < entry.min_n:
            continue
        for params in _param_candidates(entry, degree):
            P = entry.build(n, params).poly
            if len(P.terms) != len(support):
                continue
            for perm in permutations(range(1, n + 1)):
                # normal form's y_j is sent to y_{perm[j-1]}
                mapped = {}
                for m, c in P.terms.items():
                    e = [0] * (n + 1)
                    e[0] = m[0]
                    for j in range(1, n + 1):
                        e[perm[j - 1]] = m[j]
                    mapped[tuple(e)] = (m, c)
                if set(mapped) != support:
                    continue
                E, ratios = [], []
                for mm, (m, c) in mapped.items():
                    E.append([1] + list(m))
                    r = target[mm] / c
                    ratios.append(Fraction(int(r.re.numerator), int(r.re.denominator)))
                sol = _solve_multiplicative(E, ratios)
                if sol is None:
                    continue
                lam, a, *bs = sol
                y_map = tuple((perm[j], bs[j]) for j in range(n))
                return Classification(tag, dict(params), lam, a, y_map)
    return None


def apply_transform(P: Germ, cls: Classification) -> Germ:
    """scale * P(x_scale*x, ...) with the classification's variable map."""
    sp = P.space
    images = {"x": Poly.var(sp, "x").scale(GaussianRational(cls.x_scale))}
    for j, (t, b) in enumerate(cls.y_map, start=1):
        images[f"y{j}"] = Poly.var(sp, f"y{t}").scale(GaussianRational(b))
    return Germ(P.poly.compose(sp, images).scale(GaussianRational(cls.scale)), P.n)


# -- hypotheses of the normal-form theorems -------------------------------------


@dataclass(frozen=True)
class HypothesisReport:
    tag: str
    params: dict[str, int]
    n: int
    H: Poly
    H_vanishes_on_line: bool
    jet_order: int  # k = deg(P), total degree
    jet_condition: bool
    levi_flat: bool
    theorem: str | None  # "A", "B" or None
    notes: tuple[str, ...] = ()

    @property
    def all_pass(self) -> bool:
        return self.H_vanishes_on_line and self.jet_condition and self.levi_flat

    @property
    def conclusion(self) -> str | None:
        if self.all_pass and self.theorem:
            return "phi(M) = {Re(P) = 0} for some biholomorphism phi preserving L"
        return None


def check_theorem_A_hypotheses(F: HermitianPoly, P, params: Mapping[str, int] | None = None
                               ) -> HypothesisReport:
    """Check the hypotheses for F = Re(P) + H with P an ILS normal form.

    ``P`` is a :class:`Germ` equal to a catalog normal form, or a tag with
    ``params``. Checks (a) H(x, 0) = 0, (b) every term of H has total degree
    > deg(P), (c) {F = 0} is Levi-flat. The biholomorphism itself is not
    constructed.
    """
    notes = []
    if isinstance(P, str):
        params = dict(params or {})
        tag = resolve_tag(P, params)
        n = len(F.coords) - 1
        germ = TABLE1[tag].build(n, params)
    else:
        germ = _as_germ(P)
        cls = classify_exact(germ)
        if cls is None or not cls.is_identity():
            raise PreconditionError("P is not an ILS normal form")
        tag, params, n = cls.tag, cls.params, germ.n
    coords = family_coords(n)
    if tuple(F.coords) != coords:
        raise PreconditionError(f"F must be written in coordinates {coords}, got {F.coords}")
    ReP = re_part(germ.poly)
    H = F.poly - ReP.poly
    ys = {c: 0 for c in coords[1:]}
    ys.update({F.space.partner(c): 0 for c in coords[1:]})
    on_line = H.subs(ys).is_zero()
    k = germ.poly.total_degree()
    if len({sum(m) for m in germ.poly.terms}) > 1:
        notes.append(f"P is not homogeneous; deg(P) taken as its total degree {k}")
    jet_ok = H.is_zero() or H.order() > k
    flat = bool(is_levi_flat(F)) if not F.poly.is_constant() else False
    if tag == "A_inf" and n == 2:
        theorem = "B"
    elif n >= 3:
        theorem = "A"
    else:
        theorem = None
        notes.append("neither theorem covers this (tag, n)")
    notes.append("F is assumed irreducible; this is not checked")
    return HypothesisReport(tag, dict(params), n, H, on_line, k, jet_ok, flat, theorem, tuple(notes))
