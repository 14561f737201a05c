"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .blowup import (BlowupChart, form_singular_ideal, normalized, strict_transform,
                     strict_transform_form, transform_singular_ideal)
from .errors import EmptyVarietyError, LeviscopeError, ParseError
from .exprio import _guess_coords, family_coords, load_poly, parse_poly, print_poly
from .forms import alpha_beta
from .gaussian import GaussianRational
from .hermitian import (HermitianPoly, complexified, complexify, diagonal_restrict,
                        make_hermitian, re_part)
from .ils import (TABLE1, Germ, build_normal_form, check_theorem_A_hypotheses, classify_exact,
                  codim_c, in_I2, quadric_catalog, resolve_tag, tau_ideal)
from .leviflat import algebraic_dimension, is_levi_flat, segre_variety, sing_ideal
from .poly import VarSpace

_FAMILY = re.compile(r"x|z|y\d+|w\d+")


class InputError(Exception):
    pass


def _family_default(text: str):
    """x, y1..yn when every name in the text belongs to that family (or its
    complexified partners z, w1..wn)."""
    names = _guess_coords(text)
    if not all(_FAMILY.fullmatch(v) for v in names):
        return None
    n = max([int(v[1:]) for v in names if v[0] in "yw"] or [1])
    return family_coords(n)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    body = "\n".join(ln.split("#", 1)[0] for ln in text.splitlines()
                     if not re.match(r"\s*(vars|coords)\s*:", ln.split("#", 1)[0]))
    return load_poly(text, _family_default(body) if body.strip() else None)


def _hermitian(pf) -> tuple[HermitianPoly, str]:
    """Real polynomial from a file: conjugate-paired text is used as is (up to
    a unit), holomorphic text h is read as Re(h), complexified text is
    restricted to the diagonal."""
    p = pf.poly
    sp = p.space
    if sp.is_paired:
        return make_hermitian(p), "as given"
    if len(sp) == 2 * len(pf.coords) and sp.names[: len(pf.coords)] == tuple(pf.coords):
        F = diagonal_restrict(complexified(p, pf.coords))
        return make_hermitian(F.poly), "restricted from the complexification"
    return re_part(p, pf.coords), "real part of a holomorphic polynomial"


def _germ(pf) -> Germ:
    p = pf.poly
    if p.space.is_paired or len(p.space) != len(pf.coords):
        raise InputError("germ files must be holomorphic polynomials in x, y1..yn")
    if tuple(pf.coords) != family_coords(len(pf.coords) - 1):
        raise InputError(f"germ coordinates must be x, y1..yn; got {', '.join(pf.coords)}")
    return Germ(p, len(pf.coords) - 1)


def _parse_number(text: str) -> GaussianRational:
    p = parse_poly(text.strip(), VarSpace(()))
    return p.constant_term()


def _parse_params(items) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not of the form key=value")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = int(v)
        except ValueError:
            out[k.strip()] = Fraction(v)
    return out


def _split_spec(spec: str) -> tuple[str, dict, int | None]:
    """'J k=2 n=3' or 'J,k=2,n=3' -> ('J', {'k': 2}, 3)."""
    parts = [p for p in re.split(r"[,\s]+", spec.strip()) if p]
    if not parts:
        raise InputError("empty normal-form specification")
    params = _parse_params(parts[1:])
    n = params.pop("n", None)
    return parts[0], params, n


# -- commands --------------------------------------------------------------------


def cmd_check_levi(args):
    pf = _load(args.file)
    F, how = _hermitian(pf)
    rep = is_levi_flat(F)
    result = {
        "is_levi_flat": rep.is_levi_flat,
        "witness": None if rep.witness is None else print_poly(rep.witness),
        "obstruction_degree": rep.obstruction_degree,
        "normalization": str(F.normalization),
        "interpretation": how,
        "assumes_irreducible": True,
    }
    return {"F": print_poly(F.poly)}, result, 0 if rep.is_levi_flat else 1


def cmd_complexify(args):
    pf = _load(args.file)
    F, how = _hermitian(pf)
    Fc = complexify(F)
    result = {"F_C": print_poly(Fc.poly), "partner": dict(Fc.partner), "interpretation": how}
    return {"F": print_poly(F.poly)}, result, 0


def cmd_sing(args):
    pf = _load(args.file)
    F, _ = _hermitian(pf)
    ideal = sing_ideal(F)
    try:
        dim = algebraic_dimension(F)
    except EmptyVarietyError:
        dim = None
    result = {
        "generators": [print_poly(g) for g in ideal.generators],
        "groebner_basis": [print_poly(g) for g in ideal.groebner().basis],
        "dimension": dim,
    }
    return {"F": print_poly(F.poly)}, result, 0 if dim is not None else 1


def cmd_segre(args):
    pf = _load(args.file)
    F, _ = _hermitian(pf)
    point = [_parse_number(c) for c in args.point.split(",")]
    rep = segre_variety(F, point)
    result = {"point": [str(c) for c in rep.point], "Q_p": print_poly(rep.variety),
              "degenerate": rep.degenerate}
    return {"F": print_poly(F.poly)}, result, 0


def cmd_ils(args):
    g = _germ(_load(args.file))
    inputs = {"f": print_poly(g.poly), "n": g.n}
    if not in_I2(g):
        return inputs, {"in_I2": False, "is_ils": False}, 1
    rep = codim_c(g, window=args.window, bound=args.bound)
    result = {
        "in_I2": True,
        "tau_generators": [print_poly(p) for p in tau_ideal(g).generators],
        "c": rep.c_value if rep.stabilized else "not stabilized by bound",
        "stabilized_at": rep.stabilized_at,
        "is_ils": rep.is_ils,
        "dims": list(rep.dims),
        "residue_basis": [print_poly(p) for p in rep.residue_basis],
        "bound": rep.bound,
    }
    return inputs, result, 0 if rep.is_ils else 1


def cmd_classify(args):
    g = _germ(_load(args.file))
    cls = classify_exact(g)
    inputs = {"f": print_poly(g.poly), "n": g.n}
    if cls is None:
        return inputs, {"match": None}, 1
    result = {"match": cls.tag, "label": cls.label, "params": cls.params,
              "transform": cls.describe()}
    return inputs, result, 0


def _sweep_entry(job):
    kind, key, n = job
    t0 = time.perf_counter()
    if kind == "table1":
        tag, params = key
        P = build_normal_form(tag, params, n)
        F = re_part(P.poly)
        flat = is_levi_flat(F).is_levi_flat
        dim = algebraic_dimension(F)
        c = codim_c(P)
        ok = flat and dim == 2 and c.stabilized
        row = {"entry": TABLE1[tag].label, "params": params, "n": n, "is_levi_flat": flat,
               "sing_dimension": dim, "c": c.c_value if c.stabilized else "not stabilized"}
    elif kind == "table2":
        entry = next(q for q in quadric_catalog(n) if q.tag == key)
        flat = is_levi_flat(entry.poly).is_levi_flat
        ok = flat
        row = {"entry": entry.label, "params": {k: str(v) for k, v in entry.params.items()},
               "n": n, "F": print_poly(entry.poly.poly), "normalization": str(entry.poly.normalization),
               "is_levi_flat": flat}
    else:
        sp = VarSpace.paired(("z1", "z2"))
        F = make_hermitian(parse_poly("z1*~z1 + z2*~z2", sp))
        rep = is_levi_flat(F)
        ok = not rep.is_levi_flat
        row = {"entry": "control z1*~z1 + z2*~z2", "expected_levi_flat": False,
               "is_levi_flat": rep.is_levi_flat,
               "witness": None if rep.witness is None else print_poly(rep.witness)}
    row["ok"] = ok
    row["seconds"] = round(time.perf_counter() - t0, 3)
    return row


def cmd_catalog(args):
    n = args.n
    jobs = [("table1", (tag, dict(e.smallest_params())), n) for tag, e in TABLE1.items()
            if n >= e.min_n]
    jobs += [("table2", q.tag, n) for q in quadric_catalog(n)]
    jobs.append(("control", None, n))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_sweep_entry, jobs))
    else:
        rows = [_sweep_entry(j) for j in jobs]
    # the control is reported but does not set the exit code, see README
    catalog_ok = all(r["ok"] for r in rows if "expected_levi_flat" not in r)
    return {"n": n}, {"entries": rows, "catalog_ok": catalog_ok}, 0 if catalog_ok else 1


def cmd_blowup(args):
    pf = _load(args.file)
    F, how = _hermitian(pf)
    Fc = complexify(F)
    center = tuple(v.strip() for v in args.center.split(","))
    names = tuple(v.strip() for v in args.names.split(","))
    chart = BlowupChart.default(Fc.space, center, names, args.chart)
    st, m = strict_transform(chart, Fc.poly)
    alpha = alpha_beta(Fc).alpha
    at, ma = strict_transform_form(chart, alpha)
    full = transform_singular_ideal(chart, at, st)
    form_only = form_singular_ideal(chart, at)

    def dim(ideal):
        try:
            return ideal.dimension()
        except EmptyVarietyError:
            return None
    result = {
        "chart": chart.describe(),
        "strict_transform": print_poly(st),
        "strict_transform_normalized": print_poly(normalized(st)),
        "multiplicity": m,
        "alpha": str(alpha),
        "alpha_transform": str(at),
        "alpha_multiplicity": ma,
        "form_singular_dimension": dim(form_only),
        "singular_dimension_on_transform": dim(full),
        "interpretation": how,
    }
    return {"F_C": print_poly(Fc.poly), "center": list(center)}, result, 0


def cmd_theorem_a(args):
    pf = _load(args.file)
    F, how = _hermitian(pf)
    tag, params, n = _split_spec(args.normal_form)
    tag = resolve_tag(tag, params)
    if n is not None and n != len(F.coords) - 1:
        raise InputError(f"normal form n={n} does not match F's coordinates {F.coords}")
    rep = check_theorem_A_hypotheses(F, tag, params)
    result = {
        "normal_form": TABLE1[tag].label, "params": rep.params, "n": rep.n,
        "H": print_poly(rep.H),
        "H_vanishes_on_line": rep.H_vanishes_on_line,
        "jet_order": rep.jet_order, "jet_condition": rep.jet_condition,
        "levi_flat": rep.levi_flat, "theorem": rep.theorem,
        "all_hypotheses_hold": rep.all_pass, "conclusion": rep.conclusion,
        "notes": list(rep.notes),
    }
    ok = rep.all_pass and rep.theorem is not None
    return {"F": print_poly(F.poly)}, result, 0 if ok else 1


# -- plumbing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leviscope", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print a JSON run report")
    ap.add_argument("--version", action="version", version=f"leviscope {__version__}")
    sub = ap.add_subparsers(dest="command", metavar="command")

    def add(name, fn, help_, file=True):
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file", help=".poly input")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(fn=fn)
        return p

    add("check-levi", cmd_check_levi, "decide Levi-flatness of {F = 0}")
    add("complexify", cmd_complexify, "print F_C")
    add("sing", cmd_sing, "generators and dimension of Sing(M_C)")
    p = add("segre", cmd_segre, "Segre variety at a point")
    p.add_argument("--point", required=True, help="comma separated coordinates, e.g. 0,1/2+i")
    p = add("ils", cmd_ils, "line singularity invariants of a germ")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--bound", type=int, default=None,
                   help="truncation degree (default LEVISCOPE_DEGREE_CAP or 12)")
    add("classify", cmd_classify, "exact-form match against the ILS table")
    p = add("catalog", cmd_catalog, "catalog sweeps", file=False)
    p.add_argument("action", choices=["verify"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p = add("blowup", cmd_blowup, "strict transforms in one blow-up chart")
    p.add_argument("--center", default="y1,y2,w1,w2")
    p.add_argument("--names", default="t,s,u,v", help="new variables aligned with --center")
    p.add_argument("--chart", default=None, help="center variable sent to u")
    p = add("check-theorem-a", cmd_theorem_a, "check the normal-form theorem hypotheses")
    p.add_argument("--normal-form", required=True, help="e.g. 'J k=2' or 'A'")
    return ap


def _plain(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines += _plain(v, indent + 1)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  -")
                lines += _plain(item, indent + 2)
        elif isinstance(v, list):
            lines.append(f"{pad}{k}: " + ("[" + ", ".join(str(x) for x in v) + "]"))
        else:
            lines.append(f"{pad}{k}: {v}")
    return lines


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if not getattr(args, "fn", None):
        parser.print_usage(err)
        return 2
    t0 = time.perf_counter()
    try:
        inputs, result, code = args.fn(args)
    except ParseError as e:
        print(f"error: parse error at line {e.line}, column {e.column}: {e.message}", file=err)
        return 2
    except (InputError, LeviscopeError, ValueError) as e:
        print(f"error: {e}", file=err)
        return 2
    report = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
        "version": __version__,
    }
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True, default=str), file=out)
    else:
        print("\n".join(_plain({"command": report["command"], **inputs, **result})), file=out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
