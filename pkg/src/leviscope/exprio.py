"""Text front end: a small polynomial grammar, a canonical printer and the
``.poly`` file format.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*        # '/' only by a nonzero constant
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INT)?
    atom   := NUMBER | 'i' | NAME | '~' NAME | 'conj' '(' NAME ')' | '(' expr ')'

``~v`` and ``conj(v)`` both denote the conjugate partner of ``v``.

A ``.poly`` file holds optional header lines ``vars: n=<k>`` (declaring
``x, y1..yk`` and their complexified partners ``z, w1..wk``) and
``coords: a, b, ...``, ``#`` comments, then one expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .gaussian import GaussianRational
from .gaussian import I as IMAG
from .poly import Poly, VarSpace

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>\d+(?:\.\d*)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<pow>\*\*)
  | (?P<op>[-+*/^()~,])
""", re.VERBOSE)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    start = text.rfind("\n", 0, pos) + 1
    return line, pos - start + 1


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "pow":
                kind, val = "op", "^"
            else:
                val = m.group()
            toks.append(_Tok(kind, val, pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


@dataclass(frozen=True)
class ExprSource:
    text: str
    declared_vars: VarSpace | None = None


class _Parser:
    def __init__(self, text: str, space: VarSpace):
        self.text = text
        self.space = space
        self.toks = _tokenize(text)
        self.k = 0

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.toks[self.k]
        line, col = _line_col(self.text, tok.pos)
        raise ParseError(msg, line, col)

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def take(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, text: str):
        t = self.take()
        if t.text != text or t.kind not in ("op",):
            self.error(f"expected {text!r}", t)
        return t

    def parse(self) -> Poly:
        if self.peek().kind == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek().kind == "op" and self.peek().text in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op.text == "*":
                p = p * q
            else:
                if not q.is_constant():
                    self.error("division is only allowed by a constant", op)
                if q.is_zero():
                    self.error("division by zero", op)
                p = p.scale(q.constant_term().inverse())
        return p

    def unary(self) -> Poly:
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            p = self.unary()
            return -p if t.text == "-" else p
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e = self.peek()
            if e.kind == "op" and e.text in "-+":
                self.error("exponent must be a nonnegative integer", e)
            if e.kind != "num":
                self.error("exponent must be a nonnegative integer literal", e)
            if not e.text.isdigit():
                self.error("fractional exponents are not allowed", e)
            self.take()
            k = int(e.text)
            if k > 10_000:
                self.error("exponent too large", e)
            return base ** k
        return base

    def atom(self) -> Poly:
        t = self.take()
        if t.kind == "num":
            if not t.text.isdigit():
                self.error("decimal literals are not exact; write p/q", t)
            return Poly.const(self.space, int(t.text))
        if t.kind == "name":
            if t.text == "i":
                return Poly.const(self.space, IMAG)
            if t.text == "conj":
                self.expect("(")
                v = self.take()
                if v.kind != "name":
                    self.error("conj() takes a variable name", v)
                self.expect(")")
                return self.conj_var(v)
            return self.variable(t.text, t)
        if t.kind == "op" and t.text == "~":
            v = self.take()
            if v.kind != "name" or v.text in ("i", "conj"):
                self.error("'~' must be followed by a variable name", v)
            return self.conj_var(v)
        if t.kind == "op" and t.text == "(":
            p = self.expr()
            self.expect(")")
            return p
        if t.kind == "end":
            self.error("unexpected end of input", t)
        self.error(f"unexpected {t.text!r}", t)

    def variable(self, name: str, tok: _Tok) -> Poly:
        if name not in self.space:
            self.error(f"undeclared variable {name!r}", tok)
        return Poly.var(self.space, name)

    def conj_var(self, tok: _Tok) -> Poly:
        name = tok.text
        if name not in self.space:
            self.error(f"undeclared variable {name!r}", tok)
        partner = self.space.partner(name)
        if partner is None:
            self.error(f"variable {name!r} has no conjugate partner", tok)
        return Poly.var(self.space, partner)


# -- printing -----------------------------------------------------------------


def _frac(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coeff_parts(c: GaussianRational) -> tuple[bool, str]:
    """(negative, magnitude text) with magnitude '' for a unit coefficient."""
    if not c.im:
        neg = c.re < 0
        mag = abs(c.re)
        return neg, "" if mag == 1 else _frac(mag)
    if not c.re:
        neg = c.im < 0
        mag = abs(c.im)
        return neg, "i" if mag == 1 else f"{_frac(mag)}*i"
    sign = "+" if c.im > 0 else "-"
    im = abs(c.im)
    im_txt = "i" if im == 1 else f"{_frac(im)}*i"
    if c.re < 0:
        return True, f"({_frac(-c.re)} {'-' if c.im > 0 else '+'} {im_txt})"
    return False, f"({_frac(c.re)} {sign} {im_txt})"


def _monomial_text(space: VarSpace, mono) -> str:
    parts = []
    for name, e in zip(space.names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_poly(p: Poly) -> str:
    """Canonical text: descending grevlex terms, conjugates as ``~v``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms("grevlex")):
        neg, mag = _coeff_parts(c)
        mono = _monomial_text(p.space, m)
        if mono and mag:
            body = f"{mag}*{mono}"
        elif mono:
            body = mono
        else:
            body = mag or "1"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- variable spaces for files ---------------------------------------------------


def family_coords(n: int) -> tuple[str, ...]:
    """Coordinates ``x, y1..yn`` of C x C^n."""
    return ("x",) + tuple(f"y{j}" for j in range(1, n + 1))


def complexified_names(coords) -> dict[str, str]:
    """Independent partner names for the complexification.

    ``x -> z`` and ``y_j -> w_j`` follow the usual convention; ``z_j -> w_j``
    when no ``w`` names clash; anything else gets a ``_c`` suffix.
    """
    coords = tuple(coords)
    taken = set(coords)
    out = {}
    for c in coords:
        m = re.fullmatch(r"([a-z])(\d*)", c)
        cand = None
        if c == "x":
            cand = "z"
        elif m and m.group(1) in ("y", "z") and m.group(2):
            cand = "w" + m.group(2)
        if cand is None or cand in taken or cand in out.values():
            cand = c + "_c"
        out[c] = cand
        taken.add(cand)
    return out


def _universe(coords) -> tuple[VarSpace, dict[str, str]]:
    partners = complexified_names(coords)
    paired = VarSpace.paired(coords)
    return paired, partners


def infer_space(text: str, coords) -> VarSpace:
    """Smallest canonical space over ``coords`` that the text needs.

    Holomorphic-only text lands in the coordinate space, text using ``~`` or
    ``conj`` in the conjugate-paired space, and text using complexified
    partner names in the doubled space.
    """
    coords = tuple(coords)
    partners = complexified_names(coords)
    toks = _tokenize(text)
    names = {t.text for t in toks if t.kind == "name"} - {"i", "conj"}
    uses_conj = any(t.kind == "op" and t.text == "~" for t in toks) or any(
        t.kind == "name" and t.text == "conj" for t in toks)
    uses_partner = bool(names & set(partners.values()))
    if uses_conj and uses_partner:
        tok = next(t for t in toks if t.kind == "name" and t.text in set(partners.values()))
        raise ParseError("cannot mix conjugated and complexified variables",
                         *_line_col(text, tok.pos))
    if uses_conj:
        return VarSpace.paired(coords)
    if uses_partner:
        return VarSpace(coords + tuple(partners[c] for c in coords))
    return VarSpace(coords)


def parse_poly(src: ExprSource | str, declared_vars: VarSpace | None = None) -> Poly:
    if isinstance(src, str):
        src = ExprSource(src, declared_vars)
    space = src.declared_vars
    if space is not None and not isinstance(space, VarSpace):
        space = VarSpace(space)
    if space is None:
        raise ValueError("parse_poly needs declared_vars; use load_poly for files")
    return _Parser(src.text, space).parse()


# -- .poly files --------------------------------------------------------------------


@dataclass(frozen=True)
class PolyFile:
    poly: Poly
    coords: tuple[str, ...]
    n: int | None
    expression: str


_HEADER = re.compile(r"^\s*(vars|coords)\s*:(.*)$")


def load_poly(text: str, default_coords=None) -> PolyFile:
    """Parse ``.poly`` content. Without headers the coordinates default to
    ``default_coords`` or are read from the expression's variable names."""
    lines = text.splitlines()
    n = None
    coords = None
    body_lines = []
    body_start = None
    for k, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0]
        if body_start is None:
            m = _HEADER.match(stripped)
            if m:
                key, val = m.group(1), m.group(2).strip()
                if key == "vars":
                    mm = re.fullmatch(r"n\s*=\s*(\d+)", val)
                    if not mm or int(mm.group(1)) < 1:
                        raise ParseError("header must read 'vars: n=<k>' with k >= 1",
                                         k + 1, raw.find(":") + 2)
                    n = int(mm.group(1))
                else:
                    names = [c.strip() for c in val.split(",") if c.strip()]
                    bad = [c for c in names if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", c)
                           or c in ("i", "conj")]
                    if not names or bad:
                        raise ParseError(f"bad coords header {val!r}", k + 1, raw.find(":") + 2)
                    coords = tuple(names)
                body_lines.append("")
                continue
            if not stripped.strip():
                body_lines.append("")
                continue
            body_start = k
        body_lines.append(stripped)
    expression = "\n".join(body_lines)
    if body_start is None:
        raise ParseError("file contains no expression", len(lines) or 1, 1)
    if coords is None:
        if n is not None:
            coords = family_coords(n)
        elif default_coords is not None:
            coords = tuple(default_coords)
        else:
            coords = _guess_coords(expression)
    elif n is not None and len(coords) != n + 1:
        raise ParseError(f"coords header lists {len(coords)} names but vars: n={n}", 1, 1)
    space = infer_space(expression, coords)
    poly = _Parser(expression, space).parse()
    return PolyFile(poly, coords, n, expression.strip())


def _guess_coords(expression: str) -> tuple[str, ...]:
    names = []
    for t in _tokenize(expression):
        if t.kind == "name" and t.text not in ("i", "conj") and t.text not in names:
            names.append(t.text)
    if not names:
        return ("x",)

    def natural(s):
        return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", s)]
    return tuple(sorted(names, key=natural))


def read_poly_file(path) -> PolyFile:
    with open(path, encoding="utf-8") as fh:
        return load_poly(fh.read())


def dump_poly(p: Poly, coords=None) -> str:
    """``.poly`` text whose ``load_poly`` reproduces ``p`` in the same space."""
    sp = p.space
    if coords is None:
        coords = sp.holomorphic if sp.is_paired else sp.names
    return f"coords: {', '.join(coords)}\n{print_poly(p)}\n"
