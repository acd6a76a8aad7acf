"""A small line-oriented language for algebras, maps and verification commands.

::

    # comments run to end of line
    algebra G2 = grassmann(2) over Q
    map phi : G2 -> G2 { 1 -> 1; a -> a; b -> b; ab -> a + ab; }
    check splittable phi
    split phi
    report json

Algebra expressions: ``grassmann(n)``, ``matrix(n)``, ``field()``,
``product(A, B)``, ``opposite(A)``, ``adjoin_unit(A)``, ``twisted(R, T, pi)``
and ``table("file.json")``.  A map body must give every source label unless
the statement ends with ``default 0``.

:func:`parse` returns a :class:`Script` whose statements are plain,
comparable AST nodes; names, kinds and basis labels are already validated.
:func:`print_script` is its inverse up to layout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..algebra import (
    Algebra,
    adjoin_unit,
    direct_product,
    field_algebra,
    grassmann,
    matrix_algebra,
    opposite,
    twisted_product,
)
from ..errors import JordanSplitError
from ..jordan import LinearMap
from .jsonio import field_name, load_algebra, parse_field

CHECK_KINDS = ("jordan", "hom", "antihom", "splittable", "identities", "semiprime", "reduced")
MAP_CHECKS = frozenset(CHECK_KINDS[:5])
FORMATS = ("text", "json")
EXPR_ARITY = {"grassmann": "int", "matrix": "int", "field": 0, "product": 2, "opposite": 1,
              "adjoin_unit": 1, "twisted": 3, "table": "str"}


class DslError(JordanSplitError):
    """Syntax or name error, tagged with a 1-based line and column."""

    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"{line}:{col}: {msg}" if line else msg)


# -- AST -------------------------------------------------------------------------

Pos = tuple  # (line, col); never compared


@dataclass(frozen=True)
class Expr:
    op: str
    args: tuple = ()


@dataclass(frozen=True)
class AlgebraDef:
    name: str
    expr: Expr
    field: str
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class MapDef:
    name: str
    src: str
    dst: str
    images: tuple  # ((label, ((Fraction, label), ...)), ...)
    default_zero: bool = False
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Check:
    kind: str
    name: str
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Split:
    name: str
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class ReportFormat:
    format: str
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Script:
    statements: tuple = ()
    # elaborated objects by name; filled in by parse, ignored by ==
    env: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def output_format(self) -> str | None:
        fmts = [s.format for s in self.statements if isinstance(s, ReportFormat)]
        return fmts[-1] if fmts else None


# -- lexer -----------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+) | (?P<comment>\#[^\n]*)
  | (?P<string>"[^"\n]*")
  | (?P<arrow>->)
  | (?P<word>[A-Za-z0-9_]+)
  | (?P<sym>[=:{};(),+\-*/])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str  # word | string | sym | eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Tok]:
    toks, i, line, lstart = [], 0, 1, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise DslError(f"unexpected character {text[i]!r}", line, i - lstart + 1)
        kind, s = m.lastgroup, m.group()
        if kind == "arrow":
            kind = "sym"
        if kind not in ("ws", "comment"):
            toks.append(Tok(kind, s, line, i - lstart + 1))
        nl = s.count("\n")
        if nl:
            line += nl
            lstart = i + s.rindex("\n") + 1
        i = m.end()
    toks.append(Tok("eof", "", line, i - lstart + 1))
    return toks


# -- parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def err(self, msg: str, tok: Tok | None = None):
        t = tok or self.tok
        return DslError(msg, t.line, t.col)

    def next(self) -> Tok:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "word") and self.tok.text == text

    def expect(self, text: str) -> Tok:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.err(f"expected {text!r}, found {found!r}")
        return self.next()

    def name(self, what: str = "name") -> str:
        t = self.tok
        if t.kind != "word" or not (t.text[0].isalpha() or t.text[0] == "_"):
            raise self.err(f"expected {what}, found {t.text or 'end of input'!r}")
        return self.next().text

    def integer(self) -> int:
        t = self.tok
        if t.kind != "word" or not t.text.isdigit():
            raise self.err(f"expected an integer, found {t.text or 'end of input'!r}")
        return int(self.next().text)

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self):
        t = self.tok
        pos = (t.line, t.col)
        if self.at("algebra"):
            self.next()
            nm = self.name("algebra name")
            self.expect("=")
            e = self.expr()
            self.expect("over")
            return AlgebraDef(nm, e, self.field(), pos)
        if self.at("map"):
            self.next()
            nm = self.name("map name")
            self.expect(":")
            src = self.name("source algebra")
            self.expect("->")
            dst = self.name("target algebra")
            self.expect("{")
            images = []
            while not self.at("}"):
                lt = self.tok
                if lt.kind != "word":
                    raise self.err(f"expected a basis label, found {lt.text or 'end of input'!r}")
                self.next()
                self.expect("->")
                images.append((lt.text, self.lincomb(), (lt.line, lt.col)))
                self.expect(";")
            self.expect("}")
            default = False
            if self.at("default"):
                self.next()
                z = self.tok
                if z.text != "0":
                    raise self.err("expected '0' after 'default'")
                self.next()
                default = True
            return MapDef(nm, src, dst, tuple(images), default, pos)
        if self.at("check"):
            self.next()
            k = self.tok
            if k.text not in CHECK_KINDS:
                raise self.err(f"unknown check kind {k.text!r} (one of {', '.join(CHECK_KINDS)})")
            self.next()
            return Check(k.text, self.name(), pos)
        if self.at("split"):
            self.next()
            return Split(self.name("map name"), pos)
        if self.at("report"):
            self.next()
            f = self.tok
            if f.text not in FORMATS:
                raise self.err(f"unknown report format {f.text!r} (text or json)")
            self.next()
            return ReportFormat(f.text, pos)
        raise self.err(f"expected a statement, found {t.text!r}")

    def expr(self) -> Expr:
        t = self.tok
        op = t.text
        if t.kind != "word" or op not in EXPR_ARITY:
            raise self.err(f"unknown algebra expression {op!r}")
        self.next()
        self.expect("(")
        arity = EXPR_ARITY[op]
        if arity == "int":
            args = (self.integer(),)
        elif arity == "str":
            s = self.tok
            if s.kind != "string":
                raise self.err("expected a quoted file name")
            self.next()
            args = (s.text[1:-1],)
        else:
            args = []
            for k in range(arity):
                if k:
                    self.expect(",")
                args.append(self.name("algebra name" if op != "twisted" or k < 2 else "map name"))
            args = tuple(args)
        self.expect(")")
        return Expr(op, args)

    def field(self) -> str:
        t = self.tok
        if self.at("Q"):
            self.next()
            return "Q"
        if self.at("GF"):
            self.next()
            self.expect("(")
            p = self.integer()
            self.expect(")")
            try:
                return field_name(parse_field(f"GF({p})"))
            except JordanSplitError as exc:
                raise self.err(str(exc), t) from None
        raise self.err(f"expected a field (Q or GF(p)), found {t.text!r}")

    def lincomb(self) -> tuple:
        terms = []
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.next().text == "-" else 1
        while True:
            terms.append(self.term(sign))
            if self.at("+") or self.at("-"):
                sign = -1 if self.next().text == "-" else 1
            else:
                return tuple(terms)

    def term(self, sign: int):
        """``[rational '*'] label``; a lone number is a label."""
        t = self.tok
        if t.kind != "word":
            raise self.err(f"expected a term, found {t.text or 'end of input'!r}")
        self.next()
        if t.text.isdigit() and (self.at("/") or self.at("*")):
            num = Fraction(int(t.text))
            if self.at("/"):
                self.next()
                den = self.integer()
                if den == 0:
                    raise self.err("zero denominator", t)
                num /= den
            self.expect("*")
            lab = self.tok
            if lab.kind != "word":
                raise self.err(f"expected a basis label, found {lab.text or 'end of input'!r}")
            self.next()
            return (sign * num, lab.text, (lab.line, lab.col))
        return (Fraction(sign), t.text, (t.line, t.col))


# -- elaboration -----------------------------------------------------------------

def _build_algebra(st: AlgebraDef, env: dict, base: Path) -> Algebra:
    F = parse_field(st.field)
    op, args = st.expr.op, st.expr.args

    def alg(n):
        return env[n]

    if op == "grassmann":
        A = grassmann(args[0], F)
    elif op == "matrix":
        A = matrix_algebra(args[0], F)
    elif op == "field":
        A = field_algebra(F)
    elif op == "product":
        A = direct_product(alg(args[0]), alg(args[1]))
    elif op == "opposite":
        A = opposite(alg(args[0]))
    elif op == "adjoin_unit":
        A = adjoin_unit(alg(args[0]))
    elif op == "twisted":
        A = twisted_product(alg(args[0]), alg(args[1]), env[args[2]])
    else:
        A = load_algebra(base / args[0])
    if A.field != F:
        raise DslError(f"{op}(...) is over {field_name(A.field)}, not {st.field}", *st.pos)
    A.name = st.name
    return A


def _expected_kinds(st: AlgebraDef) -> list[tuple[str, type]]:
    op, args = st.expr.op, st.expr.args
    if op == "twisted":
        return [(args[0], Algebra), (args[1], Algebra), (args[2], LinearMap)]
    if op in ("product", "opposite", "adjoin_unit"):
        return [(a, Algebra) for a in args]
    return []


def _lookup(env: dict, name: str, kind: type, pos: Pos):
    if name not in env:
        raise DslError(f"undefined name {name!r}", *pos)
    obj = env[name]
    if not isinstance(obj, kind):
        want = "an algebra" if kind is Algebra else "a map"
        raise DslError(f"{name!r} is not {want}", *pos)
    return obj


def _linear(dst: Algebra, terms, what: str) -> dict:
    coeffs: dict = {}
    for c, lab, pos in terms:
        if lab not in dst.index:
            if lab == "0" and c == 1:
                continue
            raise DslError(f"{lab!r} is not a basis label of {dst.name} ({what})", *pos)
        coeffs[lab] = coeffs.get(lab, Fraction(0)) + c
    return coeffs


def _build_map(st: MapDef, env: dict) -> LinearMap:
    src = _lookup(env, st.src, Algebra, st.pos)
    dst = _lookup(env, st.dst, Algebra, st.pos)
    if src.field != dst.field:
        raise DslError(f"{st.src} and {st.dst} are over different fields", *st.pos)
    images = {}
    for item in st.images:
        lab, terms = item[0], tuple(t if len(t) == 3 else (*t, st.pos) for t in item[1])
        pos = item[2] if len(item) == 3 else st.pos
        if lab not in src.index:
            raise DslError(f"{lab!r} is not a basis label of {st.src}", *pos)
        if lab in images:
            raise DslError(f"image of {lab!r} given twice", *pos)
        images[lab] = _linear(dst, terms, f"image of {lab}")
    missing = [l for l in src.labels if l not in images]
    if missing and not st.default_zero:
        raise DslError(f"map {st.name} gives no image for {', '.join(missing)} "
                       "(add 'default 0' to map them to zero)", *st.pos)
    for l in missing:
        images[l] = {}
    return LinearMap.from_images(src, dst, images, name=st.name)


def elaborate(script: Script, base_dir: str | Path = ".") -> dict:
    """Build every defined object, checking names, kinds and labels."""
    env: dict = {}
    base = Path(base_dir)
    for st in script.statements:
        if isinstance(st, (AlgebraDef, MapDef)) and st.name in env:
            raise DslError(f"{st.name!r} is already defined", *st.pos)
        if isinstance(st, AlgebraDef):
            for nm, kind in _expected_kinds(st):
                _lookup(env, nm, kind, st.pos)
            try:
                env[st.name] = _build_algebra(st, env, base)
            except DslError:
                raise
            except (JordanSplitError, ValueError, KeyError) as exc:
                raise DslError(f"cannot build {st.name}: {exc}", *st.pos) from None
        elif isinstance(st, MapDef):
            env[st.name] = _build_map(st, env)
        elif isinstance(st, Check):
            _lookup(env, st.name, LinearMap if st.kind in MAP_CHECKS else Algebra, st.pos)
        elif isinstance(st, Split):
            _lookup(env, st.name, LinearMap, st.pos)
    return env


def _strip_positions(stmt):
    if isinstance(stmt, MapDef):
        imgs = tuple((lab, tuple((c, l) for c, l, _ in terms)) for lab, terms, _ in stmt.images)
        return MapDef(stmt.name, stmt.src, stmt.dst, imgs, stmt.default_zero, stmt.pos)
    return stmt


def parse(text: str, base_dir: str | Path = ".") -> Script:
    """Parse and validate a script; raises :class:`DslError` with a position."""
    raw = _Parser(text).script()
    env = elaborate(raw, base_dir)
    return Script(tuple(_strip_positions(s) for s in raw.statements), env)


# -- printer ---------------------------------------------------------------------

def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_lincomb(terms) -> str:
    if not terms:
        return "0"
    out = []
    for k, (c, lab) in enumerate(terms):
        neg = c < 0
        mag = -c if neg else c
        body = lab if mag == 1 else f"{_fmt_q(mag)}*{lab}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def print_statement(st) -> str:
    if isinstance(st, AlgebraDef):
        e = st.expr
        if e.op == "table":
            args = f'"{e.args[0]}"'
        else:
            args = ", ".join(str(a) for a in e.args)
        return f"algebra {st.name} = {e.op}({args}) over {st.field}"
    if isinstance(st, MapDef):
        body = " ".join(f"{lab} -> {format_lincomb(terms)};" for lab, terms in st.images)
        tail = " default 0" if st.default_zero else ""
        return f"map {st.name} : {st.src} -> {st.dst} {{ {body} }}{tail}"
    if isinstance(st, Check):
        return f"check {st.kind} {st.name}"
    if isinstance(st, Split):
        return f"split {st.name}"
    if isinstance(st, ReportFormat):
        return f"report {st.format}"
    raise TypeError(st)


def print_script(script: Script) -> str:
    return "".join(print_statement(s) + "\n" for s in script.statements)
