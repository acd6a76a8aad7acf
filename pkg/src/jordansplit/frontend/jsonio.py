"""JSON structure-constant format for algebras.

    {"field": "Q" | "GF(p)",
     "labels": ["1", "a", ...],
     "table": [[ [["p/q", k], ...], ... ], ...],   # table[i][j] = b_i b_j
     "unit": [["p/q", k], ...]}                     # optional

Coefficients are strings of the form ``"p"`` or ``"p/q"``; decimals are
rejected so that files are bit-exact.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from ..algebra import Algebra
from ..errors import JordanSplitError
from ..exactlin import GF, QQ, Field

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_FIELD = re.compile(r"^\s*(?:Q|GF\(\s*(\d+)\s*\))\s*$")


class FormatError(JordanSplitError):
    """Malformed algebra file."""


def parse_field(text: str) -> Field:
    m = _FIELD.match(text)
    if not m:
        raise FormatError(f"unknown field {text!r} (expected Q or GF(p))")
    return QQ if m.group(1) is None else GF(int(m.group(1)))


def field_name(F: Field) -> str:
    return "Q" if F.modulus is None else f"GF({F.modulus})"


def _coeff(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s.strip()):
        raise FormatError(f"coefficient {s!r} is not a rational string 'p/q'")
    q = Fraction(s.strip())
    return q


def _vector(terms, n: int, where: str) -> list:
    if not isinstance(terms, list):
        raise FormatError(f"{where}: expected a list of [coefficient, index] pairs")
    v = [Fraction(0)] * n
    for t in terms:
        if not (isinstance(t, list) and len(t) == 2 and isinstance(t[1], int) and not isinstance(t[1], bool)):
            raise FormatError(f"{where}: bad term {t!r}")
        if not 0 <= t[1] < n:
            raise FormatError(f"{where}: basis index {t[1]} out of range")
        v[t[1]] += _coeff(t[0])
    return v


def algebra_from_json(doc: dict, name: str | None = None) -> Algebra:
    if not isinstance(doc, dict):
        raise FormatError("algebra file must hold a JSON object")
    for key in ("field", "labels", "table"):
        if key not in doc:
            raise FormatError(f"missing key {key!r}")
    F = parse_field(doc["field"])
    labels = doc["labels"]
    if not (isinstance(labels, list) and all(isinstance(l, str) for l in labels)):
        raise FormatError("labels must be a list of strings")
    n = len(labels)
    table = doc["table"]
    if not (isinstance(table, list) and len(table) == n and all(isinstance(r, list) and len(r) == n for r in table)):
        raise FormatError(f"table must be {n}x{n}")
    consts = [[_vector(table[i][j], n, f"table[{i}][{j}]") for j in range(n)] for i in range(n)]
    unit = _vector(doc["unit"], n, "unit") if doc.get("unit") is not None else None
    try:
        return Algebra(F, labels, consts, unit, name=name)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from exc


def algebra_to_json(A: Algebra) -> dict:
    F = A.field

    def terms(v):
        return [[F.fmt(c), k] for k, c in enumerate(v) if c]

    doc = {"field": field_name(F), "labels": list(A.labels),
           "table": [[terms(A.table[i][j]) for j in range(A.dim)] for i in range(A.dim)]}
    if A.unit is not None:
        doc["unit"] = terms(A.unit)
    return doc


def load_algebra(path: str | Path, name: str | None = None) -> Algebra:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return algebra_from_json(doc, name)


def dumps_algebra(A: Algebra) -> str:
    """Compact JSON text, one table row per line."""
    doc = algebra_to_json(A)
    lines = ["{", f'  "field": {json.dumps(doc["field"])},', f'  "labels": {json.dumps(doc["labels"])},']
    rows = [f"    {json.dumps(r)}" for r in doc["table"]]
    lines.append('  "table": [\n' + ",\n".join(rows) + "\n  ]" + ("," if "unit" in doc else ""))
    if "unit" in doc:
        lines.append(f'  "unit": {json.dumps(doc["unit"])}')
    return "\n".join(lines) + "\n}\n"


def dump_algebra(A: Algebra, path: str | Path):
    Path(path).write_text(dumps_algebra(A), encoding="utf-8")
