"""Executing scripts and rendering their reports.

A :class:`RunReport` is a list of :class:`Outcome` entries, one per command.
``verdict`` is ``pass``, ``fail``, ``unknown`` or ``error``; module errors
raised while executing a command become ``error`` entries instead of
aborting the run.  Output is deterministic for a fixed seed; wall-clock
timings are only recorded on request.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .. import __version__, jordan, splitter
from ..algebra import Algebra, is_reduced, radical
from ..errors import JordanSplitError, NotJordan, NotSplittable, NotUpgradable
from ..jordan import LinearMap
from ..report import Report
from . import dsl

VERDICTS = ("pass", "fail", "unknown", "error")


@dataclass
class Outcome:
    command: str
    subjects: list
    verdict: str
    value: object = None
    detail: str = ""
    witnesses: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing_ms: float | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["timing_ms"] is None:
            del d["timing_ms"]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Outcome:
        return cls(**d)


@dataclass
class RunReport:
    seed: int = 0
    entries: list = field(default_factory=list)
    tool: str = "jordansplit"
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(e.verdict in ("pass", "unknown") for e in self.entries)

    def summary(self) -> dict:
        return {v: sum(e.verdict == v for e in self.entries) for v in VERDICTS}

    def to_dict(self) -> dict:
        return {"tool": self.tool, "version": self.version, "seed": self.seed,
                "summary": self.summary(), "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, d: dict) -> RunReport:
        return cls(d["seed"], [Outcome.from_dict(e) for e in d["entries"]], d["tool"], d["version"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.tool} {self.version} (seed {self.seed})"]
        for e in self.entries:
            head = f"[{e.verdict}] {e.command} {' '.join(e.subjects)}"
            if e.value is not None and not isinstance(e.value, dict):
                head += f": {_show(e.value)}"
            if e.timing_ms is not None:
                head += f"  ({e.timing_ms:.1f} ms)"
            lines.append(head)
            if e.detail:
                lines.append(f"    {e.detail}")
            for k, v in e.witnesses.items():
                lines.append(f"    {k} = {_show(v)}")
            for k, v in e.data.items():
                lines.append(f"    {k}: {_show(v)}")
            for c in e.checks:
                if not c["passed"] or len(e.checks) <= 40:
                    mark = "ok  " if c["passed"] else "FAIL"
                    extra = f" ({c['detail']})" if c["detail"] else ""
                    lines.append(f"    [{mark}] {c['check']}{extra}")
                    for k, v in c["witness"].items():
                        lines.append(f"           {k} = {_show(v)}")
            if len(e.checks) > 40:
                lines.append(f"    {sum(c['passed'] for c in e.checks)}/{len(e.checks)} checks passed")
        s = self.summary()
        lines.append("summary: " + ", ".join(f"{s[v]} {v}" for v in VERDICTS))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _show(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "unknown"
    if isinstance(v, list):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_show(x)}" for k, x in v.items()) + "}"
    return str(v)


def _checks(rep: Report) -> list:
    return [c.to_dict() for c in rep.checks]


def _witness(jw) -> dict:
    if jw.verdict:
        return {}
    return {"identity": jw.identity, "args": list(jw.args), "residual": str(jw.residual)}


def _basis(A: Algebra, S) -> list:
    return [A.format(v) for v in S.basis]


# -- commands ---------------------------------------------------------------------

def _bool_outcome(cmd, subj, value, **kw) -> Outcome:
    return Outcome(cmd, subj, "pass" if value else "fail", value, **kw)


def check_map(kind: str, phi: LinearMap, seed: int = 0) -> Outcome:
    cmd, subj = f"check {kind}", [phi.name]
    if kind in ("jordan", "hom", "antihom"):
        fn = {"jordan": jordan.is_jordan, "hom": jordan.is_homomorphism,
              "antihom": jordan.is_antihomomorphism}[kind]
        jw = fn(phi)
        return _bool_outcome(cmd, subj, jw.verdict, witnesses=_witness(jw))
    if kind == "splittable":
        sv = jordan.is_splittable(phi)
        D = phi.dst
        data = {"V": _basis(D, phi.v_ideal), "W": _basis(D, phi.w_ideal)}
        wit = {} if sv.verdict else {"intersection": str(sv.witness)}
        return _bool_outcome(cmd, subj, sv.verdict, witnesses=wit, data=data)
    if kind == "identities":
        jw = jordan.is_jordan(phi)
        if not jw:
            raise NotJordan(jw)
        rep = jordan.check_identities(phi, seed)
        return _bool_outcome(cmd, subj, rep.ok, checks=_checks(rep))
    raise ValueError(kind)


def check_algebra(kind: str, A: Algebra) -> Outcome:
    cmd, subj = f"check {kind}", [A.name]
    if kind == "semiprime":
        rad = radical(A)
        return _bool_outcome(cmd, subj, rad.is_zero(), data={"radical": _basis(A, rad)})
    if kind == "reduced":
        rv = is_reduced(A)
        verdict = "unknown" if rv.value is None else ("pass" if rv.value else "fail")
        wit = {} if rv.witness is None else {"nilpotent": str(rv.witness)}
        return Outcome(cmd, subj, verdict, rv.value, detail=f"method: {rv.method}", witnesses=wit)
    raise ValueError(kind)


def split_map(phi: LinearMap, seed: int = 0) -> Outcome:
    """Split on the commutator ideal, upgrade when possible, check image inclusions."""
    s = splitter.split_on_commutator(phi)
    rep = Report("split")
    rep.extend(s.report)
    rep.extend(splitter.check_image_inclusions(phi, s), "inclusions: ")
    detail = "sum on the commutator ideal"
    try:
        d = splitter.upgrade_direct_sum(phi, s)
        rep.checks.extend(d.report.checks[len(s.report.checks):])
        s, detail = d, "direct sum on the commutator ideal"
    except NotUpgradable as exc:
        detail += f"; not upgraded ({exc.reason})"
    data = {k: v for k, v in s.to_dict().items() if v is not None and k != "extras"}
    return Outcome("split", [phi.name], "pass" if rep.ok else "fail", s.mode, detail=detail,
                   checks=_checks(rep), data=data)


def _error(cmd: str, subj: list, exc: JordanSplitError) -> Outcome:
    wit = {}
    if isinstance(exc, NotSplittable):
        wit["intersection"] = str(exc.witness)
    elif isinstance(exc, NotJordan):
        wit = _witness(exc.witness)
    return Outcome(cmd, subj, "error", None, detail=f"{type(exc).__name__}: {exc}", witnesses=wit)


def execute(stmt, env: dict, seed: int = 0, timings: bool = False) -> Outcome | None:
    if isinstance(stmt, dsl.Check):
        cmd, subj = f"check {stmt.kind}", [stmt.name]
        obj = env[stmt.name]
        fn = (lambda: check_map(stmt.kind, obj, seed)) if stmt.kind in dsl.MAP_CHECKS \
            else (lambda: check_algebra(stmt.kind, obj))
    elif isinstance(stmt, dsl.Split):
        cmd, subj = "split", [stmt.name]
        fn = lambda: split_map(env[stmt.name], seed)  # noqa: E731
    else:
        return None
    t0 = time.perf_counter()
    try:
        out = fn()
    except JordanSplitError as exc:
        out = _error(cmd, subj, exc)
    if timings:
        out.timing_ms = round((time.perf_counter() - t0) * 1000, 3)
    return out


def run(script: dsl.Script, seed: int = 0, timings: bool = False, base_dir=".") -> RunReport:
    """Execute the commands of ``script`` in order."""
    env = script.env or dsl.elaborate(script, base_dir)
    rep = RunReport(seed)
    for st in script.statements:
        out = execute(st, env, seed, timings)
        if out is not None:
            rep.entries.append(out)
    return rep


def corpus_report(seed: int = 0, timings: bool = False) -> RunReport:
    """The built-in corpus, one entry per instance."""
    from .corpus import compare, entries

    rep = RunReport(seed)
    for e in entries():
        t0 = time.perf_counter()
        checks, observed = compare(e, seed)
        ok = all(c.passed for c in checks)
        out = Outcome("corpus", [e.name], "pass" if ok else "fail", None, detail=e.note,
                      checks=[c.to_dict() for c in checks], data={"observed": observed})
        if timings:
            out.timing_ms = round((time.perf_counter() - t0) * 1000, 3)
        rep.entries.append(out)
    return rep
