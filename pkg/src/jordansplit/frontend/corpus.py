"""The built-in golden corpus.

Each :class:`Entry` builds one map and stores the verdicts it is expected to
produce.  :func:`observe` runs the whole pipeline on the map and records what
actually happened; :func:`corpus` compares the two and turns every mismatch
into a failing check that shows both values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .. import ideals, jordan, splitter
from ..algebra import Algebra, direct_product, is_reduced, matrix_algebra, radical, weyl_reduced
from ..errors import JordanSplitError, NotSplittable, NotUpgradable, UnsupportedCharacteristic
from ..exactlin import QQ, Subspace
from ..jordan import LinearMap
from ..report import Check, Report
from . import instances as ins


@dataclass
class Entry:
    name: str
    build: Callable[[], LinearMap]
    expect: dict
    unit_pair: tuple[str, str] | None = None  # (a, b) with [a, b] = 1 in the source
    complement: tuple[str, ...] | None = None  # labels spanning an ideal C with R = K ⊕ C
    note: str = ""

    @cached_property
    def phi(self) -> LinearMap:
        return self.build()


def _basis(A: Algebra, S: Subspace) -> list[str]:
    return [A.format(v) for v in S.basis]


def _target_semiprime(D: Algebra):
    try:
        return radical(D).is_zero()
    except UnsupportedCharacteristic:
        return "unsupported"


def observe(e: Entry, seed: int = 0) -> tuple[dict, Report]:
    """Run every applicable operation on ``e.phi``.

    Returns the observed verdicts and a report of internal verifications
    (these must pass regardless of what the entry expects).
    """
    phi = e.phi
    S, D = phi.src, phi.dst
    obs: dict = {}
    rep = Report(e.name)
    jw = jordan.is_jordan(phi)
    obs["jordan"] = jw.verdict
    obs["hom"] = jordan.is_homomorphism(phi).verdict
    obs["antihom"] = jordan.is_antihomomorphism(phi).verdict
    obs["surjective"] = jordan.is_surjective(phi)
    obs["target semiprime"] = _target_semiprime(D)
    obs["target reduced"] = is_reduced(D).value
    K = ideals.commutator_ideal(S)
    obs["K"] = _basis(S, K)
    if not jw:
        obs["jordan witness"] = str(jw)
        return obs, rep

    obs["dim V"], obs["dim W"] = phi.v_ideal.dim, phi.w_ideal.dim
    sv = jordan.is_splittable(phi)
    obs["splittable"] = sv.verdict
    if not sv:
        obs["witness"] = str(sv.witness)
    rep.extend(jordan.check_identities(phi, seed), "identities: ")

    try:
        s = splitter.split_on_commutator(phi)
    except NotSplittable:
        obs["split"] = "NotSplittable"
        s = None
    if s is not None:
        obs["split"] = s.mode
        obs["phi1"] = s.to_dict()["phi1"]
        obs["phi2"] = s.to_dict()["phi2"]
        rep.extend(s.report, "split: ")
        rep.extend(jordan.check_commuting_pairs(phi, seed), "commuting pairs: ")
        rep.extend(splitter.check_image_inclusions(phi, s), "inclusions: ")
        try:
            d = splitter.upgrade_direct_sum(phi, s)
            obs["upgrade"] = d.mode
            obs["I1"], obs["I2"] = _basis(S, d.I1), _basis(S, d.I2)
            rep.extend(Report("", d.report.checks[len(s.report.checks):]), "upgrade: ")
        except NotUpgradable as exc:
            obs["upgrade"] = f"NotUpgradable: {exc.reason}"

    if K.is_full():
        rep.extend(splitter.check_corollary_ts(phi), "K = R: ")

    if e.unit_pair is not None:
        a, b = (S.element(x) for x in e.unit_pair)
        u = splitter.split_via_unit_commutator(phi, a, b)
        obs["e"], obs["f"] = str(u.extras["e"]), str(u.extras["f"])
        rep.extend(u.report, "unit commutator: ")

    if e.complement is not None:
        C = Subspace.span(S.field, S.dim, (S.basis_vector(x) for x in e.complement))
        try:
            w = splitter.split_whole_ring_with_complement(phi, C)
            obs["complement split"] = w.mode
            rep.extend(w.report, "complement: ")
        except JordanSplitError as exc:
            obs["complement split"] = f"{type(exc).__name__}: {exc}"
    return obs, rep


def _g2() -> Algebra:
    from ..algebra import grassmann
    return grassmann(2, QQ)


def entries() -> list[Entry]:
    W = weyl_reduced(3)
    tau = ins.weyl_antiautomorphism(W)
    M2 = matrix_algebra(2, QQ)
    m2 = list(M2.labels)
    M2Q = direct_product(M2, ins.field_algebra(QQ))
    _, _, mexa_R, mexa_phi = ins.truncated_twisted_example()
    K_S = ["xy_1 - yx_1", "xxy_1 - yxx_1", "xyx_1 - yxx_1", "xyy_1 - yyx_1", "yxy_1 - yyx_1"]
    K_T = [k.replace("_1", "_2") for k in K_S]
    return [
        Entry("grassmann2 phi(ab) = a + ab", ins.grassmann2_nonsplit,
              {"jordan": True, "K": ["ab"], "splittable": False, "witness": "ab", "split": "NotSplittable"}),
        Entry("grassmann2 identity", lambda: LinearMap.identity(_g2(), name="id"),
              {"jordan": True, "hom": True, "splittable": True, "dim V": 0,
               "phi1": {"ab": "ab"}, "phi2": {"ab": "0"}, "upgrade": "direct_sum", "I1": ["ab"], "I2": []}),
        Entry("grassmann2 reversion", ins.grassmann2_reversion,
              {"jordan": True, "antihom": True, "splittable": True, "dim W": 0,
               "phi1": {"ab": "0"}, "phi2": {"ab": "-ab"}, "upgrade": "direct_sum", "I1": [], "I2": ["ab"]}),
        Entry("grassmann3 permuting", ins.grassmann3_permuting,
              {"jordan": True, "surjective": True, "K": ["ab", "ac", "bc", "abc"], "dim V": 7, "dim W": 7,
               "splittable": False, "split": "NotSplittable"}),
        Entry("twisted row-ring example", lambda: ins.twisted_example()[2],
              {"jordan": True, "K": ["e12"], "splittable": True, "surjective": False,
               "phi1": {"e12": "e12_1"}, "phi2": {"e12": "e12_2"},
               "upgrade": "NotUpgradable: surjectivity"}),
        Entry("truncated free-algebra example", lambda: mexa_phi,
              {"jordan": True, "hom": False, "antihom": False, "surjective": True, "splittable": True,
               "upgrade": "direct_sum", "I1": K_S, "I2": K_T},
              note="S = Q<x,y>/(words of length >= 4); primeness fails in this truncation"),
        Entry("M2 identity", lambda: LinearMap.identity(M2, name="id"),
              {"jordan": True, "K": m2, "splittable": True, "upgrade": "direct_sum",
               "I1": m2, "I2": [],
               "phi1": {x: x for x in M2.labels}, "phi2": {x: "0" for x in M2.labels}}),
        Entry("M2 transpose", ins.transpose_map,
              {"jordan": True, "hom": False, "antihom": True, "dim W": 0, "dim V": 4, "splittable": True,
               "upgrade": "direct_sum", "I1": [], "I2": m2,
               "phi1": {x: "0" for x in M2.labels}}),
        Entry("M2 to M2 x M2, x -> (x, x^t)",
              lambda: ins.pair_map(LinearMap.identity(M2), ins.transpose_map(), name="pair"),
              {"jordan": True, "splittable": True, "surjective": False, "upgrade": "NotUpgradable: surjectivity"}),
        Entry("M2 non-Jordan e11 -> e12",
              lambda: LinearMap.from_images(M2, M2, {"e11": "e12", "e12": {}, "e21": {}, "e22": {}}, name="bad"),
              {"jordan": False}),
        Entry("M2 x Q identity", lambda: LinearMap.identity(M2Q, name="id"),
              {"jordan": True, "splittable": True, "complement split": "direct_sum"}, complement=("1",)),
        Entry("M2 x Q (transpose, id)",
              lambda: ins.block_map(ins.transpose_map(), LinearMap.identity(ins.field_algebra(QQ)), name="tq"),
              {"jordan": True, "splittable": True, "hom": False, "antihom": True,
               "complement split": "direct_sum"}, complement=("1",)),
        Entry("quaternion identity", lambda: LinearMap.identity(ins.quaternions(QQ), name="id"),
              {"jordan": True, "K": ["1", "i", "j", "k"], "splittable": True, "target semiprime": True}),
        Entry("quaternion conjugation", ins.quaternion_conjugation,
              {"jordan": True, "antihom": True, "splittable": True, "target semiprime": True}),
        Entry("weyl(3) identity", lambda: LinearMap.identity(W, name="id"),
              {"jordan": True, "splittable": True, "e": "0", "f": "1"}, unit_pair=("a", "b")),
        Entry("weyl(3) antiautomorphism", lambda: tau,
              {"jordan": True, "antihom": True, "splittable": True, "e": "1", "f": "0"}, unit_pair=("a", "b")),
        Entry("weyl(3) to W x W, x -> (x, tau x)",
              lambda: ins.pair_map(LinearMap.identity(W), tau, name="pair"),
              {"jordan": True, "splittable": True, "e": "1_2", "f": "1_1"}, unit_pair=("a", "b")),
        Entry("grassmann2 augmentation", lambda: ins.augmentation(_g2()),
              {"jordan": True, "hom": True, "target reduced": True, "splittable": True}),
        Entry("Q x Q swap", lambda: LinearMap.from_images(ins.qxq(), ins.qxq(), {"1_1": "1_2", "1_2": "1_1"},
                                                          name="swap"),
              {"jordan": True, "target reduced": True, "splittable": True, "K": []}),
        Entry("GF(9) Frobenius", ins.gf9_frobenius,
              {"jordan": True, "hom": True, "target reduced": True, "splittable": True}),
    ]


def compare(e: Entry, seed: int = 0) -> tuple[list[Check], dict]:
    """Checks for one entry (expected vs observed, then internal verifications)."""
    try:
        obs, internal = observe(e, seed)
    except JordanSplitError as exc:
        return [Check("runs", False, {"error": f"{type(exc).__name__}: {exc}"})], {}
    checks = []
    for key, want in e.expect.items():
        got = obs.get(key, "<missing>")
        checks.append(Check(key, got == want, {} if got == want else {"expected": want, "observed": got}))
    checks.extend(c for c in internal.checks if not c.passed)
    checks.append(Check("internal verifications", internal.ok, detail=f"{len(internal.checks)} checks"))
    return checks, obs


def corpus(seed: int = 0) -> Report:
    """Run every entry and compare against its expected verdicts."""
    rep = Report("corpus")
    for e in entries():
        checks, _ = compare(e, seed)
        rep.extend(Report(e.name, checks), f"{e.name}: ")
    return rep
