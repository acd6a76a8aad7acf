"""Closure algorithms: generated ideals and subrings, commutator ideals.

Every closure is a worklist fixed point: each vector that enlarges the span is
multiplied by the relevant basis elements exactly once, and the span is kept
in reduced echelon form throughout, so termination is bounded by the ambient
dimension and the output is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import exactlin as el
from .algebra import Algebra, Element
from .exactlin import Subspace
from .report import Check


def _span(A: Algebra, vectors: Iterable) -> Subspace:
    return Subspace.span(A.field, A.dim, vectors)


def _closure(A: Algebra, seed: Iterable, multipliers: Sequence, left: bool, right: bool) -> Subspace:
    ech = el.Echelon(A.field, A.dim)
    work = [tuple(v) for v in seed if ech.add(v)]
    while work:
        v = work.pop()
        for m in multipliers:
            for w in ((A.mul(m, v),) if left else ()) + ((A.mul(v, m),) if right else ()):
                if ech.add(w):
                    work.append(w)
    return ech.subspace()


def ideal_generated(A: Algebra, S: Subspace, within: Subspace | None = None) -> Subspace:
    """Least two-sided ideal containing ``S``.

    With ``within`` given, the ideal is taken in that subring: multipliers
    range over its basis instead of the basis of ``A``.
    """
    mults = A.basis_vectors() if within is None else list(within.basis)
    return _closure(A, S.basis, mults, left=True, right=True)


def left_ideal_generated(A: Algebra, S: Subspace) -> Subspace:
    return _closure(A, S.basis, A.basis_vectors(), left=True, right=False)


def right_ideal_generated(A: Algebra, S: Subspace) -> Subspace:
    return _closure(A, S.basis, A.basis_vectors(), left=False, right=True)


def subring_generated(A: Algebra, S: Subspace) -> Subspace:
    """Least subspace containing ``S`` and closed under multiplication (no unit added)."""
    ech = el.Echelon(A.field, A.dim)
    gens: list = []
    work = [tuple(v) for v in S.basis if ech.add(v)]
    while work:
        v = work.pop()
        gens.append(v)
        for g in gens:
            for w in {A.mul(g, v), A.mul(v, g)}:
                if ech.add(w):
                    work.append(w)
    return ech.subspace()


def commutator_subspace(A: Algebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of ``[s, t]`` over basis pairs of ``S`` and ``T``."""
    return _span(A, (A.commutator(s, t) for s in S.basis for t in T.basis))


def product_subspace(A: Algebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of ``s t`` over basis pairs (e.g. ``K²`` for ``S = T = K``)."""
    return _span(A, (A.mul(s, t) for s in S.basis for t in T.basis))


def full(A: Algebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def is_ideal(A: Algebra, S: Subspace, within: Subspace | None = None) -> tuple[bool, tuple | None]:
    """Closure check; on failure returns ``(False, (multiplier, side, product))``."""
    mults = A.basis_vectors() if within is None else list(within.basis)
    for s in S.basis:
        for m in mults:
            for side, w in (("left", A.mul(m, s)), ("right", A.mul(s, m))):
                if not el.contains(S, w):
                    return False, (m, side, w)
    return True, None


def is_subring(A: Algebra, S: Subspace) -> bool:
    return all(el.contains(S, A.mul(s, t)) for s in S.basis for t in S.basis)


@dataclass(frozen=True)
class Generator:
    """Spanning element of the commutator ideal, tagged with its shape.

    ``shape == "commutator"``: ``[y, z]``; ``shape == "product"``: ``x[y, z]``.
    Indices refer to basis elements of the algebra.
    """

    shape: str
    x: int | None
    y: int
    z: int
    vector: tuple

    def describe(self, A: Algebra) -> str:
        y, z = A.labels[self.y], A.labels[self.z]
        if self.shape == "commutator":
            return f"[{y},{z}]"
        return f"{A.labels[self.x]}[{y},{z}]"


def commutator_generators(A: Algebra) -> list[Generator]:
    """Pure commutators ``[b_y, b_z]`` (y < z), then ``b_x [b_y, b_z]``, lexicographic."""
    n = A.dim
    basis = A.basis_vectors()
    brackets = {(y, z): A.commutator(basis[y], basis[z]) for y in range(n) for z in range(y + 1, n)}
    gens = [Generator("commutator", None, y, z, c) for (y, z), c in brackets.items()]
    for x in range(n):
        for (y, z), c in brackets.items():
            gens.append(Generator("product", x, y, z, A.mul(basis[x], c)))
    return gens


def commutator_ideal(A: Algebra) -> Subspace:
    """The ideal generated by all ``[x, y]``."""
    return ideal_generated(A, commutator_subspace(A, full(A), full(A)))


def double_commutator_subspace(A: Algebra) -> Subspace:
    C = commutator_subspace(A, full(A), full(A))
    return commutator_subspace(A, C, full(A))


def triple_ideal(A: Algebra) -> Subspace:
    """The ideal generated by all ``[[x, y], z]``."""
    return ideal_generated(A, double_commutator_subspace(A))


def verify_complement(A: Algebra, K: Subspace, C: Subspace) -> Check:
    """Is ``A = K ⊕ C`` with ``C`` an ideal?  Reports the first broken clause."""
    ok, wit = is_ideal(A, C)
    if not ok:
        m, side, w = wit
        return Check("complement", False, {"clause": "C is an ideal", "multiplier": Element(A, m),
                                           "side": side, "product": Element(A, w)})
    total = el.sum_(K, C)
    if not total.is_full():
        missing = next(e for e in A.basis_vectors() if not el.contains(total, e))
        return Check("complement", False, {"clause": "K + C = A", "missing": Element(A, missing)})
    meet = el.intersect(K, C)
    if not meet.is_zero():
        return Check("complement", False, {"clause": "K ∩ C = 0", "common": Element(A, meet.basis[0])})
    return Check("complement", True)
