"""Linear maps between algebras and the Jordan-homomorphism toolkit.

The two obstruction brackets of a map φ are

    {x, y} = φ(xy) - φ(x)φ(y)      (failure to be a homomorphism)
    <x, y> = φ(xy) - φ(y)φ(x)      (failure to be an antihomomorphism)

``v_ideal`` and ``w_ideal`` are the ideals they generate inside the subring
generated by the image of φ; φ is splittable when those meet only in 0.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import exactlin as el
from . import ideals
from .algebra import Algebra, Element
from .errors import AlgebraMismatch, DimensionMismatch
from .exactlin import Matrix, Subspace
from .report import Report

DEFAULT_SAMPLES = 100


@dataclass(frozen=True, eq=False)
class LinearMap:
    src: Algebra
    dst: Algebra
    matrix: Matrix
    name: str | None = None

    def __post_init__(self):
        if self.src.field != self.dst.field or self.matrix.field != self.src.field:
            raise AlgebraMismatch("source, target and matrix must share one field")
        if (self.matrix.nrows, self.matrix.ncols) != (self.dst.dim, self.src.dim):
            raise DimensionMismatch(
                f"matrix is {self.matrix.nrows}x{self.matrix.ncols}, expected {self.dst.dim}x{self.src.dim}")

    @classmethod
    def from_images(cls, src: Algebra, dst: Algebra, images: Sequence | dict, name=None) -> LinearMap:
        """Images of the basis of ``src``, as a list or ``{label: image}``.

        Images may be Elements of ``dst``, coordinate sequences or ``{label: coeff}`` dicts.
        """
        if isinstance(images, dict):
            missing = [l for l in src.labels if l not in images]
            if missing:
                raise KeyError(f"no image given for {missing}")
            images = [images[l] for l in src.labels]
        cols = []
        for im in images:
            if isinstance(im, Element):
                cols.append(im.coords)
            else:
                cols.append(dst.element(im).coords)
        return cls(src, dst, Matrix.from_columns(src.field, cols, dst.dim), name)

    @classmethod
    def identity(cls, A: Algebra, name=None) -> LinearMap:
        return cls(A, A, Matrix.identity(A.field, A.dim), name)

    @classmethod
    def zero(cls, src: Algebra, dst: Algebra, name=None) -> LinearMap:
        return cls(src, dst, Matrix.zero(src.field, dst.dim, src.dim), name)

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.src and x.algebra != self.src:
            raise AlgebraMismatch("element is not in the source algebra")
        return Element(self.dst, self.apply(x.coords))

    @cached_property
    def images(self) -> list[tuple]:
        return self.matrix.columns()

    @cached_property
    def image_products(self) -> list[list[tuple]]:
        """``φ(b_i) φ(b_j)`` for all basis pairs."""
        D, im = self.dst, self.images
        return [[D.mul(a, b) for b in im] for a in im]

    @cached_property
    def image_subring(self) -> Subspace:
        return ideals.subring_generated(self.dst, el.image(self.matrix))

    @cached_property
    def curly_basis(self) -> dict[tuple[int, int], tuple]:
        n, F = self.src.dim, self.src.field
        return {(i, j): el.vsub(F, self.apply(self.src.table[i][j]), self.image_products[i][j])
                for i in range(n) for j in range(n)}

    @cached_property
    def angle_basis(self) -> dict[tuple[int, int], tuple]:
        n, F = self.src.dim, self.src.field
        return {(i, j): el.vsub(F, self.apply(self.src.table[i][j]), self.image_products[j][i])
                for i in range(n) for j in range(n)}

    @cached_property
    def v_ideal(self) -> Subspace:
        seed = Subspace.span(self.dst.field, self.dst.dim, self.curly_basis.values())
        return ideals.ideal_generated(self.dst, seed, within=self.image_subring)

    @cached_property
    def w_ideal(self) -> Subspace:
        seed = Subspace.span(self.dst.field, self.dst.dim, self.angle_basis.values())
        return ideals.ideal_generated(self.dst, seed, within=self.image_subring)

    def compose(self, other: LinearMap) -> LinearMap:
        """``self ∘ other``."""
        return LinearMap(other.src, self.dst, self.matrix @ other.matrix)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<LinearMap{nm} {self.src.name} -> {self.dst.name}>"


@dataclass(frozen=True)
class JordanWitness:
    """Verdict of an identity check; on failure names the basis tuple and residual."""

    verdict: bool
    identity: str = ""
    args: tuple = ()
    residual: Element | None = None

    def __bool__(self):
        return self.verdict

    def __str__(self):
        if self.verdict:
            return "holds"
        return f"{self.identity} fails at ({', '.join(self.args)}): residual {self.residual}"


def _fail(phi: LinearMap, identity: str, idx: Sequence[int], residual) -> JordanWitness:
    return JordanWitness(False, identity, tuple(phi.src.labels[i] for i in idx), Element(phi.dst, residual))


def is_homomorphism(phi: LinearMap) -> JordanWitness:
    for (i, j), r in phi.curly_basis.items():
        if not el.is_zero(r):
            return _fail(phi, "phi(xy) = phi(x)phi(y)", (i, j), r)
    return JordanWitness(True)


def is_antihomomorphism(phi: LinearMap) -> JordanWitness:
    for (i, j), r in phi.angle_basis.items():
        if not el.is_zero(r):
            return _fail(phi, "phi(xy) = phi(y)phi(x)", (i, j), r)
    return JordanWitness(True)


def is_jordan(phi: LinearMap) -> JordanWitness:
    """Check ``φ(x∘y) = φ(x)∘φ(y)`` on basis pairs and the linearised triple identity.

    The triple identity ``φ(xyz + zyx) = φ(x)φ(y)φ(z) + φ(z)φ(y)φ(x)`` is
    checked on all basis triples.  Both are multilinear, so basis tuples are
    complete.
    """
    S, D, F = phi.src, phi.dst, phi.src.field
    n, P = S.dim, phi.image_products
    for i in range(n):
        for j in range(i, n):
            lhs = phi.apply(el.vadd(F, S.table[i][j], S.table[j][i]))
            rhs = el.vadd(F, P[i][j], P[j][i])
            if lhs != rhs:
                return _fail(phi, "phi(x∘y) = phi(x)∘phi(y)", (i, j), el.vsub(F, lhs, rhs))
    im = phi.images
    for i in range(n):
        for j in range(n):
            ij = S.table[i][j]
            for k in range(i, n):
                xyz = S.mul(ij, S.basis_vector(k))
                zyx = S.mul(S.table[k][j], S.basis_vector(i))
                lhs = phi.apply(el.vadd(F, xyz, zyx))
                rhs = el.vadd(F, D.mul(P[i][j], im[k]), D.mul(P[k][j], im[i]))
                if lhs != rhs:
                    return _fail(phi, "phi(xyz+zyx) = phi(x)phi(y)phi(z)+phi(z)phi(y)phi(x)",
                                 (i, j, k), el.vsub(F, lhs, rhs))
    return JordanWitness(True)


def _curly(phi: LinearMap, u, v) -> tuple:
    D, F = phi.dst, phi.dst.field
    return el.vsub(F, phi.apply(phi.src.mul(u, v)), D.mul(phi.apply(u), phi.apply(v)))


def _angle(phi: LinearMap, u, v) -> tuple:
    D, F = phi.dst, phi.dst.field
    return el.vsub(F, phi.apply(phi.src.mul(u, v)), D.mul(phi.apply(v), phi.apply(u)))


def bracket_curly(phi: LinearMap, x: Element, y: Element) -> Element:
    """``{x, y} = φ(xy) - φ(x)φ(y)``."""
    return Element(phi.dst, _curly(phi, x.coords, y.coords))


def bracket_angle(phi: LinearMap, x: Element, y: Element) -> Element:
    """``<x, y> = φ(xy) - φ(y)φ(x)``."""
    return Element(phi.dst, _angle(phi, x.coords, y.coords))


def image_subring(phi: LinearMap) -> Subspace:
    return phi.image_subring


def v_ideal(phi: LinearMap) -> Subspace:
    return phi.v_ideal


def w_ideal(phi: LinearMap) -> Subspace:
    return phi.w_ideal


@dataclass(frozen=True)
class SplittableVerdict:
    verdict: bool
    witness: Element | None = None

    def __bool__(self):
        return self.verdict


def is_splittable(phi: LinearMap) -> SplittableVerdict:
    """Decide ``V ∩ W = 0``.

    The witness is the canonical basis row of the intersection with the
    largest pivot, i.e. the one supported furthest along the basis order.
    """
    meet = el.intersect(phi.v_ideal, phi.w_ideal)
    if meet.is_zero():
        return SplittableVerdict(True)
    return SplittableVerdict(False, Element(phi.dst, meet.basis[-1]))


def is_surjective(phi: LinearMap) -> bool:
    return phi.matrix.rank() == phi.dst.dim


# -- identity suites ---------------------------------------------------------

def random_elements(A: Algebra, count: int, seed: int = 0) -> list[tuple]:
    """Deterministic pseudorandom elements with coefficients in {-2, ..., 2}."""
    rng = random.Random(seed)
    F = A.field
    return [tuple(F(rng.randint(-2, 2)) for _ in range(A.dim)) for _ in range(count)]


def _random_pairs(A: Algebra, count: int, seed: int):
    xs = random_elements(A, 2 * count, seed)
    return list(zip(xs[::2], xs[1::2]))


def check_jh_identity(phi: LinearMap, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> Report:
    """``{x,y}<x,y> = <x,y>{x,y} = 0``.

    Not bilinear in (x, y), so basis pairs are supplemented by seeded random pairs.
    """
    rep = Report("jh identity {x,y}<x,y> = <x,y>{x,y} = 0")
    S, D = phi.src, phi.dst
    basis = S.basis_vectors()
    pairs = [(basis[i], basis[j]) for i in range(S.dim) for j in range(S.dim)]
    n_basis = len(pairs)
    pairs += _random_pairs(S, samples, seed)
    for which, (u, v) in enumerate(pairs):
        c, a = _curly(phi, u, v), _angle(phi, u, v)
        for side, prod in (("{x,y}<x,y>", D.mul(c, a)), ("<x,y>{x,y}", D.mul(a, c))):
            if not el.is_zero(prod):
                rep.add(side, False, x=Element(S, u), y=Element(S, v), value=Element(D, prod))
                return rep
    rep.add("basis pairs", True, detail=f"{n_basis} pairs")
    rep.add("sampled pairs", True, detail=f"{samples} pairs, seed {seed}")
    return rep


def check_ch_identity(phi: LinearMap) -> Report:
    """``φ([[x,y],z]) = [[φx,φy],φz]`` on all basis triples (trilinear, so complete)."""
    rep = Report("double commutator identity")
    S, D, n = phi.src, phi.dst, phi.src.dim
    basis, im = S.basis_vectors(), phi.images
    for i, j in itertools.product(range(n), repeat=2):
        xy = S.commutator(basis[i], basis[j])
        fxy = D.commutator(im[i], im[j])
        for k in range(n):
            lhs = phi.apply(S.commutator(xy, basis[k]))
            rhs = D.commutator(fxy, im[k])
            if lhs != rhs:
                rep.add("phi([[x,y],z]) = [[phi x,phi y],phi z]", False,
                        x=S.labels[i], y=S.labels[j], z=S.labels[k],
                        residual=Element(D, el.vsub(D.field, lhs, rhs)))
                return rep
    rep.add("phi([[x,y],z]) = [[phi x,phi y],phi z]", True, detail=f"{n ** 3} basis triples")
    return rep


def check_bracket_identities(phi: LinearMap) -> Report:
    """Skew-symmetry of both brackets and ``{x,y} + <x,y> = φ([x,y])`` on basis pairs."""
    rep = Report("bracket identities")
    S, D, F, n = phi.src, phi.dst, phi.dst.field, phi.src.dim
    cur, ang = phi.curly_basis, phi.angle_basis
    skew_c = skew_a = summ = None
    for i in range(n):
        for j in range(n):
            if skew_c is None and el.vadd(F, cur[i, j], cur[j, i]) != D.zero():
                skew_c = (i, j)
            if skew_a is None and el.vadd(F, ang[i, j], ang[j, i]) != D.zero():
                skew_a = (i, j)
            lhs = el.vadd(F, cur[i, j], ang[i, j])
            rhs = phi.apply(S.commutator(S.basis_vector(i), S.basis_vector(j)))
            if summ is None and lhs != rhs:
                summ = (i, j)
    for name, bad in (("{x,y} = -{y,x}", skew_c), ("<x,y> = -<y,x>", skew_a),
                      ("{x,y} + <x,y> = phi([x,y])", summ)):
        if bad is None:
            rep.add(name, True, detail=f"{n * n} basis pairs")
        else:
            rep.add(name, False, x=S.labels[bad[0]], y=S.labels[bad[1]])
    return rep


def check_linearized_jh(phi: LinearMap, seed: int = 0, samples: int = DEFAULT_SAMPLES,
                        max_tuples: int = 20_000) -> Report:
    """Linearisations of the jh identity.

    ``{x,z}<x,y> + {x,y}<x,z> = 0`` is linear in y, z and quadratic in x: basis
    y, z with sampled x.  The four-variable form is multilinear: all basis
    4-tuples when there are at most ``max_tuples`` of them, else a seeded sample.
    """
    rep = Report("linearised jh identities")
    S, D, F, n = phi.src, phi.dst, phi.dst.field, phi.src.dim
    basis = S.basis_vectors()
    cur, ang = phi.curly_basis, phi.angle_basis
    xs = random_elements(S, samples, seed)
    for x in xs:
        cx = [_curly(phi, x, b) for b in basis]
        ax = [_angle(phi, x, b) for b in basis]
        for y in range(n):
            for z in range(n):
                r = el.vadd(F, D.mul(cx[z], ax[y]), D.mul(cx[y], ax[z]))
                if not el.is_zero(r):
                    rep.add("{x,z}<x,y> + {x,y}<x,z> = 0", False, x=Element(S, x),
                            y=S.labels[y], z=S.labels[z], residual=Element(D, r))
                    return rep
    rep.add("{x,z}<x,y> + {x,y}<x,z> = 0", True, detail=f"{samples} sampled x, basis y,z")
    tuples = itertools.product(range(n), repeat=4)
    if n ** 4 > max_tuples:
        rng = random.Random(seed)
        tuples = [tuple(rng.randrange(n) for _ in range(4)) for _ in range(max_tuples)]
        detail = f"{max_tuples} sampled basis 4-tuples"
    else:
        detail = f"all {n ** 4} basis 4-tuples"
    for x, y, z, w in tuples:
        r = el.vcomb(F, [(F.one, D.mul(cur[x, z], ang[w, y])), (F.one, D.mul(cur[w, z], ang[x, y])),
                         (F.one, D.mul(cur[x, y], ang[w, z])), (F.one, D.mul(cur[w, y], ang[x, z]))], D.dim)
        if not el.is_zero(r):
            rep.add("four-variable linearisation", False,
                    args=[S.labels[t] for t in (x, y, z, w)], residual=Element(D, r))
            return rep
    rep.add("four-variable linearisation", True, detail=detail)
    return rep


def check_commuting_pairs(phi: LinearMap, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> Report:
    """For commuting x, y: ``φ(xy) = φ(x)φ(y) = φ(y)φ(x)`` (expected when φ is splittable)."""
    rep = Report("commuting pairs")
    S, D = phi.src, phi.dst
    basis = S.basis_vectors()
    pairs = [(basis[i], basis[j]) for i in range(S.dim) for j in range(i, S.dim)
             if el.is_zero(S.commutator(basis[i], basis[j]))]
    n_basis = len(pairs)
    pairs += [(x, S.mul(x, x)) for x in random_elements(S, samples, seed)]
    for u, v in pairs:
        fuv = phi.apply(S.mul(u, v))
        fu, fv = phi.apply(u), phi.apply(v)
        if fuv != D.mul(fu, fv) or fuv != D.mul(fv, fu):
            rep.add("phi(xy) = phi(x)phi(y) = phi(y)phi(x)", False, x=Element(S, u), y=Element(S, v))
            return rep
    rep.add("phi(xy) = phi(x)phi(y) = phi(y)phi(x)", True,
            detail=f"{n_basis} commuting basis pairs + {samples} (x, x^2) samples")
    return rep


def check_identities(phi: LinearMap, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> Report:
    """The full identity suite expected of every Jordan homomorphism."""
    rep = Report(f"identities for {phi.name or 'phi'}")
    rep.extend(check_bracket_identities(phi))
    rep.extend(check_jh_identity(phi, seed, samples), "jh: ")
    rep.extend(check_ch_identity(phi))
    rep.extend(check_linearized_jh(phi, seed, samples), "jh linearised: ")
    return rep
