"""Builders for the algebras and maps in the built-in corpus."""

from __future__ import annotations

from ..algebra import (
    Algebra,
    adjoin_unit,
    direct_product,
    field_algebra,
    grassmann,
    matrix_algebra,
    opposite,
    quaternions,
    restrict,
    truncated_free_algebra,
    twisted_product,
    weyl_reduced,
    _from_products,
)
from ..exactlin import GF, QQ, Field
from ..jordan import LinearMap


def row_ring(F: Field = QQ) -> Algebra:
    """``span{e11, e12}`` inside M_2: noncommutative, no unity, no central idempotents."""
    return restrict(matrix_algebra(2, F), ["e11", "e12"], name="row")


def unit_coefficient(R: Algebra) -> LinearMap:
    """Projection of ``adjoin_unit(T)`` onto the coefficient of the adjoined unity."""
    return LinearMap.from_images(R, field_algebra(R.field),
                                 [[1] if i == 0 else [0] for i in range(R.dim)], name="pi")


def twisted_example(F: Field = QQ):
    """R = T with unity adjoined, R' = R × T° twisted by the unit coefficient; φ(x) = (x, ψ(x)).

    Returns ``(R, R', φ)``.
    """
    T = row_ring(F)
    R = adjoin_unit(T)
    pi = unit_coefficient(R)
    Rp = twisted_product(R, opposite(T), pi)
    images = []
    for i, lab in enumerate(R.labels):
        v = [0] * Rp.dim
        v[i] = 1
        if i > 0:  # ψ kills the unity and is the identity on T
            v[R.dim + i - 1] = 1
        images.append(v)
    return R, Rp, LinearMap.from_images(R, Rp, images, name="phi")


def grassmann2_nonsplit(F: Field = QQ) -> LinearMap:
    G = grassmann(2, F)
    return LinearMap.from_images(G, G, {"1": "1", "a": "a", "b": "b", "ab": {"a": 1, "ab": 1}}, name="phi")


def grassmann2_reversion(F: Field = QQ) -> LinearMap:
    G = grassmann(2, F)
    return LinearMap.from_images(G, G, {"1": "1", "a": "a", "b": "b", "ab": {"ab": -1}}, name="rev")


def grassmann3_permuting(F: Field = QQ) -> LinearMap:
    G = grassmann(3, F)
    images = {"1": "1", "a": "bc", "b": "ac", "c": "ab", "ab": "c", "ac": "b", "bc": "a", "abc": "abc"}
    return LinearMap.from_images(G, G, images, name="phi")


def transpose_map(n: int = 2, F: Field = QQ) -> LinearMap:
    M = matrix_algebra(n, F)
    images = {f"e{i}{j}": f"e{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1)}
    return LinearMap.from_images(M, M, images, name="transpose")


def pair_map(hom: LinearMap, anti: LinearMap, name: str = "pair") -> LinearMap:
    """``x ↦ (hom(x), anti(x))`` into the direct product of the targets."""
    assert hom.src == anti.src
    P = direct_product(hom.dst, anti.dst)
    images = [a + b for a, b in zip(hom.images, anti.images)]
    return LinearMap.from_images(hom.src, P, images, name=name)


def block_map(f: LinearMap, g: LinearMap, name: str = "block") -> LinearMap:
    """``(x, y) ↦ (f(x), g(y))`` between direct products."""
    S, D = direct_product(f.src, g.src), direct_product(f.dst, g.dst)
    zf, zg = (0,) * g.dst.dim, (0,) * f.dst.dim
    images = [tuple(v) + zf for v in f.images] + [zg + tuple(v) for v in g.images]
    return LinearMap.from_images(S, D, images, name=name)


def weyl_antiautomorphism(W: Algebra) -> LinearMap:
    """``a^i b^j ↦ a^j b^i``: the antiautomorphism swapping a and b."""
    p = W.field.modulus

    def lab(i, j):
        s = ("a" + (str(i) if i > 1 else "")) * (i > 0) + ("b" + (str(j) if j > 1 else "")) * (j > 0)
        return s or "1"

    images = {lab(i, j): lab(j, i) for i in range(p) for j in range(p)}
    return LinearMap.from_images(W, W, images, name="tau")


def quaternion_conjugation(F: Field = QQ) -> LinearMap:
    H = quaternions(F)
    return LinearMap.from_images(H, H, {"1": "1", "i": {"i": -1}, "j": {"j": -1}, "k": {"k": -1}}, name="conj")


def qxq(F: Field = QQ) -> Algebra:
    Q = field_algebra(F)
    return direct_product(Q, Q)


def gf9() -> Algebra:
    """GF(3)[i]/(i^2 + 1), a field with 9 elements (-1 is a non-residue mod 3)."""
    F = GF(3)
    return _from_products(F, ["1", "i"], lambda a, b: {0: -1} if a == b == 1 else {a + b: 1},
                          unit=F.unit_vector(2, 0), name="gf9")


def gf9_frobenius() -> LinearMap:
    K = gf9()
    return LinearMap.from_images(K, K, {"1": "1", "i": {"i": -1}}, name="frob")


def augmentation(G: Algebra) -> LinearMap:
    """Coefficient of the unity, a homomorphism onto the scalars for Grassmann algebras."""
    return LinearMap.from_images(G, field_algebra(G.field),
                                 [[1] if i == 0 else [0] for i in range(G.dim)], name="eps")


def truncated_twisted_example(F: Field = QQ, max_len: int = 3):
    """Finite analogue of the twisted automorphism on a free algebra.

    S = free algebra on x, y modulo words longer than ``max_len``; T its
    positive-degree part; R = S × T with ``(s,t)(s',t') = (ss', π(s)t' + π(s')t + tt')``
    where π is the constant term; φ(s, t) = (s, reversal(t)).  Returns ``(S, T, R, φ)``.
    Primeness of S and T fails in this truncation.
    """
    S = truncated_free_algebra(F, "xy", max_len)
    T = restrict(S, S.labels[1:], name="T")
    pi = [1] + [0] * (S.dim - 1)
    R = twisted_product(S, T, pi)
    images = []
    for i in range(S.dim):
        images.append(R.basis_vector(i))
    for j, w in enumerate(T.labels):
        images.append(R.basis_vector(S.dim + T.labels.index(w[::-1])))
    return S, T, R, LinearMap.from_images(R, R, images, name="phi")
