"""Finite-dimensional associative algebras given by structure constants.

An :class:`Algebra` stores, for every ordered pair of basis elements, the
coordinate vector of their product.  Associativity (and the unit law, when a
unit is supplied) is verified on all basis triples at construction time.
Elements are coordinate tuples internally; :class:`Element` wraps them with
their algebra for the public API and for printing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import exactlin as el
from .errors import (
    AlgebraMismatch,
    BadUnit,
    DimensionMismatch,
    NotAssociative,
    PreconditionFailed,
    UnsupportedCharacteristic,
)
from .exactlin import Field, Matrix, Subspace, Vector

REDUCED_ENUMERATION_BUDGET = 20_000


class Algebra:
    def __init__(self, field: Field, labels: Sequence[str], table: Sequence[Sequence[Sequence]],
                 unit: Sequence | None = None, name: str | None = None, check: bool = True):
        n = len(labels)
        if len(set(labels)) != n:
            dup = next(l for l in labels if list(labels).count(l) > 1)
            raise ValueError(f"duplicate basis label {dup!r}")
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionMismatch(f"structure table must be {n}x{n}")
        self.field = field
        self.dim = n
        self.labels = tuple(labels)
        self.name = name
        self.index = {l: i for i, l in enumerate(self.labels)}
        self.table = tuple(
            tuple(tuple(field(c) for c in entry) for entry in row) for row in table)
        for row in self.table:
            for entry in row:
                if len(entry) != n:
                    raise DimensionMismatch(f"structure constant vector of length {len(entry)}, expected {n}")
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(entry) if c) for entry in row)
            for row in self.table)
        self.unit = None if unit is None else tuple(field(c) for c in unit)
        if check:
            self._check_associative()
            if self.unit is not None:
                self._check_unit()

    # -- construction checks ----------------------------------------------

    def _check_associative(self):
        n, sp = self.dim, self._sparse
        for i, j in itertools.product(range(n), repeat=2):
            ij = sp[i][j]
            for k in range(n):
                left = self._acc((c, sp[m][k]) for m, c in ij)
                right = self._acc((c, sp[i][m]) for m, c in sp[j][k])
                if left != right:
                    raise NotAssociative(i, j, k, self.labels)

    def _acc(self, terms) -> dict:
        out: dict[int, object] = {}
        F = self.field
        for c, entry in terms:
            for k, d in entry:
                out[k] = F.norm(out.get(k, 0) + c * d)
        return {k: v for k, v in out.items() if v}

    def _check_unit(self):
        if len(self.unit) != self.dim:
            raise DimensionMismatch("unit vector has the wrong length")
        for i in range(self.dim):
            e = self.field.unit_vector(self.dim, i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise BadUnit(i, self.labels[i])

    # -- arithmetic on coordinate vectors ---------------------------------

    def mul(self, u: Sequence, v: Sequence) -> Vector:
        F, sp = self.field, self._sparse
        out = [F.zero] * self.dim
        vz = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = sp[i]
            for j, b in vz:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        if F.modulus is None:
            return tuple(out)
        return tuple(x % F.modulus for x in out)

    def commutator(self, u: Sequence, v: Sequence) -> Vector:
        return el.vsub(self.field, self.mul(u, v), self.mul(v, u))

    def jordan_product(self, u: Sequence, v: Sequence) -> Vector:
        return el.vadd(self.field, self.mul(u, v), self.mul(v, u))

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index[i]
        return self.field.unit_vector(self.dim, i)

    def basis_vectors(self) -> list[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return self.field.zeros(self.dim)

    def left_matrix(self, u: Sequence) -> Matrix:
        cols = [self.mul(u, e) for e in self.basis_vectors()]
        return Matrix.from_columns(self.field, cols, self.dim)

    def power(self, u: Sequence, k: int) -> Vector:
        out = tuple(u)
        for _ in range(k - 1):
            out = self.mul(out, u)
        return out

    # -- convenience ------------------------------------------------------

    def element(self, coords: Sequence | dict | str | int) -> Element:
        """Build an element from coordinates, a ``{label: coeff}`` dict or a label."""
        if isinstance(coords, (str, int)) and not isinstance(coords, bool):
            return Element(self, self.basis_vector(coords))
        if isinstance(coords, dict):
            v = [self.field.zero] * self.dim
            for lab, c in coords.items():
                v[self.index[lab]] = self.field(c)
            return Element(self, tuple(v))
        if len(coords) != self.dim:
            raise DimensionMismatch(f"{len(coords)} coordinates for a {self.dim}-dim algebra")
        return Element(self, tuple(self.field(c) for c in coords))

    def basis(self) -> list[Element]:
        return [Element(self, v) for v in self.basis_vectors()]

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def format(self, v: Sequence) -> str:
        """Render a coordinate vector as a signed linear combination of labels."""
        F = self.field
        parts = []
        for lab, c in zip(self.labels, v):
            c = F.signed(c)
            if not c:
                continue
            neg = c < 0
            mag = F.fmt(-c if neg else c) if F.modulus is None else str(abs(c))
            term = lab if mag == "1" else f"{mag}*{lab}"
            parts.append(("- " if neg else "+ ") + term)
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def same_structure(self, other: Algebra) -> bool:
        return (self.field == other.field and self.labels == other.labels
                and self.table == other.table and self.unit == other.unit)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.same_structure(other)

    def __hash__(self):
        return hash((self.field, self.labels, self.table))

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Algebra{nm} dim={self.dim} over {self.field}>"


@dataclass(frozen=True, eq=False)
class Element:
    algebra: Algebra
    coords: Vector

    def _same(self, other: Element):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra!r} vs {other.algebra!r}")
        return other

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, el.vadd(self.algebra.field, self.coords, other.coords))

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, el.vsub(self.algebra.field, self.coords, other.coords))

    def __neg__(self):
        return Element(self.algebra, el.vneg(self.algebra.field, self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra, self.algebra.mul(self.coords, other.coords))
        F = self.algebra.field
        return Element(self.algebra, el.vscale(F, F(other), self.coords))

    def __rmul__(self, scalar):
        F = self.algebra.field
        return Element(self.algebra, el.vscale(F, F(scalar), self.coords))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.coords == other.coords
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return el.is_zero(self.coords)

    def __str__(self):
        return self.algebra.format(self.coords)

    def __repr__(self):
        return f"Element({self})"


def mul(x: Element, y: Element) -> Element:
    return x * y


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def jordan_product(x: Element, y: Element) -> Element:
    return x * y + y * x


# -- constructors ------------------------------------------------------------

def make_algebra(field: Field, labels: Sequence[str], struct_consts, unit=None, name=None) -> Algebra:
    return Algebra(field, labels, struct_consts, unit, name)


def _from_products(F: Field, labels: Sequence[str], prod, unit=None, name=None) -> Algebra:
    """Build an algebra from ``prod(i, j) -> {k: coeff}``."""
    n = len(labels)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [F.zero] * n
            for k, c in prod(i, j).items():
                v[k] = F.norm(v[k] + F(c))
            row.append(tuple(v))
        table.append(row)
    return Algebra(F, labels, table, unit, name)


def field_algebra(F: Field) -> Algebra:
    """The ground field as a 1-dimensional algebra with basis ``1``."""
    return Algebra(F, ["1"], [[[1]]], [1], name=str(F))


def grassmann(n: int, F: Field = el.QQ) -> Algebra:
    """Exterior algebra on ``n`` anticommuting square-zero generators."""
    if n < 1:
        raise ValueError("need at least one generator")
    if n > 26:
        raise ValueError("at most 26 generators (single-letter labels)")
    if F.characteristic == 2:
        raise UnsupportedCharacteristic("Grassmann algebra requires characteristic != 2")
    gens = [chr(ord("a") + i) for i in range(n)]
    subsets = [s for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    pos = {s: i for i, s in enumerate(subsets)}
    labels = ["1" if not s else "".join(gens[g] for g in s) for s in subsets]

    def prod(i, j):
        s, t = subsets[i], subsets[j]
        if set(s) & set(t):
            return {}
        inversions = sum(1 for a in s for b in t if a > b)
        return {pos[tuple(sorted(s + t))]: (-1) ** inversions}

    return _from_products(F, labels, prod, F.unit_vector(len(labels), 0), name=f"grassmann({n})")


def matrix_algebra(n: int, F: Field = el.QQ) -> Algebra:
    """Full matrix algebra with matrix-unit basis ``e11, e12, ...``."""
    idx = [(i, j) for i in range(n) for j in range(n)]
    pos = {p: k for k, p in enumerate(idx)}
    sep = "_" if n >= 10 else ""
    labels = [f"e{i + 1}{sep}{j + 1}" for i, j in idx]

    def prod(a, b):
        (i, j), (k, l) = idx[a], idx[b]
        return {pos[(i, l)]: 1} if j == k else {}

    unit = [F.one if i == j else F.zero for i, j in idx]
    return _from_products(F, labels, prod, unit, name=f"matrix({n})")


def quaternions(F: Field = el.QQ) -> Algebra:
    """Hamilton quaternions: i^2 = j^2 = k^2 = ijk = -1."""
    labels = ["1", "i", "j", "k"]
    # sign, index for products of the units 1, i, j, k
    rule = {
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }

    def prod(a, b):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        s, k = rule[(a, b)]
        return {k: s}

    return _from_products(F, labels, prod, F.unit_vector(4, 0), name="quaternions")


def _disambiguate(la: Sequence[str], lb: Sequence[str]) -> tuple[list[str], list[str]]:
    if set(la) & set(lb):
        return [f"{l}_1" for l in la], [f"{l}_2" for l in lb]
    return list(la), list(lb)


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    if A.field != B.field:
        raise AlgebraMismatch("factors over different fields")
    F, m, n = A.field, A.dim, B.dim
    la, lb = _disambiguate(A.labels, B.labels)
    table = []
    for i in range(m + n):
        row = []
        for j in range(m + n):
            if i < m and j < m:
                row.append(A.table[i][j] + F.zeros(n))
            elif i >= m and j >= m:
                row.append(F.zeros(m) + B.table[i - m][j - m])
            else:
                row.append(F.zeros(m + n))
        table.append(row)
    unit = A.unit + B.unit if A.unit is not None and B.unit is not None else None
    return Algebra(F, la + lb, table, unit, name=f"product({A.name},{B.name})")


def opposite(A: Algebra) -> Algebra:
    table = [[A.table[j][i] for j in range(A.dim)] for i in range(A.dim)]
    return Algebra(A.field, A.labels, table, A.unit, name=f"opposite({A.name})")


def adjoin_unit(A: Algebra) -> Algebra:
    """``A ⊕ F·1`` with the new basis element ``1`` acting as identity."""
    F, n = A.field, A.dim
    one = "1" if "1" not in A.index else "1_adj"
    labels = [one] + list(A.labels)
    table = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            if i == 0:
                table[i][j] = F.unit_vector(n + 1, j)
            elif j == 0:
                table[i][j] = F.unit_vector(n + 1, i)
            else:
                table[i][j] = (F.zero,) + A.table[i - 1][j - 1]
    return Algebra(F, labels, table, F.unit_vector(n + 1, 0), name=f"adjoin_unit({A.name})")


def _functional(pi, dim: int) -> tuple:
    m = getattr(pi, "matrix", None)
    if m is not None:
        if m.nrows != 1:
            raise PreconditionFailed("pi must map into the 1-dimensional scalar algebra")
        row = m.rows[0]
    else:
        row = tuple(pi)
    if len(row) != dim:
        raise DimensionMismatch("pi has the wrong source dimension")
    return row


def twisted_product(R: Algebra, T: Algebra, pi) -> Algebra:
    """``R × T`` with ``(x,t)(x',t') = (xx', π(x)t' + π(x')t + tt')``.

    ``pi`` is a unital homomorphism from ``R`` onto the scalars, given as a
    map into :func:`field_algebra` or as a plain coefficient row; its values
    act on ``T`` by scalar multiplication.  Pass ``opposite(T)`` to multiply
    the second component in the opposite ring.
    """
    if R.field != T.field:
        raise AlgebraMismatch("R and T over different fields")
    if R.unit is None:
        raise PreconditionFailed("R must be unital")
    F, m, n = R.field, R.dim, T.dim
    p = tuple(F(c) for c in _functional(pi, m))
    if el.dot(F, p, R.unit) != F.one:
        raise PreconditionFailed("pi(1) != 1", witness="unit")
    for i in range(m):
        for j in range(m):
            if el.dot(F, p, R.table[i][j]) != F.norm(p[i] * p[j]):
                raise PreconditionFailed("pi is not multiplicative",
                                         witness=(R.labels[i], R.labels[j]))
    lr, lt = _disambiguate(R.labels, T.labels)
    zero_t, zero_r = F.zeros(n), F.zeros(m)
    table = []
    for i in range(m + n):
        row = []
        for j in range(m + n):
            if i < m and j < m:
                row.append(R.table[i][j] + zero_t)
            elif i < m:
                row.append(zero_r + el.vscale(F, p[i], F.unit_vector(n, j - m)))
            elif j < m:
                row.append(zero_r + el.vscale(F, p[j], F.unit_vector(n, i - m)))
            else:
                row.append(zero_r + T.table[i - m][j - m])
        table.append(row)
    return Algebra(F, lr + lt, table, R.unit + zero_t, name=f"twisted({R.name},{T.name})")


def restrict(A: Algebra, labels: Sequence[str], name: str | None = None) -> Algebra:
    """Subalgebra spanned by a subset of basis elements (must be closed)."""
    idx = [A.index[l] for l in labels]
    pos = {k: i for i, k in enumerate(idx)}
    F = A.field

    def prod(a, b):
        v = A.table[idx[a]][idx[b]]
        out = {}
        for k, c in enumerate(v):
            if c:
                if k not in pos:
                    raise PreconditionFailed("basis subset is not closed under multiplication",
                                             witness=(labels[a], labels[b]))
                out[pos[k]] = c
        return out

    unit = None
    if A.unit is not None and all(not c or k in pos for k, c in enumerate(A.unit)):
        unit = tuple(A.unit[k] for k in idx)
    return _from_products(F, list(labels), prod, unit, name=name)


def from_matrices(F: Field, mats: Sequence[Sequence[Sequence]], labels: Sequence[str],
                  name: str | None = None) -> Algebra:
    """Algebra with the given (linearly independent, product-closed) matrices as basis."""
    vecs = [tuple(F(x) for row in M for x in row) for M in mats]
    size = len(mats[0])
    basis = Matrix.from_columns(F, vecs, size * size)

    def matmul(X, Y):
        return [[F.norm(sum(X[i][k] * Y[k][j] for k in range(size))) for j in range(size)]
                for i in range(size)]

    fmats = [[[F(x) for x in row] for row in M] for M in mats]
    n = len(mats)
    prods = [tuple(x for row in matmul(fmats[i], fmats[j]) for x in row)
             for i in range(n) for j in range(n)]
    sol = el.solve(basis, Matrix.from_columns(F, prods, size * size))
    if isinstance(sol, el.Inconsistent):
        raise PreconditionFailed("matrix span is not closed under multiplication")
    if basis.rank() != n:
        raise PreconditionFailed("matrices are linearly dependent")
    coeffs = sol.matrix.columns()
    table = [[coeffs[i * n + j] for j in range(n)] for i in range(n)]
    ident = tuple(F.one if i == j else F.zero for i in range(size) for j in range(size))
    u = el.solve(basis, Matrix.from_columns(F, [ident], size * size))
    unit = u.matrix.column(0) if isinstance(u, el.Solution) else None
    return Algebra(F, labels, table, unit, name=name)


def weyl_reduced(p: int) -> Algebra:
    """Quotient of the first Weyl algebra over GF(p) by ``a^p = b^p = 0``.

    Realised on GF(p)[x]/(x^p) with ``a = d/dx`` and ``b = x·``, so that
    ``ab - ba = 1``.  Basis ``a^i b^j`` for ``0 <= i, j < p``.
    """
    F = el.GF(p)
    A = [[(r + 1) % p if c == r + 1 else 0 for c in range(p)] for r in range(p)]  # d/dx: x^c -> c x^{c-1}
    B = [[1 if r == c + 1 else 0 for c in range(p)] for r in range(p)]

    def mm(X, Y):
        return [[sum(X[i][k] * Y[k][j] for k in range(p)) % p for j in range(p)] for i in range(p)]

    def mpow(X, k):
        out = [[int(i == j) for j in range(p)] for i in range(p)]
        for _ in range(k):
            out = mm(out, X)
        return out

    def lab(i, j):
        s = ("a" + (str(i) if i > 1 else "")) * (i > 0) + ("b" + (str(j) if j > 1 else "")) * (j > 0)
        return s or "1"

    mats, labels = [], []
    for i in range(p):
        for j in range(p):
            mats.append(mm(mpow(A, i), mpow(B, j)))
            labels.append(lab(i, j))
    return from_matrices(F, mats, labels, name=f"weyl({p})")


def truncated_free_algebra(F: Field = el.QQ, gens: str = "xy", max_len: int = 3) -> Algebra:
    """Free algebra on ``gens`` modulo all words longer than ``max_len``."""
    words = [""] + ["".join(w) for r in range(1, max_len + 1) for w in itertools.product(gens, repeat=r)]
    pos = {w: i for i, w in enumerate(words)}
    labels = ["1"] + words[1:]

    def prod(i, j):
        w = words[i] + words[j]
        return {pos[w]: 1} if len(w) <= max_len else {}

    return _from_products(F, labels, prod, F.unit_vector(len(words), 0), name=f"free({gens},{max_len})")


# -- structure ---------------------------------------------------------------

def center(A: Algebra) -> Subspace:
    """Solutions z of ``[z, b_i] = 0`` for every basis element."""
    n, F = A.dim, A.field
    rows = []
    brackets = [[A.commutator(A.basis_vector(j), A.basis_vector(i)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for m in range(n):
            rows.append(tuple(brackets[i][j][m] for j in range(n)))
    return el.kernel(Matrix(F, len(rows), n, tuple(rows)))


def trace_form(A: Algebra) -> Matrix:
    """Gram matrix ``G[i][j] = Tr(L_{b_i b_j})`` of the regular representation."""
    n, F = A.dim, A.field
    tr = [F.norm(sum(A.table[k][m][m] for m in range(n))) for k in range(n)]
    rows = tuple(tuple(el.dot(F, A.table[i][j], tr) for j in range(n)) for i in range(n))
    return Matrix(F, n, n, rows)


def _radical_supported(A: Algebra) -> bool:
    p = A.field.modulus
    return p is None or p > A.dim


def radical(A: Algebra) -> Subspace:
    """Jacobson radical as the kernel of the trace form.

    Valid in characteristic 0 and in characteristic p > dim A; refused
    otherwise rather than returning a possibly wrong answer.
    """
    if not _radical_supported(A):
        raise UnsupportedCharacteristic(
            f"trace-form radical needs p > dim; got p = {A.field.modulus}, dim = {A.dim}")
    return el.kernel(trace_form(A).transpose())


def is_semiprime(A: Algebra) -> bool:
    return radical(A).is_zero()


@dataclass(frozen=True)
class ReducedVerdict:
    value: bool | None
    method: str
    witness: Element | None = None

    def __bool__(self):
        raise TypeError("tri-state verdict; inspect .value")


def is_reduced(A: Algebra, budget: int = REDUCED_ENUMERATION_BUDGET) -> ReducedVerdict:
    """Decide reducedness where possible; ``value is None`` means unknown."""
    F = A.field
    for i, e in enumerate(A.basis_vectors()):
        if el.is_zero(A.mul(e, e)) and not el.is_zero(e):
            return ReducedVerdict(False, "basis element squares to zero", Element(A, e))
    supported = _radical_supported(A)
    if supported:
        rad = radical(A)
        if not rad.is_zero():
            x = rad.basis[0]
            while True:
                x2 = A.mul(x, x)
                if el.is_zero(x2):
                    return ReducedVerdict(False, "element of the nilpotent radical", Element(A, x))
                x = x2
    if F.modulus is not None and F.modulus ** A.dim <= budget:
        for coords in itertools.product(range(F.modulus), repeat=A.dim):
            if any(coords) and el.is_zero(A.mul(coords, coords)):
                return ReducedVerdict(False, "enumeration", Element(A, tuple(coords)))
        return ReducedVerdict(True, "enumeration")
    if supported and A.is_commutative():
        return ReducedVerdict(True, "commutative with zero radical")
    return ReducedVerdict(None, "undecided")
