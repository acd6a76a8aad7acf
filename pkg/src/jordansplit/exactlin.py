"""Exact scalars, dense matrices, canonical subspaces and linear solving.

Rationals are backed by ``gmpy2.mpq``; prime-field residues are plain ``int``
values in ``[0, p)``.  Vectors are tuples of scalars.  Every value here is
immutable; the only mutable object is :class:`Echelon`, a local builder used
by the closure algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2

from .errors import DimensionMismatch, FieldError

Vector = tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_MPQ = type(gmpy2.mpq())


@dataclass(frozen=True)
class Field:
    """Either the rationals (``modulus is None``) or GF(p) for an odd prime p."""

    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        if p is None:
            return
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus {p!r} is not a prime")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")

    @property
    def kind(self) -> str:
        return "rationals" if self.modulus is None else "prime-field"

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    @property
    def zero(self):
        return gmpy2.mpq(0) if self.modulus is None else 0

    @property
    def one(self):
        return gmpy2.mpq(1) if self.modulus is None else 1

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or ``"p/q"`` string into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        p = self.modulus
        if p is None:
            if isinstance(value, Fraction):
                return gmpy2.mpq(value.numerator, value.denominator)
            return gmpy2.mpq(value)
        if isinstance(value, (Fraction, _MPQ)):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise FieldError(f"{value} has no image in GF({p})")
            return num * pow(den, -1, p) % p
        return int(value) % p

    def norm(self, x):
        if self.modulus is None:
            return x if type(x) is _MPQ else self(x)
        return x % self.modulus

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / x
        return pow(int(x), -1, self.modulus)

    def fmt(self, x) -> str:
        if self.modulus is None:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(int(x))

    def signed(self, x):
        """Representative closest to zero (for printing GF(p) residues)."""
        if self.modulus is None:
            return x
        x = int(x) % self.modulus
        return x - self.modulus if x > self.modulus // 2 else x

    def zeros(self, n: int) -> Vector:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> Vector:
        z = self.zero
        return tuple(self.one if k == i else z for k in range(n))

    def __str__(self):
        return "Q" if self.modulus is None else f"GF({self.modulus})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


# -- vectors -----------------------------------------------------------------

def vadd(F: Field, u: Sequence, v: Sequence) -> Vector:
    if F.modulus is None:
        return tuple(a + b for a, b in zip(u, v))
    p = F.modulus
    return tuple((a + b) % p for a, b in zip(u, v))


def vsub(F: Field, u: Sequence, v: Sequence) -> Vector:
    if F.modulus is None:
        return tuple(a - b for a, b in zip(u, v))
    p = F.modulus
    return tuple((a - b) % p for a, b in zip(u, v))


def vscale(F: Field, c, u: Sequence) -> Vector:
    if F.modulus is None:
        return tuple(c * a for a in u)
    p = F.modulus
    return tuple(c * a % p for a in u)


def vneg(F: Field, u: Sequence) -> Vector:
    return vscale(F, F(-1), u)


def vcomb(F: Field, terms: Iterable[tuple], n: int) -> Vector:
    """Linear combination ``sum(c * v for c, v in terms)`` of length-n vectors."""
    out = list(F.zeros(n))
    for c, v in terms:
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] += c * a
    return tuple(F.norm(x) for x in out)


def is_zero(u: Sequence) -> bool:
    return not any(u)


def dot(F: Field, u: Sequence, v: Sequence):
    s = F.zero
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return F.norm(s)


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    rows: tuple = ()

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("row data does not match the declared shape")

    @classmethod
    def from_rows(cls, F: Field, rows: Iterable[Iterable], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(F(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(F, len(rows), ncols, rows)

    @classmethod
    def identity(cls, F: Field, n: int) -> Matrix:
        return cls(F, n, n, tuple(F.unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, F: Field, nrows: int, ncols: int) -> Matrix:
        return cls(F, nrows, ncols, tuple(F.zeros(ncols) for _ in range(nrows)))

    @classmethod
    def from_columns(cls, F: Field, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls(F, nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, tuple(zip(*self.rows)) if self.nrows else
                      tuple(() for _ in range(self.ncols)))

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        F = self.field
        nz = [(j, a) for j, a in enumerate(v) if a]
        out = []
        for r in self.rows:
            s = F.zero
            for j, a in nz:
                if r[j]:
                    s += r[j] * a
            out.append(F.norm(s))
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(self.field, cols, self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shapes differ")
        F = self.field
        return Matrix(F, self.nrows, self.ncols, tuple(vadd(F, a, b) for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> Matrix:
        F = self.field
        return Matrix(F, self.nrows, self.ncols, tuple(vneg(F, r) for r in self.rows))

    def rank(self) -> int:
        return rref(self)[1]

    def tolist(self) -> list[list[str]]:
        return [[self.field.fmt(x) for x in r] for r in self.rows]


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are kept fully reduced, so reducing a vector is one pass over the
    pivots.  Used by every closure loop; not shared between threads.
    """

    def __init__(self, F: Field, n: int):
        self.field = F
        self.n = n
        self.rows: dict[int, list] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        F = self.field
        w = [F.norm(x) for x in v]
        for p, row in self.rows.items():
            c = w[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        w[k] = F.norm(w[k] - c * a)
        return w

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.n}")
        w = self.reduce(v)
        piv = next((k for k, a in enumerate(w) if a), None)
        if piv is None:
            return False
        F = self.field
        inv = F.inv(w[piv])
        w = [F.norm(a * inv) for a in w]
        for row in self.rows.values():
            c = row[piv]
            if c:
                for k, a in enumerate(w):
                    if a:
                        row[k] = F.norm(row[k] - c * a)
        self.rows[piv] = w
        return True

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    def basis(self) -> tuple:
        return tuple(tuple(self.rows[p]) for p in sorted(self.rows))

    def subspace(self) -> Subspace:
        return Subspace(self.field, self.n, self.basis())


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form of ``m`` and its rank."""
    ech = Echelon(m.field, m.ncols)
    for r in m.rows:
        ech.add(r)
    basis = ech.basis()
    rank = len(basis)
    rows = basis + tuple(m.field.zeros(m.ncols) for _ in range(m.nrows - rank))
    return Matrix(m.field, m.nrows, m.ncols, rows), rank


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its canonical basis: RREF rows, zero rows dropped."""

    field: Field
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self):
        piv = tuple(next(k for k, a in enumerate(r) if a) for r in self.basis)
        object.__setattr__(self, "pivots", piv)

    @classmethod
    def span(cls, F: Field, n: int, vectors: Iterable[Sequence]) -> Subspace:
        ech = Echelon(F, n)
        for v in vectors:
            ech.add(v)
        return ech.subspace()

    @classmethod
    def zero(cls, F: Field, n: int) -> Subspace:
        return cls(F, n, ())

    @classmethod
    def full(cls, F: Field, n: int) -> Subspace:
        return cls(F, n, tuple(F.unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient_dim)
        for p, r in zip(self.pivots, self.basis):
            ech.rows[p] = list(r)
        return ech

    def coords(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is outside."""
        F = self.field
        v = tuple(F.norm(x) for x in v)
        c = tuple(v[p] for p in self.pivots)
        back = vcomb(F, zip(c, self.basis), self.ambient_dim)
        return c if tuple(back) == v else None

    def from_coords(self, c: Sequence) -> Vector:
        return vcomb(self.field, zip(c, self.basis), self.ambient_dim)

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, self.basis)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        _check(self, other)
        return all(contains(other, v) for v in self.basis)


def _check(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")
    if a.field != b.field:
        raise DimensionMismatch(f"fields {a.field} and {b.field}")


def sum_(a: Subspace, b: Subspace) -> Subspace:
    _check(a, b)
    return Subspace.span(a.field, a.ambient_dim, a.basis + b.basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: row-reduce [[a, a], [b, 0]]; rows with zero left half give a ∩ b."""
    _check(a, b)
    F, n = a.field, a.ambient_dim
    ech = Echelon(F, 2 * n)
    for r in a.basis:
        ech.add(tuple(r) + tuple(r))
    for r in b.basis:
        ech.add(tuple(r) + F.zeros(n))
    return Subspace.span(F, n, (r[n:] for r in ech.basis() if is_zero(r[:n])))


def contains(a: Subspace, v: Sequence) -> bool:
    if len(v) != a.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    return a.coords(tuple(v)) is not None


def equals(a: Subspace, b: Subspace) -> bool:
    _check(a, b)
    return a.basis == b.basis


def kernel(m: Matrix) -> Subspace:
    """Right nullspace ``{x : m x = 0}``."""
    F, n = m.field, m.ncols
    R, rank = rref(m)
    piv = [next(k for k, a in enumerate(r) if a) for r in R.rows[:rank]]
    free = [j for j in range(n) if j not in piv]
    vecs = []
    for j in free:
        x = list(F.zeros(n))
        x[j] = F.one
        for r, p in zip(R.rows, piv):
            x[p] = F.norm(-r[j])
        vecs.append(x)
    return Subspace.span(F, n, vecs)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.nrows, m.columns())


# -- solving -----------------------------------------------------------------

@dataclass(frozen=True)
class Solution:
    matrix: Matrix


@dataclass(frozen=True)
class Inconsistent:
    """Left-nullspace vector λ with λ·a = 0 and λ·targets ≠ 0."""

    witness: Vector


def solve(a: Matrix, targets: Matrix) -> Solution | Inconsistent:
    """Find X with ``a X = targets`` or a witness that none exists.

    Rows are inserted one at a time; each echelon row remembers, as a sparse
    dict, which combination of original rows produced it.  That keeps the
    witness bookkeeping proportional to the rank rather than to the number of
    rows, which matters for the long generator lists used by the splitter.
    """
    if a.nrows != targets.nrows:
        raise DimensionMismatch("a and targets have different row counts")
    F, n, k = a.field, a.ncols, targets.ncols
    piv_rows: dict[int, tuple[list, list, dict]] = {}
    for i, (arow, trow) in enumerate(zip(a.rows, targets.rows)):
        x, t, comb = list(arow), list(trow), {i: F.one}
        for p, (pa, pt, pc) in piv_rows.items():
            c = x[p]
            if not c:
                continue
            for j, v in enumerate(pa):
                if v:
                    x[j] = F.norm(x[j] - c * v)
            for j, v in enumerate(pt):
                if v:
                    t[j] = F.norm(t[j] - c * v)
            for r, v in pc.items():
                comb[r] = F.norm(comb.get(r, F.zero) - c * v)
        piv = next((j for j, v in enumerate(x) if v), None)
        if piv is None:
            if any(t):
                lam = [F.zero] * a.nrows
                for r, v in comb.items():
                    lam[r] = v
                return Inconsistent(tuple(lam))
            continue
        inv = F.inv(x[piv])
        x = [F.norm(v * inv) for v in x]
        t = [F.norm(v * inv) for v in t]
        comb = {r: F.norm(v * inv) for r, v in comb.items() if v}
        for q, (qa, qt, qc) in piv_rows.items():
            c = qa[piv]
            if not c:
                continue
            for j, v in enumerate(x):
                if v:
                    qa[j] = F.norm(qa[j] - c * v)
            for j, v in enumerate(t):
                if v:
                    qt[j] = F.norm(qt[j] - c * v)
            for r, v in comb.items():
                qc[r] = F.norm(qc.get(r, F.zero) - c * v)
        piv_rows[piv] = (x, t, comb)
    rows = [list(F.zeros(k)) for _ in range(n)]
    for p, (_, t, _) in piv_rows.items():
        rows[p] = t
    return Solution(Matrix(F, n, k, tuple(tuple(r) for r in rows)))
