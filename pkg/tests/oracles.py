"""Independent reference implementations used only by the tests.

Nothing here imports the package's linear algebra: scalars are
``fractions.Fraction`` or Python ints mod p, elimination is written out
naively, and algebra products are recomputed from the raw structure table.
"""

from __future__ import annotations

from fractions import Fraction


class Scalars:
    def __init__(self, p: int | None):
        self.p = p

    def __call__(self, x):
        if self.p is None:
            return Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "denominator") else Fraction(x)
        return int(x) % self.p

    def div(self, a, b):
        if self.p is None:
            return a / b
        return a * pow(b, -1, self.p) % self.p

    def red(self, x):
        return x if self.p is None else x % self.p


def scalars_of(A) -> Scalars:
    return Scalars(A.field.modulus)


def rank(rows, K: Scalars) -> int:
    m = [[K(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = K.div(m[i][c], m[r][c])
                m[i] = [K.red(a - f * b) for a, b in zip(m[i], m[r])]
        r += 1
    return r


def same_span(u, v, K: Scalars) -> bool:
    ru, rv = rank(u, K), rank(v, K)
    return ru == rv == rank(list(u) + list(v), K)


def table(A, K: Scalars):
    return [[[K(c) for c in A.table[i][j]] for j in range(A.dim)] for i in range(A.dim)]


def mul(T, u, v, K: Scalars):
    n = len(u)
    out = [K(0)] * n
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            for k, c in enumerate(T[i][j]):
                if c != 0:
                    out[k] = K.red(out[k] + a * b * c)
    return out


def unit(n, i, K):
    return [K(1) if k == i else K(0) for k in range(n)]


def brute_ideal(A, gens):
    """Two-sided ideal: keep adding every product with every basis element until the rank stops growing."""
    K = scalars_of(A)
    T = table(A, K)
    n = A.dim
    span = [[K(x) for x in g] for g in gens]
    basis = [unit(n, i, K) for i in range(n)]
    r = rank(span, K) if span else 0
    while True:
        new = span + [mul(T, b, s, K) for s in span for b in basis] + [mul(T, s, b, K) for s in span for b in basis]
        r2 = rank(new, K) if new else 0
        if r2 == r:
            return span
        span, r = new, r2


def brute_commutator_ideal(A):
    K = scalars_of(A)
    T = table(A, K)
    n = A.dim
    e = [unit(n, i, K) for i in range(n)]
    comms = [[K.red(a - b) for a, b in zip(mul(T, e[i], e[j], K), mul(T, e[j], e[i], K))]
             for i in range(n) for j in range(n)]
    return brute_ideal(A, comms)


def brute_triple_ideal(A):
    K = scalars_of(A)
    T = table(A, K)
    n = A.dim
    e = [unit(n, i, K) for i in range(n)]

    def br(u, v):
        return [K.red(a - b) for a, b in zip(mul(T, u, v, K), mul(T, v, u, K))]

    gens = [br(br(e[i], e[j]), e[k]) for i in range(n) for j in range(n) for k in range(n)]
    return brute_ideal(A, gens)


def brute_ideal_within(A, gens, multipliers):
    """Ideal of a subring generated by ``gens``: products with the given multipliers until stable."""
    K = scalars_of(A)
    T = table(A, K)
    mults = [[K(x) for x in m] for m in multipliers]
    span = [[K(x) for x in g] for g in gens]
    r = rank(span, K)
    while True:
        new = span + [mul(T, m, s, K) for s in span for m in mults] + [mul(T, s, m, K) for s in span for m in mults]
        r2 = rank(new, K)
        if r2 == r:
            return span
        span, r = new, r2
