import pytest
from hypothesis import given, strategies as st

from jordansplit import exactlin as el
from jordansplit.algebra import adjoin_unit, direct_product, field_algebra, grassmann, matrix_algebra
from jordansplit.exactlin import QQ, Subspace
from jordansplit.ideals import (
    commutator_generators,
    commutator_ideal,
    commutator_subspace,
    full,
    ideal_generated,
    is_ideal,
    is_subring,
    left_ideal_generated,
    right_ideal_generated,
    subring_generated,
    triple_ideal,
    verify_complement,
)

from test_algebra import ZOO, algebras


def span(A, labels):
    return Subspace.span(A.field, A.dim, [A.basis_vector(l) for l in labels])


@st.composite
def algebra_and_subspace(draw):
    A = draw(algebras)
    vecs = draw(st.lists(st.lists(st.integers(-2, 2), min_size=A.dim, max_size=A.dim), max_size=3))
    return A, Subspace.span(A.field, A.dim, vecs)


def test_ideal_generated_examples():
    M = matrix_algebra(2)
    assert ideal_generated(M, span(M, ["e12"])).is_full()
    G = grassmann(2)
    assert el.equals(ideal_generated(G, span(G, ["ab"])), span(G, ["ab"]))
    assert ideal_generated(G, Subspace.zero(QQ, 4)).is_zero()


def test_subring_generated_examples():
    M = matrix_algebra(2)
    assert subring_generated(M, full(M)).is_full()
    G = grassmann(2)
    assert el.equals(subring_generated(G, span(G, ["a", "b"])), span(G, ["a", "b", "ab"]))
    assert el.equals(subring_generated(M, span(M, ["e11"])), span(M, ["e11"]))


def test_commutator_subspace_examples():
    Q2 = direct_product(field_algebra(QQ), field_algebra(QQ))
    assert commutator_subspace(Q2, full(Q2), full(Q2)).is_zero()
    G = grassmann(2)
    assert el.equals(commutator_subspace(G, full(G), full(G)), span(G, ["ab"]))
    M = matrix_algebra(2)
    C = commutator_subspace(M, full(M), full(M))
    assert C.dim == 3
    assert all(v[0] + v[3] == 0 for v in C.basis)  # trace zero


def test_commutator_ideal_examples():
    G2, G3, M = grassmann(2), grassmann(3), matrix_algebra(2)
    assert el.equals(commutator_ideal(G2), span(G2, ["ab"]))
    assert el.equals(commutator_ideal(G3), span(G3, ["ab", "ac", "bc", "abc"]))
    assert commutator_ideal(M).is_full()


def test_triple_ideal_examples():
    assert triple_ideal(grassmann(2)).is_zero()
    assert triple_ideal(matrix_algebra(2)).is_full()
    assert triple_ideal(direct_product(field_algebra(QQ), field_algebra(QQ))).is_zero()


def test_double_commutator_in_m2():
    M = matrix_algebra(2)
    e12, e21 = M.element("e12"), M.element("e21")
    c = e12 * e21 - e21 * e12
    assert c * e12 - e12 * c == 2 * e12  # [[e12,e21],e12] = [e11 - e22, e12]


def test_verify_complement_examples():
    M = matrix_algebra(2)
    assert verify_complement(M, full(M), Subspace.zero(QQ, 4)).passed
    G = grassmann(2)
    chk = verify_complement(G, span(G, ["ab"]), span(G, ["1", "a", "b"]))
    assert not chk.passed
    assert chk.witness["clause"] == "C is an ideal"
    assert str(chk.witness["product"]) in ("ab", "-ab")
    P = direct_product(M, field_algebra(QQ))
    assert verify_complement(P, commutator_ideal(P), span(P, ["1"])).passed


def test_verify_complement_clauses():
    P = direct_product(matrix_algebra(2), field_algebra(QQ))
    K = commutator_ideal(P)
    chk = verify_complement(P, K, Subspace.zero(QQ, 5))
    assert not chk.passed and chk.witness["clause"] == "K + C = A"
    chk = verify_complement(P, K, full(P))
    assert not chk.passed and chk.witness["clause"] == "K ∩ C = 0"


def test_generator_tags():
    G = grassmann(2)
    gens = commutator_generators(G)
    n = G.dim
    pure = [g for g in gens if g.shape == "commutator"]
    assert len(pure) == n * (n - 1) // 2
    assert len(gens) == len(pure) * (n + 1)
    assert [g.describe(G) for g in pure][:3] == ["[1,a]", "[1,b]", "[1,ab]"]
    assert gens[len(pure)].describe(G) == "1[1,a]"


@given(algebras)
def test_generators_span_commutator_ideal(A):
    gens = commutator_generators(A)
    assert el.equals(Subspace.span(A.field, A.dim, [g.vector for g in gens]), commutator_ideal(A))


@given(algebra_and_subspace())
def test_ideal_closure_properties(data):
    A, S = data
    I = ideal_generated(A, S)
    assert S <= I
    assert is_ideal(A, I)[0]
    assert el.equals(ideal_generated(A, I), I)


@given(algebra_and_subspace())
def test_subring_closure_properties(data):
    A, S = data
    R = subring_generated(A, S)
    assert S <= R and is_subring(A, R)
    assert el.equals(subring_generated(A, R), R)


@given(algebra_and_subspace())
def test_one_sided_closures_inside_two_sided(data):
    A, S = data
    I = ideal_generated(A, S)
    assert left_ideal_generated(A, S) <= I and right_ideal_generated(A, S) <= I


@pytest.mark.parametrize("A", ZOO, ids=lambda A: A.name)
def test_left_ideal_of_lie_ideal_is_two_sided(A):
    C = commutator_subspace(A, full(A), full(A))
    assert el.equals(left_ideal_generated(A, C), commutator_ideal(A))


@pytest.mark.parametrize("A", ZOO, ids=lambda A: A.name)
def test_L_inside_K(A):
    assert triple_ideal(A) <= commutator_ideal(A)


@pytest.mark.parametrize("A", [A for A in ZOO if A.is_unital], ids=lambda A: A.name)
def test_unital_commutator_ideal_zero_iff_commutative(A):
    assert commutator_ideal(A).is_zero() == A.is_commutative()


def test_nonunital_ideal_is_not_just_products():
    # in T = span{e11, e12} the ideal generated by e12 needs no unit
    from jordansplit.frontend.instances import row_ring
    T = row_ring()
    assert el.equals(ideal_generated(T, span(T, ["e12"])), span(T, ["e12"]))
    R = adjoin_unit(T)
    assert el.equals(commutator_ideal(R), span(R, ["e12"]))
