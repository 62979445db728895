import math
from collections import Counter
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_homometry import DomainError, ParseError, ZnSet
from dihedral_homometry.dihedral import (
    DihedralAutomorphism,
    DihedralElement,
    DihedralSet,
    act_left,
    act_right,
    apply_automorphism,
    automorphisms,
    group_elements,
    identity,
    interval_preserving_automorphisms,
    inv,
    left_int,
    left_iv,
    mul,
    project,
    right_int,
    right_iv,
    set_inversion,
)
from dihedral_homometry.zn import transpose

from conftest import dset


def E(k, eps, n=12):
    return DihedralElement(k, eps, n)


def brute_iv(S, side):
    """Interval multiset straight from the element-level interval functions."""
    f = right_int if side == "right" else left_int
    return Counter(f(x, y).as_pair() for x, y in product(S, S))


@st.composite
def dsets(draw, n=None):
    n = n or draw(st.integers(1, 20))
    return DihedralSet.from_masks(n, draw(st.integers(0, (1 << n) - 1)), draw(st.integers(0, (1 << n) - 1)))


@st.composite
def set_and_element(draw):
    S = draw(dsets())
    g = DihedralElement(draw(st.integers(0, S.n - 1)), draw(st.sampled_from((1, -1))), S.n)
    return S, g


# ---------------------------------------------------------------- elements


def test_products_from_the_triad_examples():
    assert mul(E(7, -1), E(0, 1)) == E(7, -1)
    assert mul(E(4, 1), E(9, -1)) == E(1, -1)
    assert E(4, 1) * E(9, -1) == E(1, -1)


def test_inverses():
    assert inv(E(3, 1)) == E(9, 1)
    assert inv(E(5, -1)) == E(5, -1)
    assert ~E(3, 1) == E(9, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 12, 36])
def test_identity_and_inverse_laws(n):
    e = identity(n)
    for x in group_elements(n):
        assert mul(x, inv(x)) == e == mul(inv(x), x)
        assert mul(x, e) == x == mul(e, x)


@pytest.mark.parametrize("n", range(1, 9))
def test_associativity_exhaustive(n):
    G = group_elements(n)
    for x, y, z in product(G, repeat=3):
        assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_element_text_and_index():
    x = DihedralElement.parse(12, "4-")
    assert x == E(4, -1) and str(x) == "4-" and x.index == 16
    assert DihedralElement.from_index(16, 12) == x
    with pytest.raises(ParseError):
        DihedralElement.parse(12, "4*")
    with pytest.raises(ParseError):
        DihedralElement.parse(12, "12+")
    with pytest.raises(DomainError):
        DihedralElement(0, 0, 12)


def test_modulus_mismatch():
    with pytest.raises(DomainError):
        mul(E(0, 1, 12), E(0, 1, 10))


# ---------------------------------------------------------------- intervals


def test_interval_examples_c_to_db():
    c, Db = E(0, -1), E(1, 1)
    assert right_int(c, Db) == E(11, -1)
    assert left_int(c, Db) == E(1, -1)
    assert right_int(c, c) == identity(12)


@pytest.mark.parametrize("n", range(1, 13))
def test_interval_coherence(n):
    G = group_elements(n)
    for x, y in product(G, G):
        assert mul(left_int(x, y), x) == y
        assert mul(x, right_int(x, y)) == y


SECTION2 = DihedralSet.from_elements(12, [(0, 1), (2, -1), (3, 1)])


def test_section2_right_multiset_with_corrected_entry():
    # the printed list has "(11, 11)" for the eighth entry; the arithmetic gives (11, -1)
    printed = [(0, 1), (2, -1), (3, 1), (2, -1), (0, 1), (11, -1), (9, 1), (11, -1), (0, 1)]
    assert right_iv(SECTION2).multiset() == Counter(printed)
    assert right_int(E(3, 1), E(2, -1)) == E(11, -1)


def test_section2_left_multiset():
    printed = [(0, 1), (2, -1), (3, 1), (2, -1), (0, 1), (5, -1), (9, 1), (5, -1), (0, 1)]
    assert left_iv(SECTION2).multiset() == Counter(printed)


def test_section2_inverse_set_has_other_vectors():
    inverse = DihedralSet.from_elements(12, [(0, 1), (2, -1), (-3, 1)])
    assert set_inversion(SECTION2) == inverse
    r = [(0, 1), (2, -1), (9, 1), (2, -1), (0, 1), (5, -1), (3, 1), (5, -1), (0, 1)]
    l = [(0, 1), (2, -1), (9, 1), (2, -1), (0, 1), (11, -1), (3, 1), (11, -1), (0, 1)]
    assert right_iv(inverse).multiset() == Counter(r)
    assert left_iv(inverse).multiset() == Counter(l)
    assert right_iv(inverse) != right_iv(SECTION2)


def test_singleton_vector():
    S = dset(12, "5-")
    for vec in (right_iv(S), left_iv(S)):
        assert vec[identity(12)] == 1 and vec.total() == 1


@given(dsets())
def test_vectors_match_pair_enumeration(S):
    for side, f in (("right", right_iv), ("left", left_iv)):
        assert f(S).multiset() == +brute_iv(S.elements(), side)
        assert f(S).total() == len(S) ** 2
        assert f(S)[(0, 1)] >= len(S)


@given(set_and_element())
def test_actions_preserve_the_dual_vector(pair):
    S, g = pair
    assert right_iv(act_left(g, S)) == right_iv(S)
    assert left_iv(act_right(S, g)) == left_iv(S)


@given(set_and_element())
def test_actions_match_elementwise_products(pair):
    S, g = pair
    assert act_left(g, S) == DihedralSet.from_elements(S.n, [mul(g, x) for x in S])
    assert act_right(S, g) == DihedralSet.from_elements(S.n, [mul(x, g) for x in S])


def test_actions_exhaustive_small():
    for n in range(1, 11):
        G = group_elements(n)
        for size in range(1, min(4, 2 * n) + 1):
            for combo in combinations(G, size):
                S = DihedralSet.from_elements(n, combo)
                rv, lv = right_iv(S), left_iv(S)
                for g in G:
                    assert right_iv(act_left(g, S)) == rv
                    assert left_iv(act_right(S, g)) == lv


def test_translation_by_rotation():
    S = dset(12, "0-,1+,3+,4-,8-")
    T = act_left(E(5, 1), S)
    assert T.plus == transpose(S.plus, 5) and T.minus == transpose(S.minus, 5)
    assert act_left(identity(12), S) == S


# ---------------------------------------------------------------- sets


def test_set_parsing():
    S = dset(12, "0-, 1+,3+,4-,8-")
    assert S.plus.residues() == (1, 3) and S.minus.residues() == (0, 4, 8)
    assert str(S) == "1+,3+,0-,4-,8-"
    assert len(S) == 5 and E(4, -1) in S and E(4, 1) not in S
    with pytest.raises(ParseError) as info:
        dset(12, "0-,1+,1+")
    assert info.value.position == 6
    with pytest.raises(ParseError):
        dset(12, "0-,x")


def test_duplicate_elements_collapse():
    S = DihedralSet.from_elements(12, [(1, 1), (1, 1), (2, -1)])
    assert len(S) == 2


def test_set_inversion_example():
    S = dset(12, "0-,1+,3+,4-,8-")
    assert set_inversion(S) == DihedralSet.from_elements(12, [(0, -1), (11, 1), (9, 1), (4, -1), (8, -1)])
    only_minus = dset(12, "2-,5-")
    assert set_inversion(only_minus) == only_minus


@given(dsets())
def test_set_inversion_is_elementwise_inverse_and_involution(S):
    assert set_inversion(S) == DihedralSet.from_elements(S.n, [inv(x) for x in S])
    assert set_inversion(set_inversion(S)) == S


def test_projection_examples():
    assert project(dset(12, "0-,1+,3+,4-,8-")) == ZnSet.from_residues(12, (0, 1, 3, 4, 8))
    assert project(dset(12, "")) == ZnSet(12)
    assert len(project(dset(12, "0+,0-"))) == 1


@given(dsets(), st.integers(0, 30))
def test_projection_commutes_with_rotation(S, p):
    if S.plus.isdisjoint(S.minus):
        assert project(act_left(DihedralElement(p, 1, S.n), S)) == transpose(project(S), p)


def test_mask_roundtrip():
    S = dset(12, "0-,1+,3+,4-,8-")
    assert DihedralSet.from_mask(12, S.mask) == S
    assert S.key == (S.plus.bits, S.minus.bits)


# ---------------------------------------------------------------- automorphisms


def test_automorphism_examples():
    assert apply_automorphism(DihedralAutomorphism(1, 5, 12), E(3, -1)) == E(4, -1)
    ident = DihedralAutomorphism(0, 1, 12)
    assert all(ident(x) == x for x in group_elements(12))
    with pytest.raises(DomainError):
        DihedralAutomorphism(0, 4, 12)


@pytest.mark.parametrize("n", range(3, 13))
def test_automorphism_group(n):
    auts = automorphisms(n)
    phi = sum(1 for k in range(1, n) if math.gcd(k, n) == 1)
    assert len(auts) == n * phi == len({(a.l, a.k) for a in auts})
    G = group_elements(n)
    for a in auts:
        images = [a(x) for x in G]
        assert len(set(images)) == 2 * n
        for x, y in product(G, G):
            assert a(mul(x, y)) == mul(a(x), a(y))
    b, c = auts[-1], auts[len(auts) // 2]
    assert all(b.compose(c)(x) == b(c(x)) for x in G)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_only_identity_preserves_intervals(n):
    found = interval_preserving_automorphisms(n)
    assert len(found) == 1 and found[0].is_identity()


def test_interval_preserving_needs_n_at_least_3():
    with pytest.raises(DomainError):
        interval_preserving_automorphisms(2)
