import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_homometry import DomainError
from dihedral_homometry.dihedral import (
    DihedralElement,
    DihedralSet,
    act_left,
    act_right,
    group_elements,
    project,
)
from dihedral_homometry.enumeration import enumerate_dn
from dihedral_homometry.homometry import (
    decomposition_check,
    decomposition_left_check,
    decomposition_right_check,
    duality_transport,
    fourier_conditions,
    is_homometric,
    is_left_homometric,
    is_nontrivially_homometric,
    is_right_homometric,
    multiset_projection_check,
    prop6_applies,
    projection_check,
    triviality_witness,
    verdict,
)
from dihedral_homometry.music import parse_chord_set
from dihedral_homometry.zn import (
    ZnSet,
    invert,
    is_homometric_zn,
    reflect_mask,
    rotate_mask,
    trivial_relation_zn,
)

from conftest import dset

INTRO_A = dset(12, "0-,1+,3+,4-,8-")  # {c, Db, Eb, e, ab}
INTRO_B = dset(12, "0-,3+,4-,5+,8-")  # {c, Eb, e, F, ab}
D10_A = DihedralSet.from_elements(10, [(0, 1), (1, -1), (2, 1), (5, -1), (7, -1)])
D10_B = DihedralSet.from_elements(10, [(0, 1), (1, -1), (6, 1), (7, -1), (8, 1)])
SEC5_D = dset(12, "1+,3+,0-,4-,8-")
SEC5_E = dset(12, "3+,5+,0-,4-,8-")


@st.composite
def dpairs(draw):
    n = draw(st.integers(3, 16))
    r = lambda: draw(st.integers(0, (1 << n) - 1))  # noqa: E731
    A = DihedralSet.from_masks(n, r(), r())
    if draw(st.booleans()):
        g = DihedralElement(draw(st.integers(0, n - 1)), draw(st.sampled_from((1, -1))), n)
        B = act_left(g, A) if draw(st.booleans()) else act_right(A, g)
    else:
        B = DihedralSet.from_masks(n, r(), r())
    return A, B


def test_intro_pair_is_homometric_on_both_sides():
    for side in ("left", "right"):
        assert is_homometric(INTRO_A, INTRO_B, side)
        assert triviality_witness(INTRO_A, INTRO_B, side) is None
        assert is_nontrivially_homometric(INTRO_A, INTRO_B, side)
        assert fourier_conditions(INTRO_A, INTRO_B, side)


def test_d10_pair_is_left_but_not_right_homometric():
    assert is_left_homometric(D10_A, D10_B)
    assert not is_right_homometric(D10_A, D10_B)
    assert not is_homometric_zn(project(D10_A), project(D10_B))
    with pytest.raises(DomainError):
        projection_check(D10_A, D10_B)


def test_self_homometry():
    assert is_right_homometric(INTRO_A, INTRO_A) and is_left_homometric(INTRO_A, INTRO_A)
    assert projection_check(INTRO_A, INTRO_A)
    assert fourier_conditions(dset(7, ""), dset(7, ""), "right")


def test_modulus_mismatch():
    with pytest.raises(DomainError):
        is_right_homometric(INTRO_A, D10_A)
    with pytest.raises(DomainError):
        is_homometric(INTRO_A, INTRO_B, "up")


def test_section5_sets():
    for side in ("left", "right"):
        assert decomposition_check(SEC5_D, SEC5_E, side)
        assert is_homometric(SEC5_D, SEC5_E, side)
    assert prop6_applies(SEC5_D, SEC5_E)


def test_prop6_applies_examples():
    assert prop6_applies(parse_chord_set("{C,c,d,E,Ab}"), parse_chord_set("{C,d,e,E,Ab}"))
    assert not prop6_applies(dset(12, "1+,0-,2-"), dset(12, "2+,0-,1-"))


def test_witness_examples():
    g = DihedralElement(3, -1, 12)
    assert triviality_witness(INTRO_A, act_left(g, INTRO_A), "right") == g
    assert triviality_witness(INTRO_A, act_right(INTRO_A, g), "left") == g
    v = verdict(INTRO_A, act_left(g, INTRO_A), "right")
    assert v.homometric and not v.nontrivial and v.to_dict()["witness"] == "3-"
    assert triviality_witness(INTRO_A, dset(12, "0+"), "right") is None


def test_witness_is_first_in_encoding_order():
    # a symmetric set is fixed by several translates; the smallest index wins
    S = dset(12, "0+,6+")
    assert triviality_witness(S, S, "right") == DihedralElement(0, 1, 12)
    T = act_left(DihedralElement(6, 1, 12), S)
    assert triviality_witness(S, T, "right") == DihedralElement(0, 1, 12)


def _eq7(A, B):
    n = A.n
    for p in range(n):
        if rotate_mask(A.plus.bits, p, n) == B.plus.bits and rotate_mask(A.minus.bits, p, n) == B.minus.bits:
            return True
        if reflect_mask(A.plus.bits, p, n) == B.minus.bits and reflect_mask(A.minus.bits, p, n) == B.plus.bits:
            return True
    return False


def test_witness_matches_the_part_conditions_exhaustively():
    n = 8
    sets = [DihedralSet.from_elements(n, c) for c in combinations(group_elements(n), 3)]
    rng = random.Random(5)
    for A in sets:
        for B in rng.sample(sets, 40) + [act_left(DihedralElement(3, -1, n), A)]:
            assert (triviality_witness(A, B, "right") is not None) == _eq7(A, B)


def test_decomposition_checks_on_d6_exhaustive():
    sets = [DihedralSet.from_elements(6, c) for c in combinations(group_elements(6), 3)]
    for A in sets:
        for B in sets:
            assert decomposition_right_check(A, B) == is_right_homometric(A, B)
            assert decomposition_left_check(A, B) == is_left_homometric(A, B)


@given(dpairs())
def test_decomposition_and_fourier_agree_with_vectors(pair):
    A, B = pair
    for side in ("left", "right"):
        exact = is_homometric(A, B, side)
        assert decomposition_check(A, B, side) == exact
        assert fourier_conditions(A, B, side) == exact


@given(dpairs())
def test_duality_transport(pair):
    A, B = pair
    IA, IB = duality_transport(A, B)
    assert is_nontrivially_homometric(A, B, "right") == is_nontrivially_homometric(IA, IB, "left")
    assert is_right_homometric(A, B) == is_left_homometric(IA, IB)
    assert duality_transport(IA, IB) == (A, B)


def test_duality_on_intro_pair():
    IA, IB = duality_transport(INTRO_A, INTRO_B)
    assert is_nontrivially_homometric(IA, IB, "left")


@given(dpairs())
def test_prop6_verdicts_coincide(pair):
    A, B = pair
    if prop6_applies(A, B):
        assert is_right_homometric(A, B) == is_left_homometric(A, B)


def test_prop6_on_symmetric_parts():
    rng = random.Random(9)
    hits = 0
    for _ in range(500):
        n = rng.randint(3, 14)
        h = rng.getrandbits(n)
        sym = ZnSet(n, h) | invert(ZnSet(n, h), 0)
        A = DihedralSet.from_parts(sym, ZnSet(n, rng.getrandbits(n)))
        B = act_right(A, DihedralElement(rng.randrange(n), 1, n))
        if prop6_applies(A, B):
            hits += 1
            assert is_right_homometric(A, B) == is_left_homometric(A, B)
    assert hits > 50


def test_projection_of_right_pairs_with_disjoint_parts():
    for cls in enumerate_dn(12, 5, "right").classes:
        for A, B in combinations(cls.representatives, 2):
            assert multiset_projection_check(A, B)
            if A.plus.isdisjoint(A.minus) and B.plus.isdisjoint(B.minus):
                assert projection_check(A, B)


def test_projection_fails_when_parts_overlap():
    # right-homometric, but the residue 0 is shared by both parts of A
    A, B = dset(12, "0+,2+,4+,0-,6-"), dset(12, "0+,2+,4+,2-,8-")
    assert is_nontrivially_homometric(A, B, "right")
    assert not projection_check(A, B)
    assert multiset_projection_check(A, B)


def test_trivial_pairs_project_to_trivial_pairs():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(3, 16)
        A = DihedralSet.from_masks(n, rng.getrandbits(n), rng.getrandbits(n))
        g = DihedralElement(rng.randrange(n), rng.choice((1, -1)), n)
        assert trivial_relation_zn(project(A), project(act_left(g, A))) is not None
