from itertools import combinations

import numpy as np
import pytest

from dihedral_homometry import ContractViolation, DomainError, SizeLimitError, ZnSet
from dihedral_homometry.enumeration import enumerate_zn
from dihedral_homometry.dihedral import DihedralSet, project
from dihedral_homometry.homometry import is_homometric, is_right_homometric, triviality_witness
from dihedral_homometry.lift import (
    Decomposition,
    construct_lift,
    enumerate_lifts,
    rosenblatt_decomposition,
    rosenblatt_pair,
    verify_cor2,
)
from dihedral_homometry.music import format_chord_set
from dihedral_homometry.zn import iv

from conftest import zn

S1, S2 = zn(12, 0, 1, 4, 6), zn(12, 0, 1, 3, 7)


def test_all_interval_lift():
    d = Decomposition(zn(12, 0, 6), zn(12, 1, 4), zn(12, 1, 7), zn(12, 0, 3))
    r = construct_lift(d)
    assert r.liftedA == DihedralSet.from_elements(12, [(0, 1), (6, 1), (1, -1), (4, -1)])
    assert r.liftedB == DihedralSet.from_elements(12, [(0, 1), (3, 1), (1, -1), (7, -1)])
    assert (format_chord_set(r.liftedA), format_chord_set(r.liftedB)) == ("{C,db,e,Gb}", "{C,db,Eb,g}")
    assert r.nontrivial and is_right_homometric(r.liftedA, r.liftedB)


def test_printed_sign_assignment_is_not_homometric():
    # A+={0,6}, A-={1,4}, B+={1,7}, B-={0,3}
    A = DihedralSet.from_parts(zn(12, 0, 6), zn(12, 1, 4))
    B = DihedralSet.from_parts(zn(12, 1, 7), zn(12, 0, 3))
    assert not is_right_homometric(A, B)
    # it does happen to be a left-homometric pair
    assert is_homometric(A, B, "left")


def test_identical_sets_keep_a1_positive():
    d = Decomposition(zn(12, 0, 1), zn(12, 5), zn(12, 0, 1), zn(12, 5))
    r = construct_lift(d)
    assert r.liftedA.plus == zn(12, 0, 1) and r.liftedA == r.liftedB
    assert not r.nontrivial


def test_decomposition_validation():
    with pytest.raises(DomainError):
        Decomposition(zn(12, 0, 1), zn(12, 1), zn(12, 0), zn(12, 2))
    with pytest.raises(DomainError):
        Decomposition(zn(12, 0), zn(10, 1), zn(12, 0), zn(12, 1))
    bad = Decomposition(zn(12, 0, 1), zn(12, 4, 6), zn(12, 0, 3), zn(12, 1, 7))
    with pytest.raises(DomainError):
        construct_lift(bad)


def test_rosenblatt_examples():
    assert rosenblatt_pair(3, 1) == (S1, S2)
    assert rosenblatt_pair(2, 1) == (zn(8, 0, 1, 3, 4), zn(8, 0, 1, 2, 5))
    for N, a in ((1, 1), (3, 0), (3, 3)):
        with pytest.raises(DomainError):
            rosenblatt_pair(N, a)


@pytest.mark.parametrize("N", range(2, 9))
def test_rosenblatt_family_lifts(N):
    for a in range(1, N):
        A, B = rosenblatt_pair(N, a)
        assert iv(A) == iv(B)
        d = rosenblatt_decomposition(N, a)
        assert d.A == A and d.B == B and d.satisfies_hypotheses()
        r = construct_lift(d)
        assert project(r.liftedA) == A and project(r.liftedB) == B
        assert is_right_homometric(r.liftedA, r.liftedB)
        assert triviality_witness(r.liftedA, r.liftedB, "right") is None
        assert r.nontrivial


def test_enumerate_lifts_contains_table_pair():
    lifts = enumerate_lifts(S1, S2, "right")
    assert lifts
    rows = {(format_chord_set(r.liftedA), format_chord_set(r.liftedB)) for r in lifts}
    assert ("{C,db,e,Gb}", "{C,db,Eb,g}") in rows
    for r in lifts:
        assert project(r.liftedA) == S1 and project(r.liftedB) == S2
        assert is_right_homometric(r.liftedA, r.liftedB)
        assert triviality_witness(r.liftedA, r.liftedB, "right") is None


def test_enumerate_left_lifts():
    lifts = enumerate_lifts(S1, S2, "left")
    assert lifts
    for r in lifts:
        assert is_homometric(r.liftedA, r.liftedB, "left")
        assert triviality_witness(r.liftedA, r.liftedB, "left") is None


def test_enumerate_lifts_edge_cases():
    assert enumerate_lifts(zn(12, 0), zn(12, 0)) == []
    with pytest.raises(DomainError):
        enumerate_lifts(zn(12, 0, 1), zn(12, 0, 2))
    with pytest.raises(SizeLimitError):
        enumerate_lifts(ZnSet.full(24), ZnSet.full(24))


def test_enumerate_lifts_is_deterministic():
    assert enumerate_lifts(S1, S2) == enumerate_lifts(S1, S2)


def test_cor2_small_cardinalities():
    report = verify_cor2([4, 5])
    assert report.failures == []
    assert report.to_dict()["pairs"] == {"4": 1, "5": 3}
    assert verify_cor2([]).total == 0
    with pytest.raises(DomainError):
        verify_cor2([2])


def test_cor2_pairs_are_nontrivial_zn_pairs():
    report = verify_cor2([6])
    assert report.total == 15 and not report.failures
    for e in report.entries[6]:
        assert iv(e.A) == iv(e.B) and e.example is not None


def _conforming_decompositions():
    for p in range(3, 10):
        for cls in enumerate_zn(12, p).classes:
            for A, B in combinations(cls.representatives, 2):
                for k in range(1, p):
                    for a1 in combinations(A, k):
                        A1 = zn(12, *a1)
                        for b1 in combinations(B, k):
                            B1 = zn(12, *b1)
                            d = Decomposition(A1, ZnSet(12, A.bits ^ A1.bits), B1, ZnSet(12, B.bits ^ B1.bits))
                            if d.satisfies_hypotheses():
                                yield d


def _cross(X, Y):
    return np.fft.fft(X.indicator()) * np.conj(np.fft.fft(Y.indicator()))


def test_conforming_decompositions_lift_iff_one_fourier_case_holds():
    tried = failed = 0
    for d in _conforming_decompositions():
        tried += 1
        z, w = _cross(d.A1, d.A2), _cross(d.B1, d.B2)
        # pointwise, each frequency matches w or its conjugate
        assert np.all(np.isclose(z, w) | np.isclose(z, np.conj(w)))
        uniform = np.allclose(z, w) or np.allclose(z, np.conj(w))
        try:
            r = construct_lift(d)
        except ContractViolation:
            failed += 1
            assert not uniform
            continue
        assert uniform
        assert project(r.liftedA) == d.A and project(r.liftedB) == d.B
        assert is_right_homometric(r.liftedA, r.liftedB)
    # the pointwise choice is not uniform for most splits
    assert (tried, failed) == (480, 314)


def test_unliftable_decomposition():
    d = Decomposition(zn(12, 1), zn(12, 0, 4, 6), zn(12, 0), zn(12, 1, 3, 7))
    assert d.satisfies_hypotheses()
    with pytest.raises(ContractViolation):
        construct_lift(d)
    # the pair itself still lifts through another split
    assert enumerate_lifts(d.A, d.B)
