"""Executable verification suites (each returns a :class:`SuiteResult`)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .dihedral import (
    DihedralElement,
    DihedralSet,
    act_left,
    act_right,
    interval_preserving_automorphisms,
    project,
)
from .enumeration import (
    canonicalize,
    enumerate_dn,
    enumerate_zn,
    inversion_maps_classes,
    simultaneous_from_report,
)
from .homometry import (
    decomposition_check,
    fourier_conditions,
    is_homometric,
    is_left_homometric,
    is_nontrivially_homometric,
    is_right_homometric,
    multiset_projection_check,
    prop6_applies,
    triviality_witness,
)
from .lift import construct_lift, rosenblatt_decomposition, verify_cor2
from .music import parse_chord_set
from .tables import load_table1, table1_golden_classes, table2_cells
from .zn import ZnSet, dft, invert, is_homometric_zn

__all__ = ["SuiteResult", "SUITES", "run_suite"]


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    details: list[str] = field(default_factory=list)

    def check(self, cond: bool, message: str) -> bool:
        if not cond:
            self.ok = False
            self.details.append("FAIL " + message)
        return cond

    def note(self, message: str) -> None:
        self.details.append(message)


def _random_dset(rng: random.Random, n: int) -> DihedralSet:
    return DihedralSet.from_masks(n, rng.getrandbits(n), rng.getrandbits(n))


def _random_pair(rng: random.Random, n: int):
    """Random pair; half of them are translates, so homometric ones are well represented."""
    A = _random_dset(rng, n)
    if rng.random() < 0.5:
        return A, _random_dset(rng, n)
    g = DihedralElement(rng.randrange(n), rng.choice((1, -1)), n)
    return A, (act_left(g, A) if rng.random() < 0.5 else act_right(A, g))


def suite_prop2(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("prop2")
    for n in range(3, max_n + 1):
        found = interval_preserving_automorphisms(n)
        res.check(len(found) == 1 and found[0].is_identity(), f"n={n}: {found}")
    res.note(f"only the identity preserves intervals for 3 <= n <= {max_n}")
    return res


def suite_prop4(cells=((8, 4), (12, 4), (12, 5), (10, 6), (12, 6), (12, 7))) -> SuiteResult:
    """Projection property.

    Right pairs whose sign parts have disjoint projections must project to
    homometric sets; all right pairs must do so when residues are counted with
    multiplicity.  Pairs with overlapping parts can lose homometry under the
    plain projection and are only counted.
    """
    res = SuiteResult("prop4")
    disjoint = overlapping = lost = 0
    for n, p in cells:
        for cls in enumerate_dn(n, p, "right").classes:
            for A, B in combinations(cls.representatives, 2):
                res.check(multiset_projection_check(A, B), f"D_{n}: multiset projections of {A} / {B}")
                plain = is_homometric_zn(project(A), project(B))
                if A.plus.isdisjoint(A.minus) and B.plus.isdisjoint(B.minus):
                    disjoint += 1
                    res.check(plain, f"D_{n} pair {A} / {B} projects to non-homometric sets")
                else:
                    overlapping += 1
                    lost += not plain
    A = DihedralSet.from_elements(10, [(0, 1), (1, -1), (2, 1), (5, -1), (7, -1)])
    B = DihedralSet.from_elements(10, [(0, 1), (1, -1), (6, 1), (7, -1), (8, 1)])
    res.check(is_left_homometric(A, B), "D_10 counterexample should be left-homometric")
    res.check(project(A) == ZnSet.from_residues(10, (0, 1, 2, 5, 7)), "projection of A")
    res.check(project(B) == ZnSet.from_residues(10, (0, 1, 6, 7, 8)), "projection of B")
    res.check(not is_homometric_zn(project(A), project(B)), "D_10 projections should not be homometric")
    res.note(f"{disjoint} right pairs with disjoint parts project to homometric pairs")
    res.note(f"{overlapping} pairs with overlapping parts: multiset projections homometric, "
             f"{lost} plain projections are not")
    res.note("D_10 left counterexample confirmed")
    return res


def suite_prop6(samples: int = 2000, seed: int = 3) -> SuiteResult:
    res = SuiteResult("prop6")
    checked = 0
    for n, p in ((8, 4), (10, 5), (12, 4), (12, 5)):
        for side in ("right", "left"):
            for cls in enumerate_dn(n, p, side).classes:
                for A, B in combinations(cls.representatives, 2):
                    if prop6_applies(A, B):
                        checked += 1
                        res.check(is_right_homometric(A, B) == is_left_homometric(A, B), f"{A} / {B}")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, 14)
        half = rng.getrandbits(n)
        sym = ZnSet(n, half) | invert(ZnSet(n, half), 0)
        A = DihedralSet.from_parts(sym, ZnSet(n, rng.getrandbits(n)))
        g = DihedralElement(rng.randrange(n), 1, n)
        B = act_right(A, g) if rng.random() < 0.5 else DihedralSet.from_parts(sym, ZnSet(n, rng.getrandbits(n)))
        if prop6_applies(A, B):
            checked += 1
            res.check(is_right_homometric(A, B) == is_left_homometric(A, B), f"D_{n}: {A} / {B}")
    for pair in (("{C,c,d,E,Ab}", "{C,d,e,E,Ab}"), ("{C,db,eb,E,Ab}", "{C,eb,E,f,Ab}")):
        A, B = (parse_chord_set(t) for t in pair)
        res.check(prop6_applies(A, B), f"{pair} should have an I_0-symmetric common part")
        for side in ("left", "right"):
            res.check(is_nontrivially_homometric(A, B, side), f"{pair} missing from the {side} listing")
    res.note(f"{checked} pairs with I_0-symmetric parts have equal left/right verdicts")
    return res


def suite_thm1(samples: int = 1000, seed: int = 1) -> SuiteResult:
    res = SuiteResult("thm1")
    sets = [DihedralSet.from_elements(6, [(i % 6, 1 if i < 6 else -1) for i in c])
            for c in combinations(range(12), 3)]
    for A in sets:
        for B in sets:
            for side in ("left", "right"):
                if decomposition_check(A, B, side) != is_homometric(A, B, side):
                    res.check(False, f"D_6 {side}: {A} / {B}")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, 18)
        A, B = _random_pair(rng, n)
        for side in ("left", "right"):
            res.check(decomposition_check(A, B, side) == is_homometric(A, B, side), f"D_{n} {side}: {A} / {B}")
    res.note(f"decomposition == interval vector on {len(sets) ** 2} D_6 pairs and {samples} random pairs")
    return res


def suite_thm4(samples: int = 1000, seed: int = 2) -> SuiteResult:
    res = SuiteResult("thm4")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, 16)
        A, B = _random_pair(rng, n)
        for side in ("left", "right"):
            res.check(fourier_conditions(A, B, side) == decomposition_check(A, B, side), f"D_{n} {side}: {A} / {B}")
    for side in ("left", "right"):
        for cls in enumerate_dn(12, 5, side).classes:
            for A, B in combinations(cls.representatives, 2):
                res.check(fourier_conditions(A, B, side), f"D_12 {side} class pair {A} / {B}")
    for n in range(1, 17):
        subsets = [ZnSet(n, b) for b in range(1 << n)] if n <= 8 else [ZnSet(n, rng.getrandbits(n)) for _ in range(300)]
        for _ in range(300):
            A, B = rng.choice(subsets), rng.choice(subsets)
            if rng.random() < 0.3:
                B = invert(A, rng.randrange(n))
            gap = np.max(np.abs(np.abs(dft(A).values) - np.abs(dft(B).values)))
            close = bool(gap <= 1e-9)
            res.check(close == is_homometric_zn(A, B), f"Z_{n}: {A} / {B}")
    res.note("spectral conditions agree with exact interval comparisons")
    return res


def suite_thm2(cells=None) -> SuiteResult:
    res = SuiteResult("thm2")
    cells = cells or [(c["n"], c["p"]) for c in table2_cells() if c["n"] <= 12]
    for n, p in cells:
        right, left = enumerate_dn(n, p, "right"), enumerate_dn(n, p, "left")
        res.check(right.tuples == left.tuples, f"D_{n} p={p}: {right.tuples} != {left.tuples}")
        res.check(inversion_maps_classes(right, left), f"D_{n} p={p}: inversion does not map classes")
    res.note(f"left/right censuses agree and correspond under inversion on {len(cells)} cells")
    return res


def suite_cor2(cardinalities=range(4, 9)) -> SuiteResult:
    res = SuiteResult("cor2")
    report = verify_cor2(cardinalities)
    res.check(not report.failures, f"unliftable pairs: {report.to_dict()['failures']}")
    for N in range(2, 9):
        for a in range(1, N):
            r = construct_lift(rosenblatt_decomposition(N, a))
            ok = is_right_homometric(r.liftedA, r.liftedB) and triviality_witness(r.liftedA, r.liftedB, "right") is None
            res.check(ok and r.nontrivial, f"Rosenblatt N={N} a={a}")
    res.note(f"{report.total} Z_12 pairs lifted; Rosenblatt pairs N=2..8 lifted non-trivially")
    return res


def suite_table1() -> SuiteResult:
    res = SuiteResult("table1")
    for side in ("left", "right"):
        for p in (4, 5):
            golden = {frozenset(canonicalize(s, side).representative for s in row)
                      for row in table1_golden_classes(side, p)}
            computed = {frozenset(o.representative for o in c.orbits) for c in enumerate_dn(12, p, side).classes}
            res.check(golden == computed, f"{side} p={p}: listing differs")
    res.note(f"listings agree ({len(load_table1()['errata'])} documented misprints corrected)")
    return res


def suite_table2(max_n: int = 18, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("table2")
    for c in table2_cells():
        if c["n"] > max_n:
            continue
        right = enumerate_dn(c["n"], c["p"], "right", jobs)
        sim = simultaneous_from_report(right)
        res.check(right.tuples == c["right"], f"n={c['n']} p={c['p']}: {right.tuples} != {c['right']}")
        res.check(sim.tuples == c["simultaneous"], f"n={c['n']} p={c['p']} simultaneous: {sim.tuples}")
    res.note("every published cell reproduced" if res.ok else "mismatching cells")
    return res


def suite_zn() -> SuiteResult:
    res = SuiteResult("zn")
    first_pair = min(((n, p) for n in range(3, 13) for p in range(1, n) if enumerate_zn(n, p).tuples),
                     default=None)
    res.check(first_pair is not None and first_pair[0] == 8, f"first Z_n pair at {first_pair}")
    res.check(bool(enumerate_zn(8, 4).tuples), "Z_8 has a homometric pair at p=4")
    for n in range(3, 16):
        for p in range(0, min(n, 6) + 1):
            res.check(not any(t >= 3 for t in enumerate_zn(n, p).tuples), f"triple in Z_{n} at p={p}")
    res.check(enumerate_zn(16, 6).tuples.get(3, 0) >= 1, "no triple in Z_16 at p=6")
    res.note("first pair at n=8, p=4; first triple at n=16, p=6")
    return res


SUITES = {
    "prop2": suite_prop2,
    "prop4": suite_prop4,
    "prop6": suite_prop6,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "thm4": suite_thm4,
    "cor2": suite_cor2,
    "table1": suite_table1,
    "table2": suite_table2,
    "zn": suite_zn,
}


def run_suite(name: str) -> SuiteResult:
    return SUITES[name]()
