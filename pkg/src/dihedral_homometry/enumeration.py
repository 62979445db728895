"""Census of homometric classes by canonical-orbit enumeration.

Every p-subset is visited once; it is kept only when it is the minimum of its
orbit under the trivial group of the chosen side (left translations for
right-homometry, right translations for left-homometry, T/I for Z_n).  The
kept representatives are grouped by exact interval vector and a class holding
``t >= 2`` orbits is reported as a homometric t-uple.

Counting conventions (both chosen so that the published census is reproduced):

* In D_n only *mixed* sets are counted by default, i.e. sets with at least one
  rotation and at least one reflection.  A set inside a single coset is a
  translate of a Z_n set and its classes are Z_n classes counted with T only;
  pass ``include_pure=True`` to keep them.
* A right t-uple is *simultaneously* left-homometric when its members admit
  representatives with equal left interval vectors.  Left-translating a set
  conjugates its left interval vector, so members are compared by their left
  vector modulo conjugation (``convention="conjugate"``).  The stricter
  ``convention="raw"`` compares the canonical representatives as stored.
"""
from __future__ import annotations

import logging
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from ._kernels import _scan
from .dihedral import (
    DihedralIntervalVector,
    DihedralSet,
    _check_side,
    act_left,
    act_right,
    group_elements,
    left_int,
    left_iv,
    right_int,
    set_inversion,
)
from .errors import DomainError
from .zn import IntervalVector, ZnSet, invert, transpose

__all__ = [
    "CanonicalOrbit",
    "HomometricClass",
    "EnumerationReport",
    "SimultaneousReport",
    "canonicalize",
    "canonicalize_zn",
    "enumerate_dn",
    "enumerate_zn",
    "enumerate_simultaneous",
    "simultaneous_from_report",
    "default_jobs",
    "TUPLE_NAMES",
    "format_tuples",
]

log = logging.getLogger(__name__)

MAX_N = 36
MAX_CARD = 12
JOBS_ENV = "DIHEDRAL_HOMOMETRY_JOBS"

TUPLE_NAMES = {
    2: "pairs", 3: "triples", 4: "quadruples", 5: "quintuples",
    6: "sextuples", 7: "septuples", 8: "octuples",
}


def _tuple_name(t: int, count: int) -> str:
    name = TUPLE_NAMES.get(t, f"{t}-uples")
    return name[:-1] if count == 1 else name


def format_tuples(tuples: dict) -> str:
    """``{2: 8, 3: 2}`` -> ``"8 pairs, 2 triples"``; no classes -> ``"none"``."""
    if not tuples:
        return "none"
    return ", ".join(f"{c} {_tuple_name(t, c)}" for t, c in sorted(tuples.items()))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- canonical forms


@dataclass(frozen=True)
class CanonicalOrbit:
    representative: object  # DihedralSet or ZnSet
    orbit_size: int
    side: str  # "left", "right" or "zn"


def canonicalize(S: DihedralSet, side: str) -> CanonicalOrbit:
    """Minimum (by (plus, minus) mask) of the orbit of S under the side's trivial group."""
    _check_side(side)
    images = [act_left(g, S) if side == "right" else act_right(S, g) for g in group_elements(S.n)]
    rep = min(images, key=lambda s: s.key)
    return CanonicalOrbit(rep, len(set(images)), side)


def canonicalize_zn(A: ZnSet) -> CanonicalOrbit:
    images = [transpose(A, p) for p in range(A.n)] + [invert(A, p) for p in range(A.n)]
    rep = min(images, key=lambda s: s.bits)
    return CanonicalOrbit(rep, len(set(images)), "zn")


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class HomometricClass:
    key: object  # DihedralIntervalVector or IntervalVector
    orbits: tuple  # of CanonicalOrbit, sorted by representative key

    @property
    def size(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list:
        return [o.representative for o in self.orbits]


@dataclass
class EnumerationReport:
    n: int
    cardinality: int
    side: str  # "left", "right" or "zn"
    tuples: dict[int, int]
    classes: list[HomometricClass] = field(default_factory=list)
    orbit_count: int = 0
    subsets_covered: int = 0
    include_pure: bool = False

    def summary(self) -> str:
        return format_tuples(self.tuples)

    def to_dict(self, with_classes: bool = False) -> dict:
        out = {
            "n": self.n,
            "p": self.cardinality,
            "side": self.side,
            "tuples": {str(t): c for t, c in sorted(self.tuples.items())},
            "orbits": self.orbit_count,
            "subsets": self.subsets_covered,
        }
        if self.side != "zn":
            out["include_pure"] = self.include_pure
        if with_classes:
            out["classes"] = [
                {
                    "vector": list(c.key.counts),
                    "representatives": [str(o.representative) for o in c.orbits],
                }
                for c in self.classes
            ]
        return out


@dataclass
class SimultaneousReport:
    n: int
    cardinality: int
    convention: str
    tuples: dict[int, int]
    groups: list[tuple] = field(default_factory=list)  # tuples of DihedralSet

    def summary(self) -> str:
        return format_tuples(self.tuples)

    def to_dict(self, with_classes: bool = False) -> dict:
        out = {
            "n": self.n,
            "p": self.cardinality,
            "side": "simultaneous",
            "convention": self.convention,
            "tuples": {str(t): c for t, c in sorted(self.tuples.items())},
        }
        if with_classes:
            out["classes"] = [[str(s) for s in g] for g in self.groups]
        return out


# ---------------------------------------------------------------- scanning


def _dn_tables(n: int, side: str):
    G = group_elements(n)
    m = 2 * n
    pt_hi = np.array([1 << i if i < n else 0 for i in range(m)], dtype=np.int64)
    pt_lo = np.array([1 << (i - n) if i >= n else 0 for i in range(m)], dtype=np.int64)
    img = np.empty((m, m), dtype=np.int64)
    intv = np.empty((m, m), dtype=np.int64)
    for gi, g in enumerate(G):
        for xi, x in enumerate(G):
            img[gi, xi] = (g * x).index if side == "right" else (x * g).index
            f = right_int if side == "right" else left_int
            intv[gi, xi] = f(g, x).index
    return m, pt_hi, pt_lo, pt_hi[img], pt_lo[img], intv, m


def _zn_tables(n: int):
    pt_hi = np.array([1 << i for i in range(n)], dtype=np.int64)
    pt_lo = np.zeros(n, dtype=np.int64)
    img = np.empty((2 * n, n), dtype=np.int64)
    for p in range(n):
        for a in range(n):
            img[p, a] = (p + a) % n
            img[n + p, a] = (p - a) % n
    intv = np.array([[(b - a) % n for b in range(n)] for a in range(n)], dtype=np.int64)
    return n, pt_hi, pt_lo, pt_hi[img], pt_lo[img], intv, n


def _tables(kind: str, n: int):
    return _zn_tables(n) if kind == "zn" else _dn_tables(n, kind)


_EMPTY = np.empty(0, dtype=np.int64)


def _scan_firsts(args):
    kind, n, p, firsts, mixed_only = args
    m, pt_hi, pt_lo, img_hi, img_lo, intv, n_int = _tables(kind, n)
    parts = []
    for first in firsts:
        cnt = _scan(m, p, first, pt_hi, pt_lo, img_hi, img_lo, intv, n_int, mixed_only, False,
                    _EMPTY, _EMPTY, _EMPTY, np.empty((0, n_int), dtype=np.int64))
        hi = np.empty(cnt, dtype=np.int64)
        lo = np.empty(cnt, dtype=np.int64)
        st = np.empty(cnt, dtype=np.int64)
        ivs = np.empty((cnt, n_int), dtype=np.int64)
        if cnt:
            _scan(m, p, first, pt_hi, pt_lo, img_hi, img_lo, intv, n_int, mixed_only, True, hi, lo, st, ivs)
        parts.append((hi, lo, st, ivs))
    return parts


def _partition(m: int, p: int, jobs: int) -> list[list[int]]:
    """Split leading-element values into ``jobs`` contiguous ranges of similar work."""
    firsts = list(range(0, m - p + 1))
    weights = [comb(m - f - 1, p - 1) for f in firsts]
    total = sum(weights)
    chunks, cur, acc = [], [], 0
    for f, w in zip(firsts, weights):
        cur.append(f)
        acc += w
        if len(chunks) < jobs - 1 and acc >= total * (len(chunks) + 1) / jobs:
            chunks.append(cur)
            cur = []
    if cur:
        chunks.append(cur)
    return chunks


def _census(kind: str, n: int, p: int, mixed_only: bool, jobs: int):
    """All canonical representatives as sorted arrays (hi, lo, stab, ivs)."""
    m = n if kind == "zn" else 2 * n
    n_int = m
    if p == 0:
        if mixed_only:
            return (_EMPTY, _EMPTY, _EMPTY, np.empty((0, n_int), dtype=np.int64)), m
        # the empty set is its own orbit with full stabilizer
        return (np.zeros(1, np.int64), np.zeros(1, np.int64), np.array([m if kind != "zn" else 2 * n]),
                np.zeros((1, n_int), dtype=np.int64)), m
    chunks = _partition(m, p, max(1, jobs))
    tasks = [(kind, n, p, c, mixed_only) for c in chunks]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_firsts, tasks))
    else:
        results = [_scan_firsts(t) for t in tasks]
    parts = [part for res in results for part in res]
    hi = np.concatenate([q[0] for q in parts])
    lo = np.concatenate([q[1] for q in parts])
    st = np.concatenate([q[2] for q in parts])
    ivs = np.concatenate([q[3] for q in parts]) if parts else np.empty((0, n_int), np.int64)
    order = np.lexsort((lo, hi))
    return (hi[order], lo[order], st[order], ivs[order]), m


def _group(kind: str, n: int, p: int, arrays, include_pure: bool) -> EnumerationReport:
    hi, lo, st, ivs = arrays
    group_order = 2 * n
    side = "zn" if kind == "zn" else kind
    report = EnumerationReport(n, p, side, {}, [], int(hi.size),
                               int(sum(group_order // int(s) for s in st)), include_pure)
    if hi.size == 0:
        return report
    _, inverse, counts = np.unique(ivs, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    members = defaultdict(list)
    for row in np.flatnonzero(counts[inverse] >= 2):
        members[int(inverse[row])].append(int(row))
    tuples = Counter()
    for cls_id in sorted(members):
        rows = members[cls_id]
        tuples[len(rows)] += 1
        orbits = []
        for r in rows:
            if kind == "zn":
                rep = ZnSet(n, int(hi[r]))
            else:
                rep = DihedralSet.from_masks(n, int(hi[r]), int(lo[r]))
            orbits.append(CanonicalOrbit(rep, group_order // int(st[r]), side))
        vec = tuple(int(v) for v in ivs[rows[0]])
        key = IntervalVector(n, vec) if kind == "zn" else DihedralIntervalVector(n, vec)
        report.classes.append(HomometricClass(key, tuple(orbits)))
    report.tuples = dict(sorted(tuples.items()))
    return report


def _check_range(n: int, p: int, universe: int) -> None:
    if not 3 <= n <= MAX_N:
        raise DomainError(f"n must lie in [3, {MAX_N}], got {n}")
    if not 0 <= p <= min(universe, MAX_CARD):
        raise DomainError(f"cardinality must lie in [0, {min(universe, MAX_CARD)}], got {p}")


def enumerate_dn(n: int, cardinality: int, side: str = "right", jobs: Optional[int] = None,
                 include_pure: bool = False) -> EnumerationReport:
    """Count classes of non-trivially homometric t-uples of p-subsets of D_n."""
    _check_side(side)
    _check_range(n, cardinality, 2 * n)
    jobs = default_jobs() if jobs is None else jobs
    log.info("enumerating D_%d, p=%d, side=%s (%d subsets, %d jobs)", n, cardinality, side,
             comb(2 * n, cardinality), jobs)
    arrays, _ = _census(side, n, cardinality, not include_pure, jobs)
    return _group(side, n, cardinality, arrays, include_pure)


def enumerate_zn(n: int, cardinality: int, jobs: Optional[int] = None) -> EnumerationReport:
    """Same census for subsets of Z_n modulo transposition and inversion."""
    _check_range(n, cardinality, n)
    jobs = default_jobs() if jobs is None else jobs
    arrays, _ = _census("zn", n, cardinality, False, jobs)
    return _group("zn", n, cardinality, arrays, True)


# ---------------------------------------------------------------- simultaneous homometry


def _conjugation_key(vec: DihedralIntervalVector) -> tuple:
    """Left interval vector up to conjugation by D_n.

    Conjugation fixes the rotation block (it is inversion-symmetric) and maps
    reflection ``l`` to ``l + 2p`` or ``2p - l``.
    """
    n = vec.n
    rot = vec.counts[:n]
    ref = vec.counts[n:]
    best = None
    for p in range(n):
        for sgn in (1, -1):
            cand = tuple(ref[(sgn * (l - 2 * p)) % n] for l in range(n))
            if best is None or cand < best:
                best = cand
    return rot + best


def simultaneous_from_report(report: EnumerationReport, convention: str = "conjugate") -> SimultaneousReport:
    """Split each right class into sub-classes whose members are also left-homometric."""
    if report.side != "right":
        raise DomainError("simultaneous counting starts from a right-side report")
    if convention not in ("conjugate", "raw"):
        raise DomainError(f"unknown convention {convention!r}")
    tuples = Counter()
    groups = []
    for cls in report.classes:
        sub = defaultdict(list)
        for rep in cls.representatives:
            vec = left_iv(rep)
            sub[_conjugation_key(vec) if convention == "conjugate" else vec.counts].append(rep)
        for key in sorted(sub):
            if len(sub[key]) >= 2:
                tuples[len(sub[key])] += 1
                groups.append(tuple(sub[key]))
    return SimultaneousReport(report.n, report.cardinality, convention, dict(sorted(tuples.items())), groups)


def enumerate_simultaneous(n: int, cardinality: int, convention: str = "conjugate",
                           jobs: Optional[int] = None, include_pure: bool = False) -> SimultaneousReport:
    """t-uples that are non-trivially right- and left-homometric at the same time."""
    return simultaneous_from_report(enumerate_dn(n, cardinality, "right", jobs, include_pure), convention)


def inversion_maps_classes(right: EnumerationReport, left: EnumerationReport) -> bool:
    """Check that set inversion carries every right class onto a left class."""
    if right.n != left.n or right.cardinality != left.cardinality:
        raise DomainError("reports describe different censuses")
    left_classes = {
        frozenset(o.representative for o in c.orbits) for c in left.classes
    }
    for c in right.classes:
        image = frozenset(canonicalize(set_inversion(s), "left").representative for s in c.representatives)
        if image not in left_classes:
            return False
    return len(right.classes) == len(left.classes)
