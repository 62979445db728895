"""Lifting homometric pairs of Z_n to homometric pairs of D_n.

A lift attaches a sign to every residue of a set.  When ``A = A1 | A2`` and
``B = B1 | B2`` with ``iv(A1) == iv(B1)`` and ``iv(A2) == iv(B2)``, one of the
sign assignments of the two parts is always right-homometric; we find it by
exact interval-function comparison rather than by comparing complex spectra.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .dihedral import DihedralSet, _check_side, project
from .enumeration import canonicalize, enumerate_zn
from .errors import ContractViolation, DomainError, SizeLimitError
from .homometry import is_homometric, triviality_witness
from .zn import ZnSet, ifunc, invert, is_homometric_zn, iv, trivial_relation_zn

__all__ = [
    "Decomposition",
    "LiftResult",
    "construct_lift",
    "rosenblatt_pair",
    "rosenblatt_decomposition",
    "enumerate_lifts",
    "Cor2Entry",
    "Cor2Report",
    "verify_cor2",
    "MAX_LIFT_SIZE",
]

MAX_LIFT_SIZE = 20


@dataclass(frozen=True)
class Decomposition:
    A1: ZnSet
    A2: ZnSet
    B1: ZnSet
    B2: ZnSet

    def __post_init__(self):
        n = self.A1.n
        if any(s.n != n for s in (self.A2, self.B1, self.B2)):
            raise DomainError("all parts must share one modulus")
        if not self.A1.isdisjoint(self.A2) or not self.B1.isdisjoint(self.B2):
            raise DomainError("parts of a decomposition must be disjoint")

    def __str__(self) -> str:
        return "; ".join(f"{k}={{{getattr(self, k)}}}" for k in ("A1", "A2", "B1", "B2"))

    @property
    def n(self) -> int:
        return self.A1.n

    @property
    def A(self) -> ZnSet:
        return self.A1 | self.A2

    @property
    def B(self) -> ZnSet:
        return self.B1 | self.B2

    def satisfies_hypotheses(self) -> bool:
        return (
            is_homometric_zn(self.A, self.B)
            and iv(self.A1) == iv(self.B1)
            and iv(self.A2) == iv(self.B2)
        )


@dataclass(frozen=True)
class LiftResult:
    liftedA: DihedralSet
    liftedB: DihedralSet
    side: str
    nontrivial: bool

    def to_dict(self) -> dict:
        return {
            "A": str(self.liftedA),
            "B": str(self.liftedB),
            "side": self.side,
            "nontrivial": self.nontrivial,
        }


def construct_lift(d: Decomposition) -> LiftResult:
    """Right-homometric lift of ``(A1 | A2, B1 | B2)``.

    Assignments are tried in the order (A1, B1), (A1, B2), (A2, B1), (A2, B2)
    where the named parts become the rotation parts.
    """
    if not d.satisfies_hypotheses():
        raise DomainError("decomposition needs homometric A, B with iv(A1)=iv(B1) and iv(A2)=iv(B2)")
    candidates = [
        (d.A1, d.A2, d.B1, d.B2),
        (d.A1, d.A2, d.B2, d.B1),
        (d.A2, d.A1, d.B1, d.B2),
        (d.A2, d.A1, d.B2, d.B1),
    ]
    for a_plus, a_minus, b_plus, b_minus in candidates:
        # the rotation block agrees automatically; only the cross term decides
        if ifunc(a_plus, a_minus) == ifunc(b_plus, b_minus):
            la = DihedralSet.from_parts(a_plus, a_minus)
            lb = DihedralSet.from_parts(b_plus, b_minus)
            return LiftResult(la, lb, "right", triviality_witness(la, lb, "right") is None)
    raise ContractViolation(f"no sign assignment lifts {d} to a right-homometric pair")


def rosenblatt_pair(N: int, a: int) -> tuple[ZnSet, ZnSet]:
    """The 4-element pair {0, a, a+N, 2N} and {0, a, N, 2N+a} in Z_{4N}."""
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N}")
    if not 1 <= a <= N - 1:
        raise DomainError(f"a must lie in [1, {N - 1}], got {a}")
    n = 4 * N
    return (
        ZnSet.from_residues(n, (0, a, a + N, 2 * N)),
        ZnSet.from_residues(n, (0, a, N, 2 * N + a)),
    )


def rosenblatt_decomposition(N: int, a: int) -> Decomposition:
    """A1 = {0, 2N}, A2 = {a, a+N}, B1 = T_a A1, B2 = T_-a A2."""
    rosenblatt_pair(N, a)
    n = 4 * N
    z = lambda *r: ZnSet.from_residues(n, r)  # noqa: E731
    return Decomposition(z(0, 2 * N), z(a, a + N), z(a, 2 * N + a), z(0, N))


def _subsets(mask: int) -> Iterable[int]:
    # every submask of mask, ascending
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _lift_key(n: int, plus: int, minus: int, side: str):
    P, M = ZnSet(n, plus), ZnSet(n, minus)
    cross = ifunc(invert(P, 0), M) if side == "left" else ifunc(P, M)
    return (iv(P) + iv(M)).counts, cross.counts


def enumerate_lifts(A: ZnSet, B: ZnSet, side: str = "right") -> list[LiftResult]:
    """Every sign assignment making (A, B) non-trivially homometric in D_n.

    Results are deduplicated by the pair of canonical orbits and returned in
    order of the (A plus-mask, B plus-mask) that first produced them.
    """
    _check_side(side)
    if A.n != B.n:
        raise DomainError(f"modulus mismatch: {A.n} != {B.n}")
    if len(A) > MAX_LIFT_SIZE or len(B) > MAX_LIFT_SIZE:
        raise SizeLimitError(f"sets larger than {MAX_LIFT_SIZE} elements are not searched")
    if not is_homometric_zn(A, B):
        raise DomainError("enumerate_lifts needs homometric sets in Z_n")
    n = A.n
    by_key = defaultdict(list)
    for plus in _subsets(A.bits):
        by_key[_lift_key(n, plus, A.bits ^ plus, side)].append(plus)
    found = []
    seen = set()
    for b_plus in _subsets(B.bits):
        key = _lift_key(n, b_plus, B.bits ^ b_plus, side)
        for a_plus in by_key.get(key, ()):
            la = DihedralSet.from_masks(n, a_plus, A.bits ^ a_plus)
            lb = DihedralSet.from_masks(n, b_plus, B.bits ^ b_plus)
            if triviality_witness(la, lb, side) is not None:
                continue
            tag = (canonicalize(la, side).representative.key, canonicalize(lb, side).representative.key)
            if tag in seen:
                continue
            seen.add(tag)
            found.append(((a_plus, b_plus), LiftResult(la, lb, side, True)))
    found.sort(key=lambda item: item[0])
    return [r for _, r in found]


@dataclass(frozen=True)
class Cor2Entry:
    A: ZnSet
    B: ZnSet
    lifts: int
    example: Optional[LiftResult]

    @property
    def ok(self) -> bool:
        return self.lifts > 0


@dataclass
class Cor2Report:
    n: int
    entries: dict = field(default_factory=dict)  # cardinality -> list[Cor2Entry]

    @property
    def failures(self) -> list[Cor2Entry]:
        return [e for es in self.entries.values() for e in es if not e.ok]

    @property
    def total(self) -> int:
        return sum(len(es) for es in self.entries.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs": {str(p): len(es) for p, es in sorted(self.entries.items())},
            "failures": [[str(e.A), str(e.B)] for e in self.failures],
        }


def verify_cor2(cardinalities: Iterable[int], n: int = 12) -> Cor2Report:
    """Try to right-lift every non-trivially homometric pair of Z_n at the given sizes."""
    report = Cor2Report(n)
    for p in sorted(set(cardinalities)):
        if not 3 <= p <= n - 3:
            raise DomainError(f"cardinality {p} outside [3, {n - 3}]")
        entries = []
        for cls in enumerate_zn(n, p).classes:
            for A, B in combinations(cls.representatives, 2):
                if trivial_relation_zn(A, B) is not None:
                    raise ContractViolation(f"orbit representatives {A} and {B} are T/I related")
                lifts = enumerate_lifts(A, B, "right")
                for r in lifts:
                    if project(r.liftedA) != A or project(r.liftedB) != B:
                        raise ContractViolation("lift does not project back onto the input")
                    if not is_homometric(r.liftedA, r.liftedB, "right"):
                        raise ContractViolation("enumerated lift is not right-homometric")
                entries.append(Cor2Entry(A, B, len(lifts), lifts[0] if lifts else None))
        report.entries[p] = entries
    return report
