"""Homometry predicates in D_n.

Right-homometry compares right interval vectors and is trivial when the two
sets differ by a left translation; left-homometry is the mirror image.  The
decomposition checks and the Fourier checks are independent routes to the
same verdicts and are used as oracles for each other in the test-suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dihedral import (
    DihedralElement,
    DihedralSet,
    _check_side,
    act_left,
    act_right,
    group_elements,
    left_iv,
    project,
    right_iv,
    set_inversion,
)
from .errors import DomainError
from .zn import dft, ifunc, invert, is_homometric_zn, iv

__all__ = [
    "HomometryVerdict",
    "is_right_homometric",
    "is_left_homometric",
    "is_homometric",
    "decomposition_right_check",
    "decomposition_left_check",
    "decomposition_check",
    "triviality_witness",
    "is_nontrivially_homometric",
    "verdict",
    "duality_transport",
    "projection_check",
    "multiset_projection_check",
    "prop6_applies",
    "fourier_conditions",
    "SPECTRAL_TOL",
]

SPECTRAL_TOL = 1e-9


def _same_n(A: DihedralSet, B: DihedralSet) -> None:
    if A.n != B.n:
        raise DomainError(f"modulus mismatch: {A.n} != {B.n}")


def is_right_homometric(A: DihedralSet, B: DihedralSet) -> bool:
    _same_n(A, B)
    return right_iv(A) == right_iv(B)


def is_left_homometric(A: DihedralSet, B: DihedralSet) -> bool:
    _same_n(A, B)
    return left_iv(A) == left_iv(B)


def is_homometric(A: DihedralSet, B: DihedralSet, side: str) -> bool:
    if _check_side(side) == "right":
        return is_right_homometric(A, B)
    return is_left_homometric(A, B)


def decomposition_right_check(A: DihedralSet, B: DihedralSet) -> bool:
    """Right-homometry through iv/ifunc of the sign parts."""
    _same_n(A, B)
    return (
        iv(A.plus) + iv(A.minus) == iv(B.plus) + iv(B.minus)
        and ifunc(A.plus, A.minus) == ifunc(B.plus, B.minus)
    )


def decomposition_left_check(A: DihedralSet, B: DihedralSet) -> bool:
    _same_n(A, B)
    return (
        iv(A.plus) + iv(A.minus) == iv(B.plus) + iv(B.minus)
        and ifunc(invert(A.plus, 0), A.minus) == ifunc(invert(B.plus, 0), B.minus)
    )


def decomposition_check(A: DihedralSet, B: DihedralSet, side: str) -> bool:
    if _check_side(side) == "right":
        return decomposition_right_check(A, B)
    return decomposition_left_check(A, B)


def triviality_witness(A: DihedralSet, B: DihedralSet, side: str) -> Optional[DihedralElement]:
    """Smallest-index g with ``g A = B`` (side='right') or ``A g = B`` (side='left')."""
    _same_n(A, B)
    _check_side(side)
    if len(A) != len(B):
        return None
    for g in group_elements(A.n):
        image = act_left(g, A) if side == "right" else act_right(A, g)
        if image == B:
            return g
    return None


def is_nontrivially_homometric(A: DihedralSet, B: DihedralSet, side: str) -> bool:
    return is_homometric(A, B, side) and triviality_witness(A, B, side) is None


@dataclass(frozen=True)
class HomometryVerdict:
    side: str
    homometric: bool
    trivial_witness: Optional[DihedralElement] = None

    @property
    def nontrivial(self) -> bool:
        return self.homometric and self.trivial_witness is None

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "homometric": self.homometric,
            "trivial": self.trivial_witness is not None,
            "witness": None if self.trivial_witness is None else str(self.trivial_witness),
        }


def verdict(A: DihedralSet, B: DihedralSet, side: str) -> HomometryVerdict:
    hom = is_homometric(A, B, side)
    witness = triviality_witness(A, B, side) if hom else None
    return HomometryVerdict(side, hom, witness)


def duality_transport(A: DihedralSet, B: DihedralSet) -> tuple[DihedralSet, DihedralSet]:
    """Move a right-homometric pair to a left-homometric one (and back)."""
    _same_n(A, B)
    return set_inversion(A), set_inversion(B)


def projection_check(A: DihedralSet, B: DihedralSet) -> bool:
    """Whether the Z_n projections of a right-homometric pair are homometric."""
    if not is_right_homometric(A, B):
        raise DomainError("projection_check requires a right-homometric pair")
    return is_homometric_zn(project(A), project(B))


def _projection_autocorrelation(S: DihedralSet) -> tuple:
    # autocorrelation of 1_{S+} + 1_{S-}, i.e. the projection counted with multiplicity
    return (iv(S.plus) + iv(S.minus) + ifunc(S.plus, S.minus) + ifunc(S.minus, S.plus)).counts


def multiset_projection_check(A: DihedralSet, B: DihedralSet) -> bool:
    """Homometry of the projections counted with multiplicity.

    When ``A+`` and ``A-`` overlap the plain projection forgets a residue and
    right-homometry no longer forces homometric projections; the multiplicity
    version always survives.
    """
    if not is_right_homometric(A, B):
        raise DomainError("multiset_projection_check requires a right-homometric pair")
    return _projection_autocorrelation(A) == _projection_autocorrelation(B)


def prop6_applies(A: DihedralSet, B: DihedralSet) -> bool:
    """Both rotation parts (or both reflection parts) are symmetric under I_0."""
    _same_n(A, B)
    return (invert(A.plus, 0) == A.plus and invert(B.plus, 0) == B.plus) or (
        invert(A.minus, 0) == A.minus and invert(B.minus, 0) == B.minus
    )


def fourier_conditions(A: DihedralSet, B: DihedralSet, side: str, tol: float = SPECTRAL_TOL) -> bool:
    """Spectral form of the homometry conditions, compared in the sup-norm."""
    _same_n(A, B)
    _check_side(side)
    fa_p, fa_m = dft(A.plus).values, dft(A.minus).values
    fb_p, fb_m = dft(B.plus).values, dft(B.minus).values
    power_a = np.abs(fa_p) ** 2 + np.abs(fa_m) ** 2
    power_b = np.abs(fb_p) ** 2 + np.abs(fb_m) ** 2
    if np.max(np.abs(power_a - power_b)) > tol:
        return False
    if side == "right":
        cross_a, cross_b = np.conj(fa_p) * fa_m, np.conj(fb_p) * fb_m
    else:
        cross_a, cross_b = fa_p * fa_m, fb_p * fb_m
    return bool(np.max(np.abs(cross_a - cross_b)) <= tol)
