"""Subsets of the cyclic group Z_n and their interval content.

A :class:`ZnSet` is an immutable n-bit mask (bit ``k`` set iff residue ``k``
belongs to the set).  Interval functions and vectors are exact integer arrays;
the discrete Fourier transform is provided as an independent numerical
cross-check and is never used to decide homometry.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .errors import DomainError, ParseError

__all__ = [
    "ZnSet",
    "IntervalVector",
    "Spectrum",
    "TrivialRelation",
    "ifunc",
    "iv",
    "transpose",
    "invert",
    "is_homometric_zn",
    "trivial_relation_zn",
    "dft",
    "rotate_mask",
    "reflect_mask",
]


def _full(n: int) -> int:
    return (1 << n) - 1


def rotate_mask(bits: int, p: int, n: int) -> int:
    """Mask of ``{a + p mod n : a in bits}``."""
    p %= n
    if p == 0:
        return bits
    return ((bits << p) | (bits >> (n - p))) & _full(n)


def reflect_mask(bits: int, p: int, n: int) -> int:
    """Mask of ``{p - a mod n : a in bits}``."""
    out = 0
    while bits:
        low = bits & -bits
        a = low.bit_length() - 1
        out |= 1 << ((p - a) % n)
        bits ^= low
    return out


def _check_modulus(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"modulus must be a positive integer, got {n!r}")


@dataclass(frozen=True, order=True)
class ZnSet:
    """A subset of Z_n stored as a little-endian bit mask."""

    n: int
    bits: int = 0

    def __post_init__(self):
        _check_modulus(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"mask {self.bits:#x} has residues outside [0, {self.n})")

    @classmethod
    def from_residues(cls, n: int, residues: Iterable[int]) -> "ZnSet":
        _check_modulus(n)
        bits = 0
        for r in residues:
            bits |= 1 << (int(r) % n)
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "ZnSet":
        return cls(n, _full(n))

    @classmethod
    def parse(cls, n: int, text: str) -> "ZnSet":
        """Parse the comma-separated form ``"0,1,4,6"``; duplicates are rejected."""
        _check_modulus(n)
        bits = 0
        if text.strip() == "":
            return cls(n, 0)
        pos = 0
        for token in text.split(","):
            stripped = token.strip()
            where = pos + (len(token) - len(token.lstrip()))
            try:
                r = int(stripped)
            except ValueError:
                raise ParseError("expected an integer residue", stripped, where) from None
            if not 0 <= r < n:
                raise ParseError(f"residue out of range [0, {n})", stripped, where)
            if bits >> r & 1:
                raise ParseError("duplicate residue", stripped, where)
            bits |= 1 << r
            pos += len(token) + 1
        return cls(n, bits)

    def residues(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.n) if self.bits >> k & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.residues())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, k) -> bool:
        return bool(self.bits >> (int(k) % self.n) & 1)

    def __or__(self, other: "ZnSet") -> "ZnSet":
        _same_modulus(self, other)
        return ZnSet(self.n, self.bits | other.bits)

    def __and__(self, other: "ZnSet") -> "ZnSet":
        _same_modulus(self, other)
        return ZnSet(self.n, self.bits & other.bits)

    def isdisjoint(self, other: "ZnSet") -> bool:
        return not (self.bits & other.bits)

    def indicator(self) -> np.ndarray:
        return np.array([self.bits >> k & 1 for k in range(self.n)], dtype=np.int64)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.residues())


def _same_modulus(a, b) -> None:
    if a.n != b.n:
        raise DomainError(f"modulus mismatch: {a.n} != {b.n}")


@dataclass(frozen=True)
class IntervalVector:
    """Counts of intervals indexed by ``k`` in Z_n (``counts[0]`` included)."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise DomainError(f"expected {self.n} counts, got {len(self.counts)}")

    def __getitem__(self, k: int) -> int:
        return self.counts[k % self.n]

    def __iter__(self):
        return iter(self.counts)

    def __add__(self, other: "IntervalVector") -> "IntervalVector":
        _same_modulus(self, other)
        return IntervalVector(self.n, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def total(self) -> int:
        return sum(self.counts)

    def as_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=np.int64)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.counts)) + "]"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """DFT values ``F_A(t)`` for ``t`` in Z_n."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    def __abs__(self) -> np.ndarray:
        return np.abs(self.values)

    def __getitem__(self, t: int) -> complex:
        return complex(self.values[t % self.n])


def ifunc(A: ZnSet, B: ZnSet) -> IntervalVector:
    """``counts[k] = #{(a, b) in A x B : b - a = k mod n}``."""
    _same_modulus(A, B)
    n = A.n
    return IntervalVector(n, tuple((rotate_mask(A.bits, k, n) & B.bits).bit_count() for k in range(n)))


def iv(A: ZnSet) -> IntervalVector:
    return ifunc(A, A)


def transpose(A: ZnSet, p: int) -> ZnSet:
    """T_p A = {p + a}."""
    return ZnSet(A.n, rotate_mask(A.bits, p, A.n))


def invert(A: ZnSet, p: int) -> ZnSet:
    """I_p A = {p - a}."""
    return ZnSet(A.n, reflect_mask(A.bits, p, A.n))


def is_homometric_zn(A: ZnSet, B: ZnSet) -> bool:
    _same_modulus(A, B)
    return iv(A) == iv(B)


class TrivialRelation(NamedTuple):
    kind: str  # "T" or "I"
    p: int

    def __str__(self) -> str:
        return f"{self.kind}_{self.p}"


def trivial_relation_zn(A: ZnSet, B: ZnSet) -> Optional[TrivialRelation]:
    """First map T_p or I_p (smallest p, T before I) sending A onto B."""
    _same_modulus(A, B)
    if len(A) != len(B):
        return None
    n = A.n
    for p in range(n):
        if rotate_mask(A.bits, p, n) == B.bits:
            return TrivialRelation("T", p)
        if reflect_mask(A.bits, p, n) == B.bits:
            return TrivialRelation("I", p)
    return None


def dft(A: ZnSet) -> Spectrum:
    """``F_A(t) = sum_{k in A} exp(-2 pi i k t / n)``."""
    n = A.n
    ks = np.array(A.residues(), dtype=np.float64)
    t = np.arange(n, dtype=np.float64)
    if ks.size == 0:
        return Spectrum(n, np.zeros(n, dtype=np.complex128))
    values = np.exp(-2j * np.pi * np.outer(t, ks) / n).sum(axis=1)
    return Spectrum(n, values)
