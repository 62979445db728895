"""The dihedral group D_n = Z_n x| Z_2 and its subsets.

Elements are pairs ``(k, eps)`` with product ``(k, e)(l, f) = (k + e*l, e*f)``.
A :class:`DihedralSet` keeps its rotations (``eps = +1``) and reflections
(``eps = -1``) as two :class:`~dihedral_homometry.zn.ZnSet` masks, so all set
actions reduce to rotations and reflections of n-bit masks.

Frozen element encoding, shared with interval vectors and the CLI:
``(l, +1) -> l`` and ``(l, -1) -> n + l``.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, ParseError
from .zn import IntervalVector, ZnSet, ifunc, invert, iv, reflect_mask, rotate_mask

__all__ = [
    "DihedralElement",
    "DihedralSet",
    "DihedralIntervalVector",
    "DihedralAutomorphism",
    "identity",
    "mul",
    "inv",
    "left_int",
    "right_int",
    "left_iv",
    "right_iv",
    "interval_vector",
    "act_left",
    "act_right",
    "set_inversion",
    "elementwise_inverse",
    "project",
    "apply_automorphism",
    "automorphisms",
    "interval_preserving_automorphisms",
    "group_elements",
    "SIDES",
]

SIDES = ("left", "right")


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return side


@dataclass(frozen=True)
class DihedralElement:
    k: int
    eps: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"modulus must be positive, got {self.n}")
        if self.eps not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.eps}")
        if not 0 <= self.k < self.n:
            object.__setattr__(self, "k", self.k % self.n)

    @classmethod
    def from_index(cls, index: int, n: int) -> "DihedralElement":
        if not 0 <= index < 2 * n:
            raise DomainError(f"element index {index} outside [0, {2 * n})")
        return cls(index % n, 1 if index < n else -1, n)

    @classmethod
    def parse(cls, n: int, text: str) -> "DihedralElement":
        """Parse ``"4-"`` as ``(4, -1)`` and ``"3+"`` as ``(3, +1)``."""
        m = re.fullmatch(r"\s*(\d+)\s*([+-])\s*", text)
        if m is None:
            raise ParseError("expected an element like '4-' or '3+'", text.strip(), 0)
        k = int(m.group(1))
        if k >= n:
            raise ParseError(f"residue out of range [0, {n})", text.strip(), 0)
        return cls(k, 1 if m.group(2) == "+" else -1, n)

    @property
    def index(self) -> int:
        return self.k if self.eps == 1 else self.n + self.k

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return mul(self, other)

    def __invert__(self) -> "DihedralElement":
        return inv(self)

    def __str__(self) -> str:
        return f"{self.k}{'+' if self.eps == 1 else '-'}"

    def as_pair(self) -> tuple[int, int]:
        return (self.k, self.eps)


def identity(n: int) -> DihedralElement:
    return DihedralElement(0, 1, n)


def group_elements(n: int) -> list[DihedralElement]:
    """All 2n elements in encoding order."""
    return [DihedralElement.from_index(i, n) for i in range(2 * n)]


def _same_n(a, b) -> None:
    if a.n != b.n:
        raise DomainError(f"modulus mismatch: {a.n} != {b.n}")


def mul(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    _same_n(x, y)
    return DihedralElement((x.k + x.eps * y.k) % x.n, x.eps * y.eps, x.n)


def inv(x: DihedralElement) -> DihedralElement:
    return DihedralElement((-x.k * x.eps) % x.n, x.eps, x.n)


def left_int(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """The unique g with ``g x = y``."""
    _same_n(x, y)
    s = x.eps * y.eps
    return DihedralElement((y.k - s * x.k) % x.n, s, x.n)


def right_int(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """The unique g with ``x g = y``."""
    _same_n(x, y)
    return DihedralElement(((y.k - x.k) * x.eps) % x.n, x.eps * y.eps, x.n)


@dataclass(frozen=True, order=True)
class DihedralSet:
    """A subset of D_n split into its rotation part and reflection part."""

    n: int
    plus: ZnSet
    minus: ZnSet

    def __post_init__(self):
        if self.plus.n != self.n or self.minus.n != self.n:
            raise DomainError("plus/minus parts must live in Z_n with the set's modulus")

    @classmethod
    def from_masks(cls, n: int, plus: int, minus: int) -> "DihedralSet":
        return cls(n, ZnSet(n, plus), ZnSet(n, minus))

    @classmethod
    def from_parts(cls, plus: ZnSet, minus: ZnSet) -> "DihedralSet":
        _same_n(plus, minus)
        return cls(plus.n, plus, minus)

    @classmethod
    def from_elements(cls, n: int, elements: Iterable) -> "DihedralSet":
        """Accepts :class:`DihedralElement` objects or ``(k, eps)`` pairs; duplicates collapse."""
        plus = minus = 0
        for x in elements:
            if isinstance(x, DihedralElement):
                if x.n != n:
                    raise DomainError(f"modulus mismatch: {x.n} != {n}")
                k, eps = x.k, x.eps
            else:
                k, eps = x
                if eps not in (1, -1):
                    raise DomainError(f"sign must be +1 or -1, got {eps}")
            if eps == 1:
                plus |= 1 << (k % n)
            else:
                minus |= 1 << (k % n)
        return cls.from_masks(n, plus, minus)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "DihedralSet":
        """From the combined 2n-bit mask in element encoding."""
        return cls.from_masks(n, mask & ((1 << n) - 1), mask >> n)

    @classmethod
    def parse(cls, n: int, text: str) -> "DihedralSet":
        """Parse ``"0+,1-,4-,6+"``; duplicate elements are rejected."""
        plus = minus = 0
        if text.strip() == "":
            return cls.from_masks(n, 0, 0)
        pos = 0
        for token in text.split(","):
            where = pos + (len(token) - len(token.lstrip()))
            m = re.fullmatch(r"\s*(\d+)\s*([+-])\s*", token)
            if m is None:
                raise ParseError("expected an element like '4-' or '3+'", token.strip(), where)
            k = int(m.group(1))
            if k >= n:
                raise ParseError(f"residue out of range [0, {n})", token.strip(), where)
            bit = 1 << k
            if m.group(2) == "+":
                if plus & bit:
                    raise ParseError("duplicate element", token.strip(), where)
                plus |= bit
            else:
                if minus & bit:
                    raise ParseError("duplicate element", token.strip(), where)
                minus |= bit
            pos += len(token) + 1
        return cls.from_masks(n, plus, minus)

    @property
    def mask(self) -> int:
        return self.plus.bits | (self.minus.bits << self.n)

    @property
    def key(self) -> tuple[int, int]:
        """Ordering key used for canonical forms: (plus mask, minus mask)."""
        return (self.plus.bits, self.minus.bits)

    def elements(self) -> list[DihedralElement]:
        n = self.n
        return [DihedralElement(k, 1, n) for k in self.plus] + [DihedralElement(k, -1, n) for k in self.minus]

    def __iter__(self) -> Iterator[DihedralElement]:
        return iter(self.elements())

    def __len__(self) -> int:
        return len(self.plus) + len(self.minus)

    def __contains__(self, x: DihedralElement) -> bool:
        return x.k in (self.plus if x.eps == 1 else self.minus)

    def is_mixed(self) -> bool:
        """True when both the rotation part and the reflection part are non-empty."""
        return bool(self.plus.bits) and bool(self.minus.bits)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements())


@dataclass(frozen=True)
class DihedralIntervalVector:
    """Counts indexed by element encoding: ``(l, +1) -> l``, ``(l, -1) -> n + l``."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != 2 * self.n:
            raise DomainError(f"expected {2 * self.n} counts, got {len(self.counts)}")

    def __getitem__(self, x) -> int:
        if isinstance(x, DihedralElement):
            return self.counts[x.index]
        k, eps = x
        return self.counts[(k % self.n) + (0 if eps == 1 else self.n)]

    def total(self) -> int:
        return sum(self.counts)

    def multiset(self) -> Counter:
        """Counter of ``(l, eta)`` pairs with positive count."""
        n = self.n
        return Counter({(i % n, 1 if i < n else -1): c for i, c in enumerate(self.counts) if c})

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.counts)) + "]"


def _check_dset(S) -> None:
    if not isinstance(S, DihedralSet):
        raise DomainError(f"expected a DihedralSet, got {type(S).__name__}")


def right_iv(S: DihedralSet) -> DihedralIntervalVector:
    # rotations:  iv(A+) + iv(A-);  reflections: each cross pair is counted from both ends
    _check_dset(S)
    same = iv(S.plus) + iv(S.minus)
    cross = ifunc(S.plus, S.minus)
    return DihedralIntervalVector(S.n, same.counts + tuple(2 * c for c in cross.counts))


def left_iv(S: DihedralSet) -> DihedralIntervalVector:
    _check_dset(S)
    same = iv(S.plus) + iv(S.minus)
    cross = ifunc(invert(S.plus, 0), S.minus)
    return DihedralIntervalVector(S.n, same.counts + tuple(2 * c for c in cross.counts))


def interval_vector(S: DihedralSet, side: str) -> DihedralIntervalVector:
    return right_iv(S) if _check_side(side) == "right" else left_iv(S)


def act_left(g: DihedralElement, S: DihedralSet) -> DihedralSet:
    """``g S``."""
    _same_n(g, S)
    n = S.n
    if g.eps == 1:
        return DihedralSet.from_masks(n, rotate_mask(S.plus.bits, g.k, n), rotate_mask(S.minus.bits, g.k, n))
    # (p,-1)(a,e) = (p - a, -e)
    return DihedralSet.from_masks(n, reflect_mask(S.minus.bits, g.k, n), reflect_mask(S.plus.bits, g.k, n))


def act_right(S: DihedralSet, g: DihedralElement) -> DihedralSet:
    """``S g``."""
    _same_n(g, S)
    n = S.n
    if g.eps == 1:
        return DihedralSet.from_masks(n, rotate_mask(S.plus.bits, g.k, n), rotate_mask(S.minus.bits, -g.k, n))
    # (a,+1)(p,-1) = (a + p, -1);  (a,-1)(p,-1) = (a - p, +1)
    return DihedralSet.from_masks(n, rotate_mask(S.minus.bits, -g.k, n), rotate_mask(S.plus.bits, g.k, n))


def set_inversion(S: DihedralSet) -> DihedralSet:
    """Elementwise group inverse: rotations are negated, reflections are kept."""
    return DihedralSet(S.n, invert(S.plus, 0), S.minus)


elementwise_inverse = set_inversion


def project(S: DihedralSet) -> ZnSet:
    """Residues of the set, forgetting signs (union, so overlaps collapse)."""
    return S.plus | S.minus


@dataclass(frozen=True)
class DihedralAutomorphism:
    """``(l, k)`` acting by ``(p, +1) -> (k p, +1)`` and ``(q, -1) -> (k q + l, -1)``."""

    l: int
    k: int
    n: int

    def __post_init__(self):
        if math.gcd(self.k, self.n) != 1:
            raise DomainError(f"k={self.k} is not a unit modulo {self.n}")
        object.__setattr__(self, "l", self.l % self.n)
        object.__setattr__(self, "k", self.k % self.n if self.n > 1 else 0)

    def __call__(self, x: DihedralElement) -> DihedralElement:
        return apply_automorphism(self, x)

    def compose(self, other: "DihedralAutomorphism") -> "DihedralAutomorphism":
        """``self after other``."""
        _same_n(self, other)
        # self(other(q,-1)) = k1 (k2 q + l2) + l1
        return DihedralAutomorphism(self.k * other.l + self.l, self.k * other.k, self.n)

    def is_identity(self) -> bool:
        return self.l == 0 and self.k == 1 % self.n


def apply_automorphism(a: DihedralAutomorphism, x: DihedralElement) -> DihedralElement:
    _same_n(a, x)
    if math.gcd(a.k, a.n) != 1:
        raise DomainError(f"k={a.k} is not a unit modulo {a.n}")
    if x.eps == 1:
        return DihedralElement((a.k * x.k) % x.n, 1, x.n)
    return DihedralElement((a.k * x.k + a.l) % x.n, -1, x.n)


def automorphisms(n: int) -> list[DihedralAutomorphism]:
    """All n * phi(n) automorphisms, ordered by (k, l)."""
    units = [k for k in range(1, n) if math.gcd(k, n) == 1] if n > 1 else [0]
    return [DihedralAutomorphism(l, k, n) for k in units for l in range(n)]


def interval_preserving_automorphisms(n: int) -> list[DihedralAutomorphism]:
    """Automorphisms preserving both left and right intervals of every pair."""
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    G = group_elements(n)
    out = []
    for a in automorphisms(n):
        img = [apply_automorphism(a, x) for x in G]
        ok = True
        for i, x in enumerate(G):
            for j, y in enumerate(G):
                if right_int(img[i], img[j]) != right_int(x, y) or left_int(img[i], img[j]) != left_int(x, y):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out
