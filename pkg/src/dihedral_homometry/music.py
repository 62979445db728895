"""Musical reading of D_12 (and of D_n through a chosen chord X).

``(s, +1)`` is the major triad on root ``s`` and ``(s, -1)`` the minor triad
on root ``s``.  Left multiplication is the T/I-group, right multiplication the
PLR-group.  Chord names are ASCII: upper case for major, lower case for minor,
``b`` for flat (``"Db"``, ``"ab"``); ``#``, ``♭`` and ``♯`` are accepted on input.

PLR words are written in composition order: ``"PL"`` means apply ``L`` then
``P``, so on a triad ``x`` it is ``x * L * P``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .dihedral import DihedralElement, DihedralSet, group_elements, mul
from .errors import DomainError, ParseError
from .zn import ZnSet, invert, transpose

__all__ = [
    "NOTE_NAMES",
    "ChordLabel",
    "GisLabel",
    "note_name",
    "parse_note",
    "render_triad",
    "parse_triad",
    "triad_pitch_classes",
    "parse_chord_set",
    "format_chord_set",
    "ti_label",
    "ti_element",
    "apply_ti",
    "plr_generator",
    "evaluate_plr_word",
    "plr_word",
    "render_over_x",
    "format_pcs",
    "TRIAD_AXIS",
]

NOTE_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")
_NATURALS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"b": -1, "♭": -1, "#": 1, "♯": 1}

# I_7 sends the C-major triad to c minor, so this axis reproduces the triad dictionary
TRIAD_AXIS = 7
C_MAJOR = (0, 4, 7)

_GENERATORS = {"P": 0, "L": 4, "R": 9}
_PLR_ORDER = "PLR"


def _require_12(n: int) -> None:
    if n != 12:
        raise DomainError(f"triad names need n = 12, got n = {n}")


def note_name(pc: int) -> str:
    return NOTE_NAMES[pc % 12]


def parse_note(text: str) -> int:
    m = re.fullmatch(r"([A-Ga-g])([b♭#♯]*)", text.strip())
    if m is None:
        raise ParseError("expected a note name like 'Eb' or 'F#'", text.strip(), 0)
    return (_NATURALS[m.group(1).upper()] + sum(_ACCIDENTALS[a] for a in m.group(2))) % 12


@dataclass(frozen=True)
class ChordLabel:
    root: int
    quality: str  # "major" or "minor"

    @property
    def display(self) -> str:
        name = note_name(self.root)
        return name if self.quality == "major" else name[0].lower() + name[1:]

    def __str__(self) -> str:
        return self.display


def render_triad(x: DihedralElement) -> ChordLabel:
    _require_12(x.n)
    return ChordLabel(x.k, "major" if x.eps == 1 else "minor")


def parse_triad(text: str) -> DihedralElement:
    """``"g"`` -> (7, -1); ``"Eb"`` -> (3, +1)."""
    s = text.strip()
    if not s or s[0] not in "ABCDEFGabcdefg":
        raise ParseError("expected a chord name like 'Eb' or 'g'", s, 0)
    return DihedralElement(parse_note(s), 1 if s[0].isupper() else -1, 12)


def triad_pitch_classes(x: DihedralElement) -> frozenset:
    _require_12(x.n)
    third = 4 if x.eps == 1 else 3
    return frozenset({x.k, (x.k + third) % 12, (x.k + 7) % 12})


def parse_chord_set(text: str) -> DihedralSet:
    """``"c,Db,Eb,e,Ab"``; braces are optional, duplicates are rejected."""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
        offset += 1
    seen = set()
    pos = 0
    for token in body.split(","):
        where = offset + pos + (len(token) - len(token.lstrip()))
        try:
            x = parse_triad(token)
        except ParseError as err:
            raise ParseError("expected a chord name like 'Eb' or 'g'", token.strip(), where) from err
        if x in seen:
            raise ParseError("duplicate chord", token.strip(), where)
        seen.add(x)
        pos += len(token) + 1
    return DihedralSet.from_elements(12, seen)


def format_chord_set(S: DihedralSet) -> str:
    """Chords sorted by root, major before minor, e.g. ``"{C,c,Eb,gb}"``."""
    _require_12(S.n)
    order = sorted(S.elements(), key=lambda x: (x.k, -x.eps))
    return "{" + ",".join(render_triad(x).display for x in order) + "}"


class GisLabel(NamedTuple):
    kind: str  # "T" or "I"
    index: int

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


def ti_label(g: DihedralElement) -> GisLabel:
    """Left-action dictionary: (p, +1) is T_p and (p, -1) is I_{p-5}."""
    _require_12(g.n)
    return GisLabel("T", g.k) if g.eps == 1 else GisLabel("I", (g.k - 5) % 12)


def ti_element(label: GisLabel) -> DihedralElement:
    kind, index = label
    if kind == "T":
        return DihedralElement(index % 12, 1, 12)
    if kind == "I":
        return DihedralElement((index + 5) % 12, -1, 12)
    raise DomainError(f"unknown T/I label kind {kind!r}")


def apply_ti(label: GisLabel, pcs) -> frozenset:
    """Apply T_p (x -> x + p) or I_p (x -> p - x) to pitch classes."""
    kind, p = label
    if kind == "T":
        return frozenset((x + p) % 12 for x in pcs)
    return frozenset((p - x) % 12 for x in pcs)


def plr_generator(symbol: str) -> DihedralElement:
    try:
        return DihedralElement(_GENERATORS[symbol.upper()], -1, 12)
    except KeyError:
        raise DomainError(f"PLR generator must be P, L or R, got {symbol!r}") from None


def evaluate_plr_word(word: str) -> DihedralElement:
    """Element g with ``x * g`` equal to the word applied to ``x`` (rightmost letter first)."""
    g = DihedralElement(0, 1, 12)
    for symbol in word:
        g = mul(plr_generator(symbol), g)
    return g


def _plr_words() -> dict:
    # breadth-first search over the Cayley graph; prefixes of shortest words are shortest
    ident = DihedralElement(0, 1, 12)
    best = {ident: ""}
    layer = {ident: ""}
    rank = {c: i for i, c in enumerate(_PLR_ORDER)}
    while layer:
        nxt = {}
        for g, word in layer.items():
            for symbol in _PLR_ORDER:
                h = mul(plr_generator(symbol), g)
                if h in best:
                    continue
                cand = word + symbol
                if h not in nxt or [rank[c] for c in cand] < [rank[c] for c in nxt[h]]:
                    nxt[h] = cand
        best.update(nxt)
        layer = nxt
    return best


_WORDS = None


def plr_word(g: DihedralElement) -> str:
    """Shortest PLR word for g, ties broken lexicographically with P < L < R."""
    global _WORDS
    _require_12(g.n)
    if _WORDS is None:
        _WORDS = _plr_words()
    return _WORDS[g]


def format_pcs(pcs) -> str:
    return "[" + ",".join(note_name(x) for x in pcs) + "]"


def render_over_x(X: ZnSet, g: DihedralElement, axis: int = 0) -> tuple[ZnSet, str]:
    """Image of the chord X for the bijection ``(k, +1) -> T_k X``, ``(k, -1) -> T_k I_axis X``.

    ``axis`` picks which inversion of X plays the role of ``(0, -1)``: 0 gives
    the literal I_k X, ``TRIAD_AXIS`` with X = C major gives the triad names.
    The T/I-group must act simply transitively on the orbit of X.
    """
    if g.n != X.n:
        raise DomainError(f"modulus mismatch: {g.n} != {X.n}")
    n = X.n
    images = {transpose(X, p) for p in range(n)} | {invert(X, p) for p in range(n)}
    if len(images) != 2 * n:
        raise DomainError(f"T/I does not act simply transitively on the orbit of {X} (non-trivial stabilizer)")
    if g.eps == 1:
        return transpose(X, g.k), f"T_{g.k} X"
    return invert(X, (axis + g.k) % n), f"I_{g.k} X"


def all_triads() -> list[DihedralElement]:
    return group_elements(12)
