"""Reproduction of the published D_n tables from the census."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .dihedral import DihedralSet, act_left, act_right, identity, inv
from .enumeration import EnumerationReport, enumerate_dn, format_tuples
from .music import format_chord_set, parse_chord_set

__all__ = [
    "load_table1",
    "load_table2",
    "normalize_with_c",
    "table1_rows",
    "table1_listing",
    "table1_golden_classes",
    "table2_cells",
]


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    return json.loads(resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8"))


def load_table1() -> dict:
    return _load("table1.json")


def load_table2() -> dict:
    return _load("table2.json")


def table2_cells() -> list[dict]:
    """Published cells with integer tuple keys."""
    return [
        {
            "n": c["n"],
            "p": c["p"],
            "right": {int(t): v for t, v in c["right"].items()},
            "simultaneous": {int(t): v for t, v in c["simultaneous"].items()},
        }
        for c in load_table2()["cells"]
    ]


def normalize_with_c(S: DihedralSet, side: str) -> DihedralSet:
    """Trivial translate of S containing the C-major triad, smallest by (plus, minus) key."""
    e = identity(S.n)
    if side == "right":
        images = [act_left(inv(x), S) for x in S]
    else:
        images = [act_right(S, inv(x)) for x in S]
    images = [s for s in images if e in s]
    return min(images, key=lambda s: s.key)


def table1_rows(report: EnumerationReport) -> list[list[str]]:
    """Classes of a D_12 report as chord-name rows, pairs before triples."""
    rows = []
    for cls in report.classes:
        names = sorted(format_chord_set(normalize_with_c(s, report.side)) for s in cls.representatives)
        rows.append(names)
    rows.sort(key=lambda r: (len(r), r))
    return rows


def table1_listing(jobs: int = 1) -> dict:
    """``{side: {p: rows}}`` for p = 4, 5 and both sides of D_12."""
    return {
        side: {p: table1_rows(enumerate_dn(12, p, side, jobs)) for p in (4, 5)}
        for side in ("left", "right")
    }


def format_table1(listing: dict) -> str:
    lines = []
    for side, label in (("left", "T/I-group (left action)"), ("right", "PLR-group (right action)")):
        lines.append(f"Homometric sets for the {label}")
        for p, rows in listing[side].items():
            counts = {}
            for r in rows:
                counts[len(r)] = counts.get(len(r), 0) + 1
            lines.append(f"  p={p}: {format_tuples(counts)}")
            for r in rows:
                lines.append("    " + " & ".join(r))
    return "\n".join(lines)


def table1_golden_classes(side: str, p: int) -> list[list[DihedralSet]]:
    return [[parse_chord_set(s) for s in row] for row in load_table1()[side][str(p)]]
