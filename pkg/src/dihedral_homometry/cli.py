"""Command-line interface: ``dihedral-homometry <command> ...``.

Every command builds one result record with the fields ``command``, ``inputs``,
``verdicts``, ``vectors`` and ``counts`` (plus command-specific extras) and
prints it as text, JSON or TSV.  Progress and timings go to stderr.

Exit codes: 0 success, 1 invalid input, 2 failed verification.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time

from . import __version__
from .dihedral import DihedralSet, interval_vector
from .enumeration import (
    default_jobs,
    enumerate_dn,
    enumerate_zn,
    format_tuples,
    simultaneous_from_report,
)
from .errors import ContractViolation, DomainError
from .homometry import duality_transport, verdict
from .lift import Decomposition, construct_lift, enumerate_lifts, rosenblatt_decomposition, rosenblatt_pair
from .music import format_chord_set, parse_chord_set
from .tables import format_table1, load_table1, table1_listing, table2_cells
from .verify import SUITES
from .zn import ZnSet, ifunc, is_homometric_zn, iv, trivial_relation_zn

__all__ = ["main", "build_parser"]

VERIFICATION_FAILED = 2


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors, keep exit code 2 for failed verification
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _record(command: str, **fields) -> dict:
    rec = {"command": command, "inputs": {}, "verdicts": {}, "vectors": {}, "counts": {}}
    rec.update(fields)
    return rec


# ---------------------------------------------------------------- set parsing


def _parse_dn(args, text: str) -> DihedralSet:
    if args.music:
        if args.dn != 12:
            raise DomainError("--music needs --dn 12")
        return parse_chord_set(text)
    return DihedralSet.parse(args.dn, text)


def _show_dn(args, S: DihedralSet) -> str:
    return format_chord_set(S) if getattr(args, "music", False) else str(S)


def _parse_zn(n: int, text: str) -> ZnSet:
    return ZnSet.parse(n, text)


def _group_args(p, side=True):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--zn", type=int, metavar="N", help="work in Z_N (sets like '0,1,4,6')")
    g.add_argument("--dn", type=int, metavar="N", help="work in D_N (sets like '0+,1-')")
    if side:
        p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--music", action="store_true", help="D_12 sets as chord names ('C,c,Eb')")


# ---------------------------------------------------------------- commands


def cmd_iv(args):
    if args.zn is not None:
        A = _parse_zn(args.zn, args.set)
        vec = iv(A)
        rec = _record("iv", inputs={"group": f"Z_{args.zn}", "set": str(A)}, vectors={"iv": list(vec.counts)})
        return rec, [str(vec)]
    S = _parse_dn(args, args.set)
    vec = interval_vector(S, args.side)
    rec = _record("iv", inputs={"group": f"D_{args.dn}", "side": args.side, "set": _show_dn(args, S)},
                  vectors={"iv": list(vec.counts)})
    return rec, [str(vec)]


def cmd_ifunc(args):
    A, B = _parse_zn(args.zn, args.a), _parse_zn(args.zn, args.b)
    vec = ifunc(A, B)
    rec = _record("ifunc", inputs={"group": f"Z_{args.zn}", "A": str(A), "B": str(B)},
                  vectors={"ifunc": list(vec.counts)})
    return rec, [str(vec)]


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_check(args):
    if args.zn is not None:
        A, B = _parse_zn(args.zn, args.a), _parse_zn(args.zn, args.b)
        hom = is_homometric_zn(A, B)
        rel = trivial_relation_zn(A, B)
        witness = None if rel is None else f"{rel.kind}_{rel.p}"
        inputs = {"group": f"Z_{args.zn}", "A": str(A), "B": str(B)}
        vectors = {"A": list(iv(A).counts), "B": list(iv(B).counts)}
    else:
        A, B = _parse_dn(args, args.a), _parse_dn(args, args.b)
        v = verdict(A, B, args.side)
        hom = v.homometric
        witness = None if v.trivial_witness is None else str(v.trivial_witness)
        inputs = {"group": f"D_{args.dn}", "side": args.side, "A": _show_dn(args, A), "B": _show_dn(args, B)}
        vectors = {
            "A": list(interval_vector(A, args.side).counts),
            "B": list(interval_vector(B, args.side).counts),
        }
    trivial = witness is not None
    rec = _record("check", inputs=inputs, vectors=vectors,
                  verdicts={"homometric": hom, "trivial": trivial, "witness": witness})
    lines = [f"homometric: {_bool(hom)}, trivial: {_bool(trivial)}"]
    if witness:
        lines.append(f"witness: {witness}")
    return rec, lines


def cmd_dual(args):
    A, B = _parse_dn(args, args.a), _parse_dn(args, args.b)
    IA, IB = duality_transport(A, B)
    right = verdict(A, B, "right")
    left = verdict(IA, IB, "left")
    rec = _record(
        "dual",
        inputs={"group": f"D_{args.dn}", "A": _show_dn(args, A), "B": _show_dn(args, B)},
        verdicts={"right(A,B)": right.to_dict(), "left(I A,I B)": left.to_dict()},
        result={"IA": _show_dn(args, IA), "IB": _show_dn(args, IB)},
    )
    lines = [
        f"I(A) = {_show_dn(args, IA)}",
        f"I(B) = {_show_dn(args, IB)}",
        f"right(A,B): homometric: {_bool(right.homometric)}, trivial: {_bool(not right.nontrivial and right.homometric)}",
        f"left(IA,IB): homometric: {_bool(left.homometric)}, trivial: {_bool(not left.nontrivial and left.homometric)}",
    ]
    return rec, lines


def _show_lift(args, r) -> str:
    if args.music:
        return f"{format_chord_set(r.liftedA)} & {format_chord_set(r.liftedB)}"
    return f"{r.liftedA} & {r.liftedB}"


def cmd_lift(args):
    n = args.zn
    if args.music and n != 12:
        raise DomainError("--music needs --zn 12")
    if args.decomp:
        parts = args.decomp.split(";")
        if len(parts) != 4:
            raise DomainError("--decomp expects 'A1;A2;B1;B2'")
        d = Decomposition(*(_parse_zn(n, t) for t in parts))
        r = construct_lift(d)
        rec = _record("lift", inputs={"group": f"Z_{n}", "decomposition": [str(x) for x in (d.A1, d.A2, d.B1, d.B2)]},
                      verdicts={"nontrivial": r.nontrivial}, result={"lifts": [r.to_dict()]})
        return rec, [_show_lift(args, r)]
    if args.a is None or args.b is None:
        raise DomainError("give two sets A B or --decomp")
    A, B = _parse_zn(n, args.a), _parse_zn(n, args.b)
    lifts = enumerate_lifts(A, B, args.side)
    rec = _record("lift", inputs={"group": f"Z_{n}", "side": args.side, "A": str(A), "B": str(B)},
                  counts={"lifts": len(lifts)}, result={"lifts": [r.to_dict() for r in lifts]})
    lines = [f"{len(lifts)} non-trivial {args.side} lift{'s' if len(lifts) != 1 else ''}"]
    lines += [_show_lift(args, r) for r in lifts]
    return rec, lines


def cmd_rosenblatt(args):
    A, B = rosenblatt_pair(args.N, args.a)
    r = construct_lift(rosenblatt_decomposition(args.N, args.a))
    rec = _record("rosenblatt", inputs={"N": args.N, "a": args.a, "group": f"Z_{4 * args.N}"},
                  verdicts={"nontrivial": r.nontrivial},
                  result={"A": str(A), "B": str(B), "lift": r.to_dict()})
    return rec, [f"A = {A}", f"B = {B}", f"lift: {r.liftedA} & {r.liftedB}", f"nontrivial: {_bool(r.nontrivial)}"]


def _class_lines(groups, music: bool) -> list[str]:
    show = format_chord_set if music else str
    return ["  " + " & ".join(show(s) for s in g) for g in groups]


def cmd_enumerate(args):
    jobs = args.jobs or default_jobs()
    if args.side == "zn":
        if args.simultaneous or args.include_pure:
            raise DomainError("--simultaneous and --include-pure apply to D_n only")
        report = enumerate_zn(args.n, args.card, jobs)
        groups = [c.representatives for c in report.classes]
        data = report.to_dict(args.classes)
    elif args.simultaneous:
        if args.side != "right":
            raise DomainError("--simultaneous starts from the right census")
        report = simultaneous_from_report(enumerate_dn(args.n, args.card, "right", jobs, args.include_pure),
                                          args.convention)
        groups = report.groups
        data = report.to_dict(args.classes)
    else:
        report = enumerate_dn(args.n, args.card, args.side, jobs, args.include_pure)
        groups = [c.representatives for c in report.classes]
        data = report.to_dict(args.classes)
    music = args.music and args.n == 12 and args.side != "zn"
    rec = _record("enumerate", inputs={"n": args.n, "p": args.card, "side": data["side"]},
                  counts=data["tuples"], result=data)
    lines = [report.summary()]
    if args.classes:
        lines += _class_lines(groups, music)
    return rec, lines


def cmd_table1(args):
    listing = table1_listing(args.jobs or default_jobs())
    rec = _record("table1", result={s: {str(p): rows for p, rows in v.items()} for s, v in listing.items()},
                  counts={s: {str(p): len(rows) for p, rows in v.items()} for s, v in listing.items()})
    lines = [format_table1(listing)]
    if args.check:
        res = SUITES["table1"]()
        rec["verdicts"] = {"matches_published": res.ok, "errata": load_table1()["errata"]}
        lines.append(f"published listing: {'match' if res.ok else 'MISMATCH'}")
        if not res.ok:
            return rec, lines, False
    return rec, lines


def cmd_table2(args):
    jobs = args.jobs or default_jobs()
    cells = [c for c in table2_cells()
             if (args.n is None or c["n"] == args.n) and (args.card is None or c["p"] == args.card)]
    if args.n is not None and args.card is not None and not cells:
        cells = [{"n": args.n, "p": args.card, "right": None, "simultaneous": None}]
    if not cells:
        raise DomainError("no published cell matches; give both --n and --card")
    rows, lines, ok = [], [], True
    single = len(cells) == 1
    for c in cells:
        t0 = time.perf_counter()
        right = enumerate_dn(c["n"], c["p"], args.side, jobs)
        row = {"n": c["n"], "p": c["p"], args.side: {str(t): v for t, v in right.tuples.items()}}
        sim = None
        if args.side == "right":
            sim = simultaneous_from_report(right).tuples
            row["simultaneous"] = {str(t): v for t, v in sim.items()}
        if args.check and c["right"] is not None:
            match = right.tuples == c["right"] and (sim is None or sim == c["simultaneous"])
            row["matches_published"] = match
            ok &= match
        rows.append(row)
        logging.getLogger(__name__).info("n=%d p=%d done in %.1f s", c["n"], c["p"], time.perf_counter() - t0)
        if single and not args.check:
            lines.append(format_tuples(right.tuples))
        else:
            line = f"n={c['n']} p={c['p']}: {format_tuples(right.tuples)}"
            if sim is not None:
                line += f" | simultaneous: {format_tuples(sim)}"
            if "matches_published" in row:
                line += "  [ok]" if row["matches_published"] else "  [MISMATCH]"
            lines.append(line)
    rec = _record("table2", inputs={"side": args.side, "n": args.n, "p": args.card},
                  counts=rows[0][args.side] if single else {}, result={"cells": rows})
    if args.check:
        rec["verdicts"] = {"matches_published": ok}
    return (rec, lines) if ok else (rec, lines, False)


def cmd_verify(args):
    names = list(SUITES) if "all" in args.suites else args.suites
    results, lines, ok = {}, [], True
    for name in names:
        t0 = time.perf_counter()
        res = SUITES[name]()
        logging.getLogger(__name__).info("%s finished in %.1f s", name, time.perf_counter() - t0)
        ok &= res.ok
        results[name] = {"passed": res.ok, "details": res.details}
        lines.append(f"{'PASS' if res.ok else 'FAIL'} {name}")
        lines += [f"  {d}" for d in res.details]
    rec = _record("verify", inputs={"suites": names}, verdicts={k: v["passed"] for k, v in results.items()},
                  result=results)
    return (rec, lines) if ok else (rec, lines, False)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the result to FILE instead of stdout")
    common.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")

    parser = _Parser(prog="dihedral-homometry", description="Homometric sets in Z_n and D_n.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("iv", parents=[common], help="interval vector of a set")
    _group_args(p)
    p.add_argument("set")
    p.set_defaults(func=cmd_iv)

    p = sub.add_parser("ifunc", parents=[common], help="interval function between two Z_n sets")
    p.add_argument("--zn", type=int, metavar="N", required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_ifunc)

    p = sub.add_parser("check", parents=[common], help="homometry and triviality verdict")
    _group_args(p)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", parents=[common], help="transport a right pair to a left pair by set inversion")
    p.add_argument("--dn", type=int, metavar="N", required=True)
    p.add_argument("--music", action="store_true")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("lift", parents=[common], help="lift a homometric Z_n pair to D_n")
    p.add_argument("--zn", type=int, metavar="N", required=True)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--decomp", metavar="A1;A2;B1;B2", help="construct one right lift from a decomposition")
    p.add_argument("--music", action="store_true")
    p.add_argument("a", nargs="?")
    p.add_argument("b", nargs="?")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("rosenblatt", parents=[common], help="Rosenblatt pair in Z_4N and its lift")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_rosenblatt)

    p = sub.add_parser("enumerate", parents=[common], help="census of homometric classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--card", type=int, required=True)
    p.add_argument("--side", choices=("left", "right", "zn"), default="right")
    p.add_argument("--simultaneous", action="store_true")
    p.add_argument("--convention", choices=("conjugate", "raw"), default="conjugate")
    p.add_argument("--include-pure", action="store_true", help="also count sets inside one coset")
    p.add_argument("--classes", action="store_true", help="list the classes")
    p.add_argument("--music", action="store_true", help="list D_12 classes as chord names")
    p.add_argument("--jobs", type=int, help="worker processes (default from DIHEDRAL_HOMOMETRY_JOBS)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table1", parents=[common], help="homometric chord sets of D_12, p = 4 and 5")
    p.add_argument("--check", action="store_true", help="compare with the published listing")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", parents=[common], help="t-uple counts of the published table")
    p.add_argument("--n", type=int)
    p.add_argument("--card", type=int)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--check", action="store_true", help="compare with the published counts")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suites", nargs="+", choices=[*SUITES, "all"])
    p.set_defaults(func=cmd_verify)
    return parser


# ---------------------------------------------------------------- output


def _tsv_rows(prefix: str, value):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _tsv_rows(f"{prefix}.{k}" if prefix else str(k), v)
    elif isinstance(value, list) and value and all(isinstance(v, (int, float)) for v in value):
        yield prefix, ",".join(map(str, value))
    elif isinstance(value, list):
        for i, v in enumerate(value):
            yield from _tsv_rows(f"{prefix}.{i}", v)
    else:
        yield prefix, "" if value is None else str(value).lower() if isinstance(value, bool) else str(value)


def render(rec: dict, lines: list[str], fmt: str) -> str:
    if fmt == "json":
        text = json.dumps(rec, indent=2)
        # keep integer vectors on one line
        text = re.sub(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]", lambda m: "[" + re.sub(r"\s+", " ", m.group(1)) + "]", text)
        return text + "\n"
    if fmt == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in _tsv_rows("", rec))
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, stream=sys.stderr,
                        format="%(message)s", force=True)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 1
    try:
        outcome = args.func(args)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ContractViolation as err:
        print(f"verification failed: {err}", file=sys.stderr)
        return VERIFICATION_FAILED
    rec, lines, *rest = outcome
    text = render(rec, lines, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return VERIFICATION_FAILED if rest and rest[0] is False else 0


if __name__ == "__main__":
    sys.exit(main())
