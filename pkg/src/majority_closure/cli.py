"""Command-line entry point.

Exit codes: 0 success or positive answer, 1 definite negative, 2 error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .balance import (is_balanced, is_partition_balanced, is_partition_plus_balanced,
                      is_pseudo_balanced, is_pseudo_balanced_by_search, is_weight_balanced,
                      strong_components)
from .core import ChoiceFunction
from .enumeration import Mode, enumerate_check
from .errors import MajorityClosureError, NotRealizable
from .fileio import (format_profile, format_rational as _fmt, format_tournament, format_trace,
                     parse_profile, parse_tournament)
from .generators import KINDS, generate_family
from .realizability import Reason, decide_membership, f_certificate, has_clause_g
from .synthesis import mcgarvey_classic, synthesize
from .valency import valency_signature
from .verify import verify

OK, NEGATIVE, ERROR = 0, 1, 2


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _read_tournament(path: str) -> ChoiceFunction:
    return parse_tournament(Path(path).read_text(encoding="ascii"))


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _family(spec: str, n: int, seed: int) -> ChoiceFunction:
    if spec in KINDS:
        return generate_family(spec, n, seed)
    return _read_tournament(spec)


def _points(ps: dict) -> str:
    if not ps:
        return "(empty)"
    return " ".join(f"({_fmt(a)},{_fmt(b)})" for a, b in ps)


def analyze_report(c: ChoiceFunction) -> str:
    pseudo = is_pseudo_balanced(c)
    lines = []
    if c.is_full:
        bal = is_balanced(c)
        cert = f_certificate(c)
        found = "found" if cert is not None else "none"
        if bal:
            lines.append(f"balanced: yes, pseudo-balanced: {_yn(pseudo)}, certificate: {found}")
        else:
            lines.append(f"balanced: no, clause(g): {_yn(has_clause_g(c))}, certificate: {found}")
    else:
        cert = None
        lines.append(f"full: no, pseudo-balanced: {_yn(pseudo)}, certificate: n/a")
    sig = valency_signature(c)
    lines += [
        f"n: {c.n}",
        "edges: " + (", ".join(f"{u}->{v}" for u, v in c.sorted_edges()) or "(none)"),
        "valencies: " + " ".join(_fmt(v) for v in sig.val),
        f"V0: {_points(sig.V0)}",
        f"V1: {_points(sig.V1)}",
        f"V1/2: {_points(sig.Vhalf)}",
        f"V0*: {_points(sig.V0star)}",
        f"V1*: {_points(sig.V1star)}",
        f"full: {_yn(c.is_full)}",
    ]
    if c.is_full:
        lines.append(f"balanced: {_yn(is_balanced(c))}")
        lines.append(f"clause(g): {_yn(has_clause_g(c))}")
    scc = strong_components(c)
    lines += [
        f"pseudo-balanced: {_yn(pseudo)}",
        f"pseudo-balanced (cycle search): {_yn(is_pseudo_balanced_by_search(c))}",
        f"weight-balanced: {_yn(is_weight_balanced(c))}",
        f"partition-balanced: {_yn(is_partition_balanced(c))}",
        f"partition+-balanced: {_yn(is_partition_plus_balanced(c))}",
        "strong components: " + " | ".join(" ".join(map(str, comp)) for comp in scc.components),
    ]
    if cert is not None:
        lines.append(f"certificate r1: {_fmt(cert.r1)}")
        for side, entries in ((0, cert.support0), (1, cert.support1)):
            for e in entries:
                lines.append(f"  side {side} point ({_fmt(e.point[0])},{_fmt(e.point[1])}) "
                             f"witness {e.witness[0]} {e.witness[1]} weight {_fmt(e.weight)}")
    return "\n".join(lines) + "\n"


def decide_report(d: ChoiceFunction, c: ChoiceFunction) -> tuple[bool, str]:
    ans = decide_membership(d, c)
    lines = [f"member: {_yn(ans.member)}"]
    if ans.reason is Reason.CLAUSE_G:
        lines.append("reason: generator unbalanced; every target is realizable")
        cert = ans.certificate
        lines.append(f"certificate r1: {_fmt(cert.r1)}")
        for side, entries in ((0, cert.support0), (1, cert.support1)):
            for e in entries:
                lines.append(f"  side {side} witness {e.witness[0]} {e.witness[1]} "
                             f"weight {_fmt(e.weight)}")
    elif ans.reason is Reason.PSEUDO_BALANCED:
        lines.append("reason: generator balanced, target pseudo-balanced")
    else:
        lines.append("reason: generator balanced, target not pseudo-balanced")
        lines.append("closed set entered by a target edge: " + " ".join(map(str, sorted(ans.cut))))
        if ans.farkas is not None:
            lines.append("farkas (r1 > 1/2): " + " ".join(_fmt(y) for y in ans.farkas.above_farkas))
            lines.append("farkas (r1 < 1/2): " + " ".join(_fmt(y) for y in ans.farkas.below_farkas))
    return ans.member, "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    sys.stdout.write(analyze_report(_read_tournament(args.path)))
    return OK


def cmd_decide(args) -> int:
    c = _read_tournament(args.target)
    d = _family(args.family, c.n, args.seed)
    member, text = decide_report(d, c)
    sys.stdout.write(text)
    return OK if member else NEGATIVE


def cmd_synthesize(args) -> int:
    c = _read_tournament(args.target)
    if args.classic_mcgarvey:
        if args.family != "linear":
            raise MajorityClosureError("--classic-mcgarvey needs --family linear")
        profile = mcgarvey_classic(c.n, c)
        trace = None
    else:
        d = _family(args.family, c.n, args.seed)
        try:
            result = synthesize(d, c)
        except NotRealizable as exc:
            sys.stdout.write(f"not realizable: {exc}\n")
            return NEGATIVE
        profile, trace = result.final, result.stages
    report = verify(profile, c)
    if not report.passed:
        raise MajorityClosureError(f"profile failed verification: {report.mismatches}")
    _write(args.out, format_profile(profile))
    if args.trace and trace is not None:
        _write(args.trace, format_trace(trace))
    sys.stdout.write(f"voters: {profile.size}, distinct: {len(profile.voters)}, verified: yes\n")
    return OK


def cmd_verify(args) -> int:
    p = parse_profile(Path(args.profile).read_text(encoding="ascii"))
    c = _read_tournament(args.target)
    report = verify(p, c)
    sys.stdout.write(report.render() + "\n")
    return OK if report.passed else NEGATIVE


def cmd_enumerate(args) -> int:
    report = enumerate_check(args.n, Mode(args.mode), workers=args.workers)
    text = report.render()
    if args.out:
        _write(args.out, text)
    sys.stdout.write(text)
    return OK if report.ok else NEGATIVE


def cmd_generate(args) -> int:
    text = format_tournament(generate_family(args.kind, args.n, args.seed))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="majcl", description="Majority closure of symmetric families.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="valencies and balance predicates of a tournament file")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    family_help = f"tournament file or one of {', '.join(KINDS)} (n taken from the target)"
    d = sub.add_parser("decide", help="is the target a majority of the family?")
    d.add_argument("--family", required=True, help=family_help)
    d.add_argument("--target", required=True)
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=cmd_decide)

    s = sub.add_parser("synthesize", help="write a verified profile realizing the target")
    s.add_argument("--family", required=True, help=family_help)
    s.add_argument("--target", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--trace")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--classic-mcgarvey", action="store_true",
                   help="two linear orders per target edge (linear family only)")
    s.set_defaults(func=cmd_synthesize)

    v = sub.add_parser("verify", help="check a profile's majority against a target")
    v.add_argument("--profile", required=True)
    v.add_argument("--target", required=True)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="exhaustive small-n sweep")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--mode", required=True, choices=[m.value for m in Mode])
    e.add_argument("--out")
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    g = sub.add_parser("generate", help="emit a generator tournament file")
    g.add_argument("--kind", required=True, choices=KINDS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    try:
        return args.func(args)
    except (MajorityClosureError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
