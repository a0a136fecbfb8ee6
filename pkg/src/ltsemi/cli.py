"""Command line front end.

Exit status: 0 when the analysis completed (whatever the verdict), 1 for
bad input, 2 for an internal invariant failure or an oracle disagreement
under ``--verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .automaton import parse_dfa, transition_semigroup
from .catalog import KEYS, catalog, enumerate_semigroups, random_transformation_semigroups
from .decision import describe_witness, is_locally_testable, is_locally_testable_semilattice
from .errors import InvariantError, SemigroupError
from .identities import min_level
from .level import level
from .semigroup import format_semigroup, idempotents, parse_semigroup, product_chain

SENSE_LABEL = {"B": "B-sense (prefix/suffix length k-1)",
               "T": "T-sense (prefix/suffix length k)"}


class VerifyFailed(Exception):
    pass


def sizes(S) -> dict:
    chain = product_chain(S)
    return {"k": S.order, "idempotents": len(idempotents(S)), "ses": len(chain.ses),
            "residue": len(chain.residue), "stable_exponent": chain.stable_exponent}


def analyze(S, descriptor: dict, want_level: bool, verify: bool) -> dict:
    timings = {}
    t0 = time.perf_counter()
    verdict = is_locally_testable(S)
    timings["check"] = (time.perf_counter() - t0) * 1000
    report = {"input": descriptor, "sizes": sizes(S), "verdict": verdict.to_dict(),
              "breakdown": None, "oracle": None}
    if verdict.witness is not None:
        report["verdict"]["witness_text"] = describe_witness(S, verdict.witness)
    if want_level and verdict.locally_testable:
        t0 = time.perf_counter()
        report["breakdown"] = level(S).to_dict()
        report["breakdown"]["sense"] = "B"
        timings["level"] = (time.perf_counter() - t0) * 1000
    if verify:
        t0 = time.perf_counter()
        cap = 2 * S.order + 2
        semilattice = is_locally_testable_semilattice(S).locally_testable
        oracle_level = min_level(S, "B", cap)
        report["oracle"] = {"cap": cap, "min_level_B": oracle_level,
                            "semilattice_verdict": semilattice}
        timings["verify"] = (time.perf_counter() - t0) * 1000
        problems = []
        if semilattice != verdict.locally_testable:
            problems.append("semilattice criterion disagrees with the decision")
        if (oracle_level is not None) != verdict.locally_testable:
            problems.append("identity oracle disagrees with the decision")
        if report["breakdown"] is not None and report["breakdown"]["level"] != oracle_level:
            problems.append(f"level {report['breakdown']['level']} != oracle {oracle_level}")
        report["oracle"]["agree"] = not problems
        if problems:
            report["oracle"]["problems"] = problems
    report["timings_ms"] = {k: round(v, 3) for k, v in timings.items()}
    return report


def serialize(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def deserialize(text: str) -> dict:
    return json.loads(text)


def render(report: dict) -> str:
    out = []
    src = report["input"]
    out.append(f"{src.get('kind', 'input')}: {src.get('name', '')}".rstrip())
    sz = report["sizes"]
    out.append(f"order {sz['k']}, |E| = {sz['idempotents']}, |SES| = {sz['ses']}, "
               f"|G| = {sz['residue']}, stable exponent {sz['stable_exponent']}")
    v = report["verdict"]
    if v["locally_testable"]:
        out.append("locally testable")
    else:
        out.append(f"not locally testable ({v['witness']['kind'].replace('-', ' ')})")
        out.append(f"  witness: {v['witness_text']}")
    b = report.get("breakdown")
    if b is not None:
        out.append(f"level {b['level']}, {SENSE_LABEL['B']}")
        out.append(f"  bounds: n = {b['n_bound']}, l = {b['l_bound']}, r = {b['r_bound']}")
    o = report.get("oracle")
    if o is not None:
        status = "agree" if o["agree"] else "DISAGREE: " + "; ".join(o["problems"])
        out.append(f"oracle: min B-level {o['min_level_B']} (cap {o['cap']}), {status}")
    return "\n".join(out)


def emit(report: dict, args) -> None:
    print(serialize(report) if args.json else render(report))
    o = report.get("oracle")
    if o is not None and not o["agree"]:
        raise VerifyFailed("; ".join(o["problems"]))


def load_semigroup(path):
    return parse_semigroup(Path(path).read_text(encoding="utf-8"))


def cmd_check(args):
    S = load_semigroup(args.file)
    emit(analyze(S, {"kind": "file", "name": args.file}, False, args.verify), args)


def cmd_level(args):
    S = load_semigroup(args.file)
    emit(analyze(S, {"kind": "file", "name": args.file}, True, args.verify), args)


def cmd_oracle(args):
    S = load_semigroup(args.file)
    t0 = time.perf_counter()
    n = min_level(S, args.sense, args.max_level)
    report = {"input": {"kind": "file", "name": args.file}, "sense": args.sense,
              "cap": args.max_level, "min_level": n,
              "timings_ms": {"oracle": round((time.perf_counter() - t0) * 1000, 3)}}
    if args.json:
        print(serialize(report))
    elif n is None:
        print(f"no {SENSE_LABEL[args.sense]} level <= {args.max_level}")
    else:
        print(f"min level {n}, {SENSE_LABEL[args.sense]}")


def cmd_dfa(args):
    d = parse_dfa(Path(args.file).read_text(encoding="utf-8"))
    S, letters = transition_semigroup(d, cap=args.cap)
    report = analyze(S, {"kind": "dfa", "name": args.file}, True, args.verify)
    report["letters"] = dict(letters)
    if args.json:
        emit(report, args)
        return
    text = render(report).splitlines()
    text[0] = f"dfa: {args.file}: transition semigroup of order {S.order}"
    print("\n".join(text))
    o = report.get("oracle")
    if o is not None and not o["agree"]:
        raise VerifyFailed("; ".join(o["problems"]))


def cmd_catalog(args):
    entry = catalog(args.name, args.size)
    if args.emit:
        print(format_semigroup(entry.semigroup, comment=entry.name), end="")
        return
    report = analyze(entry.semigroup, {"kind": "catalog", "name": entry.name}, True,
                     args.verify)
    if entry.expected is not None:
        report["expected"] = {"locally_testable": entry.expected[0],
                              "level": entry.expected[1], "provenance": entry.provenance}
    emit(report, args)


def cmd_enumerate(args):
    t0 = time.perf_counter()
    total = lt = 0
    histogram = {}
    problems = []
    if args.transformations:
        stream = (S for _, S, _ in random_transformation_semigroups(
            args.transformations, seed=args.seed, max_order=args.max_order))
    else:
        stream = enumerate_semigroups(args.order)
    for S in stream:
        total += 1
        v = is_locally_testable(S)
        if v.locally_testable:
            lt += 1
            n = level(S).level
            histogram[n] = histogram.get(n, 0) + 1
        if args.verify:
            cap = 2 * S.order + 2
            oracle = min_level(S, "B", cap)
            mine = level(S).level if v.locally_testable else None
            if oracle != mine or is_locally_testable_semilattice(S).locally_testable != \
                    v.locally_testable:
                problems.append(list(map(list, S.table)))
    report = {"input": {"kind": "enumerate", "order": args.order,
                        "transformations": args.transformations, "seed": args.seed},
              "count": total, "locally_testable": lt,
              "levels": {str(k): histogram[k] for k in sorted(histogram)},
              "timings_ms": {"total": round((time.perf_counter() - t0) * 1000, 3)}}
    if args.verify:
        report["disagreements"] = problems
    if args.json:
        print(serialize(report))
    else:
        print(f"{total} semigroups, {lt} locally testable")
        for k in sorted(histogram):
            print(f"  level {k}: {histogram[k]}")
        if args.verify:
            print(f"oracle disagreements: {len(problems)}")
    if problems:
        raise VerifyFailed(f"{len(problems)} disagreements")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", action="store_true",
                        help="cross-check against the brute-force identity oracle")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled fixtures")

    parser = argparse.ArgumentParser(prog="ltsemi",
                                     description="Local testability of finite semigroups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide local testability")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("level", parents=[common], help="level of local testability")
    p.add_argument("file")
    p.set_defaults(func=cmd_level)

    p = sub.add_parser("oracle", parents=[common], help="brute-force minimal level")
    p.add_argument("file")
    p.add_argument("--sense", choices=("B", "T"), default="B")
    p.add_argument("--max-level", type=int, default=12)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dfa", parents=[common], help="analyze a DFA's transition semigroup")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=4096, help="maximum semigroup order")
    p.set_defaults(func=cmd_dfa)

    p = sub.add_parser("catalog", parents=[common], help="analyze or emit a named semigroup")
    p.add_argument("name", choices=KEYS)
    p.add_argument("--size", type=int)
    p.add_argument("--emit", action="store_true", help="print the table in .sgp format")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("enumerate", parents=[common], help="sweep a corpus")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--transformations", type=int, default=0,
                   help="sample this many seeded transformation semigroups instead")
    p.add_argument("--max-order", type=int, default=8)
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (SemigroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvariantError, VerifyFailed) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())
