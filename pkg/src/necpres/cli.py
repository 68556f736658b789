"""Command-line front end: ``necpres <subcommand> ...``.

Exit codes: 0 ok, 2 usage, 3 parse/validation error, 4 budget exceeded,
5 solver disagreement, 6 invalid certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .election import InvalidInstanceError, pairwise_matrix
from .io import (
    ParseError,
    dump_report,
    generate_random,
    import_preflib,
    parse_instance,
    serialize_instance,
    verdict_from_report,
    verdict_report,
)
from .rules import parse_rule
from .solvers import BudgetExceeded, certificate_holds, route, solve, solve_bruteforce
from .solvers.dispatch import SOLVERS

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_DISAGREE = 5
EXIT_BAD_CERT = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str):
    try:
        return parse_instance(_read(path))
    except (ParseError, InvalidInstanceError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _rule(text: str):
    try:
        return parse_rule(text)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None


def _timed_solve(instance, rule, solver, budget):
    chosen = route(rule, solver)
    t0 = time.perf_counter()
    verdict = solve(instance, rule, solver=chosen, budget=budget)
    return verdict, chosen, time.perf_counter() - t0


def cmd_solve(args) -> int:
    instance = _load(args.file)
    rule = _rule(args.rule)
    verdict, chosen, dt = _timed_solve(instance, rule, args.solver, args.budget)
    report = verdict_report(instance, verdict, chosen, dt)
    if not verdict.yes and not certificate_holds(instance, rule, verdict):
        raise CliError(EXIT_BAD_CERT, "solver produced a certificate that does not validate")
    _write(args.out, dump_report(report))
    return 0


def cmd_check(args) -> int:
    instance = _load(args.file)
    try:
        report = json.loads(_read(args.certificate))
        rule = _rule(args.rule or report["rule"])
        verdict = verdict_from_report(instance, report)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CliError(EXIT_BAD_CERT, f"unreadable certificate: {exc!r}") from None
    if verdict.yes:
        print("YES report: nothing to check")
        return 0
    if certificate_holds(instance, rule, verdict):
        print(f"certificate valid: {instance.label(instance.p)} does not win under {rule.id}")
        return 0
    print("certificate INVALID", file=sys.stderr)
    return EXIT_BAD_CERT


def _crosscheck_one(instance, rule, budget):
    """(fast verdict, oracle verdict); raises CliError on any inconsistency."""
    fast = solve(instance, rule, solver="auto", budget=budget)
    slow = solve_bruteforce(instance, rule, budget=budget)
    for v in (fast, slow):
        if not v.yes and not certificate_holds(instance, rule, v):
            raise CliError(EXIT_BAD_CERT, f"{v.solver} certificate does not validate")
    if fast.yes != slow.yes:
        raise CliError(EXIT_DISAGREE, f"{fast.solver} says {fast.answer}, brute force says {slow.answer}")
    return fast, slow


def cmd_crosscheck(args) -> int:
    rule = _rule(args.rule)
    if args.file:
        instances = [(args.file, _load(args.file))]
    else:
        instances = (
            (f"random#{k}", generate_random(args.candidates, args.parties, args.voters, args.types, args.seed + k))
            for k in range(args.random)
        )
    counts = {"YES": 0, "NO": 0}
    for name, inst in instances:
        try:
            fast, _ = _crosscheck_one(inst, rule, args.budget)
        except CliError as exc:
            raise CliError(exc.code, f"{name}: {exc}") from None
        counts[fast.answer] += 1
    print(json.dumps({"rule": rule.id, "route": route(rule), "agree": counts, "disagreements": 0}, sort_keys=True))
    return 0


def _reduce_source(kind: str, text: str, rule):
    from .condorcet import RankedPairsRule
    from .reductions import (
        clique_to_ranked_pairs,
        hitting_set_to_short,
        hitting_set_to_vetolike,
        parse_clique,
        parse_dimacs,
        parse_hitting_set,
        sat_to_ranked_pairs,
        sat_to_short,
        sat_to_vetolike,
    )
    from .scoring import ScoringRule, Short, VetoLike

    family = rule.family if isinstance(rule, ScoringRule) else None
    rp = isinstance(rule, RankedPairsRule)
    if kind == "sat":
        f = parse_dimacs(text)
        if isinstance(family, Short):
            return sat_to_short(f, family)
        if isinstance(family, VetoLike):
            return sat_to_vetolike(f, family)
        if rp:
            return sat_to_ranked_pairs(f)
    elif kind == "hittingset":
        h = parse_hitting_set(text)
        if isinstance(family, Short):
            return hitting_set_to_short(h, family)
        if isinstance(family, VetoLike):
            return hitting_set_to_vetolike(h, family)
    elif kind == "clique" and rp:
        return clique_to_ranked_pairs(parse_clique(text))
    raise CliError(EXIT_USAGE, f"no {kind} construction for rule {rule.id}")


def cmd_reduce(args) -> int:
    rule = _rule(args.rule)
    try:
        instance = _reduce_source(args.source, _read(args.input), rule)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{args.input}: {exc}") from None
    _write(args.out, serialize_instance(instance))
    return 0


def cmd_stats(args) -> int:
    instance = _load(args.file)
    n = pairwise_matrix(instance.election).counts
    m = instance.election.m
    off = [(int(n[a, b]), int(n[b, a])) for a in range(m) for b in range(a + 1, m)]
    summary = {
        **instance.stats(),
        "majority": {
            "decided_pairs": sum(1 for x, y in off if x != y),
            "tied_pairs": sum(1 for x, y in off if x == y),
            "max_margin": max((abs(x - y) for x, y in off), default=0),
        },
    }
    condorcet = [
        instance.label(c) for c in range(m) if all(n[c, d] > n[d, c] for d in range(m) if d != c)
    ]
    summary["majority"]["condorcet_winner"] = condorcet[0] if condorcet else None
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


BENCH_SUITES = {
    "polynomial": ("borda", "copeland:0/1", "copeland:1/2", "maximin"),
    "borda": ("borda",),
    "copeland": ("copeland:0/1", "copeland:1/2", "copeland:1/1"),
    "maximin": ("maximin",),
}


def cmd_bench(args) -> int:
    rules = [parse_rule(r) for r in BENCH_SUITES[args.suite]]
    sizes = [(50, 200, 10), (100, 500, 25), (200, 1000, 50)]
    if args.quick:
        sizes = sizes[:1]
    rows = []
    for m, nv, t in sizes:
        inst = generate_random(m, t, nv, min(nv, args.types), args.seed)
        for rule in rules:
            verdict, chosen, dt = _timed_solve(inst, rule, "auto", None)
            rows.append({"C": m, "V": nv, "t": t, "rule": rule.id, "solver": chosen,
                         "answer": verdict.answer, "seconds": round(dt, 4)})
            print(f"|C|={m:4d} |V|={nv:5d} t={t:3d}  {rule.id:14s} {verdict.answer:3s} {dt:8.3f}s")
    if args.out:
        _write(args.out, json.dumps(rows, indent=2))
    return 0


def cmd_import(args) -> int:
    try:
        instance = import_preflib(_read(args.soc), _read(args.parties))
    except (ParseError, InvalidInstanceError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    _write(args.out, serialize_instance(instance))
    return 0


def cmd_generate(args) -> int:
    try:
        inst = generate_random(args.candidates, args.parties, args.voters, args.types, args.seed)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    _write(args.out, serialize_instance(inst))
    return 0


def _random_params(p, seed_default=0):
    p.add_argument("--candidates", type=int, default=7)
    p.add_argument("--parties", type=int, default=4)
    p.add_argument("--voters", type=int, default=6)
    p.add_argument("--types", type=int, default=4)
    p.add_argument("--seed", type=int, default=seed_default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="necpres", description="Necessary President solvers and instance tools")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and print a JSON report")
    p.add_argument("--rule", required=True)
    p.add_argument("--file", required=True)
    p.add_argument("--solver", choices=SOLVERS, default="auto")
    p.add_argument("--budget", type=int, default=None, help="nomination/guess budget")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="re-validate the certificate of a NO report")
    p.add_argument("--file", required=True)
    p.add_argument("--certificate", required=True)
    p.add_argument("--rule", default=None, help="override the rule recorded in the report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("crosscheck", help="compare the routed solver with brute force")
    p.add_argument("--rule", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--random", type=int, metavar="N", help="N seeded random instances")
    _random_params(p)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("reduce", help="compile a source instance into a Necessary President instance")
    p.add_argument("--from", dest="source", choices=("sat", "hittingset", "clique"), required=True)
    p.add_argument("--rule", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("stats", help="print t, s, tau, |V|, |C| and a majority summary")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="timing sweep for the polynomial solvers")
    p.add_argument("--suite", choices=sorted(BENCH_SUITES), default="polynomial")
    p.add_argument("--types", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="smallest size only")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("import", help="convert PrefLib SOC + party sidecar")
    p.add_argument("--soc", required=True)
    p.add_argument("--parties", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("generate", help="write a seeded random instance")
    _random_params(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"necpres: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"necpres: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"necpres: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
