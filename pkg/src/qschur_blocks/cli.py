"""Command-line front end.

Exit status: 0 success, 1 the two block computations disagree, 2 bad input,
3 an internal invariant failed.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import checks, report
from .abacus import e_core, e_weight, render_abacus
from .blocks import (InvariantViolation, NotCosaturatedError, WeightPoset, sim_lambda_classes,
                     verify_main_theorem)
from .hooks import horizontal_condition_a, horizontal_condition_c, only_horizontal_hooks
from .jantzen import jantzen_graph, jantzen_partners, jantzen_partners_by_columns
from .partitions import ArithmeticParams, Partition, hook_lengths
from .posets import parse_poset_spec

log = logging.getLogger("qschur_blocks")


class UsageError(ValueError):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, required=True, help="quantum characteristic, at least 2")
    common.add_argument("--p", type=int, default=0, help="field characteristic, 0 or prime")
    common.add_argument("--format", choices=["text", "json", "tsv"], default="text")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=None)

    posetargs = argparse.ArgumentParser(add_help=False)
    posetargs.add_argument("--r", type=int, default=None)
    posetargs.add_argument("--poset", required=True,
                           help="all | maxlen:<n> | dominating:<parts> | explicit:@<file>")
    posetargs.add_argument("--filter", default=None, help="nonempty-core | core:<parts>")

    parser = argparse.ArgumentParser(
        prog="qschur-blocks",
        description="Blocks of truncated q-Schur algebras of type A via e-cores, "
                    "the s and chi invariants, and Jantzen linkage.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in [("core", "print the e-core"), ("weight", "print the e-weight")]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("partition", type=_partition)

    p = sub.add_parser("abacus", parents=[common], help="draw the e-runner abacus")
    p.add_argument("partition", type=_partition)
    p.add_argument("--l", type=int, default=None, help="number of beads")

    p = sub.add_parser("hooks", parents=[common], help="hook lengths and horizontal-hook tests")
    p.add_argument("partition", type=_partition)

    p = sub.add_parser("jantzen", parents=[common], help="non-zero Jantzen coefficients")
    p.add_argument("partition", type=_partition, nargs="?")
    p.add_argument("--columns", action="store_true",
                   help="list partitions above PARTITION using the column criterion")
    p.add_argument("--signs", action="store_true",
                   help="report the leg-length parity sign instead of 'unknown'")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--poset", default=None, help="export every edge inside this poset")
    p.add_argument("--filter", default=None)

    p = sub.add_parser("blocks", parents=[common, posetargs], help="block decomposition")
    p.add_argument("--diagnostics", action="store_true",
                   help="also show chi computed against the e-core")

    sub.add_parser("verify", parents=[common, posetargs],
                   help="compare invariant classes with Jantzen linkage classes")

    p = sub.add_parser("invariants", help="run the property suites")
    p.add_argument("--max-r", type=int, default=12)
    p.add_argument("--random", type=int, default=50, help="random posets per (e, p)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json", "tsv"], default="text")
    return parser


def _params(args) -> ArithmeticParams:
    try:
        return ArithmeticParams(args.e, args.p)
    except ValueError as exc:
        raise UsageError(str(exc))


def _poset(args, params: ArithmeticParams) -> WeightPoset:
    try:
        spec = parse_poset_spec(args.poset, args.r, args.filter, params.e)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc))
    if params.e > spec.r:
        raise UsageError(f"e={params.e} > r={spec.r}: the algebra is semisimple")
    return WeightPoset.from_spec(spec, params)


def cmd_core(args, out):
    out.write(f"{e_core(args.partition, _params(args).e)}\n")


def cmd_weight(args, out):
    out.write(f"{e_weight(args.partition, _params(args).e)}\n")


def cmd_abacus(args, out):
    e = _params(args).e
    if args.l is not None and args.l < len(args.partition):
        raise UsageError(f"--l must be at least {len(args.partition)}")
    out.write(render_abacus(args.partition, e, args.l) + "\n")


def cmd_hooks(args, out):
    mu, e = args.partition, _params(args).e
    grid = hook_lengths(mu)
    verdict = {
        "a": horizontal_condition_a(mu, e),
        "b": only_horizontal_hooks(mu, e),
        "c": horizontal_condition_c(mu, e),
    }
    if args.format == "json":
        out.write(report.dumps({"partition": list(mu), "e": e, "hooks": grid, "conditions": verdict}))
        return
    sep = "\t" if args.format == "tsv" else " "
    width = max((len(str(h)) for row in grid for h in row), default=1)
    for row in grid:
        out.write(sep.join(str(h) if sep == "\t" else str(h).rjust(width) for h in row) + "\n")
    for k, v in verdict.items():
        out.write(f"condition ({k}): {'yes' if v else 'no'}\n")


def cmd_jantzen(args, out):
    params = _params(args)
    if args.poset:
        poset = _poset(args, params)
        edges = jantzen_graph(poset.members, params, threads=args.threads, signs=args.signs).edges
    elif args.partition is not None:
        if args.columns:
            edges = sorted(jantzen_partners_by_columns(args.partition, params))
        else:
            edges = sorted(jantzen_partners(args.partition, params, args.signs))
    else:
        raise UsageError("jantzen needs a PARTITION or --poset")
    writer = {"json": report.edges_json, "tsv": report.edges_tsv, "text": report.edges_text}
    out.write(writer[args.format](edges))


def cmd_blocks(args, out):
    poset = _poset(args, _params(args))
    verification = verify_main_theorem(poset, threads=args.threads)
    blocks = verification.invariant_blocks
    if args.format == "json":
        out.write(report.dumps(report.block_report(poset, blocks, verification.equal)))
    elif args.format == "tsv":
        out.write(report.blocks_tsv(poset, blocks))
    else:
        out.write(report.blocks_text(poset, blocks, verification.equal, args.diagnostics))


def cmd_verify(args, out) -> int:
    poset = _poset(args, _params(args))
    rep = verify_main_theorem(poset, threads=args.threads)
    n_sim = len(rep.invariant_blocks.classes)
    n_jan = len(rep.jantzen_blocks.classes)
    if args.format == "json":
        body = {
            "r": poset.r, "e": poset.params.e, "p": poset.params.p, "poset": poset.spec,
            "cosaturated": poset.cosaturated, "e_cosaturated": poset.e_cosaturated,
            "agreement": rep.equal, "invariant_blocks": n_sim, "jantzen_blocks": n_jan,
        }
        if rep.counterexample:
            ce = rep.counterexample
            body["counterexample"] = {
                "pair": [list(x) for x in ce["pair"]],
                "same_label": ce["same_label"], "linked": ce["linked"],
                "labels": [[list(l.core), l.s, list(l.chi_pcore)] for l in ce["labels"]],
                "path": [list(x) for x in ce["path"]] if ce["path"] else None,
            }
        out.write(report.dumps(body))
    elif rep.equal:
        out.write(f"{n_sim} blocks, agreement\n")
    else:
        ce = rep.counterexample
        lam, mu = ce["pair"]
        out.write(f"disagreement: {n_sim} invariant classes vs {n_jan} linkage classes\n")
        out.write(f"first differing pair: {lam} and {mu}\n")
        for x, lab in zip(ce["pair"], ce["labels"]):
            out.write(f"  {x}: core={lab.core} s={lab.s} chi={lab.chi} chi_pcore={lab.chi_pcore}\n")
        if ce["path"]:
            out.write("  Jantzen path: " + " -- ".join(map(str, ce["path"])) + "\n")
        else:
            out.write("  same labels but no Jantzen path\n")
    return 0 if rep.equal else 1


def cmd_invariants(args, out) -> int:
    # the random campaign posets are e-cosaturated by construction; no need to warn
    logging.getLogger("qschur_blocks").setLevel(logging.ERROR)
    results = checks.run_all(args.max_r, seed=args.seed, n_random=args.random)
    if args.format == "json":
        out.write(report.dumps([{"suite": r.name, "checked": r.checked,
                                 "violations": r.violations} for r in results]))
    else:
        for r in results:
            out.write(r.line() + "\n")
            for v in r.violations[:10]:
                out.write(f"    {v}\n")
    return 0 if all(r.ok for r in results) else 3


COMMANDS = {
    "core": cmd_core, "weight": cmd_weight, "abacus": cmd_abacus, "hooks": cmd_hooks,
    "jantzen": cmd_jantzen, "blocks": cmd_blocks, "verify": cmd_verify,
    "invariants": cmd_invariants,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out) or 0
    except (UsageError, NotCosaturatedError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"{parser.prog}: invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
