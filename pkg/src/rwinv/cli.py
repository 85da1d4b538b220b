"""Command-line entry point: ``rwinv <subcommand> ...``.

Exit codes: 0 success, 1 usage or I/O error, 2 a wrong-signed trial (or a
failed table/oracle check).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import experiment as exp
from .oracle import oracle_check
from .characteristic import (
    DiamondError,
    HodgeDiamond,
    BettiData,
    ChernData,
    bounds_dim4,
    bounds_dim6,
    chern_from_betti_dim4,
    chern_from_chi_dim6,
    chi_from_hodge,
    rw_from_betti_dim4,
    rw_from_chern,
    verify_known_tables,
)

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _graph_list(text: str) -> tuple[str, ...]:
    names = tuple(g.strip() for g in text.split(",") if g.strip())
    bad = [g for g in names if g not in exp.ALL_GRAPHS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"choose graphs from {','.join(exp.ALL_GRAPHS)}")
    return names


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rwinv", description="Rozansky-Witten curvature contractions and characteristic numbers")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("experiment", help="seeded Monte Carlo sign experiment")
    e.add_argument("--dim-n", type=int, default=3)
    e.add_argument("--trials", type=int, default=exp.DEFAULT_TRIALS)
    e.add_argument("--seed", type=_seed, default=0)
    e.add_argument("--range", type=float, default=1.0, dest="entry_range")
    e.add_argument("--graphs", type=_graph_list, default=exp.DEFAULT_GRAPHS,
                   help=f"comma-separated subset of {','.join(exp.ALL_GRAPHS)}")
    e.add_argument("--out", help="JSON-lines output file (default: stdout)")
    e.add_argument("--threads", type=int, default=1, help="worker threads (RW_THREADS overrides)")

    v = sub.add_parser("verify-tables", help="regenerate and check the golden table")
    v.add_argument("--json", action="store_true", help="print the JSON report instead of the table")
    v.add_argument("--report", help="also write the JSON report to this file")

    h = sub.add_parser("invariants-from-hodge", help="invariants from a Hodge diamond JSON file")
    h.add_argument("file")

    b = sub.add_parser("bounds", help="exact bounds in dimension 4 or 6")
    b.add_argument("--dim", type=int, choices=(4, 6), required=True)

    o = sub.add_parser("oracle-check", help="planned evaluation vs the independent oracles")
    o.add_argument("--tensors", type=int, default=20)
    return p


def _cmd_experiment(args) -> int:
    config = exp.ExperimentConfig(
        args.dim_n, args.trials, args.seed, args.entry_range, args.graphs, args.out
    )
    records = exp.run_trials(config, args.threads)
    summary = exp.summarize(records)
    if args.out:
        exp.write_jsonl(records, args.out, summary)
    else:
        for rec in records:
            print(json.dumps(rec.to_json()))
        if records:
            print(json.dumps({"summary": summary.to_json()}))
    if summary.has_violation:
        print(f"sign violations: {summary.violations}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_known_tables()
    print(report.dumps() if args.json else report.to_text())
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.dumps() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _str_values(d: dict) -> dict:
    return {k: str(v) for k, v in d.items()}


def invariants_from_hodge(diamond: HodgeDiamond) -> dict:
    chi = chi_from_hodge(diamond)
    out: dict = {"dim_n": diamond.dim_n, "chi_y": list(chi.chi)}
    n = diamond.dim_n
    if n == 1:
        chern = ChernData.of(1, diamond.euler())
    elif n == 2:
        betti = BettiData(diamond.betti(2), diamond.betti(3))
        out["betti"] = {"b2": betti.b2, "b3": betti.b3}
        out["rw_from_betti"] = _str_values(rw_from_betti_dim4(betti).values)
        chern = chern_from_betti_dim4(betti)
    elif n == 3:
        chern = chern_from_chi_dim6(chi)
    else:
        raise DiamondError(f"no closed formulas for dim_n={n}")
    out["chern"] = _str_values(chern.numbers)
    out["rw"] = _str_values(rw_from_chern(chern).values)
    return out


def _cmd_hodge(args) -> int:
    diamond = HodgeDiamond.from_json(args.file)
    print(json.dumps(invariants_from_hodge(diamond), indent=2))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    for bound in bounds_dim4() if args.dim == 4 else bounds_dim6():
        print(bound)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    results = oracle_check(args.tensors)
    for r in results:
        print(r)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION


COMMANDS = {
    "experiment": _cmd_experiment,
    "verify-tables": _cmd_verify,
    "invariants-from-hodge": _cmd_hodge,
    "bounds": _cmd_bounds,
    "oracle-check": _cmd_oracle,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"rwinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    _entry()
