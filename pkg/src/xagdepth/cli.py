"""Command-line driver.

Exit codes: 0 success, 1 equivalence mismatch, 2 parse or usage error,
3 post-optimization verification failure.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence

from .balance import ResynthChoice, optimize_to_fixpoint
from .equiv import check_equivalence, default_seed
from .netlist import ParseError, load_network, write_native, write_qc
from .quantum import ALAP, ASAP, map_to_circuit
from .xag import general_depth, mult_complexity, mult_depth, propagate_inverters

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class VerificationError(RuntimeError):
    pass


def _name(path: str) -> str:
    base = os.path.basename(path)
    return base.rsplit(".", 1)[0] if "." in base else base


def _target(out: Optional[str], path: str, many: bool, suffix: str) -> Optional[str]:
    if out is None:
        return None
    if many:
        os.makedirs(out, exist_ok=True)
        return os.path.join(out, _name(path) + suffix)
    return out


# -- per-file jobs (module level so they can run in worker processes) ------

def _stats_row(path: str) -> List[str]:
    net = load_network(path)
    return [_name(path), str(net.num_inputs), str(net.num_gates), str(mult_complexity(net)),
            str(mult_depth(net)), str(general_depth(net))]


def _balance_row(path: str, choice: ResynthChoice, out: Optional[str], verify: bool,
                 seed: int) -> List[str]:
    net = load_network(path)
    start = time.perf_counter()
    res, rounds = optimize_to_fixpoint(net, choice)
    elapsed = time.perf_counter() - start
    if verify:
        check = check_equivalence(net, res, seed=seed)
        if not check.equal:
            raise VerificationError(
                f"{path}: optimized network differs on output {check.output} "
                f"for input {''.join(map(str, check.counterexample))}")
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(write_native(res))
    return [_name(path),
            f"{mult_complexity(res)} ({mult_complexity(net)})",
            f"{mult_depth(res)} ({mult_depth(net)})",
            str(rounds), f"{elapsed:.2f}"]


def _map_row(path: str, schedule: str, qc_out: Optional[str], copies: bool) -> List[str]:
    net = propagate_inverters(load_network(path))
    circuit, est = map_to_circuit(net, schedule)
    if qc_out is not None:
        with open(qc_out, "w", encoding="utf-8") as fh:
            fh.write(write_qc(circuit))
    row = [_name(path), str(est.t_count), str(est.t_depth), str(est.qubits), est.schedule]
    if copies:
        row.append(str(est.copies))
    return row


def _run_rows(tasks: Sequence[tuple], fn: Callable, jobs: int) -> List[List[str]]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*tasks)))
    return [fn(*t) for t in tasks]


def _emit(header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    print("\t".join(header))
    for r in rows:
        print("\t".join(r))


# -- commands -------------------------------------------------------------

def cmd_stats(args) -> int:
    rows = _run_rows([(p,) for p in args.files], _stats_row, args.jobs)
    _emit(["benchmark", "inputs", "gates", "MC", "MD", "depth"], rows)
    return EXIT_OK


def cmd_balance(args) -> int:
    choice = ResynthChoice(strategy=args.strategy, effort=args.effort, cut_size=args.cut_size,
                           cut_limit=args.cut_limit, max_rounds=args.max_rounds,
                           esop_cost=args.esop_cost)
    many = len(args.files) > 1
    tasks = [(p, choice, _target(args.out, p, many, ".xag"), args.verify, args.seed)
             for p in args.files]
    rows = _run_rows(tasks, _balance_row, args.jobs)
    _emit(["benchmark", "MC", "MD", "rounds", "runtime"], rows)
    return EXIT_OK


def cmd_map(args) -> int:
    many = len(args.files) > 1
    tasks = [(p, args.schedule, _target(args.qc_out, p, many, ".qc"), args.report_copies)
             for p in args.files]
    rows = _run_rows(tasks, _map_row, args.jobs)
    header = ["benchmark", "T-count", "T-depth", "qubits", "schedule"]
    if args.report_copies:
        header.append("copies")
    _emit(header, rows)
    return EXIT_OK


def cmd_check_equiv(args) -> int:
    a = load_network(args.file_a)
    b = load_network(args.file_b)
    try:
        res = check_equivalence(a, b, args.exhaustive_max, args.vectors, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    mode = "exhaustive" if res.exhaustive else f"random seed={args.seed}"
    if res.equal:
        print(f"equivalent\t{res.patterns} patterns ({mode})")
        return EXIT_OK
    cex = "".join(map(str, res.counterexample))
    print(f"different\toutput {res.output}\tinput x1..x{a.num_inputs} = {cex} ({mode})")
    return EXIT_MISMATCH


def _limit(text: str) -> Optional[int]:
    if text in ("inf", "none", "0"):
        return None
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xagdepth",
                                     description="Multiplicative-depth optimization of XOR-AND graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print size and depth figures")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("balance", help="reduce multiplicative depth until it stops improving")
    p.add_argument("files", nargs="+")
    p.add_argument("--cut-size", type=int, default=6)
    p.add_argument("--cut-limit", type=_limit, default=25, help="cuts kept per node ('inf' for no limit)")
    p.add_argument("--strategy", choices=["esop", "espp"], default="esop")
    p.add_argument("--max-rounds", type=int, default=100)
    p.add_argument("--esop-cost", choices=["cubes", "literals"], default="cubes")
    p.add_argument("--effort", type=int, default=2, help="ESOP reshaping rounds")
    p.add_argument("--out", help="output netlist (a directory when several files are given)")
    p.add_argument("--no-verify", dest="verify", action="store_false")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("map", help="quantum resource estimate")
    p.add_argument("files", nargs="+")
    p.add_argument("--schedule", choices=[ASAP, ALAP], default=ASAP)
    p.add_argument("--qc-out", help="gate list output (a directory when several files are given)")
    p.add_argument("--report-copies", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("check-equiv", help="compare two networks by simulation")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--exhaustive-max", type=int, default=12)
    p.add_argument("--vectors", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_check_equiv)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = default_seed()
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
