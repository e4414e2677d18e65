"""Command-line harness: generate, sort, bench, cost, compare.

Exit status: 0 on success, 1 on validation errors, 2 when an ``--check``
oracle comparison fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .batcher import batcher_sort, build_bitonic_network
from .bench import BenchConfig, OracleMismatch, run_bench, write_bench_csv
from .bitstream import emission_str, written_str
from .cost import DEFAULT_WEIGHTS, cost_table
from .generators import counter_generate, fsm_generate
from .max_sorter import MaxSortEngine
from .min_sorter import MinSortEngine

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; this harness reserves 2
    # for oracle mismatches and reports validation problems with 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read_values(path: str) -> list[int]:
    # all fields in the file form one input vector; rows are formatting only
    text = Path(path).read_text(encoding="utf-8")
    values = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            values.extend(int(field) for field in line.split(","))
    if not values:
        raise ValueError(f"no values in {path}")
    return values


def _write_or_print(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    fsm = fsm_generate(args.value, args.m)
    counter = counter_generate(args.value, args.m)
    print(f"value {args.value} width {args.m} stream length {len(fsm)}")
    print(f"fsm      emission={emission_str(fsm)} written={written_str(fsm)}")
    print(f"counter  emission={emission_str(counter)} written={written_str(counter)}")
    return EXIT_OK


def cmd_sort(args) -> int:
    values = _read_values(args.input)
    if args.arch == "batcher":
        outputs = batcher_sort(values, args.m)
        trace = None
    else:
        engine_cls = MinSortEngine if args.arch == "min" else MaxSortEngine
        engine = engine_cls(values, args.m)
        outputs = engine.run()
        trace = engine.trace
    _write_or_print(",".join(str(v) for v in outputs) + "\n", args.output)
    if args.trace:
        if trace is None:
            raise ValueError("--trace requires an iterative engine (min or max)")
        Path(args.trace).write_text(
            "\n".join(trace.csv_rows()) + "\n", encoding="utf-8"
        )
    if args.check:
        expected = sorted(values, reverse=(args.arch == "max"))
        if outputs != expected:
            print(f"check failed: {outputs} != {expected}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = BenchConfig(
        arch=args.arch,
        n=args.n,
        m=args.m,
        dist=args.dist,
        mu=args.mu,
        sigma=args.sigma,
        trials=args.trials,
        seed=args.seed,
        input_path=args.input,
    )
    try:
        result = run_bench(cfg, check=args.check)
    except OracleMismatch as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.output:
        write_bench_csv(result, args.output)
    else:
        print("\n".join(result.csv_rows()))
    return EXIT_OK


def cmd_cost(args) -> int:
    ns = tuple(int(v) for v in args.n.split(","))
    ms = tuple(int(v) for v in args.m.split(","))
    rows = cost_table(ns, ms, DEFAULT_WEIGHTS)
    lines = ["n,m,min_sorter,max_sorter,batcher,cas_blocks,ordering_ok"]
    for row in rows:
        lines.append(
            f"{row['n']},{row['m']},{row['min_sorter']:.1f},{row['max_sorter']:.1f},"
            f"{row['batcher']:.1f},{row['cas_blocks']},{row['ordering_ok']}"
        )
    _write_or_print("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    values = _read_values(args.input)
    ascending = MinSortEngine(values, args.m).run()
    descending = MaxSortEngine(values, args.m).run()
    network = batcher_sort(values, args.m)
    print(f"input:      {values}")
    print(f"min engine: {ascending}")
    print(f"max engine: {descending}")
    print(f"batcher:    {network}")
    agree = ascending == list(reversed(descending)) == network
    if args.check:
        reference = sorted(values)
        if not (agree and ascending == reference):
            print("check failed: architectures disagree", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"agreement:  {agree}")
    return EXIT_OK


def cmd_network(args) -> int:
    print(build_bitonic_network(args.n).describe())
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="unarysort", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[], help="print both generators' streams")
    p.add_argument("value", type=int)
    p.add_argument("--m", type=int, default=3, help="data width in bits")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sort", help="sort a CSV of integers")
    p.add_argument("--input", required=True, help="CSV file of unsigned integers")
    p.add_argument("--arch", choices=("min", "max", "batcher"), default="min")
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--output", help="write sorted CSV here instead of stdout")
    p.add_argument("--trace", help="write the cycle trace CSV here")
    p.add_argument("--check", action="store_true",
                   help="verify against a reference sort; exit 2 on mismatch")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("bench", help="cycle-count benchmark over random inputs")
    p.add_argument("--arch", choices=("min", "max"), default="min")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--dist", choices=("gaussian", "uniform", "file"),
                   default="gaussian")
    p.add_argument("--mu", type=float, default=128.0)
    p.add_argument("--sigma", type=float, default=32.0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--input", help="CSV of input vectors, one per row (dist=file)")
    p.add_argument("--output", help="CSV path; a .meta.json sidecar is written too")
    p.add_argument("--check", action="store_true",
                   help="verify every trial against the sorted-sample oracle")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("cost", help="structural cost table over an (N, M) grid")
    p.add_argument("--n", default="8,16,32,64,128,256", help="comma list of N")
    p.add_argument("--m", default="8,16,32", help="comma list of M")
    p.add_argument("--output")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("compare", help="run all three architectures on one input")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("network", help="dump a bitonic CAS network")
    p.add_argument("--n", type=int, default=8)
    p.set_defaults(func=cmd_network)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
