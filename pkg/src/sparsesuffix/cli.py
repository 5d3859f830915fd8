"""Command-line interface: build, verify, and benchmark.

Output formats
--------------
csv: the header line "ssa,slcp" followed by one "position,lcp" line per
rank, each terminated by a single newline.

bin: the magic bytes "SSA1", then the text length n and the entry count b
as 8-byte little-endian unsigned integers, then b (position, lcp) pairs of
8-byte little-endian unsigned integers in rank order.

All randomness (position sampling, fingerprint bases) is derived from the
single --seed flag, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import struct
import sys
import time
from dataclasses import asdict, dataclass, field

from .driver import (
    SECOND_PASS_SEED_STEP,
    RunConfig,
    RunCounters,
    main_algo,
    parameterized_algo,
)
from .emitter import SsaSlcp
from .errors import SparseSuffixError, ValidationError
from .oracle import naive_ssa_slcp
from .text import load_positions, load_text, sample_positions

# Offset separating the fingerprint seed from the position-sampling seed.
_FINGERPRINT_SEED_STEP = 0x5DEECE66D

_BIN_MAGIC = b"SSA1"

_PHASES = ("preprocess", "refine", "sort", "emit", "merge")


@dataclass
class RunReport:
    """Structured record of one construction run."""

    algorithm: str
    n: int
    b: int
    seeds: dict = field(default_factory=dict)
    ell: int | None = None
    b_prime: int | None = None
    second_pass_ran: bool = False
    phase_ms: dict = field(default_factory=dict)
    total_ms: float = 0.0
    groups: int = 0
    members: int = 0
    stack_peak: int = 0
    hash_peak: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def format_csv(result: SsaSlcp) -> str:
    lines = ["ssa,slcp"]
    lines.extend(f"{p},{l}" for p, l in zip(result.ssa, result.slcp))
    return "\n".join(lines) + "\n"


def parse_csv(body: str) -> SsaSlcp:
    lines = [line for line in body.split("\n") if line]
    if not lines or lines[0] != "ssa,slcp":
        raise ValidationError("missing ssa,slcp header")
    ssa = []
    slcp = []
    for line in lines[1:]:
        p, l = line.split(",")
        ssa.append(int(p))
        slcp.append(int(l))
    return SsaSlcp(ssa, slcp)


def format_binary(result: SsaSlcp, n: int) -> bytes:
    out = io.BytesIO()
    out.write(_BIN_MAGIC)
    out.write(struct.pack("<QQ", n, len(result.ssa)))
    for p, l in zip(result.ssa, result.slcp):
        out.write(struct.pack("<QQ", p, l))
    return out.getvalue()


def parse_binary(blob: bytes) -> tuple[int, SsaSlcp]:
    if blob[:4] != _BIN_MAGIC:
        raise ValidationError("bad magic, not a binary output file")
    n, b = struct.unpack_from("<QQ", blob, 4)
    ssa = []
    slcp = []
    offset = 20
    for _ in range(b):
        p, l = struct.unpack_from("<QQ", blob, offset)
        ssa.append(p)
        slcp.append(l)
        offset += 16
    return n, SsaSlcp(ssa, slcp)


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--text", required=True, help="path to the raw byte text")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--positions", help="file with one 1-based position per line")
    source.add_argument("--b", type=int, help="sample this many positions uniformly")
    parser.add_argument("--seed", type=int, default=0,
                        help="master seed for sampling and hashing (default 0)")
    parser.add_argument("--algo", choices=("main", "param", "naive"), default="param",
                        help="construction algorithm (default param)")
    parser.add_argument("--s", type=int, default=None,
                        help="fingerprint samples, in [b, n] (default b)")
    parser.add_argument("--jstart", type=int, default=None,
                        help="override the refinement start level")


def _load_inputs(args):
    text = load_text(args.text)
    if args.positions is not None:
        positions = load_positions(args.positions, text.n)
    else:
        if args.b is None or args.b < 1:
            raise ValidationError(f"--b {args.b}: must be a positive count")
        positions = sample_positions(text.n, args.b, args.seed)
    return text, positions


def _run(args, text, positions):
    """Run the selected algorithm, returning (result, report)."""
    report = RunReport(algorithm=args.algo, n=text.n, b=len(positions))
    report.seeds = {"master": args.seed, "sampling": args.seed}
    counters = RunCounters()
    t0 = time.perf_counter()
    if args.algo == "naive":
        result = naive_ssa_slcp(text, positions)
    else:
        fp_seed = args.seed + _FINGERPRINT_SEED_STEP
        report.seeds["fingerprint"] = fp_seed
        cfg = RunConfig(seed=fp_seed, s=args.s, j_start_override=args.jstart,
                        report_counters=True)
        if args.algo == "main":
            result = main_algo(text, positions, cfg, counters=counters)
        else:
            result, stats = parameterized_algo(text, positions, cfg, counters=counters)
            report.ell = stats.ell
            report.b_prime = stats.b_prime
            report.second_pass_ran = stats.second_pass_ran
            if stats.second_pass_ran:
                report.seeds["fingerprint_second_pass"] = (
                    fp_seed + SECOND_PASS_SEED_STEP
                )
    report.total_ms = (time.perf_counter() - t0) * 1000.0
    report.phase_ms = dict(counters.phase_ms)
    report.groups = counters.groups
    report.members = counters.members
    report.stack_peak = counters.stack_peak
    report.hash_peak = counters.hash_peak
    return result, report


def _write_output(args, result: SsaSlcp, n: int) -> None:
    if args.format == "csv":
        body = format_csv(result)
        if args.out:
            with open(args.out, "w", newline="") as handle:
                handle.write(body)
        else:
            sys.stdout.write(body)
    else:
        blob = format_binary(result, n)
        if args.out:
            with open(args.out, "wb") as handle:
                handle.write(blob)
        else:
            sys.stdout.buffer.write(blob)


def cmd_build(args) -> int:
    text, positions = _load_inputs(args)
    result, report = _run(args, text, positions)
    _write_output(args, result, text.n)
    if args.report:
        with open(args.report, "w") as handle:
            handle.write(report.to_json() + "\n")
    return 0


def cmd_verify(args) -> int:
    text, positions = _load_inputs(args)
    result, _ = _run(args, text, positions)
    expected = naive_ssa_slcp(text, positions)
    for name, got, want in (("ssa", result.ssa, expected.ssa),
                            ("slcp", result.slcp, expected.slcp)):
        for i, (g, w) in enumerate(zip(got, want)):
            if g != w:
                print(f"mismatch in {name} at rank {i}: got {g}, oracle {w}")
                return 1
    print(f"verified: {args.algo} matches the oracle on {len(positions)} suffixes")
    return 0


def cmd_bench(args) -> int:
    text = load_text(args.text)
    b = int(args.b_ratio * text.n)
    if b < 1:
        raise ValidationError(
            f"--b-ratio {args.b_ratio}: yields b={b} for n={text.n}, need at least 1"
        )
    if b > text.n:
        raise ValidationError(f"--b-ratio {args.b_ratio}: yields b={b} > n={text.n}")
    algos = [a.strip() for a in args.algo.split(",") if a.strip()]
    for algo in algos:
        if algo not in ("main", "param", "naive"):
            raise ValidationError(f"--algo {args.algo}: unknown algorithm {algo!r}")

    rows = []
    positions = sample_positions(text.n, b, args.seed)
    for algo in algos:
        for rep in range(args.repeat):
            run_args = argparse.Namespace(
                algo=algo, seed=args.seed, s=None, jstart=None
            )
            result, report = _run(run_args, text, positions)
            row = {
                "algorithm": algo,
                "rep": rep,
                "n": text.n,
                "b": len(positions),
                "b_prime": "" if report.b_prime is None else report.b_prime,
                "ell": "" if report.ell is None else report.ell,
                "total_ms": f"{report.total_ms:.3f}",
                "groups": report.groups,
                "members": report.members,
                "stack_peak": report.stack_peak,
                "hash_peak": report.hash_peak,
                "seed": args.seed,
            }
            for phase in _PHASES:
                row[f"{phase}_ms"] = f"{report.phase_ms.get(phase, 0.0):.3f}"
            rows.append(row)

    fields = ["algorithm", "rep", "n", "b", "b_prime", "ell"]
    fields += [f"{phase}_ms" for phase in _PHASES]
    fields += ["total_ms", "groups", "members", "stack_peak", "hash_peak", "seed"]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsesuffix",
        description="Sparse suffix array and sparse LCP array construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct the arrays and write them out")
    _add_input_flags(p_build)
    p_build.add_argument("--out", help="output path (default stdout)")
    p_build.add_argument("--format", choices=("csv", "bin"), default="csv")
    p_build.add_argument("--report", help="write a JSON run report to this path")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="compare an algorithm with the oracle")
    _add_input_flags(p_verify)
    p_verify.add_argument("--out", help="ignored; verify is self-contained")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time the algorithms on one text")
    p_bench.add_argument("--text", required=True)
    p_bench.add_argument("--b-ratio", type=float, default=0.0001,
                         help="positions as a fraction of n (default 0.0001)")
    p_bench.add_argument("--repeat", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--algo", default="main,param",
                         help="comma-separated list of algorithms to run")
    p_bench.add_argument("--out", help="CSV output path (default stdout)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SparseSuffixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
