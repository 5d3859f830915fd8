"""Pipeline facades: the one-shot construction and the adaptive two-pass one.

`main_algo` runs preprocess, refine, sort and emit with a caller-chosen
refinement start level (default floor(log2 n), which yields exact results
with high probability).

`parameterized_algo` first quasi-sorts all b suffixes with the cheaper start
level floor(log2(n/b)), which caps lcp values at ell = 2**(floor(log2(n/b))+1) - 1
and leaves only suffix pairs with a common prefix of at least ell letters
unresolved. Those entries (there are b_prime of them, often none) are
re-sorted exactly in a second, full-precision pass over just that subset,
and the partial results are merged back in place.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .emitter import EmitStats, SsaSlcp, output_arrays
from .errors import ValidationError
from .fingerprint import preprocess
from .grouper import refine, sort_groups
from .text import PositionSet, Text, as_position_set

# Fixed offset decorrelating the second pass's fingerprint base from the
# first pass's while keeping the whole run reproducible from one seed.
SECOND_PASS_SEED_STEP = 0x9E3779B97F4A7C15


@dataclass
class RunConfig:
    """Knobs for a construction run.

    seed drives the fingerprint base draw. s is the number of sampled prefix
    fingerprints (defaults to b, must lie in [b, n] when set).
    j_start_override replaces the default refinement start level; the
    adaptive pipeline recomputes its cap accordingly. report_counters is a
    pass-through hint for front ends that want phase timings collected.
    """

    seed: int = 0
    s: int | None = None
    j_start_override: int | None = None
    report_counters: bool = False


@dataclass
class ParamStats:
    """Second-pass statistics of the adaptive pipeline.

    ell is the largest lcp value the first pass can certify. b_prime is the
    number of output entries that needed the second pass (0 or at least 2).
    """

    ell: int
    b_prime: int
    second_pass_ran: bool


@dataclass
class RunCounters:
    """Phase wall times (ms) and peak logical sizes, accumulated over passes."""

    phase_ms: dict[str, float] = field(default_factory=dict)
    groups: int = 0
    members: int = 0
    stack_peak: int = 0
    hash_peak: int = 0

    def add_phase(self, name: str, seconds: float) -> None:
        self.phase_ms[name] = self.phase_ms.get(name, 0.0) + seconds * 1000.0

    def total_ms(self) -> float:
        return sum(self.phase_ms.values())


def floor_log2(x: int) -> int:
    """Largest j with 2**j <= x; floor_log2(1) == 0."""
    if x < 1:
        raise ValidationError(f"floor_log2 needs a positive argument, got {x}")
    return x.bit_length() - 1


def main_algo(
    text: Text,
    positions,
    cfg: RunConfig | None = None,
    j_start: int | None = None,
    counters: RunCounters | None = None,
) -> SsaSlcp:
    """Construct the suffix and lcp arrays for the given positions.

    With the default start level the output is exact with high probability.
    With a smaller explicit j_start, lcp values are exact only below
    2**(j_start+1) - 1 and are capped at that value, and tied suffixes may
    appear in any order.
    """
    if cfg is None:
        cfg = RunConfig()
    pos = as_position_set(positions, text.n)
    b = len(pos)
    if j_start is None:
        if cfg.j_start_override is not None:
            j_start = cfg.j_start_override
        else:
            j_start = floor_log2(text.n)
    s = cfg.s if cfg.s is not None else b
    if not b <= s <= text.n:
        raise ValidationError(f"sample count s={s} out of range [b={b}, n={text.n}]")
    if b == 1:
        return SsaSlcp([pos[0]], [0])

    t0 = time.perf_counter()
    index = preprocess(text, s, cfg.seed)
    t1 = time.perf_counter()
    forest = refine(text, pos, index, j_start)
    t2 = time.perf_counter()
    sort_groups(forest, text)
    t3 = time.perf_counter()
    emit_stats = EmitStats()
    result = output_arrays(forest, stats=emit_stats)
    t4 = time.perf_counter()

    if counters is not None:
        counters.add_phase("preprocess", t1 - t0)
        counters.add_phase("refine", t2 - t1)
        counters.add_phase("sort", t3 - t2)
        counters.add_phase("emit", t4 - t3)
        counters.groups = max(counters.groups, len(forest.groups))
        counters.members = max(counters.members, forest.total_members())
        counters.stack_peak = max(counters.stack_peak, emit_stats.stack_peak)
        counters.hash_peak = max(counters.hash_peak, forest.hash_peak)
    return result


def parameterized_algo(
    text: Text,
    positions,
    cfg: RunConfig | None = None,
    counters: RunCounters | None = None,
) -> tuple[SsaSlcp, ParamStats]:
    """Two-pass construction: quasi-sort everything, then fix the long ties.

    Returns the exact arrays (with high probability) plus statistics about
    the second pass.
    """
    if cfg is None:
        cfg = RunConfig()
    pos = as_position_set(positions, text.n)
    b = len(pos)
    n = text.n
    if cfg.j_start_override is not None:
        j_first = cfg.j_start_override
    else:
        j_first = floor_log2(n // b)
    ell = (1 << (j_first + 1)) - 1
    if b == 1:
        return SsaSlcp([pos[0]], [0]), ParamStats(ell, 0, False)

    first = main_algo(text, pos, cfg, j_start=j_first, counters=counters)
    ssa = list(first.ssa)
    slcp = list(first.slcp)

    t0 = time.perf_counter()
    resort_at: list[int] = []   # 0-based ranks needing the second pass
    resort_pos: list[int] = []  # their suffix start positions
    for i in range(b):
        if slcp[i] == ell or (i + 1 < b and slcp[i + 1] == ell):
            resort_at.append(i)
            resort_pos.append(ssa[i])
    t_scan = time.perf_counter() - t0

    b_prime = len(resort_pos)
    if b_prime == 0:
        if counters is not None:
            counters.add_phase("merge", t_scan)
        return SsaSlcp(ssa, slcp), ParamStats(ell, 0, False)

    second_cfg = replace(cfg, seed=cfg.seed + SECOND_PASS_SEED_STEP, s=None,
                         j_start_override=None)
    second = main_algo(
        text,
        PositionSet(resort_pos, n),
        second_cfg,
        j_start=floor_log2(n),
        counters=counters,
    )

    t1 = time.perf_counter()
    for t, rank in enumerate(resort_at):
        ssa[rank] = second.ssa[t]
        if slcp[rank] == ell:
            # The previous rank was re-sorted too, so the exact value is the
            # second pass's lcp; entries below ell were already exact.
            slcp[rank] = second.slcp[t]
    t_merge = time.perf_counter() - t1
    if counters is not None:
        counters.add_phase("merge", t_scan + t_merge)
    return SsaSlcp(ssa, slcp), ParamStats(ell, b_prime, True)


def compute_b_prime(slcp, ell: int) -> int:
    """Count entries adjacent to an lcp of at least ell, given exact lcps.

    This is the ground truth for ParamStats.b_prime: an entry needs the
    second pass when its own lcp or its successor's reaches the cap.
    """
    b = len(slcp)
    count = 0
    for i in range(b):
        if slcp[i] >= ell or (i + 1 < b and slcp[i + 1] >= ell):
            count += 1
    return count
