"""Depth-first emission of the output arrays from a sorted group forest.

The walk starts at the root group and visits members in their sorted order,
pushing each with its parent's lcp value. A running minimum tracks the
smallest lcp seen since the last emitted suffix; that minimum is exactly the
longest common prefix of consecutive output suffixes, because it is the lcp
of their lowest common ancestor group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import InternalConsistencyError
from .grouper import GroupForest


@dataclass
class SsaSlcp:
    """Paired output arrays.

    `ssa[i]` is the 1-based text position of the rank-i suffix (0-based rank).
    `slcp[i]` is the longest common prefix length of the suffixes at ranks
    i-1 and i; `slcp[0]` is 0.
    """

    ssa: list[int]
    slcp: list[int]

    @property
    def b(self) -> int:
        return len(self.ssa)


@dataclass
class EmitStats:
    pops: int = 0
    stack_peak: int = 0


def output_arrays(
    forest: GroupForest,
    stats: EmitStats | None = None,
    on_step: Callable[[int, list[int], list[int]], None] | None = None,
) -> SsaSlcp:
    """Walk the sorted forest and collect the suffix and lcp arrays.

    `on_step(pops, ssa, slcp)` is called after every stack pop with the live
    arrays, for tracing. The stack never holds more than b entries.
    """
    b = forest.b
    witness = forest.witness
    reset = forest.n + 1  # larger than any possible lcp
    ssa: list[int] = []
    slcp: list[int] = []
    stack = [(forest.root_id, 0)]
    current = 0
    pops = 0
    peak = 1
    while stack:
        mid, parent_lcp = stack.pop()
        pops += 1
        if parent_lcp < current:
            current = parent_lcp
        if mid <= b:
            if mid < 1:
                raise InternalConsistencyError(f"dangling member id {mid}")
            ssa.append(witness[mid])
            slcp.append(current)
            current = reset
        else:
            g = forest.group(mid)
            lcp = g.lcp
            for member in reversed(g.members):
                stack.append((member, lcp))
            if len(stack) > peak:
                peak = len(stack)
        if on_step is not None:
            on_step(pops, ssa, slcp)
    if stats is not None:
        stats.pops = pops
        stats.stack_peak = peak
    return SsaSlcp(ssa, slcp)
