"""Brute-force reference construction, kept simple enough to audit by eye.

Suffixes are compared as plain byte strings (a proper prefix sorts first)
and lcp values come from a direct letter-by-letter scan. No fingerprints,
no groups; this is the independent check for the fast pipelines.
"""

from __future__ import annotations

from functools import cmp_to_key

from .emitter import SsaSlcp
from .text import Text, as_position_set

# Above this n*b product, sorting materialized suffix slices would cost too
# much memory, so fall back to a copy-free comparator.
_SLICE_SORT_LIMIT = 50_000_000


def _compare_suffixes(data: bytes, u: int, v: int) -> int:
    i = u - 1
    j = v - 1
    n = len(data)
    while i < n and j < n:
        if data[i] != data[j]:
            return -1 if data[i] < data[j] else 1
        i += 1
        j += 1
    # One suffix ran out: the shorter one is a proper prefix of the other.
    if i == n and j == n:
        return 0
    return -1 if i == n else 1


def _suffix_lcp(data: bytes, u: int, v: int) -> int:
    n = len(data)
    i = u - 1
    j = v - 1
    k = 0
    while i < n and j < n and data[i] == data[j]:
        i += 1
        j += 1
        k += 1
    return k


def naive_ssa_slcp(text: Text, positions) -> SsaSlcp:
    """Sort the suffixes at the given positions and scan out their lcps."""
    pos = as_position_set(positions, text.n)
    data = text.data
    if text.n * len(pos) <= _SLICE_SORT_LIMIT:
        ssa = sorted(pos, key=lambda p: data[p - 1 :])
    else:
        ssa = sorted(pos, key=cmp_to_key(lambda u, v: _compare_suffixes(data, u, v)))
    slcp = [0] * len(ssa)
    for i in range(1, len(ssa)):
        slcp[i] = _suffix_lcp(data, ssa[i - 1], ssa[i])
    return SsaSlcp(ssa, slcp)
