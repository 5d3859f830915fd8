"""Shared golden constants, instance generators, and independent references.

The reference helpers here (suffix comparison, lcp scan, direct polynomial
evaluation) are deliberately re-implemented from scratch so tests never
depend on the code paths they are checking.
"""

from __future__ import annotations

import math
import random

from sparsesuffix import MODULUS, PositionSet, Text, sample_positions

GOLDEN_TEXT = b"abracadabrarabia"
GOLDEN_POSITIONS = (1, 3, 8, 10, 11, 13)
GOLDEN_SSA = [13, 1, 8, 11, 3, 10]
GOLDEN_SLCP = [0, 2, 4, 1, 0, 2]

# Group tables of the worked example, as (id, lcp, members) triples in the
# state after the window-4 and window-1 refinement passes, and after sorting.
GROUPS_AFTER_W4 = [(7, 0, (2, 4, 5, 6, 8)), (8, 4, (1, 3))]
GROUPS_AFTER_W1 = [
    (7, 0, (9, 11)),
    (8, 4, (1, 3)),
    (9, 2, (2, 4)),
    (10, 2, (6, 8)),
    (11, 1, (5, 10)),
]
GROUPS_SORTED = [
    (7, 0, (11, 9)),
    (8, 4, (1, 3)),
    (9, 2, (2, 4)),
    (10, 2, (6, 8)),
    (11, 1, (10, 5)),
]

ALPHABET_SIZES = (1, 2, 4, 26, 255)


def golden_inputs() -> tuple[Text, PositionSet]:
    text = Text(GOLDEN_TEXT)
    return text, PositionSet(GOLDEN_POSITIONS, text.n)


def triples(groups) -> list[tuple[int, int, tuple[int, ...]]]:
    return [(g.gid, g.lcp, tuple(g.members)) for g in groups]


def triple_set(table) -> set[tuple[int, int, frozenset[int]]]:
    return {(gid, lcp, frozenset(members)) for gid, lcp, members in table}


def random_text(rng: random.Random, n: int, sigma: int) -> Text:
    return Text(bytes(rng.randrange(sigma) for _ in range(n)))


def suffix_lcp(data: bytes, u: int, v: int) -> int:
    """Longest common prefix of the suffixes at 1-based starts u and v."""
    n = len(data)
    k = 0
    while u + k <= n and v + k <= n and data[u + k - 1] == data[v + k - 1]:
        k += 1
    return k


def suffix_less(data: bytes, u: int, v: int) -> bool:
    """True when the suffix at u sorts strictly before the one at v."""
    return data[u - 1 :] < data[v - 1 :]


def poly_value(data: bytes, start: int, end: int, r: int) -> int:
    """Direct polynomial evaluation over data[start..end], 1-based inclusive."""
    acc = 0
    for k in range(start, end + 1):
        acc = (acc * r + data[k - 1]) % MODULUS
    return acc


def b_choice(n: int, which: int) -> int:
    choices = (1, 2, math.ceil(n / 10), math.ceil(n / 2), n)
    return min(max(choices[which], 1), n)


def make_instance(seed: int, n: int, sigma: int, which_b: int):
    rng = random.Random(seed)
    text = random_text(rng, n, sigma)
    b = b_choice(n, which_b)
    positions = sample_positions(n, b, seed ^ 0xA5A5)
    return text, positions


def sweep_instances(random_count: int = 950):
    """Instances spanning n in [2, 2000], the alphabet grid, and b choices.

    Yields (label, text, positions, seed). A deterministic grid covers every
    alphabet size and b choice at several text lengths; the rest is a seeded
    random spread weighted toward small instances.
    """
    serial = 0
    for n in (2, 3, 16, 2000):
        for sigma in ALPHABET_SIZES:
            for which_b in range(5):
                seed = 90_000 + serial
                text, positions = make_instance(seed, n, sigma, which_b)
                yield f"grid-n{n}-s{sigma}-b{len(positions)}", text, positions, seed
                serial += 1
    for i in range(random_count):
        seed = 100_000 + i
        rng = random.Random(seed)
        bucket = rng.choices(((2, 50), (51, 300), (301, 1000), (1001, 2000)),
                             weights=(40, 30, 20, 10))[0]
        n = rng.randint(*bucket)
        sigma = ALPHABET_SIZES[i % 5]
        which_b = (i // 5) % 5
        text, positions = make_instance(seed, n, sigma, which_b)
        yield f"rand-{i}-n{n}-s{sigma}-b{len(positions)}", text, positions, seed
