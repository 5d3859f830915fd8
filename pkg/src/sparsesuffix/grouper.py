"""LCP-group refinement, the first phase of the construction.

Suffixes are organized into groups. A group (id, lcp, members) asserts that
every suffix reachable below it shares a prefix of at least `lcp` letters.
Member ids 1..b denote the input suffixes; ids above b denote child groups,
so the groups form a forest rooted at id b+1 (conceptually, the sparse
suffix tree).

`refine` runs window sizes 2**j for j = j_start down to 0. In each pass,
every group partitions its members by the fingerprint of the next 2**j
letters past the group's certified prefix: if all members agree, the group's
lcp grows by 2**j in place; classes of two or more members split off as new
child groups; singletons stay where they were. Each new group records a
witness suffix (the start position of its first member) so the group itself
can be fingerprinted later. After the j = 0 pass, every group's lcp is the
exact longest common prefix of its members. With a smaller j_start the lcp
values are exact only below 2**(j_start+1) - 1 and are capped at that value
otherwise.

A member whose suffix is fully consumed by the certified prefix (start + lcp
past the text end) is a proper prefix of every other suffix in its group; it
skips fingerprinting and stays as a singleton. `sort_groups` then orders each
group's members by the letter just past the certified prefix, with exhausted
members first, after which a depth-first walk of the forest yields the
suffixes in lexicographic order.

Fingerprint classes are visited singletons-first, then multi-member classes,
each in first-insertion order. The visit order decides group ids and member
order but never the final output, which the sort step makes order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InternalConsistencyError, ValidationError
from .fingerprint import FingerprintIndex
from .text import PositionSet, Text


@dataclass
class Group:
    gid: int
    lcp: int
    members: list[int]


@dataclass
class GroupForest:
    """Refinement state: all groups plus the witness-extended position array.

    `witness[i]` holds the suffix start position behind id i, for suffix ids
    (the input positions) and group ids (the group's witness suffix) alike.
    Index 0 is unused.
    """

    groups: list[Group]
    witness: list[int]
    b: int
    n: int
    hash_peak: int = 0

    @property
    def root_id(self) -> int:
        return self.b + 1

    def group(self, gid: int) -> Group:
        idx = gid - self.b - 1
        if idx < 0 or idx >= len(self.groups):
            raise InternalConsistencyError(f"dangling group id {gid}")
        return self.groups[idx]

    def total_members(self) -> int:
        return sum(len(g.members) for g in self.groups)


def refine(
    text: Text,
    positions: PositionSet,
    index: FingerprintIndex,
    j_start: int,
    after_iteration: Callable[[int, list[Group]], None] | None = None,
) -> GroupForest:
    """Partition the suffixes into LCP groups by fingerprint refinement.

    `after_iteration(j, groups)` is called at the end of each window pass
    with the live group list; callers must copy what they keep.
    """
    if j_start < 0:
        raise ValidationError(f"j_start {j_start} must be non-negative")
    b = len(positions)
    if b < 2:
        raise ValidationError("refinement needs at least two suffixes")
    n = text.n

    witness = [0]
    witness.extend(positions)
    witness.append(witness[1])  # the root group's witness is the first suffix
    groups = [Group(b + 1, 0, list(range(1, b + 1)))]
    next_id = b + 1
    hash_peak = 0
    query = index.fingerprint

    for j in range(j_start, -1, -1):
        window = 1 << j
        created: list[Group] = []
        for g in groups:
            k = g.lcp
            classes: dict[tuple[int, int], list[int]] = {}
            rebuilt: list[int] = []  # exhausted members go first
            for mid in g.members:
                start = witness[mid] + k
                if start > n:
                    rebuilt.append(mid)
                    continue
                key = query(start, window)
                bucket = classes.get(key)
                if bucket is None:
                    classes[key] = [mid]
                else:
                    bucket.append(mid)
            table_size = len(g.members) - len(rebuilt)
            if table_size > hash_peak:
                hash_peak = table_size
            if not rebuilt and len(classes) == 1:
                # Every member shares the window: extend this group in place.
                g.lcp = k + window
                g.members = next(iter(classes.values()))
                continue
            splits: list[list[int]] = []
            for bucket in classes.values():
                if len(bucket) == 1:
                    rebuilt.append(bucket[0])
                else:
                    splits.append(bucket)
            for bucket in splits:
                next_id += 1
                rebuilt.append(next_id)
                created.append(Group(next_id, k + window, bucket))
                witness.append(witness[bucket[0]])
            g.members = rebuilt
        groups.extend(created)
        if after_iteration is not None:
            after_iteration(j, groups)

    return GroupForest(groups, witness, b, n, hash_peak)


def sort_groups(forest: GroupForest, text: Text) -> GroupForest:
    """Sort each group's members by the letter just past the group's prefix.

    Exhausted members (no letter left) sort before every letter. With exact
    lcp values the sort keys within a group are distinct, so the member order
    is unique.
    """
    data = text.data
    n = forest.n
    witness = forest.witness
    for g in forest.groups:
        k = g.lcp

        def key(mid: int, _k: int = k) -> int:
            pos = witness[mid] + _k
            return data[pos - 1] if pos <= n else -1

        g.members.sort(key=key)
    return forest


def dump_groups(groups: Iterable[Group] | GroupForest) -> list[str]:
    """Render groups as lines "(id, lcp, (members...))" for debugging."""
    if isinstance(groups, GroupForest):
        groups = groups.groups
    return [
        f"({g.gid}, {g.lcp}, ({', '.join(str(m) for m in g.members)}))"
        for g in groups
    ]
