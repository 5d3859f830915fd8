"""Read-only text and the set of suffix start positions.

All public indices are 1-based: position i names the suffix that starts at
the i-th letter of the text. Letters are raw bytes (0..255). Both `Text` and
`PositionSet` are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator

from .errors import ValidationError


class Text:
    """An immutable byte string with 1-based random access."""

    __slots__ = ("data",)

    def __init__(self, data: bytes):
        if not isinstance(data, bytes):
            data = bytes(data)
        if len(data) == 0:
            raise ValidationError("text must contain at least one letter")
        self.data = data

    @property
    def n(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def letter(self, i: int) -> int:
        """Return the letter at 1-based position i."""
        if not 1 <= i <= len(self.data):
            raise ValidationError(f"position {i} out of range 1..{len(self.data)}")
        return self.data[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Text) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"Text(n={len(self.data)})"


class PositionSet:
    """Distinct 1-based suffix start positions, validated against a text length."""

    __slots__ = ("positions", "b")

    def __init__(self, values: Iterable[int], n: int):
        positions = tuple(values)
        if len(positions) == 0:
            raise ValidationError("position set must contain at least one position")
        seen = set()
        for v in positions:
            if not 1 <= v <= n:
                raise ValidationError(f"position {v} out of range 1..{n}")
            if v in seen:
                raise ValidationError(f"duplicate position {v}")
            seen.add(v)
        self.positions = positions
        self.b = len(positions)

    def __len__(self) -> int:
        return self.b

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __getitem__(self, idx):
        return self.positions[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, PositionSet) and self.positions == other.positions

    def __repr__(self) -> str:
        return f"PositionSet(b={self.b})"


def load_text(path) -> Text:
    """Load a file as a raw byte text. The file content is not interpreted."""
    with open(path, "rb") as handle:
        data = handle.read()
    if len(data) == 0:
        raise ValidationError(f"empty text file: {path}")
    return Text(data)


def load_positions(path, n: int) -> PositionSet:
    """Load positions from a UTF-8 file with one decimal integer per line.

    LF and CRLF line endings are accepted; blank lines are ignored.
    """
    values = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                values.append(int(stripped))
            except ValueError:
                raise ValidationError(
                    f"{path}:{lineno}: not a decimal integer: {stripped!r}"
                ) from None
    if not values:
        raise ValidationError(f"no positions found in {path}")
    return PositionSet(values, n)


def sample_positions(n: int, b: int, seed: int) -> PositionSet:
    """Draw b distinct positions uniformly at random from [1, n].

    Deterministic for a fixed seed.
    """
    if b < 1:
        raise ValidationError(f"cannot sample {b} positions, need at least 1")
    if b > n:
        raise ValidationError(f"cannot sample {b} distinct positions from [1, {n}]")
    rng = random.Random(seed)
    return PositionSet(rng.sample(range(1, n + 1), b), n)


def as_position_set(values, n: int) -> PositionSet:
    """Coerce a raw sequence into a validated PositionSet."""
    if isinstance(values, PositionSet):
        for v in values.positions:
            if v > n:
                raise ValidationError(f"position {v} out of range 1..{n}")
        return values
    return PositionSet(values, n)
