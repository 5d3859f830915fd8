"""Polynomial (Karp-Rabin) fingerprints of arbitrary text fragments.

The fingerprint of the fragment starting at 1-based position i with length
k is

    value(i, k) = sum(T[i + t] * r**(k - 1 - t) for t in 0..k-1)  mod p

with a fixed Mersenne prime p = 2**61 - 1 and a base r drawn uniformly from
[1, p-1] per index. Equal fragments always hash equal; distinct fragments of
length k collide with probability at most k/p over the choice of r, which is
below 2**-30 for any desk-scale text.

`preprocess` scans the text once and keeps the prefix fingerprint and base
power at roughly s evenly spaced sample positions (stride = ceil(n/s)), plus
one sample at the text end. A query then either scans its window directly
(short windows) or is assembled from the two prefix fingerprints enclosing
the window, each reconstructed from its nearest sample. Reconstruction walks
forward (appending letters) or backward (peeling letters with the modular
inverse of r), so it touches at most ceil(stride/2) letters per prefix, and
a query never reads more than min(window, stride) + 2 letters. The index
records the exact count in `last_query_reads`.

A query window is clamped at the end of the text: asking for more letters
than remain hashes the existing tail, and the returned `window_len` reports
how many letters were actually hashed. Two fingerprints should be treated as
equal only when both `value` and `window_len` match; windows of different
clamped lengths are never the same string.

The index is immutable after `preprocess` (apart from the query-local read
counter) and is safe for concurrent queries.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .errors import ValidationError
from .text import Text

MODULUS = (1 << 61) - 1

# Remainder powers r**e for e < stride are cached up to this table size;
# beyond it queries fall back to an O(e mod stride) multiplication scan.
_POWER_CACHE_LIMIT = 1 << 20


class Fingerprint(NamedTuple):
    value: int
    window_len: int


class FingerprintIndex:
    """Sampled prefix fingerprints enabling fast fragment fingerprints."""

    def __init__(self, text: Text, s: int, seed: int):
        n = text.n
        if not 1 <= s <= n:
            raise ValidationError(f"sample count {s} out of range 1..{n}")
        self.n = n
        self.p = MODULUS
        self.stride = -(-n // s)
        rng = random.Random(seed)
        self.r = rng.randrange(1, MODULUS)
        self._rinv = pow(self.r, MODULUS - 2, MODULUS)
        self._data = text.data
        self.last_query_reads = 0

        # One left-to-right pass storing the prefix fingerprint at every
        # multiple of the stride, plus the full-text prefix at position n.
        stride = self.stride
        r = self.r
        prefixes = [0]
        acc = 0
        next_sample = stride
        for pos, letter in enumerate(text.data, start=1):
            acc = (acc * r + letter) % MODULUS
            if pos == next_sample:
                prefixes.append(acc)
                next_sample += stride
        self._grid_count = len(prefixes)  # samples at 0, stride, 2*stride, ...
        if (self._grid_count - 1) * stride != n:
            prefixes.append(acc)  # extra sample at the text end
        self.sampled_prefix = prefixes
        self.sampled_power = [pow(r, t * stride, MODULUS) for t in range(self._grid_count)]
        if len(prefixes) > self._grid_count:
            self.sampled_power.append(pow(r, n, MODULUS))

        if stride <= _POWER_CACHE_LIMIT:
            cache = [1] * (stride + 1)
            for e in range(1, stride + 1):
                cache[e] = cache[e - 1] * r % MODULUS
            self._low_power = cache
        else:
            self._low_power = None

    def power(self, e: int) -> int:
        """r**e mod p for 0 <= e <= n, via sampled powers plus a remainder."""
        q, rem = divmod(e, self.stride)
        value = self.sampled_power[q]
        if rem == 0:
            return value
        if self._low_power is not None:
            return value * self._low_power[rem] % MODULUS
        r = self.r
        for _ in range(rem):
            value = value * r % MODULUS
        return value

    def _prefix_at_sample(self, pos: int) -> int:
        if pos == self.n:
            return self.sampled_prefix[-1]
        return self.sampled_prefix[pos // self.stride]

    def _prefix(self, x: int) -> tuple[int, int]:
        """Fingerprint of the length-x prefix, with the letter-read count.

        Extends from the nearest sample at or around x, forward or backward,
        reading at most ceil(stride/2) letters.
        """
        stride = self.stride
        below = (x // stride) * stride
        if below == x:
            return self._prefix_at_sample(x), 0
        above = min(below + stride, self.n)
        data = self._data
        if x - below <= above - x:
            acc = self._prefix_at_sample(below)
            r = self.r
            for letter in data[below:x]:
                acc = (acc * r + letter) % MODULUS
            return acc, x - below
        acc = self._prefix_at_sample(above)
        rinv = self._rinv
        for letter in reversed(data[x:above]):
            acc = (acc - letter) * rinv % MODULUS
        return acc, above - x

    def fingerprint(self, start: int, length: int) -> Fingerprint:
        """Fingerprint of the fragment at 1-based `start`, clamped at the end.

        Runs in O(min(length, stride)) time and records the number of text
        letters read in `last_query_reads`.
        """
        n = self.n
        if not 1 <= start <= n:
            raise ValidationError(f"start {start} out of range 1..{n}")
        if length < 1:
            raise ValidationError(f"window length {length} must be at least 1")
        end = start + length - 1
        if end > n:
            end = n
        window_len = end - start + 1
        if window_len <= self.stride:
            acc = 0
            r = self.r
            for letter in self._data[start - 1 : end]:
                acc = (acc * r + letter) % MODULUS
            self.last_query_reads = window_len
            return Fingerprint(acc, window_len)
        high, reads_high = self._prefix(end)
        low, reads_low = self._prefix(start - 1)
        value = (high - low * self.power(window_len)) % MODULUS
        self.last_query_reads = reads_high + reads_low
        return Fingerprint(value, window_len)


def preprocess(text: Text, s: int, seed: int) -> FingerprintIndex:
    """Build a fingerprint index with roughly s sampled prefixes."""
    return FingerprintIndex(text, s, seed)


def fingerprint(index: FingerprintIndex, start: int, length: int) -> Fingerprint:
    """Fingerprint of text[start .. start+length-1], clamped at the text end."""
    return index.fingerprint(start, length)
