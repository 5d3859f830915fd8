import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from sparsesuffix import MODULUS, Text, ValidationError, fingerprint, preprocess

from helpers import GOLDEN_TEXT, poly_value, random_text


def test_stride_and_table_sizing():
    index = preprocess(Text(b"a" * 1000), s=10, seed=1)
    assert index.stride == 100
    # samples at 0, 100, ..., 1000: ten non-empty prefixes
    assert len(index.sampled_prefix) == 11
    assert len(index.sampled_power) == 11


def test_full_sampling_gives_constant_time_queries():
    rng = random.Random(5)
    text = random_text(rng, 300, 26)
    index = preprocess(text, s=300, seed=2)
    assert index.stride == 1
    for _ in range(200):
        start = rng.randint(1, 300)
        length = rng.randint(1, 600)
        fingerprint(index, start, length)
        assert index.last_query_reads <= 1


def test_preprocess_deterministic():
    text = Text(GOLDEN_TEXT)
    a = preprocess(text, s=4, seed=42)
    b = preprocess(text, s=4, seed=42)
    assert (a.p, a.r, a.stride) == (b.p, b.r, b.stride)
    assert a.sampled_prefix == b.sampled_prefix
    assert a.sampled_power == b.sampled_power
    c = preprocess(text, s=4, seed=43)
    assert c.r != a.r


def test_base_never_zero():
    text = Text(b"xy")
    for seed in range(200):
        assert 1 <= preprocess(text, s=1, seed=seed).r < MODULUS


def test_equal_fragments_hash_equal():
    index = preprocess(Text(GOLDEN_TEXT), s=6, seed=9)
    left = fingerprint(index, 1, 4)
    right = fingerprint(index, 8, 4)
    assert left == right  # both windows are "abra"
    assert left.window_len == 4


def test_single_letter_value():
    text = Text(GOLDEN_TEXT)
    index = preprocess(text, s=3, seed=11)
    for i in (1, 7, 16):
        fp = fingerprint(index, i, 1)
        assert fp.value == text.data[i - 1]
        assert fp.window_len == 1


def test_clamped_window():
    text = Text(GOLDEN_TEXT)
    index = preprocess(text, s=5, seed=13)
    fp = fingerprint(index, 14, 5)
    assert fp.window_len == 3
    assert fp.value == poly_value(text.data, 14, 16, index.r)


def test_sampled_tables_match_direct_evaluation():
    rng = random.Random(23)
    text = random_text(rng, 533, 255)
    index = preprocess(text, s=7, seed=23)
    stride = index.stride
    for t in range(len(index.sampled_prefix)):
        pos = min(t * stride, text.n)
        assert index.sampled_prefix[t] == poly_value(text.data, 1, pos, index.r)
        assert index.sampled_power[t] == pow(index.r, pos, MODULUS)


def test_random_queries_match_oracle_with_read_bound():
    rng = random.Random(77)
    for trial in range(6):
        n = rng.randint(1, 5000)
        text = random_text(rng, n, rng.choice((2, 26, 255)))
        for s in {1, max(1, math.isqrt(n)), n}:
            index = preprocess(text, s, seed=trial * 11 + s)
            stride = -(-n // s)
            for _ in range(350):
                start = rng.randint(1, n)
                length = rng.randint(1, 2 * n) if rng.random() < 0.3 else rng.randint(1, 64)
                fp = fingerprint(index, start, length)
                end = min(start + length - 1, n)
                assert fp.window_len == end - start + 1
                assert fp.value == poly_value(text.data, start, end, index.r)
                assert index.last_query_reads <= min(length, stride) + 2


@settings(max_examples=60, deadline=None)
@given(data=st.binary(min_size=2, max_size=300), cut=st.data())
def test_adjacent_windows_combine(data, cut):
    n = len(data)
    i = cut.draw(st.integers(1, n - 1))
    j = cut.draw(st.integers(i + 1, n))
    m = cut.draw(st.integers(i, j - 1))
    text = Text(data)
    index = preprocess(text, s=max(1, n // 3), seed=99)
    left = fingerprint(index, i, m - i + 1)
    right = fingerprint(index, m + 1, j - m)
    whole = fingerprint(index, i, j - i + 1)
    combined = (left.value * pow(index.r, j - m, MODULUS) + right.value) % MODULUS
    assert combined == whole.value


def test_query_validation():
    index = preprocess(Text(b"abc"), s=1, seed=0)
    with pytest.raises(ValidationError):
        fingerprint(index, 0, 1)
    with pytest.raises(ValidationError):
        fingerprint(index, 4, 1)
    with pytest.raises(ValidationError):
        fingerprint(index, 1, 0)


def test_preprocess_validation():
    text = Text(b"abc")
    with pytest.raises(ValidationError):
        preprocess(text, 0, seed=0)
    with pytest.raises(ValidationError):
        preprocess(text, 4, seed=0)
