import itertools
import random

import numpy as np
import pytest

from m2codes import _engine
from m2codes._engine import min_weight, pack, pair_histogram, unpack, weight_histogram
from m2codes.algebra import F4_MUL


def naive_span(rows):
    n = len(rows[0])
    for msg in itertools.product(range(4), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(msg, rows):
            v = [a ^ F4_MUL[c][b] for a, b in zip(v, r)]
        yield v


def random_rows(rng, k, n):
    # independence is not needed for the oracle comparison when rows are in RREF-like shape
    rows = []
    for i in range(k):
        r = [rng.randrange(4) for _ in range(n)]
        r[:k] = [int(i == j) for j in range(k)]
        rows.append(r)
    return rows


def test_pack_round_trip():
    rng = random.Random(1)
    for n in (1, 7, 31, 64):
        v = [rng.randrange(4) for _ in range(n)]
        assert unpack(*pack(v), n) == v


@pytest.mark.parametrize("seed", range(6))
def test_kernels_against_naive_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randrange(4, 12)
    k = rng.randrange(1, min(n, 6) + 1)
    rows = random_rows(rng, k, n)
    words = list(naive_span(rows))
    hist = [0] * (n + 1)
    for w in words:
        hist[sum(1 for c in w if c)] += 1
    assert weight_histogram(rows, n) == hist
    assert min_weight(rows) == min(i for i in range(1, n + 1) if hist[i])
    if n % 2 == 0:
        half = n // 2
        pairs = np.zeros((half + 1, half + 1), dtype=np.int64)
        for w in words:
            a, b = w[:half], w[half:]
            n1 = sum(1 for x, y in zip(a, b) if (x != 0) != (y != 0))
            n2 = sum(1 for x, y in zip(a, b) if x and y)
            pairs[n1, n2] += 1
        assert (pair_histogram(rows, half) == pairs).all()


@pytest.mark.parametrize("partitions", [1, 2, 3, 8, 64])
def test_results_do_not_depend_on_partitions(partitions):
    rng = random.Random(7)
    rows = random_rows(rng, 9, 20)
    ref_hist = weight_histogram(rows, 20, partitions=1)
    assert weight_histogram(rows, 20, partitions=partitions) == ref_hist
    assert min_weight(rows, partitions=partitions) == min_weight(rows, partitions=1)
    ref_pairs = pair_histogram(rows, 10, partitions=1)
    assert (pair_histogram(rows, 10, partitions=partitions) == ref_pairs).all()


def test_early_stop_returns_a_word_at_or_below_the_bound():
    rows = random_rows(random.Random(3), 6, 12)
    d = min_weight(rows)
    assert min_weight(rows, stop_at=d) == d
    assert min_weight(rows, stop_at=12) <= 12


def test_zero_code():
    assert min_weight([]) is None
    assert weight_histogram([], 5) == [1, 0, 0, 0, 0, 0]


def test_partitions_from_environment(monkeypatch):
    monkeypatch.setenv(_engine.PARTITIONS_ENV, "4")
    assert _engine.default_partitions() == 4
    monkeypatch.setenv(_engine.PARTITIONS_ENV, "zero")
    with pytest.raises(ValueError):
        _engine.default_partitions()
    monkeypatch.setenv(_engine.PARTITIONS_ENV, "0")
    with pytest.raises(ValueError):
        _engine.default_partitions()
