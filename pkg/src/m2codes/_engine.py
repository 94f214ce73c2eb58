"""
Exhaustive enumeration kernels for GF(4)-linear codes of length <= 64.

A GF(4) vector is held as two bit planes ``(lo, hi)`` packed in uint64
words: bit j of ``lo`` / ``hi`` is the 1- / w-component of symbol j.  Symbol
addition is XOR on both planes and the Hamming weight is ``popcount(lo | hi)``.

A code of GF(4)-dimension k is enumerated as the GF(2)-span of the 2k vectors
{r, w*r}.  The lowest ``INNER_BITS`` basis vectors are expanded into a table
once; the remaining ones are walked in binary Gray order so each outer step
is a single XOR.  The space is split into ``partitions`` independent chunks
by fixing the top basis bits, and results are reduced with min / sum, so the
answer does not depend on the partition count.
"""

from __future__ import annotations

import os

import numba
import numpy as np

INNER_BITS = 10
MAX_LENGTH = 64
PARTITIONS_ENV = "M2CODES_PARTITIONS"

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@numba.njit(cache=True, inline="always")
def _popcount(v):
    v = v - ((v >> np.uint64(1)) & _M1)
    v = (v & _M2) + ((v >> np.uint64(2)) & _M2)
    v = (v + (v >> np.uint64(4))) & _M4
    return np.int64((v * _H01) >> np.uint64(56))


@numba.njit(cache=True)
def _span_table(blo, bhi, nbits):
    size = 1 << nbits
    tlo = np.zeros(size, dtype=np.uint64)
    thi = np.zeros(size, dtype=np.uint64)
    for j in range(nbits):
        step = 1 << j
        for t in range(step):
            tlo[step + t] = tlo[t] ^ blo[j]
            thi[step + t] = thi[t] ^ bhi[j]
    return tlo, thi


@numba.njit(cache=True)
def _trailing_zeros(i):
    j = 0
    while (i & 1) == 0:
        i >>= 1
        j += 1
    return j


@numba.njit(cache=True)
def _min_weight_chunk(tlo, thi, olo, ohi, start_lo, start_hi, nouter, stop_at):
    best = np.int64(1 << 30)
    lo = start_lo
    hi = start_hi
    size = tlo.shape[0]
    total = np.int64(1) << nouter
    i = np.int64(0)
    while True:
        for t in range(size):
            w = _popcount((lo ^ tlo[t]) | (hi ^ thi[t]))
            if w != 0 and w < best:
                best = w
        if best <= stop_at:
            return best
        i += 1
        if i >= total:
            break
        j = _trailing_zeros(i)
        lo ^= olo[j]
        hi ^= ohi[j]
    return best


@numba.njit(cache=True)
def _weight_hist_chunk(tlo, thi, olo, ohi, start_lo, start_hi, nouter, hist):
    lo = start_lo
    hi = start_hi
    size = tlo.shape[0]
    total = np.int64(1) << nouter
    i = np.int64(0)
    while True:
        for t in range(size):
            hist[_popcount((lo ^ tlo[t]) | (hi ^ thi[t]))] += 1
        i += 1
        if i >= total:
            break
        j = _trailing_zeros(i)
        lo ^= olo[j]
        hi ^= ohi[j]


@numba.njit(cache=True)
def _pair_hist_chunk(tlo, thi, olo, ohi, start_lo, start_hi, nouter, half, hist):
    # words of length 2*half: first block bits [0, half), second [half, 2*half)
    mask = (np.uint64(1) << np.uint64(half)) - np.uint64(1)
    sh = np.uint64(half)
    lo = start_lo
    hi = start_hi
    size = tlo.shape[0]
    total = np.int64(1) << nouter
    i = np.int64(0)
    while True:
        for t in range(size):
            nz = (lo ^ tlo[t]) | (hi ^ thi[t])
            a = nz & mask
            b = (nz >> sh) & mask
            hist[_popcount(a ^ b), _popcount(a & b)] += 1
        i += 1
        if i >= total:
            break
        j = _trailing_zeros(i)
        lo ^= olo[j]
        hi ^= ohi[j]


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured cap."""

    def __init__(self, needed_exponent: int, cap_exponent: int, what: str = "enumeration"):
        self.needed_exponent = needed_exponent
        self.cap_exponent = cap_exponent
        super().__init__(
            f"{what} needs 4^{needed_exponent} codewords, above the cap 4^{cap_exponent}"
        )


def default_partitions() -> int:
    value = os.environ.get(PARTITIONS_ENV, "1")
    try:
        p = int(value)
    except ValueError:
        raise ValueError(f"{PARTITIONS_ENV} must be a positive integer, got {value!r}")
    if p < 1:
        raise ValueError(f"{PARTITIONS_ENV} must be a positive integer, got {value!r}")
    return p


def pack(vec) -> tuple[int, int]:
    lo = hi = 0
    for j, c in enumerate(vec):
        lo |= (c & 1) << j
        hi |= (c >> 1) << j
    return lo, hi


def unpack(lo: int, hi: int, n: int) -> list[int]:
    return [((lo >> j) & 1) | (((hi >> j) & 1) << 1) for j in range(n)]


def f2_basis(rows) -> tuple[np.ndarray, np.ndarray]:
    """Bit planes of {r, w*r} for GF(4)-independent rows r."""
    lo, hi = [], []
    for r in rows:
        a, b = pack(r)
        lo += [a, b]
        hi += [b, a ^ b]
    return np.array(lo, dtype=np.uint64), np.array(hi, dtype=np.uint64)


class _Plan:
    """Split of the GF(2) basis into inner table, outer Gray walk and chunk bits."""

    def __init__(self, rows, partitions: int | None):
        blo, bhi = f2_basis(rows)
        nb = len(blo)
        p = default_partitions() if partitions is None else partitions
        if p < 1:
            raise ValueError("partitions must be positive")
        chunk_bits = min(max(p - 1, 0).bit_length(), nb)
        self.nchunks = 1 << chunk_bits
        inner = min(INNER_BITS, nb - chunk_bits)
        nouter = nb - chunk_bits - inner
        self.tlo, self.thi = _span_table(blo, bhi, inner)
        self.olo = np.ascontiguousarray(blo[inner : inner + nouter])
        self.ohi = np.ascontiguousarray(bhi[inner : inner + nouter])
        # trailing_zeros(i) < nouter always; pad so the arrays are never empty
        if nouter == 0:
            self.olo = np.zeros(1, dtype=np.uint64)
            self.ohi = np.zeros(1, dtype=np.uint64)
        self.nouter = nouter
        self.clo = [int(x) for x in blo[inner + nouter :]]
        self.chi = [int(x) for x in bhi[inner + nouter :]]

    def starts(self):
        for c in range(self.nchunks):
            lo = hi = 0
            for j in range(len(self.clo)):
                if (c >> j) & 1:
                    lo ^= self.clo[j]
                    hi ^= self.chi[j]
            yield np.uint64(lo), np.uint64(hi)


def min_weight(rows, *, stop_at: int = 0, partitions: int | None = None) -> int | None:
    """Minimum nonzero weight of the span of ``rows`` (None for the zero code)."""
    if not rows:
        return None
    plan = _Plan(rows, partitions)
    best = None
    for s_lo, s_hi in plan.starts():
        w = int(
            _min_weight_chunk(
                plan.tlo, plan.thi, plan.olo, plan.ohi, s_lo, s_hi, plan.nouter, stop_at
            )
        )
        if best is None or w < best:
            best = w
        if best <= stop_at:
            break
    return best


def weight_histogram(rows, length: int, *, partitions: int | None = None) -> list[int]:
    hist = np.zeros(length + 1, dtype=np.int64)
    if not rows:
        hist[0] = 1
        return [int(x) for x in hist]
    plan = _Plan(rows, partitions)
    for s_lo, s_hi in plan.starts():
        _weight_hist_chunk(
            plan.tlo, plan.thi, plan.olo, plan.ohi, s_lo, s_hi, plan.nouter, hist
        )
    return [int(x) for x in hist]


def pair_histogram(rows, half: int, *, partitions: int | None = None) -> np.ndarray:
    """hist[n1, n2] over words of length 2*half, where coordinate j pairs with j + half.

    n1 counts positions with exactly one nonzero entry in the pair, n2 those
    with both nonzero.
    """
    hist = np.zeros((half + 1, half + 1), dtype=np.int64)
    if not rows:
        hist[0, 0] = 1
        return hist
    plan = _Plan(rows, partitions)
    for s_lo, s_hi in plan.starts():
        _pair_hist_chunk(
            plan.tlo, plan.thi, plan.olo, plan.ohi, s_lo, s_hi, plan.nouter, half, hist
        )
    return hist
