"""
The Bachoc map A^n -> GF(4)^(2n), a + i*b -> (a, b), and what it does to codes.

The map sends Bachoc weight to Hamming weight.  For a cyclic code over A the
image is {(r + t, t) : r in R, t in T}, i.e. the Plotkin sum of the torsion
and residue codes with the two halves exchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import _engine
from .acode import ACyclicCode, hermitian_form, span_set, unpack_avector
from .algebra import F4_MUL, F4_SQ, AElem, bachoc_weight
from .qcode import (
    DEFAULT_ENUM_CAP,
    LinearCodeQ,
    MacWilliamsError,
    QCyclicCode,
    WeightEnumerator,
    _check_cap,
    plotkin_sum,
)


def bachoc_map(vec: Sequence[AElem]) -> list[int]:
    return [x.a for x in vec] + [x.b for x in vec]


def inverse_bachoc_map(vec: Sequence[int]) -> list[AElem]:
    if len(vec) % 2:
        raise ValueError("the image of the Bachoc map has even length")
    n = len(vec) // 2
    return [AElem(vec[j], vec[n + j]) for j in range(n)]


def bachoc_image(code: ACyclicCode) -> LinearCodeQ:
    """phi(C), spanned by (r, 0) for r in R and (t, t) for t in T."""
    n = code.n
    zero = [0] * n
    rows = [r + zero for r in code.residue().generator_rows()]
    rows += [t + t for t in code.torsion().generator_rows()]
    return LinearCodeQ(2 * n, rows)


def swapped_plotkin(code: ACyclicCode) -> LinearCodeQ:
    """Plotkin sum of torsion and residue, halves exchanged."""
    return plotkin_sum(code.torsion(), code.residue()).swap_halves()


def doubled_cyclic_image(code: ACyclicCode) -> QCyclicCode:
    """Length-2n cyclic code with generator f^2 * h."""
    return QCyclicCode(2 * code.n, code.f * code.f * code.h)


@dataclass(frozen=True)
class BachocEnumerator:
    """counts[(n1, n2)]: codewords with n1 entries of Bachoc weight 1 and n2 of weight 2."""

    n: int
    counts: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, n: int, counts: dict) -> "BachocEnumerator":
        items = tuple(sorted(((int(a), int(b)), int(c)) for (a, b), c in counts.items() if c))
        for (a, b), _ in items:
            if a < 0 or b < 0 or a + b > n:
                raise ValueError(f"bad exponent pair {(a, b)} for length {n}")
        return cls(n, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.counts)

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.counts)

    def hamming(self) -> WeightEnumerator:
        """Substitute a = x^2, b = x*y, c = y^2: weight n1 + 2*n2 in length 2n."""
        out = [0] * (2 * self.n + 1)
        for (n1, n2), c in self.counts:
            out[n1 + 2 * n2] += c
        return WeightEnumerator(2 * self.n, tuple(out))

    def to_json(self) -> dict:
        return {
            "length": self.n,
            "cardinality": str(self.cardinality),
            "counts": {f"{a},{b}": str(c) for (a, b), c in self.counts},
        }

    @classmethod
    def from_json(cls, data: dict) -> "BachocEnumerator":
        counts = {}
        for key, c in data["counts"].items():
            a, b = key.split(",")
            counts[(int(a), int(b))] = int(c)
        return cls.from_dict(int(data["length"]), counts)


def bwe_of_vectors(vectors: Iterable[Sequence[AElem]], n: int) -> BachocEnumerator:
    """Bachoc enumerator of an explicit set of vectors (direct count)."""
    counts: dict[tuple[int, int], int] = {}
    for v in vectors:
        ws = [bachoc_weight(x) for x in v]
        key = (ws.count(1), ws.count(2))
        counts[key] = counts.get(key, 0) + 1
    return BachocEnumerator.from_dict(n, counts)


def bachoc_weight_enumerator(
    code: ACyclicCode, *, cap_exponent: int = DEFAULT_ENUM_CAP, partitions: int | None = None
) -> BachocEnumerator:
    _check_cap(code.log4_size, cap_exponent, "Bachoc enumerator")
    image = bachoc_image(code)
    hist = _engine.pair_histogram(image.rows, code.n, partitions=partitions)
    counts = {
        (a, b): int(hist[a, b])
        for a in range(code.n + 1)
        for b in range(code.n + 1)
        if hist[a, b]
    }
    return BachocEnumerator.from_dict(code.n, counts)


# --- MacWilliams for the Bachoc enumerator ----------------------------------
#
# Polynomials in (a, b, c), homogeneous of degree n, are dicts keyed by the
# exponents (i, j) of b and c.

_TYPE_FORMS = (
    {(0, 0): 1, (1, 0): 6, (0, 1): 9},  # weight 0 -> a + 6b + 9c
    {(0, 0): 1, (1, 0): 2, (0, 1): -3},  # weight 1 -> a + 2b - 3c
    {(0, 0): 1, (1, 0): -2, (0, 1): 1},  # weight 2 -> a - 2b + c
)


def _pmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (i1, j1), x in p.items():
        for (i2, j2), y in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + x * y
    return out


@lru_cache(maxsize=None)
def _form_power(kind: int, e: int) -> tuple:
    if e == 0:
        return (((0, 0), 1),)
    return tuple(_pmul(dict(_form_power(kind, e - 1)), _TYPE_FORMS[kind]).items())


def bwe_macwilliams(bwe: BachocEnumerator, cardinality: int | None = None) -> BachocEnumerator:
    """(1/|C|) bwe(a + 6b + 9c, a + 2b - 3c, a - 2b + c), computed exactly."""
    size = bwe.cardinality if cardinality is None else cardinality
    if size != bwe.cardinality:
        raise MacWilliamsError(f"cardinality {size} does not match the counts ({bwe.cardinality})")
    n = bwe.n
    total: dict = {}
    for (n1, n2), c in bwe.counts:
        term = _pmul(dict(_form_power(0, n - n1 - n2)), dict(_form_power(1, n1)))
        term = _pmul(term, dict(_form_power(2, n2)))
        for key, v in term.items():
            total[key] = total.get(key, 0) + c * v
    out = {}
    for key, v in total.items():
        q, r = divmod(v, size)
        if r or q < 0:
            raise MacWilliamsError(
                f"coefficient of b^{key[0]} c^{key[1]} is {v}/{size}; not the enumerator of a code"
            )
        if q:
            out[key] = q
    return BachocEnumerator.from_dict(n, out)


# --- Hermitian transfer ----------------------------------------------------------


def quaternary_hermitian(x: Sequence[int], y: Sequence[int]) -> int:
    """sum_j x_j * y_j^2 over GF(4)."""
    s = 0
    for a, b in zip(x, y):
        s ^= F4_MUL[a][F4_SQ[b]]
    return s


def hermitian_transfer_holds(basis: Sequence[int], n: int) -> bool:
    """For the additive span S of ``basis`` (packed A-vectors), check that
    Hermitian self-orthogonality of S implies that of phi(S).

    Returns True when S is not Hermitian self-orthogonal (nothing to check).
    """
    vecs = [unpack_avector(v, n) for v in span_set(list(basis))]
    if not all(hermitian_form(x, y).is_zero() for x in vecs for y in vecs):
        return True
    images = [bachoc_map(v) for v in vecs]
    return all(quaternary_hermitian(x, y) == 0 for x in images for y in images)
