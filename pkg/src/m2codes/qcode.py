"""
Quaternary linear and cyclic codes.

Distances and weight enumerators are exact: every codeword is enumerated by
the bitsliced kernels in :mod:`m2codes._engine`.  When the dual is smaller,
:func:`min_distance` may instead enumerate the dual and apply the MacWilliams
transform, which is equally exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from . import _engine
from ._engine import BudgetExceeded
from .algebra import F4_MUL, F4_SQ
from .linalg import in_row_space, null_space, rref
from .poly import PolyF4, as_poly

DEFAULT_DISTANCE_CAP = 16
DEFAULT_ENUM_CAP = 14


class CodeError(ValueError):
    """Invalid code construction (non-divisor generator, length mismatch, ...)."""


class MacWilliamsError(ValueError):
    """The transform produced non-integral or negative coefficients."""


class LinearCodeQ:
    """GF(4)-linear code given by generator rows; stored in reduced row echelon form."""

    def __init__(self, n: int, rows: Iterable[Sequence[int]] = ()):
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise CodeError(f"row of length {len(r)} in a code of length {n}")
        self.n = n
        self.rows, self.pivots = rref(rows, n)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def cardinality(self) -> int:
        return 4**self.k

    def __contains__(self, vec) -> bool:
        return len(vec) == self.n and in_row_space(vec, self.rows, self.pivots)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCodeQ):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(map(tuple, self.rows))))

    def __repr__(self) -> str:
        return f"LinearCodeQ(n={self.n}, k={self.k})"

    def to_linear(self) -> "LinearCodeQ":
        return self

    def codewords(self) -> Iterator[list[int]]:
        """All codewords (small codes only)."""
        for msg in itertools.product(range(4), repeat=self.k):
            v = [0] * self.n
            for c, row in zip(msg, self.rows):
                if c:
                    f = F4_MUL[c]
                    v = [a ^ f[b] for a, b in zip(v, row)]
            yield v

    def dual(self) -> "LinearCodeQ":
        """Euclidean dual."""
        return LinearCodeQ(self.n, null_space(self.rows, self.n))

    def hermitian_dual(self) -> "LinearCodeQ":
        conj_rows = [[F4_SQ[c] for c in r] for r in self.rows]
        return LinearCodeQ(self.n, null_space(conj_rows, self.n))

    def swap_halves(self) -> "LinearCodeQ":
        if self.n % 2:
            raise CodeError("swap_halves needs even length")
        h = self.n // 2
        return LinearCodeQ(self.n, [r[h:] + r[:h] for r in self.rows])


class QCyclicCode:
    """Cyclic code of length n with monic generator gen dividing x^n - 1."""

    def __init__(self, n: int, gen: "PolyF4 | str"):
        gen = as_poly(gen)
        if n < 1:
            raise CodeError(f"length must be positive, got {n}")
        if gen.is_zero():
            raise CodeError("generator must be nonzero")
        gen = gen.monic()
        xn1 = PolyF4.x_n_minus_1(n)
        if not gen.divides(xn1):
            raise CodeError(f"{gen} does not divide x^{n}-1")
        self.n = n
        self.gen = gen
        self.check = xn1 // gen

    @property
    def k(self) -> int:
        return self.n - self.gen.degree

    @property
    def cardinality(self) -> int:
        return 4**self.k

    def generator_rows(self) -> list[list[int]]:
        return [self.gen.shift(j).to_vector(self.n) for j in range(self.k)]

    def to_linear(self) -> LinearCodeQ:
        return LinearCodeQ(self.n, self.generator_rows())

    def __contains__(self, vec) -> bool:
        return len(vec) == self.n and self.gen.divides(PolyF4(vec))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QCyclicCode):
            return NotImplemented
        return self.n == other.n and self.gen == other.gen

    def __hash__(self) -> int:
        return hash((self.n, self.gen))

    def __repr__(self) -> str:
        return f"QCyclicCode(n={self.n}, gen={str(self.gen)!r})"

    def dual(self) -> "QCyclicCode":
        """Euclidean dual: generated by the reciprocal of the check polynomial."""
        return QCyclicCode(self.n, self.check.reciprocal())

    def codewords(self) -> Iterator[list[int]]:
        return self.to_linear().codewords()


Code = Union[LinearCodeQ, QCyclicCode]


# --- weight enumerators -----------------------------------------------------


@dataclass(frozen=True)
class WeightEnumerator:
    """Hamming weight distribution: counts[w] codewords of weight w."""

    length: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.length + 1:
            raise ValueError("counts must have length + 1 entries")

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    def min_weight(self) -> int | None:
        return next((w for w in range(1, self.length + 1) if self.counts[w]), None)

    def as_dict(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    @classmethod
    def from_dict(cls, length: int, counts: dict[int, int]) -> "WeightEnumerator":
        out = [0] * (length + 1)
        for w, c in counts.items():
            out[int(w)] = int(c)
        return cls(length, tuple(out))

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "cardinality": str(self.cardinality),
            "counts": {str(w): str(c) for w, c in self.as_dict().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightEnumerator":
        we = cls.from_dict(int(data["length"]), {int(w): int(c) for w, c in data["counts"].items()})
        if "cardinality" in data and int(data["cardinality"]) != we.cardinality:
            raise ValueError(
                f"cardinality {data['cardinality']} disagrees with the counts ({we.cardinality})"
            )
        return we


def krawtchouk(j: int, w: int, length: int, q: int = 4) -> int:
    """K_j(w) = sum_s (-1)^s (q-1)^(j-s) C(w, s) C(length - w, j - s)."""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(w, s) * comb(length - w, j - s)
        for s in range(j + 1)
    )


def macwilliams_transform(we: WeightEnumerator, cardinality: int | None = None) -> WeightEnumerator:
    """Enumerator of the dual: coefficients of W(x + 3y, x - y) / |C|."""
    size = we.cardinality if cardinality is None else cardinality
    if size != we.cardinality:
        raise MacWilliamsError(f"cardinality {size} does not match the counts ({we.cardinality})")
    N = we.length
    out = []
    for j in range(N + 1):
        total = sum(a * krawtchouk(j, w, N) for w, a in enumerate(we.counts) if a)
        q, r = divmod(total, size)
        if r or q < 0:
            raise MacWilliamsError(
                f"coefficient of weight {j} is {total}/{size}; not the enumerator of a code"
            )
        out.append(q)
    return WeightEnumerator(N, tuple(out))


def is_formally_self_dual(we: WeightEnumerator) -> bool:
    try:
        return macwilliams_transform(we) == we
    except MacWilliamsError:
        return False


def _stop_at_for(code: Code) -> int:
    # a nonzero cyclic code other than the full space has no weight-1 word
    if isinstance(code, QCyclicCode) and not code.gen.is_one():
        return 2
    return 1


def _check_cap(exponent: int, cap: int, what: str) -> None:
    if exponent > cap:
        raise BudgetExceeded(exponent, cap, what)


def weight_enumerator(
    code: Code, *, cap_exponent: int = DEFAULT_ENUM_CAP, partitions: int | None = None
) -> WeightEnumerator:
    """Exact weight distribution by enumerating all 4^k codewords."""
    _check_cap(code.k, cap_exponent, "weight enumerator")
    if code.n > _engine.MAX_LENGTH:
        raise CodeError(f"length {code.n} exceeds the engine limit {_engine.MAX_LENGTH}")
    rows = code.to_linear().rows
    return WeightEnumerator(code.n, tuple(_engine.weight_histogram(rows, code.n, partitions=partitions)))


def min_distance(
    code: Code,
    *,
    cap_exponent: int = DEFAULT_DISTANCE_CAP,
    lower_bound: int | None = None,
    partitions: int | None = None,
    method: str = "auto",
) -> int:
    """Exact minimum distance.

    ``method="direct"`` enumerates the 4^k - 1 nonzero codewords, stopping
    early once ``lower_bound`` is reached.  ``"dual"`` enumerates the 4^(n-k)
    words of the dual and transforms the result.  ``"auto"`` picks the
    smaller of the two.
    """
    if code.k == 0:
        raise CodeError("the zero code has no minimum distance")
    lin = code.to_linear()
    dual_k = code.n - code.k
    if method == "auto":
        method = "dual" if dual_k < code.k else "direct"
    if method == "direct":
        _check_cap(code.k, cap_exponent, "distance")
        stop = max(lower_bound or 0, _stop_at_for(code))
        return _engine.min_weight(lin.rows, stop_at=stop, partitions=partitions)
    if method == "dual":
        _check_cap(dual_k, cap_exponent, "distance via dual")
        dual = code.dual() if isinstance(code, QCyclicCode) else lin.dual()
        we = weight_enumerator(dual, cap_exponent=cap_exponent, partitions=partitions)
        return macwilliams_transform(we).min_weight()
    raise ValueError(f"unknown method {method!r}")


def brute_force_dual_enumerator(code: Code) -> WeightEnumerator:
    """Scan all 4^n vectors and count those orthogonal to every generator row."""
    rows = code.to_linear().rows
    n = code.n
    counts = [0] * (n + 1)
    for y in itertools.product(range(4), repeat=n):
        ok = True
        for r in rows:
            s = 0
            for a, b in zip(r, y):
                s ^= F4_MUL[a][b]
            if s:
                ok = False
                break
        if ok:
            counts[sum(1 for c in y if c)] += 1
    return WeightEnumerator(n, tuple(counts))


# --- constructions -----------------------------------------------------------


def plotkin_sum(c1: Code, c2: Code) -> LinearCodeQ:
    """{(a, a + b) : a in c1, b in c2}."""
    l1, l2 = c1.to_linear(), c2.to_linear()
    if l1.n != l2.n:
        raise CodeError(f"Plotkin sum needs equal lengths, got {l1.n} and {l2.n}")
    n = l1.n
    rows = [r + r for r in l1.rows] + [[0] * n + r for r in l2.rows]
    return LinearCodeQ(2 * n, rows)


def zero_code(n: int) -> LinearCodeQ:
    return LinearCodeQ(n, [])


def full_code(n: int) -> LinearCodeQ:
    return LinearCodeQ(n, [[int(i == j) for j in range(n)] for i in range(n)])


def repeated_root_double(g1: "PolyF4 | str", g2: "PolyF4 | str", n: int) -> QCyclicCode:
    """Length-2n cyclic code with generator g1^2 * g2 (g1 * g2 must divide x^n - 1)."""
    g1, g2 = as_poly(g1).monic(), as_poly(g2).monic()
    if n % 2 == 0:
        raise CodeError(f"n must be odd, got {n}")
    if not (g1 * g2).divides(PolyF4.x_n_minus_1(n)):
        raise CodeError(f"({g1})*({g2}) does not divide x^{n}-1")
    return QCyclicCode(2 * n, g1 * g1 * g2)


def shift_closed(code: Code) -> bool:
    """Every generator row shifted cyclically by one stays in the code."""
    lin = code.to_linear()
    return all(r[-1:] + r[:-1] in lin for r in lin.rows)
