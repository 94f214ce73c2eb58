"""
Arithmetic in GF(4) and in the matrix ring A = M2(F2).

GF(4) elements are plain ints 0..3 with bit 0 the coefficient of 1 and bit 1
the coefficient of w, so addition is XOR:

    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2 = 1 + w

Elements of A are stored in the i-left form a + i*b with a, b in GF(4),
where w and i satisfy i*w = w^2*i and i^2 = 1.  The nilpotent u = 1 + i gives
the second coordinate system A = GF(4) + u*GF(4).  A third, independent model
is the 2x2 binary matrix with

    i = [[0, 1], [1, 0]],    w = [[0, 1], [1, 1]].
"""

from __future__ import annotations

from typing import NamedTuple

ZERO, ONE, W, W2 = 0, 1, 2, 3

F4_NAMES = ("0", "1", "w", "w^2")
_NAME_TO_F4 = {"0": 0, "1": 1, "w": 2, "w^2": 3, "w^1": 2, "w^0": 1}

# log/exp over the cyclic group <w> of order 3
_LOG = {1: 0, 2: 1, 3: 2}
_EXP = (1, 2, 3)

F4_MUL = tuple(
    tuple(0 if x == 0 or y == 0 else _EXP[(_LOG[x] + _LOG[y]) % 3] for y in range(4))
    for x in range(4)
)
F4_INV = (None, 1, 3, 2)
F4_SQ = (0, 1, 3, 2)


class AlgebraError(ValueError):
    """Domain error in field or ring arithmetic (e.g. inverting zero)."""


def f4_add(x: int, y: int) -> int:
    return x ^ y


def f4_mul(x: int, y: int) -> int:
    return F4_MUL[x][y]


def f4_inv(x: int) -> int:
    if x == 0:
        raise AlgebraError("0 has no inverse in GF(4)")
    return F4_INV[x]


def f4_pow(x: int, e: int) -> int:
    if e < 0:
        return f4_pow(f4_inv(x), -e)
    if x == 0:
        return 1 if e == 0 else 0
    return _EXP[(_LOG[x] * e) % 3]


def f4_conj(x: int) -> int:
    """Frobenius conjugation x -> x^2."""
    return F4_SQ[x]


def f4_str(x: int) -> str:
    return F4_NAMES[x]


def parse_f4(text: str) -> int:
    key = text.strip().lower().replace(" ", "")
    if key not in _NAME_TO_F4:
        raise AlgebraError(f"not a GF(4) element: {text!r}")
    return _NAME_TO_F4[key]


class MatF2(NamedTuple):
    """Row-major 2x2 binary matrix [[a00, a01], [a10, a11]]."""

    a00: int
    a01: int
    a10: int
    a11: int

    def __add__(self, other: "MatF2") -> "MatF2":  # type: ignore[override]
        return MatF2(*(x ^ y for x, y in zip(self, other)))

    def __mul__(self, other: "MatF2") -> "MatF2":  # type: ignore[override]
        a, b, c, d = self
        e, f, g, h = other
        return MatF2(
            (a & e) ^ (b & g),
            (a & f) ^ (b & h),
            (c & e) ^ (d & g),
            (c & f) ^ (d & h),
        )

    def det(self) -> int:
        return (self.a00 & self.a11) ^ (self.a01 & self.a10)

    @classmethod
    def from_int(cls, v: int) -> "MatF2":
        return cls((v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1)

    def to_int(self) -> int:
        return (self.a00 << 3) | (self.a01 << 2) | (self.a10 << 1) | self.a11


MAT_ZERO = MatF2(0, 0, 0, 0)
MAT_ONE = MatF2(1, 0, 0, 1)
MAT_I = MatF2(0, 1, 1, 0)
MAT_W = MatF2(0, 1, 1, 1)


def _f4_to_matrix(x: int) -> MatF2:
    m = MAT_ZERO
    if x & 1:
        m = m + MAT_ONE
    if x & 2:
        m = m + MAT_W
    return m


class AElem(NamedTuple):
    """The element a + i*b of M2(F2), with a, b in GF(4)."""

    a: int
    b: int

    # --- ring structure -------------------------------------------------

    def __add__(self, other: "AElem") -> "AElem":  # type: ignore[override]
        return AElem(self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: "AElem") -> "AElem":  # type: ignore[override]
        return a_mul(self, other)

    def __neg__(self) -> "AElem":
        return self

    def conj(self) -> "AElem":
        return a_conj(self)

    def weight(self) -> int:
        return bachoc_weight(self)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    # --- representations -------------------------------------------------

    @property
    def index(self) -> int:
        """Dense code 0..15 (a in the low two bits)."""
        return self.a | (self.b << 2)

    @classmethod
    def from_index(cls, v: int) -> "AElem":
        return cls(v & 3, (v >> 2) & 3)

    def to_u_coords(self) -> tuple[int, int]:
        return to_u_coords(self)

    @classmethod
    def from_u_coords(cls, a: int, b: int) -> "AElem":
        return from_u_coords(a, b)

    def to_matrix(self) -> MatF2:
        return to_matrix(self)

    def __str__(self) -> str:
        return format_a(self)

    def __repr__(self) -> str:
        return f"AElem({format_a(self)})"


A_ZERO = AElem(0, 0)
A_ONE = AElem(1, 0)
A_W = AElem(W, 0)
A_W2 = AElem(W2, 0)
A_I = AElem(0, 1)
A_U = AElem(1, 1)

ALL_A = tuple(AElem.from_index(v) for v in range(16))


def a_mul(x: AElem, y: AElem) -> AElem:
    """(a + ib)(c + id) = (ac + conj(b)d) + i(conj(a)d + bc)."""
    a, b = x
    c, d = y
    return AElem(
        F4_MUL[a][c] ^ F4_MUL[F4_SQ[b]][d],
        F4_MUL[F4_SQ[a]][d] ^ F4_MUL[b][c],
    )


def a_conj(x: AElem) -> AElem:
    return AElem(F4_SQ[x.a], x.b)


def bachoc_weight(x: AElem) -> int:
    """0 for zero, 1 for invertible, 2 for singular nonzero elements."""
    return (x.a != 0) + (x.b != 0)


def to_u_coords(x: AElem) -> tuple[int, int]:
    """a + i*b = (a + b) + u*b."""
    return x.a ^ x.b, x.b


def from_u_coords(a: int, b: int) -> AElem:
    return AElem(a ^ b, b)


def to_matrix(x: AElem) -> MatF2:
    return _f4_to_matrix(x.a) + MAT_I * _f4_to_matrix(x.b)


_MATRIX_TO_A = {to_matrix(x): x for x in ALL_A}
if len(_MATRIX_TO_A) != 16:  # pragma: no cover - guards the matrix model
    raise AssertionError("matrix embedding of A is not injective")


def from_matrix(m: MatF2) -> AElem:
    return _MATRIX_TO_A[MatF2(*m)]


# dense tables over the 0..15 index, used by vector-level code
A_MUL_TABLE = tuple(
    tuple(a_mul(x, y).index for y in ALL_A) for x in ALL_A
)
A_CONJ_TABLE = tuple(a_conj(x).index for x in ALL_A)


def format_a(x: AElem, form: str = "i") -> str:
    """Format as ``a+i*b`` (form="i") or ``a+u*b`` (form="u")."""
    if form == "u":
        first, second = to_u_coords(x)
        sym = "u"
    elif form == "i":
        first, second = x
        sym = "i"
    else:
        raise ValueError(f"unknown form {form!r}")
    parts = []
    if first:
        parts.append(F4_NAMES[first])
    if second:
        parts.append(sym if second == 1 else f"{sym}*{F4_NAMES[second]}")
    return "+".join(parts) if parts else "0"


def parse_a(text: str) -> AElem:
    """Parse ``a+i*b`` or ``a+u*b`` (the two forms may not be mixed)."""
    s = text.strip().lower().replace(" ", "")
    if not s:
        raise AlgebraError("empty ring element")
    first = 0
    second = 0
    sym = None
    for term in s.split("+"):
        if not term:
            raise AlgebraError(f"empty term in {text!r}")
        if term[0] in "iu":
            if sym is not None and sym != term[0]:
                raise AlgebraError(f"mixed i/u forms in {text!r}")
            sym = term[0]
            rest = term[1:]
            if rest == "":
                coeff = 1
            elif rest.startswith("*"):
                coeff = parse_f4(rest[1:])
            else:
                raise AlgebraError(f"bad term {term!r} in {text!r}")
            second ^= coeff
        else:
            first ^= parse_f4(term)
    if sym == "u":
        return from_u_coords(first, second)
    return AElem(first, second)
