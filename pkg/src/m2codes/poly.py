"""
Dense univariate polynomials over GF(4).

Coefficients are GF(4) ints (see :mod:`m2codes.algebra`), lowest degree
first, with no trailing zeros.  The text format is the one used for every
CLI argument and JSON field::

    polynomial := term ('+' term)*
    term       := coeff | coeff '*' mono | mono
    mono       := 'x' | 'x^' uint
    coeff      := '0' | '1' | 'w' | 'w^2'

Whitespace is ignored and ``X`` is accepted for ``x``.  Repeated monomials
are summed.
"""

from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Sequence

from .algebra import F4_INV, F4_MUL, F4_NAMES, F4_SQ

ZERO_DEGREE = -1


class PolyError(ValueError):
    """Invalid polynomial operation (division by zero, bad syntax, ...)."""


class PolySyntaxError(PolyError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos} in {text!r}")


class PolyF4:
    """Immutable polynomial over GF(4)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for v in c:
            if not 0 <= v <= 3:
                raise PolyError(f"coefficient {v!r} is not a GF(4) element")
        self.coeffs: tuple[int, ...] = tuple(c)

    # --- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyF4":
        return cls(())

    @classmethod
    def one(cls) -> "PolyF4":
        return cls((1,))

    @classmethod
    def monomial(cls, deg: int, coeff: int = 1) -> "PolyF4":
        return cls([0] * deg + [coeff])

    @classmethod
    def x_n_minus_1(cls, n: int) -> "PolyF4":
        if n < 1:
            raise PolyError(f"x^n - 1 needs n >= 1, got {n}")
        return cls([1] + [0] * (n - 1) + [1])

    @classmethod
    def parse(cls, text: str) -> "PolyF4":
        return parse_poly(text)

    # --- basic properties ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyF4):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PolyF4", self.coeffs))

    def __lt__(self, other: "PolyF4") -> bool:
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = F4_MUL[acc][x] ^ c
        return acc

    # --- ring operations -------------------------------------------------

    def __add__(self, other: "PolyF4") -> "PolyF4":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] ^= v
        return PolyF4(out)

    __sub__ = __add__

    def __mul__(self, other: "PolyF4 | int") -> "PolyF4":
        if isinstance(other, int):
            row = F4_MUL[other]
            return PolyF4(row[c] for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyF4.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = F4_MUL[x]
            for j, y in enumerate(b):
                out[i + j] ^= row[y]
        return PolyF4(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyF4":
        if e < 0:
            raise PolyError("negative power of a polynomial")
        result = PolyF4.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, divisor: "PolyF4") -> tuple["PolyF4", "PolyF4"]:
        return poly_divmod(self, divisor)

    def __floordiv__(self, divisor: "PolyF4") -> "PolyF4":
        return poly_divmod(self, divisor)[0]

    def __mod__(self, divisor: "PolyF4") -> "PolyF4":
        return poly_divmod(self, divisor)[1]

    def divides(self, other: "PolyF4") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "PolyF4":
        if self.is_zero():
            return self
        return self * F4_INV[self.lead]

    def shift(self, k: int) -> "PolyF4":
        return PolyF4([0] * k + list(self.coeffs)) if self.coeffs else self

    def reciprocal(self) -> "PolyF4":
        return reciprocal(self)

    def frobenius(self) -> "PolyF4":
        return frobenius(self)

    def to_vector(self, n: int) -> list[int]:
        """Coefficient vector of length n (the polynomial must have degree < n)."""
        if len(self.coeffs) > n:
            raise PolyError(f"degree {self.degree} does not fit length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    # --- text --------------------------------------------------------------

    def __str__(self) -> str:
        return print_poly(self)

    def __repr__(self) -> str:
        return f"PolyF4({print_poly(self)!r})"


def poly_divmod(dividend: PolyF4, divisor: PolyF4) -> tuple[PolyF4, PolyF4]:
    if divisor.is_zero():
        raise PolyError("division by the zero polynomial")
    rem = list(dividend.coeffs)
    d = divisor.coeffs
    dd = len(d) - 1
    inv_lead = F4_INV[d[-1]]
    if len(rem) <= dd:
        return PolyF4.zero(), dividend
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        q = F4_MUL[c][inv_lead]
        quot[k - dd] = q
        row = F4_MUL[q]
        for j, y in enumerate(d):
            rem[k - dd + j] ^= row[y]
    return PolyF4(quot), PolyF4(rem[:dd])


def poly_gcd(p: PolyF4, q: PolyF4) -> PolyF4:
    """Monic gcd; gcd(0, 0) is an error."""
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd(0, 0) is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def poly_lcm(p: PolyF4, q: PolyF4) -> PolyF4:
    return (p * q // poly_gcd(p, q)).monic()


def poly_prod(polys: Iterable[PolyF4]) -> PolyF4:
    return reduce(lambda a, b: a * b, polys, PolyF4.one())


def reciprocal(p: PolyF4) -> PolyF4:
    """p*(X) = p(0)^-1 * X^deg(p) * p(1/X)."""
    if p.is_zero() or p.coeffs[0] == 0:
        raise PolyError(f"reciprocal needs a nonzero constant term: {p}")
    return PolyF4(reversed(p.coeffs)) * F4_INV[p.coeffs[0]]


def frobenius(p: PolyF4) -> PolyF4:
    """Coefficient-wise squaring."""
    return PolyF4(F4_SQ[c] for c in p.coeffs)


def is_self_reciprocal(p: PolyF4) -> bool:
    return reciprocal(p) == p


# --- text format ---------------------------------------------------------


def _term_str(coeff: int, k: int) -> str:
    if k == 0:
        return F4_NAMES[coeff]
    mono = "x" if k == 1 else f"x^{k}"
    return mono if coeff == 1 else f"{F4_NAMES[coeff]}*{mono}"


def print_poly(p: PolyF4) -> str:
    if p.is_zero():
        return "0"
    return "+".join(
        _term_str(c, k) for k, c in reversed(list(enumerate(p.coeffs))) if c
    )


_TOKEN = re.compile(r"w\^2|w\^1|w|[01]|x\^\d+|x|\*|\+")


def parse_poly(text: str) -> PolyF4:
    # positions are reported against the raw text, so strip spaces lazily
    raw = text
    cleaned = []
    index_map = []
    for pos, ch in enumerate(raw):
        if ch.isspace():
            continue
        cleaned.append("x" if ch == "X" else ch.lower() if ch == "W" else ch)
        index_map.append(pos)
    s = "".join(cleaned)
    if not s:
        raise PolySyntaxError(raw, 0, "empty polynomial")

    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise PolySyntaxError(raw, index_map[pos], f"unexpected character {s[pos]!r}")
        tokens.append((m.group(), index_map[pos]))
        pos = m.end()
    tokens.append(("", len(raw)))

    coeffs: dict[int, int] = {}
    i = 0

    def expect_term(i: int) -> int:
        tok, at = tokens[i]
        coeff = 1
        if tok in ("0", "1", "w", "w^1", "w^2"):
            coeff = {"0": 0, "1": 1, "w": 2, "w^1": 2, "w^2": 3}[tok]
            i += 1
            tok, at = tokens[i]
            if tok != "*":
                coeffs[0] = coeffs.get(0, 0) ^ coeff
                return i
            i += 1
            tok, at = tokens[i]
            if not tok.startswith("x"):
                raise PolySyntaxError(raw, at, "expected a monomial after '*'")
        if tok.startswith("x"):
            deg = 1 if tok == "x" else int(tok[2:])
            coeffs[deg] = coeffs.get(deg, 0) ^ coeff
            return i + 1
        raise PolySyntaxError(raw, at, "expected a coefficient or monomial")

    i = expect_term(i)
    while tokens[i][0] == "+":
        i = expect_term(i + 1)
    if tokens[i][0] != "":
        raise PolySyntaxError(raw, tokens[i][1], f"unexpected token {tokens[i][0]!r}")
    if not coeffs:
        return PolyF4.zero()
    top = max(coeffs)
    return PolyF4(coeffs.get(k, 0) for k in range(top + 1))


def as_poly(value: "PolyF4 | str | Sequence[int]") -> PolyF4:
    """Coerce a string (text format), coefficient sequence or PolyF4."""
    if isinstance(value, PolyF4):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    return PolyF4(value)
