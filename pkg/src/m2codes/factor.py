"""
Factorization of x^n - 1 over GF(4) for odd n.

The route is deterministic: build GF(4^m), m = ord_n(4), as GF(4)[Y]/(p) with
p the least monic irreducible of degree m, take a primitive n-th root of unity
beta in it, and multiply out the conjugates beta^j over each 4-cyclotomic
coset.  Each factor therefore carries its coset, and reciprocal factors are
the ones attached to negated cosets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .poly import PolyF4, poly_gcd, reciprocal


class LengthError(ValueError):
    """The code length is not an odd positive integer."""


def check_odd(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n % 2 == 0:
        raise LengthError(f"length must be an odd positive integer, got {n!r}")
    return n


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def order_of_4(n: int) -> int:
    """Multiplicative order of 4 modulo odd n (1 for n = 1)."""
    check_odd(n)
    if n == 1:
        return 1
    j, v = 1, 4 % n
    while v != 1:
        v = (v * 4) % n
        j += 1
    return j


# --- irreducibility over GF(4) ----------------------------------------------


def is_irreducible(p: PolyF4) -> bool:
    """Rabin's test over GF(4)."""
    m = p.degree
    if m < 1:
        return False
    if m == 1:
        return True
    R = ExtensionField(p)  # the quotient ring; a field only if p is irreducible
    y = (2, 0)

    def frob_power(k: int):
        r = y
        for _ in range(k):
            r = R.mul(r, r)
            r = R.mul(r, r)
        return r

    if frob_power(m) != y:
        return False
    for r in _prime_factors(m):
        h = R.to_poly(R.add(frob_power(m // r), y))
        if h.is_zero() or not poly_gcd(h, R.modulus).is_one():
            return False
    return True


def _monic_polys(m: int):
    """Monic degree-m polynomials with c_0 != 0, lexicographic in (c_0, c_1, ..., c_{m-1})."""
    for v in range(4 ** (m - 1), 4**m):
        coeffs = [(v >> (2 * (m - 1 - k))) & 3 for k in range(m)]
        yield PolyF4(coeffs + [1])


@lru_cache(maxsize=None)
def least_irreducible(m: int) -> PolyF4:
    for p in _monic_polys(m):
        if p.coeffs[0] != 0 and is_irreducible(p):
            return p
    raise AssertionError(f"no irreducible polynomial of degree {m}")  # pragma: no cover


# --- the extension field GF(4^m) --------------------------------------------


class ExtensionField:
    """GF(4)[Y]/(p) with elements bitsliced as (lo, hi) ints of m bits.

    Bit k of ``lo`` / ``hi`` is the 1- / w-component of the coefficient of
    Y^k, so field addition is a pair of XORs.
    """

    def __init__(self, modulus: PolyF4):
        self.modulus = modulus.monic()
        self.m = self.modulus.degree
        self.mask = (1 << self.m) - 1
        self.top = 1 << self.m
        self._plo, self._phi = self.from_poly(PolyF4(self.modulus.coeffs[:-1]))

    @staticmethod
    def _scale(c: int, lo: int, hi: int) -> tuple[int, int]:
        if c == 0:
            return 0, 0
        if c == 1:
            return lo, hi
        if c == 2:  # w*(a + b w) = b + (a + b) w
            return hi, lo ^ hi
        return lo ^ hi, lo  # w^2

    def from_poly(self, p: PolyF4) -> tuple[int, int]:
        lo = hi = 0
        for k, c in enumerate(p.coeffs):
            lo |= (c & 1) << k
            hi |= (c >> 1) << k
        return lo, hi

    def to_poly(self, x: tuple[int, int]) -> PolyF4:
        lo, hi = x
        return PolyF4(((lo >> k) & 1) | (((hi >> k) & 1) << 1) for k in range(self.m))

    def coeff(self, x: tuple[int, int], k: int) -> int:
        return ((x[0] >> k) & 1) | (((x[1] >> k) & 1) << 1)

    def is_base(self, x: tuple[int, int]) -> bool:
        """True when x lies in the prime subfield GF(4)."""
        return (x[0] >> 1) == 0 and (x[1] >> 1) == 0

    def add(self, x, y):
        return x[0] ^ y[0], x[1] ^ y[1]

    def _times_y(self, lo: int, hi: int) -> tuple[int, int]:
        lo <<= 1
        hi <<= 1
        c = ((lo >> self.m) & 1) | (((hi >> self.m) & 1) << 1)
        lo &= self.mask
        hi &= self.mask
        if c:
            slo, shi = self._scale(c, self._plo, self._phi)
            lo ^= slo
            hi ^= shi
        return lo, hi

    def mul(self, x, y):
        xlo, xhi = x
        ylo, yhi = y
        lo = hi = 0
        for k in range(self.m - 1, -1, -1):
            lo, hi = self._times_y(lo, hi)
            c = ((ylo >> k) & 1) | (((yhi >> k) & 1) << 1)
            if c:
                slo, shi = self._scale(c, xlo, xhi)
                lo ^= slo
                hi ^= shi
        return lo, hi

    def pow(self, x, e: int):
        result = (1, 0)
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def elements_in_order(self):
        """Nonzero elements in increasing order of their packed coefficient value."""
        for v in range(1, 4**self.m):
            lo = hi = 0
            for k in range(self.m):
                c = (v >> (2 * k)) & 3
                lo |= (c & 1) << k
                hi |= (c >> 1) << k
            yield lo, hi


ONE_EXT = (1, 0)


def primitive_root_of_unity(n: int, F: ExtensionField):
    """A primitive n-th root of unity: the first z**((4^m-1)/n) of exact order n."""
    size = 4**F.m - 1
    if size % n:
        raise AssertionError(f"{n} does not divide 4^{F.m} - 1")  # pragma: no cover
    cof = size // n
    primes = _prime_factors(n)
    for z in F.elements_in_order():
        beta = F.pow(z, cof)
        if n == 1 or all(F.pow(beta, n // q) != ONE_EXT for q in primes):
            return beta
    raise AssertionError("no primitive root found")  # pragma: no cover


# --- cyclotomic cosets -------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    members: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def negation(self) -> "CyclotomicCoset":
        return CyclotomicCoset(self.n, tuple(sorted((-j) % self.n for j in self.members)))

    def is_symmetric(self) -> bool:
        return self.negation() == self

    def __contains__(self, j: int) -> bool:
        return j % self.n in self.members


def cyclotomic_cosets(n: int) -> list[CyclotomicCoset]:
    check_odd(n)
    seen: set[int] = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        orbit = []
        j = s
        while j not in orbit:
            orbit.append(j)
            j = (j * 4) % n
        seen.update(orbit)
        out.append(CyclotomicCoset(n, tuple(sorted(orbit))))
    return out


# --- factorization ------------------------------------------------------------


@dataclass(frozen=True)
class FactorItem:
    coset: CyclotomicCoset
    factor: PolyF4
    partner: int  # representative of the negated coset

    @property
    def representative(self) -> int:
        return self.coset.representative

    @property
    def self_reciprocal(self) -> bool:
        return self.partner == self.representative


@dataclass(frozen=True)
class Factorization:
    """x^n - 1 = product of the items' factors, one per cyclotomic coset."""

    n: int
    items: tuple[FactorItem, ...]
    field_modulus: PolyF4 = field(compare=False)

    @property
    def factors(self) -> list[PolyF4]:
        return [it.factor for it in self.items]

    def item(self, representative: int) -> FactorItem:
        for it in self.items:
            if it.representative == representative:
                return it
        raise KeyError(representative)

    def partner_of(self, item: FactorItem) -> FactorItem:
        return self.item(item.partner)

    def self_reciprocal_items(self) -> list[FactorItem]:
        return [it for it in self.items if it.self_reciprocal]

    def asymmetric_pairs(self) -> list[tuple[FactorItem, FactorItem]]:
        """(S, -S) pairs with S the coset holding the smaller representative."""
        return [
            (it, self.partner_of(it))
            for it in self.items
            if it.representative < it.partner
        ]

    def index_of(self, factor: PolyF4) -> int:
        for k, it in enumerate(self.items):
            if it.factor == factor:
                return k
        raise KeyError(str(factor))


def _minimal_polynomial(F: ExtensionField, beta, coset: CyclotomicCoset) -> PolyF4:
    # product of (X - beta^j), coefficients held as extension elements
    coeffs = [ONE_EXT]
    for j in coset.members:
        root = F.pow(beta, j)
        new = [(0, 0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = F.add(new[k + 1], c)
            new[k] = F.add(new[k], F.mul(c, root))
        coeffs = new
    for c in coeffs:
        if not F.is_base(c):
            raise AssertionError(f"minimal polynomial over coset {coset.members} left GF(4)")
    return PolyF4(F.coeff(c, 0) for c in coeffs)


@lru_cache(maxsize=None)
def factorize_xn_minus_1(n: int) -> Factorization:
    check_odd(n)
    m = order_of_4(n)
    F = ExtensionField(least_irreducible(m) if m > 1 else PolyF4((0, 1)))
    beta = primitive_root_of_unity(n, F)
    cosets = cyclotomic_cosets(n)
    rep_of = {}
    for c in cosets:
        for j in c.members:
            rep_of[j] = c.representative
    items = []
    for c in cosets:
        f = _minimal_polynomial(F, beta, c)
        items.append(FactorItem(c, f, rep_of[(-c.representative) % n]))
    return Factorization(n, tuple(items), F.modulus)


# --- self-dual existence ----------------------------------------------------


@dataclass(frozen=True)
class ExistenceVerdict:
    n: int
    exists: bool
    witness_coset: CyclotomicCoset | None  # a non-symmetric coset when exists
    minus_one_exponent: int | None  # j with 4^j = -1 (mod n) otherwise
    order_of_4: int

    def __bool__(self) -> bool:
        return self.exists

    @property
    def order_parity_agrees(self) -> bool:
        """Whether "ord_n(4) odd" gives the same answer (it need not)."""
        return (self.order_of_4 % 2 == 1) == self.exists


def selfdual_exists(n: int) -> ExistenceVerdict:
    """Nontrivial Euclidean self-dual cyclic codes over A exist iff -1 is not a power of 4 mod n."""
    check_odd(n)
    ordn = order_of_4(n)
    j_minus = None
    v = 1
    for j in range(1, ordn + 1):
        v = (v * 4) % n
        if v == n - 1:
            j_minus = j
            break
    witness = None
    if j_minus is None:
        for c in cyclotomic_cosets(n):
            if not c.is_symmetric():
                witness = c
                break
    # n = 1: the only coset {0} is symmetric, so nothing nontrivial exists
    exists = witness is not None
    return ExistenceVerdict(n, exists, witness, j_minus, ordn)


def pairwise_coprime(polys) -> bool:
    return all(poly_gcd(a, b).is_one() for a, b in itertools.combinations(polys, 2))


def reciprocal_pairing_matches(fac: Factorization) -> bool:
    return all(reciprocal(it.factor) == fac.partner_of(it).factor for it in fac.items)
