"""Row reduction and null spaces over GF(4) and GF(2)."""

from __future__ import annotations

from .algebra import F4_INV, F4_MUL


def rref(rows, n: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of GF(4) rows; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if n is None:
        n = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F4_INV[m[r][col]]
        if inv != 1:
            row = F4_MUL[inv]
            m[r] = [row[c] for c in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = F4_MUL[m[i][col]]
                m[i] = [a ^ f[b] for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, n: int | None = None) -> int:
    return len(rref(rows, n)[0])


def null_space(rows, n: int) -> list[list[int]]:
    """Basis of {y : sum_j r_j y_j = 0 for every row r}."""
    red, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        y = [0] * n
        y[fcol] = 1
        for row, pc in zip(red, pivots):
            y[pc] = row[fcol]  # characteristic 2: -a = a
        basis.append(y)
    return basis


def in_row_space(vec, red_rows, pivots) -> bool:
    v = list(vec)
    for row, pc in zip(red_rows, pivots):
        if v[pc]:
            f = F4_MUL[v[pc]]
            v = [a ^ f[b] for a, b in zip(v, row)]
    return not any(v)


# --- GF(2), vectors packed as Python ints ----------------------------------


def f2_reduce(vectors) -> list[tuple[int, int]]:
    """Echelon basis as (pivot bit, vector) pairs."""
    basis: list[tuple[int, int]] = []
    for v in vectors:
        for p, b in basis:
            if (v >> p) & 1:
                v ^= b
        if v:
            p = v.bit_length() - 1
            basis = [(q, b ^ v if (b >> p) & 1 else b) for q, b in basis]
            basis.append((p, v))
    return basis


def f2_in_span(v: int, basis) -> bool:
    for p, b in basis:
        if (v >> p) & 1:
            v ^= b
    return v == 0


def f2_null_space(rows, nbits: int) -> list[int]:
    """Basis of {y in GF(2)^nbits : popcount(r & y) even for every row r}."""
    basis = f2_reduce(rows)
    pivots = {p for p, _ in basis}
    out = []
    for fcol in range(nbits):
        if fcol in pivots:
            continue
        y = 1 << fcol
        for p, b in basis:
            if (b >> fcol) & 1:
                y |= 1 << p
        out.append(y)
    return out
