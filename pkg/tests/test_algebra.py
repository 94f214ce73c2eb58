import itertools

import pytest

from m2codes.algebra import (
    A_I,
    A_ONE,
    A_U,
    A_W,
    A_W2,
    A_ZERO,
    ALL_A,
    AElem,
    AlgebraError,
    MatF2,
    a_conj,
    a_mul,
    bachoc_weight,
    f4_add,
    f4_conj,
    f4_inv,
    f4_mul,
    f4_pow,
    format_a,
    from_matrix,
    from_u_coords,
    parse_a,
    parse_f4,
    to_matrix,
    to_u_coords,
)

W, W2 = 2, 3
I_MAT = MatF2(0, 1, 1, 0)
W_MAT = MatF2(0, 1, 1, 1)
ID = MatF2(1, 0, 0, 1)
ZERO_MAT = MatF2(0, 0, 0, 0)


def matrix_model(x: AElem) -> MatF2:
    """Independent embedding: a + i*b with a, b in F2[W_MAT]."""

    def f4(c: int) -> MatF2:
        m = ZERO_MAT
        if c & 1:
            m = m + ID
        if c & 2:
            m = m + W_MAT
        return m

    return f4(x.a) + I_MAT * f4(x.b)


def test_f4_examples():
    assert f4_mul(W, W) == W2
    assert f4_mul(W, W2) == 1
    assert f4_inv(W) == W2
    assert f4_conj(W) == W2 and f4_conj(1) == 1 and f4_conj(0) == 0


def test_f4_field_axioms():
    for x, y, z in itertools.product(range(4), repeat=3):
        assert f4_mul(x, f4_mul(y, z)) == f4_mul(f4_mul(x, y), z)
        assert f4_mul(x, f4_add(y, z)) == f4_add(f4_mul(x, y), f4_mul(x, z))
    for x in range(1, 4):
        assert f4_mul(x, f4_inv(x)) == 1
        assert f4_pow(x, 3) == 1
    assert f4_add(f4_mul(W, W), f4_add(W, 1)) == 0  # w^2 + w + 1 = 0


def test_f4_inverse_of_zero():
    with pytest.raises(AlgebraError):
        f4_inv(0)


def test_product_matches_matrix_model():
    for x, y in itertools.product(ALL_A, repeat=2):
        assert matrix_model(a_mul(x, y)) == matrix_model(x) * matrix_model(y)


def test_matrix_model_is_bijective_and_round_trips():
    mats = {matrix_model(x) for x in ALL_A}
    assert len(mats) == 16
    for x in ALL_A:
        assert to_matrix(x) == matrix_model(x)
        assert from_matrix(to_matrix(x)) == x


def test_defining_relations():
    assert a_mul(A_I, A_W) == a_mul(A_W2, A_I)
    assert a_mul(A_I, A_I) == A_ONE
    assert a_mul(A_U, A_U) == A_ZERO
    assert a_mul(A_U, A_W) != a_mul(A_W, A_U)
    for x in ALL_A:
        assert a_mul(A_ONE, x) == x == a_mul(x, A_ONE)


def test_ring_axioms_exhaustive():
    for x, y, z in itertools.product(ALL_A, repeat=3):
        assert a_mul(x, a_mul(y, z)) == a_mul(a_mul(x, y), z)
        s = AElem(y.a ^ z.a, y.b ^ z.b)
        lhs = a_mul(x, s)
        r1, r2 = a_mul(x, y), a_mul(x, z)
        assert lhs == AElem(r1.a ^ r2.a, r1.b ^ r2.b)


def test_conjugation():
    assert a_conj(A_W) == A_W2
    assert a_conj(A_I) == A_I
    for x in ALL_A:
        assert a_conj(a_conj(x)) == x
    for x, y in itertools.product(ALL_A, repeat=2):
        assert a_conj(a_mul(x, y)) == a_mul(a_conj(y), a_conj(x))


def test_norm_equals_determinant():
    for x in ALL_A:
        det = to_matrix(x).det()
        assert a_mul(x, a_conj(x)) == (A_ONE if det else A_ZERO)


def test_bachoc_weight_rule():
    assert bachoc_weight(A_ZERO) == 0
    assert bachoc_weight(A_U) == 2
    assert bachoc_weight(A_W) == 1
    for x in ALL_A:
        m = to_matrix(x)
        expected = 0 if x == A_ZERO else (1 if m.det() else 2)
        assert bachoc_weight(x) == expected == (x.a != 0) + (x.b != 0)
    assert sum(bachoc_weight(x) == 1 for x in ALL_A) == 6


def test_u_coordinates():
    assert to_u_coords(A_U) == (0, 1)
    assert to_u_coords(A_I) == (1, 1)
    assert to_u_coords(A_W) == (W, 0)
    for x in ALL_A:
        assert from_u_coords(*to_u_coords(x)) == x


def test_text_round_trip():
    for x in ALL_A:
        assert parse_a(format_a(x)) == x
        assert parse_a(format_a(x, form="u")) == x
    assert parse_a("1+i") == A_U
    assert parse_a("u") == A_U
    assert parse_f4("w^2") == W2


@pytest.mark.parametrize("bad", ["", "v", "1+i*q", "i+u"])
def test_bad_element_text(bad):
    with pytest.raises(AlgebraError):
        parse_a(bad)
