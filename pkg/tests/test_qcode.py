import itertools
from math import comb

import pytest

from m2codes._engine import BudgetExceeded
from m2codes.factor import factorize_xn_minus_1
from m2codes.poly import PolyF4, parse_poly, poly_prod
from m2codes.qcode import (
    CodeError,
    LinearCodeQ,
    MacWilliamsError,
    QCyclicCode,
    WeightEnumerator,
    brute_force_dual_enumerator,
    full_code,
    is_formally_self_dual,
    macwilliams_transform,
    min_distance,
    plotkin_sum,
    repeated_root_double,
    shift_closed,
    weight_enumerator,
    zero_code,
)

P = parse_poly


def divisors(n):
    fs = factorize_xn_minus_1(n).factors
    for mask in itertools.product((0, 1), repeat=len(fs)):
        yield poly_prod(f for f, m in zip(fs, mask) if m)


def naive_min_distance(code):
    return min(sum(1 for c in w if c) for w in code.codewords() if any(w))


def test_distance_examples():
    assert min_distance(QCyclicCode(7, P("x+1") * P("x^3+x+1"))) == 4
    assert min_distance(QCyclicCode(3, P("x+w"))) == 2
    for n in (1, 5, 9):
        assert min_distance(QCyclicCode(n, PolyF4.one())) == 1
    gen = P("x^5+1") * P("x^2+x+w") * P("x^2+x+w^2") * P("x+w")
    code = QCyclicCode(15, gen)
    assert min_distance(code, method="direct") == min_distance(code, method="dual") == 8


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_distance_methods_agree_with_naive(n):
    for g in divisors(n):
        code = QCyclicCode(n, g)
        if code.k == 0:
            continue
        d = naive_min_distance(code) if code.k <= 5 else min_distance(code, method="direct")
        assert min_distance(code, method="direct") == d
        assert min_distance(code, method="dual") == d


def test_enumerator_examples():
    assert weight_enumerator(QCyclicCode(3, P("x+1") * P("x+w"))).as_dict() == {0: 1, 3: 3}
    full = weight_enumerator(QCyclicCode(3, PolyF4.one()))
    assert full.counts == tuple(comb(3, w) * 3**w for w in range(4))
    assert weight_enumerator(QCyclicCode(3, PolyF4.x_n_minus_1(3))).as_dict() == {0: 1}


def test_macwilliams_examples():
    assert macwilliams_transform(WeightEnumerator(1, (1, 3))).as_dict() == {0: 1}
    assert macwilliams_transform(WeightEnumerator(1, (1, 0))).as_dict() == {0: 1, 1: 3}
    code = QCyclicCode(3, P("x+w"))
    we = weight_enumerator(code)
    assert we.as_dict() == {0: 1, 2: 9, 3: 6}
    dual = macwilliams_transform(we)
    assert dual == brute_force_dual_enumerator(code)
    assert dual == weight_enumerator(QCyclicCode(3, code.check.reciprocal()))


def test_macwilliams_rejects_non_enumerators():
    with pytest.raises(MacWilliamsError):
        macwilliams_transform(WeightEnumerator(2, (1, 2, 0)))
    with pytest.raises(MacWilliamsError):
        macwilliams_transform(WeightEnumerator(1, (1, 3)), cardinality=5)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_transform_is_an_involution(n):
    for g in divisors(n):
        we = weight_enumerator(QCyclicCode(n, g))
        assert macwilliams_transform(macwilliams_transform(we)) == we


def test_formal_self_duality_examples():
    assert not is_formally_self_dual(weight_enumerator(full_code(2)))
    assert is_formally_self_dual(weight_enumerator(LinearCodeQ(2, [[1, 1]])))


def test_plotkin_example_and_degenerate_cases():
    T, R = QCyclicCode(3, P("x+w")), QCyclicCode(3, P("x+1") * P("x+w"))
    pl = plotkin_sum(T, R)
    assert (pl.n, pl.k, min_distance(pl)) == (6, 3, 3)
    assert min_distance(plotkin_sum(T, zero_code(3))) == 2 * min_distance(T)
    assert min_distance(plotkin_sum(zero_code(3), T)) == min_distance(T)


@pytest.mark.parametrize("n", [3, 7])
def test_plotkin_parameter_law(n):
    codes = [QCyclicCode(n, g) for g in divisors(n)]
    for c1, c2 in itertools.product(codes, repeat=2):
        pl = plotkin_sum(c1, c2)
        assert pl.k == c1.k + c2.k
        if pl.k == 0:
            continue
        ds = [min_distance(c) if c.k else None for c in (c1, c2)]
        expect = min(x for x in (2 * ds[0] if ds[0] else None, ds[1]) if x is not None)
        assert min_distance(pl) == expect


def test_repeated_root_double():
    dbl = repeated_root_double(P("x+w"), P("x+1"), 3)
    assert dbl.gen == P("x+w") ** 2 * P("x+1")
    pl = plotkin_sum(QCyclicCode(3, P("x+w")), QCyclicCode(3, P("x+w") * P("x+1")))
    assert weight_enumerator(dbl) == weight_enumerator(pl)
    dbl7 = repeated_root_double(P("x^3+x+1"), P("x+1"), 7)
    pl7 = plotkin_sum(QCyclicCode(7, P("x^3+x+1")), QCyclicCode(7, P("x^4+x^3+x^2+1")))
    assert (dbl7.n, dbl7.k) == (14, 7)
    assert weight_enumerator(dbl7) == weight_enumerator(pl7)
    trivial = repeated_root_double(PolyF4.one(), P("x+1"), 3)
    assert weight_enumerator(trivial) == weight_enumerator(plotkin_sum(full_code(3), QCyclicCode(3, P("x+1"))))
    with pytest.raises(CodeError):
        repeated_root_double(P("x+w"), P("x+w"), 3)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 15])
def test_cyclic_codes_are_shift_closed(n):
    for g in divisors(n):
        assert shift_closed(QCyclicCode(n, g))


def test_constructor_checks():
    with pytest.raises(CodeError):
        QCyclicCode(7, P("x^2+1"))
    with pytest.raises(CodeError):
        QCyclicCode(3, PolyF4.zero())
    with pytest.raises(CodeError):
        min_distance(QCyclicCode(3, PolyF4.x_n_minus_1(3)))


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as exc:
        weight_enumerator(QCyclicCode(31, P("x+1")), cap_exponent=14)
    assert exc.value.needed_exponent == 30
    with pytest.raises(BudgetExceeded):
        min_distance(QCyclicCode(31, P("x+1")), cap_exponent=16, method="direct")


def test_enumerator_json_round_trip():
    we = weight_enumerator(QCyclicCode(7, P("x^3+x+1")))
    data = we.to_json()
    assert data["cardinality"] == str(4**4)
    assert all(isinstance(v, str) for v in data["counts"].values())
    assert WeightEnumerator.from_json(data) == we
    data["cardinality"] = "7"
    with pytest.raises(ValueError):
        WeightEnumerator.from_json(data)
