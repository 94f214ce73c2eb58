import pytest

from m2codes.classify import (
    MATCH,
    NO_REFERENCE,
    NOT_IN_PAPER,
    PAPER_ROW_ABSENT,
    UNCOMPUTED,
    check_class,
    check_reference_generator,
    compare_with_paper,
    compute_distances,
    count_by_exhaustive_filter,
    enumerate_selfdual,
    expected_count,
    label_polynomials,
    reference_rows,
    resolve_label,
    table_row,
)
from m2codes.factor import factorize_xn_minus_1
from m2codes.poly import PolyF4, parse_poly

P = parse_poly


def test_n3_classes():
    triples = enumerate_selfdual(3, up_to_reversal=False)
    assert {c.f for c in triples} == {P("x+w"), P("x+w^2")}
    assert all(c.h == P("x+1") for c in triples)
    classes = enumerate_selfdual(3)
    assert len(classes) == 1 and classes[0].f == P("x+w")  # coefficient (w, 1) < (w^2, 1)


@pytest.mark.parametrize("n,triples,classes", [(3, 2, 1), (5, 0, 0), (15, 26, 13), (31, 26, 13), (21, 80, 40)])
def test_counts(n, triples, classes):
    assert len(enumerate_selfdual(n, up_to_reversal=False)) == triples
    assert len(enumerate_selfdual(n)) == classes


@pytest.mark.parametrize("n", range(1, 32, 2))
def test_count_law(n):
    t = len(factorize_xn_minus_1(n).asymmetric_pairs())
    assert len(enumerate_selfdual(n, up_to_reversal=False)) == 3**t - 1 == expected_count(n)
    assert len(enumerate_selfdual(n)) == (3**t - 1) // 2


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21])
def test_count_matches_exhaustive_filter(n):
    assert count_by_exhaustive_filter(n) == len(enumerate_selfdual(n, up_to_reversal=False))


@pytest.mark.parametrize("n", [3, 7, 9, 15, 21, 31])
def test_class_invariants(n):
    triples = enumerate_selfdual(n, up_to_reversal=False)
    keys = {(c.f, c.g, c.h) for c in triples}
    for c in triples:
        check_class(c)
        # every self-reciprocal irreducible factor divides h
        for it in factorize_xn_minus_1(n).self_reciprocal_items():
            assert it.factor.divides(c.h)
        # reversal is a fixed-point-free involution
        assert c.f != c.g
        assert (c.g, c.f, c.h) in keys
        assert c.reversed().reversed() == c


def test_canonical_choice_is_lexicographic_from_constant_term():
    for c in enumerate_selfdual(21):
        assert c.f.coeffs <= c.g.coeffs
        assert not c.reversal_partner


def test_enumeration_is_deterministic():
    assert enumerate_selfdual(15) == enumerate_selfdual(15)


def test_even_length_rejected():
    with pytest.raises(ValueError):
        enumerate_selfdual(4)


def test_table_rows():
    (c7,) = compute_distances(enumerate_selfdual(7))
    assert (c7.d_R, c7.d_T, c7.min_val) == (4, 3, 4)
    (c11,) = compute_distances(enumerate_selfdual(11))
    assert (c11.d_R, c11.d_T, c11.min_val) == (6, 5, 6)
    labels = label_polynomials(15)
    h = P("x^5+1") * resolve_label("f1f1*", labels)
    f = resolve_label("f2f3*", labels)
    cls = next(c for c in enumerate_selfdual(15) if c.h == h and f in (c.f, c.g))
    row = table_row(cls)
    assert (row.d_R, row.d_T, row.min_val) == (11, 3, 6)


def test_budget_marks_rows_uncomputed():
    cls = enumerate_selfdual(31)[0]
    row = table_row(cls, cap_exponent=4)
    assert row.d_R is None and row.d_T is None and row.min_val is None


def test_labels_resolve():
    labels = label_polynomials(21)
    assert resolve_label("(x+w)f0f1*f2", labels) == P("x+w") * labels["f0"] * labels["f1"].reciprocal() * labels["f2"]
    assert resolve_label("1", labels).is_one()
    with pytest.raises(ValueError):
        resolve_label("g1", labels)


def test_reference_rows_are_divisors():
    for n in (3, 7, 11, 15, 21, 27, 31):
        for row in reference_rows(n):
            assert (row.f * row.h).divides(PolyF4.x_n_minus_1(n))


def test_structural_comparison_without_distances():
    rep = compare_with_paper(15)
    assert rep.count(UNCOMPUTED) == 13 and rep.count(PAPER_ROW_ABSENT) == 0
    rep21 = compare_with_paper(21)
    assert rep21.count(UNCOMPUTED) == 21 and rep21.count(NOT_IN_PAPER) == 19
    assert compare_with_paper(9).count(NO_REFERENCE) == 4
    assert not compare_with_paper(9).has_reference


@pytest.mark.parametrize("n", [3, 7, 11, 15, 21, 27])
def test_distance_tables_match(n):
    rep = compare_with_paper(n, compute_distances(enumerate_selfdual(n), cap_exponent=14))
    assert rep.count(MATCH) == len(reference_rows(n))
    assert not rep.unexplained_mismatches


def test_partitions_do_not_change_distances():
    a = compute_distances(enumerate_selfdual(15), partitions=1)
    b = compute_distances(enumerate_selfdual(15), partitions=8)
    assert a == b


def test_reference_generators():
    for n in (11, 19, 23):
        chk = check_reference_generator(n)
        assert chk.divides and chk.found and chk.exists
    chk29 = check_reference_generator(29)
    assert chk29.divides and chk29.self_reciprocal and not chk29.found and not chk29.exists
    assert check_reference_generator(9) is None
