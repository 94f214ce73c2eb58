"""
Euclidean self-dual cyclic codes over A of odd length n.

A triple (f, g, h) is self-dual when h = h* and g = f*.  Every self-reciprocal
irreducible factor of x^n - 1 must then divide h, and each pair of mutually
reciprocal factors {p, p*} goes either wholly into h, or p into f and p* into
g, or the other way round.  With t such pairs this gives 3^t triples, one of
which is the trivial (1, 1, x^n - 1).
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from typing import Iterable

from ._engine import BudgetExceeded
from .acode import ACyclicCode, TripleError
from .factor import check_odd, factorize_xn_minus_1, selfdual_exists
from .poly import PolyF4, as_poly, poly_prod
from .qcode import DEFAULT_ENUM_CAP, QCyclicCode, min_distance

# coset-pair assignments
TO_H, S_TO_F, NEG_S_TO_F = 0, 1, 2


@dataclass(frozen=True)
class SelfDualClass:
    n: int
    f: PolyF4
    g: PolyF4
    h: PolyF4
    assignment: tuple[int, ...]
    d_R: int | None = None
    d_T: int | None = None
    reversal_partner: bool = False  # True when (g, f, h) is the canonical member

    @property
    def code(self) -> ACyclicCode:
        return ACyclicCode(self.n, self.f, self.g, self.h)

    @property
    def dim_R(self) -> int:
        return self.g.degree

    @property
    def dim_T(self) -> int:
        return self.g.degree + self.h.degree

    @property
    def min_val(self) -> int | None:
        if self.d_R is None or self.d_T is None:
            return None
        return min(2 * self.d_T, self.d_R)

    @property
    def key(self) -> tuple:
        return (self.h.degree, self.h.coeffs, self.f.coeffs)

    def reversed(self) -> "SelfDualClass":
        flipped = tuple({S_TO_F: NEG_S_TO_F, NEG_S_TO_F: S_TO_F}.get(a, a) for a in self.assignment)
        return replace(self, f=self.g, g=self.f, assignment=flipped, reversal_partner=not self.reversal_partner)


def _is_canonical(f: PolyF4, g: PolyF4) -> bool:
    # lexicographic on coefficients from the constant term; 0 < 1 < w < w^2 is int order
    return f.coeffs <= g.coeffs


def enumerate_selfdual(n: int, up_to_reversal: bool = True) -> list[SelfDualClass]:
    """All nontrivial self-dual triples (or one per reversal pair), sorted by class key."""
    check_odd(n)
    fac = factorize_xn_minus_1(n)
    pairs = fac.asymmetric_pairs()
    base_h = poly_prod(it.factor for it in fac.self_reciprocal_items())
    out = []
    for assignment in itertools.product((TO_H, S_TO_F, NEG_S_TO_F), repeat=len(pairs)):
        if not any(assignment):
            continue
        f, g, h = PolyF4.one(), PolyF4.one(), base_h
        for a, (s, neg) in zip(assignment, pairs):
            if a == TO_H:
                h = h * s.factor * neg.factor
            elif a == S_TO_F:
                f, g = f * s.factor, g * neg.factor
            else:
                f, g = f * neg.factor, g * s.factor
        canonical = _is_canonical(f, g)
        if up_to_reversal and not canonical:
            continue
        out.append(SelfDualClass(n, f, g, h, assignment, reversal_partner=not canonical))
    out.sort(key=lambda c: c.key)
    return out


def count_by_exhaustive_filter(n: int) -> int:
    """Nontrivial self-dual triples among all 3^r ordered assignments of the r irreducible factors."""
    factors = factorize_xn_minus_1(n).factors
    count = 0
    for slots in itertools.product(range(3), repeat=len(factors)):
        parts = [PolyF4.one(), PolyF4.one(), PolyF4.one()]
        for s, p in zip(slots, factors):
            parts[s] = parts[s] * p
        f, g, h = parts
        if f.is_one() and g.is_one():
            continue
        if h.reciprocal() == h and g == f.reciprocal():
            count += 1
    return count


def expected_count(n: int) -> int:
    return 3 ** len(factorize_xn_minus_1(n).asymmetric_pairs()) - 1


# --- distances ----------------------------------------------------------------


def _cost(code: QCyclicCode) -> int:
    return min(code.k, code.n - code.k)


def table_row(
    cls: SelfDualClass, *, cap_exponent: int = DEFAULT_ENUM_CAP, partitions: int | None = None
) -> SelfDualClass:
    """Fill in d_T and d_R; either stays None when it exceeds the budget."""
    torsion = QCyclicCode(cls.n, cls.f)
    residue = QCyclicCode(cls.n, cls.f * cls.h)
    try:
        d_T = min_distance(torsion, cap_exponent=cap_exponent, partitions=partitions)
    except BudgetExceeded:
        d_T = None
    try:
        # R is a subcode of T, so a word of weight d_T in R is already minimal
        d_R = min_distance(residue, cap_exponent=cap_exponent, partitions=partitions, lower_bound=d_T)
    except BudgetExceeded:
        d_R = None
    return replace(cls, d_R=d_R, d_T=d_T)


def compute_distances(
    classes: Iterable[SelfDualClass], *, cap_exponent: int = DEFAULT_ENUM_CAP, partitions: int | None = None
) -> list[SelfDualClass]:
    """Cheapest rows first; the result keeps the input order."""
    classes = list(classes)
    order = sorted(
        range(len(classes)),
        key=lambda j: max(_cost(QCyclicCode(classes[j].n, classes[j].f)),
                          _cost(QCyclicCode(classes[j].n, classes[j].f * classes[j].h))),
    )
    out: list[SelfDualClass | None] = [None] * len(classes)
    for j in order:
        out[j] = table_row(classes[j], cap_exponent=cap_exponent, partitions=partitions)
    return out  # type: ignore[return-value]


# --- reference tables -----------------------------------------------------------

MATCH = "MATCH"
VALUE_MISMATCH = "VALUE-MISMATCH"
PAPER_ROW_ABSENT = "PAPER-ROW-ABSENT"
NOT_IN_PAPER = "NOT-IN-PAPER"
NO_REFERENCE = "NO-REFERENCE"
UNCOMPUTED = "UNCOMPUTED"

_LABEL_TOKEN = re.compile(r"\(([^()]*)\)|f(\d+)(\*?)|1")


@lru_cache(maxsize=1)
def reference_data() -> dict:
    text = resources.files("m2codes").joinpath("data/paper_tables.json").read_text()
    return json.loads(text)


def label_polynomials(n: int, *, corrected: bool = True) -> dict[str, PolyF4]:
    table = reference_data()["tables"].get(str(n))
    if table is None:
        return {}
    out = {k: as_poly(v) for k, v in table["labels"].items()}
    if corrected:
        for c in reference_data()["label_corrections"]:
            if c["n"] == n:
                out[c["label"]] = as_poly(c["corrected"])
    return out


def resolve_label(label: str, labels: dict[str, PolyF4]) -> PolyF4:
    """Product of tokens such as f1, f2*, (x+w) or 1."""
    pos, acc = 0, PolyF4.one()
    while pos < len(label):
        m = _LABEL_TOKEN.match(label, pos)
        if not m:
            raise ValueError(f"cannot read table label {label!r} at position {pos}")
        if m.group(1) is not None:
            acc = acc * as_poly(m.group(1))
        elif m.group(2) is not None:
            p = labels[f"f{m.group(2)}"]
            acc = acc * (p.reciprocal() if m.group(3) else p)
        pos = m.end()
    return acc


@dataclass(frozen=True)
class ReferenceRow:
    h_label: str
    f_label: str
    h: PolyF4
    f: PolyF4
    d_R: int
    d_T: int
    min_val: int
    tag: str | None = None


def reference_rows(n: int) -> list[ReferenceRow] | None:
    table = reference_data()["tables"].get(str(n))
    if table is None:
        return None
    labels = label_polynomials(n)
    rows = []
    for block in table["blocks"]:
        base = as_poly(block["h_base"])
        for r in block["rows"]:
            rows.append(
                ReferenceRow(
                    r["h"], r["f"], base * resolve_label(r["h"], labels), resolve_label(r["f"], labels),
                    r["d_R"], r["d_T"], r["min"], r.get("label"),
                )
            )
    return rows


def _documented(n: int, row: ReferenceRow, column: str, computed: int) -> bool:
    for c in reference_data()["value_corrections"]:
        if (c["n"], c["h"], c["f"], c["column"]) == (n, row.h_label, row.f_label, column):
            return c["corrected"] == computed
    return False


@dataclass
class RowComparison:
    status: str
    row: ReferenceRow | None
    cls: SelfDualClass | None
    mismatches: dict = field(default_factory=dict)  # column -> {"paper", "computed", "documented"}

    @property
    def unexplained(self) -> bool:
        return self.status == VALUE_MISMATCH and not all(m["documented"] for m in self.mismatches.values())

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.row is not None:
            out["paper_row"] = {"h": self.row.h_label, "f": self.row.f_label,
                                "d_R": self.row.d_R, "d_T": self.row.d_T, "min": self.row.min_val}
        if self.cls is not None:
            out["class"] = {"h": str(self.cls.h), "f": str(self.cls.f), "g": str(self.cls.g)}
        if self.mismatches:
            out["mismatches"] = self.mismatches
        return out


@dataclass
class ComparisonReport:
    n: int
    has_reference: bool
    rows: list[RowComparison]

    def count(self, status: str) -> int:
        return sum(1 for r in self.rows if r.status == status)

    @property
    def unexplained_mismatches(self) -> list[RowComparison]:
        return [r for r in self.rows if r.unexplained]

    def to_json(self) -> dict:
        return {
            "schema": "m2codes.compare/1",
            "n": self.n,
            "reference": self.has_reference,
            "summary": {s: self.count(s) for s in (MATCH, VALUE_MISMATCH, PAPER_ROW_ABSENT, NOT_IN_PAPER, UNCOMPUTED)},
            "rows": [r.to_json() for r in self.rows],
        }


def _find_class(classes: list[SelfDualClass], h: PolyF4, f: PolyF4) -> SelfDualClass | None:
    for c in classes:
        if c.h == h and f in (c.f, c.g):
            return c
    return None


def compare_with_paper(n: int, classes: list[SelfDualClass] | None = None) -> ComparisonReport:
    """Match each reference row to an enumerated class; compare distances where computed."""
    if classes is None:
        classes = enumerate_selfdual(n, up_to_reversal=True)
    refs = reference_rows(n)
    if refs is None:
        return ComparisonReport(n, False, [RowComparison(NO_REFERENCE, None, c) for c in classes])
    out = []
    matched: set = set()
    for row in refs:
        cls = _find_class(classes, row.h, row.f)
        if cls is None:
            out.append(RowComparison(PAPER_ROW_ABSENT, row, None))
            continue
        matched.add(cls.key)
        if cls.d_R is None or cls.d_T is None:
            out.append(RowComparison(UNCOMPUTED, row, cls))
            continue
        mism = {}
        for column, paper, computed in (("d_R", row.d_R, cls.d_R), ("d_T", row.d_T, cls.d_T),
                                        ("min", row.min_val, cls.min_val)):
            if paper != computed:
                mism[column] = {"paper": paper, "computed": computed,
                                "documented": _documented(n, row, column, computed)}
        out.append(RowComparison(VALUE_MISMATCH if mism else MATCH, row, cls, mism))
    for c in classes:
        if c.key not in matched:
            out.append(RowComparison(NOT_IN_PAPER, None, c))
    return ComparisonReport(n, True, out)


def paper_status(n: int, classes: list[SelfDualClass]) -> dict[tuple, str]:
    """Per-class status for output records: match, mismatch, absent or no-ref."""
    report = compare_with_paper(n, classes)
    status = {}
    for r in report.rows:
        if r.cls is None:
            continue
        status[r.cls.key] = {
            MATCH: "match", UNCOMPUTED: "match", VALUE_MISMATCH: "mismatch",
            NOT_IN_PAPER: "absent", NO_REFERENCE: "no-ref",
        }[r.status]
    return status


# --- generator-only references -----------------------------------------------------


@dataclass(frozen=True)
class GeneratorCheck:
    n: int
    generator: PolyF4
    divides: bool
    self_reciprocal: bool
    found: bool  # equals f or g of some class, up to Frobenius conjugation
    exists: bool

    def to_json(self) -> dict:
        return {
            "n": self.n, "generator": str(self.generator), "divides_xn_minus_1": self.divides,
            "self_reciprocal": self.self_reciprocal, "found_among_classes": self.found,
            "selfdual_codes_exist": self.exists,
        }


def check_reference_generator(n: int) -> GeneratorCheck | None:
    text = reference_data()["generators"].get(str(n))
    if text is None:
        return None
    gen = as_poly(text)
    candidates = {gen, gen.frobenius()}
    classes = enumerate_selfdual(n, up_to_reversal=False)
    found = any(c.f in candidates for c in classes)
    return GeneratorCheck(
        n, gen, gen.divides(PolyF4.x_n_minus_1(n)), gen.reciprocal() == gen, found, bool(selfdual_exists(n))
    )


# --- output records ---------------------------------------------------------------


def class_record(cls: SelfDualClass, paper: str) -> dict:
    return {
        "n": cls.n, "h": str(cls.h), "f": str(cls.f), "g": str(cls.g),
        "dim_R": cls.dim_R, "dim_T": cls.dim_T,
        "d_R": cls.d_R, "d_T": cls.d_T, "min": cls.min_val, "paper": paper,
    }


def check_class(cls: SelfDualClass) -> None:
    """Raise if ``cls`` breaks a structural invariant."""
    code = cls.code
    if not code.is_self_dual_triple():
        raise TripleError(f"{cls} is not a self-dual triple")
    if not PolyF4((1, 1)).divides(cls.h):
        raise TripleError("x+1 does not divide h")
    if code.predicted_dual() != code:
        raise TripleError("predicted dual is not the code itself")
    if code.cardinality ** 2 != 16**cls.n:
        raise TripleError("|C|^2 != 16^n")
