"""Command-line entry point: ``m2codes <subcommand> ...``.

Exit codes: 0 success, 2 precondition violation, 3 budget refusal,
4 unexplained mismatch against the reference tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import _engine
from ._engine import BudgetExceeded
from .acode import ACyclicCode, audit_claims
from .bachoc import (
    BachocEnumerator,
    bachoc_image,
    bachoc_weight_enumerator,
    bwe_macwilliams,
    doubled_cyclic_image,
)
from .classify import (
    check_reference_generator,
    compare_with_paper,
    compute_distances,
    enumerate_selfdual,
    class_record,
    paper_status,
)
from .factor import factorize_xn_minus_1, order_of_4, selfdual_exists
from .poly import as_poly
from .qcode import (
    QCyclicCode,
    WeightEnumerator,
    is_formally_self_dual,
    macwilliams_transform,
    min_distance,
    weight_enumerator,
)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

INTERACTIVE_CAP = 14
SLOW_CAP = 16


def _odd(text: str) -> int:
    n = int(text)
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(f"n must be a positive odd integer, got {n}")
    return n


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    return SLOW_CAP if args.slow else INTERACTIVE_CAP


def _emit(args, payload, text: str) -> None:
    out = json.dumps(payload, indent=2) + "\n" if args.json else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# --- subcommands -------------------------------------------------------------------


def cmd_factor(args) -> int:
    fac = factorize_xn_minus_1(args.n)
    verdict = selfdual_exists(args.n)
    payload = {
        "schema": "m2codes.factor/1",
        "n": args.n,
        "order_of_4": order_of_4(args.n),
        "field_modulus": str(fac.field_modulus),
        "selfdual_exists": verdict.exists,
        "factors": [
            {
                "representative": it.representative,
                "coset": list(it.coset.members),
                "factor": str(it.factor),
                "partner": it.partner,
            }
            for it in fac.items
        ],
    }
    lines = [f"x^{args.n}-1 over GF(4): {len(fac.items)} irreducible factors"]
    for it in fac.items:
        lines.append(f"  {it.representative:>3}  {str(it.factor):<40} partner {it.partner}  coset {list(it.coset.members)}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def _code_from_args(args) -> QCyclicCode:
    return QCyclicCode(args.n, as_poly(args.gen))


def cmd_distance(args) -> int:
    code = _code_from_args(args)
    d = min_distance(code, cap_exponent=_cap(args), partitions=args.partitions, method=args.method)
    payload = {"schema": "m2codes.distance/1", "n": args.n, "gen": str(code.gen), "k": code.k, "d": d}
    _emit(args, payload, f"[{args.n}, {code.k}, {d}]\n")
    return EXIT_OK


def _we_text(we: WeightEnumerator) -> str:
    return "".join(f"{w}\t{c}\n" for w, c in we.as_dict().items())


def cmd_wenum(args) -> int:
    we = weight_enumerator(_code_from_args(args), cap_exponent=_cap(args), partitions=args.partitions)
    _emit(args, {"schema": "m2codes.wenum/1", **we.to_json()}, _we_text(we))
    return EXIT_OK


def cmd_macwilliams(args) -> int:
    with open(args.json_file) as fh:
        data = json.load(fh)
    if any("," in k for k in data.get("counts", {})):
        bwe = BachocEnumerator.from_json(data)
        out = bwe_macwilliams(bwe)
        payload = {"schema": "m2codes.bwe/1", **out.to_json()}
        if args.check_fsd:
            payload["fixed_point"] = out == bwe
        text = "".join(f"{a},{b}\t{c}\n" for (a, b), c in out.counts)
    else:
        we = WeightEnumerator.from_json(data)
        out = macwilliams_transform(we)
        payload = {"schema": "m2codes.wenum/1", **out.to_json()}
        if args.check_fsd:
            payload["fixed_point"] = is_formally_self_dual(we)
        text = _we_text(out)
    if args.check_fsd:
        text += f"fixed point: {payload['fixed_point']}\n"
    _emit(args, payload, text)
    return EXIT_OK


_CLASS_COLUMNS = ("n", "h", "f", "g", "dim_R", "dim_T", "d_R", "d_T", "min", "paper")


def cmd_classify(args) -> int:
    if args.json:
        args.format = "json"
    n = args.n
    verdict = selfdual_exists(n)
    classes = enumerate_selfdual(n, up_to_reversal=not args.all)
    if not verdict.exists:
        why = (
            f"4^{verdict.minus_one_exponent} = -1 (mod {n})"
            if verdict.minus_one_exponent is not None
            else "every cyclotomic coset is closed under negation"
        )
        print(f"no nontrivial self-dual cyclic codes of length {n}: {why}", file=sys.stderr)
    if args.distances:
        classes = compute_distances(classes, cap_exponent=_cap(args), partitions=args.partitions)
    canonical = [c for c in classes if not c.reversal_partner]
    status = paper_status(n, canonical)
    records = [
        class_record(c, status.get((c.reversed() if c.reversal_partner else c).key, "no-ref"))
        for c in classes
    ]
    payload: dict = {
        "schema": "m2codes.classify/1",
        "n": n,
        "up_to_reversal": not args.all,
        "selfdual_exists": verdict.exists,
        "classes": records,
    }
    code = EXIT_OK
    if args.compare:
        report = compare_with_paper(n, canonical)
        payload["comparison"] = report.to_json()
        gen = check_reference_generator(n)
        if gen is not None:
            payload["reference_generator"] = gen.to_json()
        if report.unexplained_mismatches:
            code = EXIT_MISMATCH
            for r in report.unexplained_mismatches:
                print(f"VALUE-MISMATCH h={r.row.h_label} f={r.row.f_label}: {r.mismatches}", file=sys.stderr)
    args.json = args.format == "json"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_CLASS_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: "" if r[k] is None else r[k] for k in _CLASS_COLUMNS})
        text = buf.getvalue()
    else:
        text = _classify_table(records)
        if args.compare:
            s = payload["comparison"]["summary"]
            text += "comparison: " + ", ".join(f"{k} {v}" for k, v in s.items() if v) + "\n"
    _emit(args, payload, text)
    return code


def _classify_table(records: list[dict]) -> str:
    if not records:
        return "(no classes)\n"
    rows = [[("-" if r[k] is None else str(r[k])) for k in _CLASS_COLUMNS] for r in records]
    widths = [max(len(k), *(len(row[j]) for row in rows)) for j, k in enumerate(_CLASS_COLUMNS)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join([fmt.format(*_CLASS_COLUMNS)] + [fmt.format(*row) for row in rows]) + "\n"


def _acode_from_args(args) -> ACyclicCode:
    return ACyclicCode.from_f_h(args.n, as_poly(args.f), as_poly(args.h))


def cmd_audit(args) -> int:
    report = audit_claims(_acode_from_args(args), scope=args.scope)
    lines = [f"{c.verdict:<5} {c.claim}" for c in report.claims]
    _emit(args, report.to_json(), "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_bachoc(args) -> int:
    code = _acode_from_args(args)
    payload: dict = {
        "schema": "m2codes.bachoc/1",
        "instance": {"n": code.n, "f": str(code.f), "g": str(code.g), "h": str(code.h)},
    }
    lines = []
    if args.mode == "image":
        img = bachoc_image(code)
        payload["image"] = {"length": img.n, "k": img.k, "rows": ["".join(map(str, r)) for r in img.rows]}
        lines += [f"phi(C): [{img.n}, {img.k}]"] + ["  " + "".join(map(str, r)) for r in img.rows]
    elif args.mode == "doubled":
        dbl = doubled_cyclic_image(code)
        payload["doubled"] = {"length": dbl.n, "generator": str(dbl.gen), "k": dbl.k}
        lines.append(f"doubled cyclic code: length {dbl.n}, generator {dbl.gen}")
    else:
        bwe = bachoc_weight_enumerator(code, cap_exponent=_cap(args), partitions=args.partitions)
        payload["bwe"] = bwe.to_json()
        lines += [f"{a},{b}\t{c}" for (a, b), c in bwe.counts]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--output", "-o", help="write output to this file")
    common.add_argument("--cap", type=_positive, help="enumeration budget exponent E (at most 4^E words)")
    common.add_argument("--slow", action="store_true", help=f"raise the default budget to E={SLOW_CAP}")
    common.add_argument(
        "--partitions", type=_positive,
        help=f"work partitions for the enumeration engine (default ${_engine.PARTITIONS_ENV} or 1)",
    )

    p = argparse.ArgumentParser(prog="m2codes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", parents=[common], help="factor x^n - 1 over GF(4)")
    s.add_argument("--n", type=_odd, required=True)
    s.set_defaults(func=cmd_factor)

    for name, func, helptext in (
        ("distance", cmd_distance, "minimum distance of a quaternary cyclic code"),
        ("wenum", cmd_wenum, "weight enumerator of a quaternary cyclic code"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--n", type=_odd, required=True)
        s.add_argument("--gen", required=True, help="generator polynomial dividing x^n - 1")
        if name == "distance":
            s.add_argument("--method", choices=("auto", "direct", "dual"), default="auto")
        s.set_defaults(func=func)

    s = sub.add_parser("macwilliams", parents=[common], help="MacWilliams transform of an enumerator file")
    s.add_argument("--json-file", required=True)
    s.add_argument("--check-fsd", action="store_true", help="report whether the input is a fixed point")
    s.set_defaults(func=cmd_macwilliams)

    s = sub.add_parser("classify", parents=[common], help="self-dual cyclic codes over M2(F2)")
    s.add_argument("--n", type=_odd, required=True)
    group = s.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="list both members of each reversal pair")
    group.add_argument("--up-to-reversal", action="store_true", help="one class per reversal pair (default)")
    s.add_argument("--distances", action="store_true")
    s.add_argument("--compare", action="store_true", help="compare with the bundled reference tables")
    s.add_argument("--format", choices=("table", "csv", "json"), default="table")
    s.set_defaults(func=cmd_classify)

    for name, func, helptext in (
        ("audit", cmd_audit, "check structural claims on one code"),
        ("bachoc", cmd_bachoc, "Bachoc image, enumerator or doubled cyclic code"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--n", type=_odd, required=True)
        s.add_argument("--f", required=True)
        s.add_argument("--h", required=True)
        if name == "audit":
            s.add_argument("--scope", choices=("full", "fast"), default="full")
        else:
            mode = s.add_mutually_exclusive_group()
            mode.add_argument("--image", dest="mode", action="store_const", const="image")
            mode.add_argument("--bwe", dest="mode", action="store_const", const="bwe")
            mode.add_argument("--doubled", dest="mode", action="store_const", const="doubled")
        s.set_defaults(func=func)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, which is also our precondition code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
