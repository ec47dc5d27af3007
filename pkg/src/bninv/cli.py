"""Command line front end: statistics, ranking, radix conversion, tables, checks."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .group import format_window, parse_window, sigma_decompose
from .mahonian import (
    DEFAULT_MAX_N,
    QPolynomial,
    check_enumeration_guard,
    insertion_sum_check,
    phi,
    poincare,
    poly_eval_at_one,
    poly_mul,
    q_bracket,
    verify_equidistribution,
)
from .radix import BnDigits, decode, encode
from .ranking import enumerate_group, group_order, rank, unrank
from .roots import inv_i_oracle, length_oracle
from .stats import (
    fmaj,
    insert_value,
    inv_i_closed,
    inv_total,
    inversion_table,
    maj_b,
    neg,
)

FORMATS = ("plain", "json", "csv")


def _write_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_stat(args) -> int:
    w = parse_window(args.window)
    table = inversion_table(w)
    exps = sigma_decompose(w)
    r = rank(w)
    fields = [
        ("n", w.n),
        ("window", format_window(w)),
        ("table", str(table)),
        ("inv", inv_total(w)),
        ("maj", maj_b(w)),
        ("neg", neg(w)),
        ("fmaj", fmaj(w)),
        ("sigma_exponents", ",".join(str(k) for k in exps.exponents)),
        ("rank", r),
    ]
    if args.format == "json":
        payload = dict(fields)
        payload["sigma_exponents"] = list(exps.exponents)
        print(json.dumps(payload))
    elif args.format == "csv":
        _write_csv([name for name, _ in fields], [[str(v) for _, v in fields]])
    else:
        for name, value in fields:
            print(f"{name}: {value}")
    return 0


def cmd_rank(args) -> int:
    w = parse_window(args.window)
    r = rank(w)
    if args.format == "json":
        print(json.dumps({"window": format_window(w), "rank": r}))
    else:
        print(r)
    return 0


def cmd_unrank(args) -> int:
    w = unrank(args.n, args.k)
    if args.format == "json":
        print(json.dumps({"n": args.n, "rank": args.k, "window": format_window(w)}))
    else:
        print(format_window(w))
    return 0


def cmd_radix_encode(args) -> int:
    digits = encode(args.value, args.n)
    if args.format == "json":
        print(
            json.dumps(
                {"value": args.value, "digits": str(digits), "places": list(digits.digits)}
            )
        )
    else:
        print(str(digits))
    return 0


def cmd_radix_decode(args) -> int:
    digits = BnDigits.parse(args.digits)
    value = decode(digits)
    if args.format == "json":
        print(json.dumps({"digits": str(digits), "value": value}))
    else:
        print(value)
    return 0


def table_rows(n: int, max_n: int = DEFAULT_MAX_N) -> list[tuple[str, str, str, str]]:
    """(rank, window, table, phi) text rows for the whole rank-n group."""
    check_enumeration_guard(n, max_n)
    rows = []
    for k, w in enumerate(enumerate_group(n), start=1):
        rows.append(
            (str(k), format_window(w), str(inversion_table(w)), format_window(phi(w)))
        )
    return rows


def cmd_table(args) -> int:
    rows = table_rows(args.n, args.max_n_guard)
    header = ("rank", "window", "table", "phi")
    if args.format == "json":
        payload = [
            {"rank": int(r), "window": w, "table": t, "phi": p} for r, w, t, p in rows
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _write_csv(header, rows)
    else:
        display = [
            (r, w.replace(",", " "), t, p.replace(",", " ")) for r, w, t, p in rows
        ]
        widths = [
            max(len(header[c]), max(len(row[c]) for row in display))
            for c in range(4)
        ]
        print(
            f"{header[0]:>{widths[0]}}  {header[1]:<{widths[1]}}  "
            f"{header[2]:<{widths[2]}}  {header[3]}"
        )
        for r, w, t, p in display:
            print(f"{r:>{widths[0]}}  {w:<{widths[1]}}  {t:<{widths[2]}}  {p}")
    return 0


def cmd_poincare(args) -> int:
    poly = poincare(args.n)
    if args.format == "json":
        print(
            json.dumps(
                {"n": args.n, "polynomial": str(poly), "coefficients": list(poly.coeffs)}
            )
        )
    elif args.format == "csv":
        _write_csv(
            ("exponent", "coefficient"),
            [(str(k), str(c)) for k, c in enumerate(poly.coeffs)],
        )
    else:
        print(str(poly))
    if args.plot:
        from .plotting import save_coefficient_figure

        save_coefficient_figure(
            args.plot,
            [("bracket product", poly)],
            f"rank-{args.n} signed permutations by length",
        )
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def cmd_phi(args) -> int:
    w = parse_window(args.window)
    image = phi(w)
    if args.format == "json":
        print(json.dumps({"window": format_window(w), "phi": format_window(image)}))
    else:
        print(format_window(image))
    return 0


def _check_oracle_agreement(n: int):
    name = "per-position counts: closed form equals the root-count oracle"
    count = 0
    for w in enumerate_group(n):
        count += 1
        total = 0
        for i in range(1, n + 1):
            closed = inv_i_closed(w, i)
            oracle = inv_i_oracle(w, i)
            if closed != oracle:
                detail = (
                    f"counterexample w={format_window(w)}, i={i}: "
                    f"closed {closed}, oracle {oracle}"
                )
                return (name, False, detail)
            total += closed
        if total != length_oracle(w):
            return (name, False, f"table sum mismatch at w={format_window(w)}")
    return (name, True, f"{count} elements, {n} positions each")


def _check_rank_round_trip(n: int):
    name = "unrank inverts rank across the whole group"
    for k, w in enumerate(enumerate_group(n), start=1):
        if rank(w) != k or unrank(n, k) != w:
            return (name, False, f"failure at rank {k} (window {format_window(w)})")
    return (name, True, f"{group_order(n)} ranks")


def _check_insertions(n: int):
    name = "insertion identities for both signs over all spaces"
    if n == 1:
        return (name, True, "vacuous at n=1")
    count = 0
    try:
        for pi in enumerate_group(n - 1):
            count += 1
            base = inv_total(pi)
            for space in range(n):
                plus = inv_total(insert_value(pi, n, space))
                minus = inv_total(insert_value(pi, -n, space))
                if plus != n - space - 1 + base or minus != n + space + base:
                    return (
                        name,
                        False,
                        f"counterexample pi={format_window(pi)}, space {space}",
                    )
            total = insertion_sum_check(pi)
            if total != poly_mul(q_bracket(2 * n), QPolynomial.monomial(base)):
                return (name, False, f"sum identity fails at pi={format_window(pi)}")
    except ArithmeticError as exc:
        return (name, False, str(exc))
    return (name, True, f"{count} lower-rank elements, {2 * n} insertions each")


def cmd_verify(args) -> int:
    n = args.n
    check_enumeration_guard(n, args.max_n_guard)
    report = verify_equidistribution(n, max_n=args.max_n_guard)
    checks = [
        _check_oracle_agreement(n),
        _check_rank_round_trip(n),
        (
            "inv and fmaj distributions equal the bracket product",
            report.distributions_match,
            f"{poly_eval_at_one(report.poincare_polynomial)} elements",
        ),
        _check_insertions(n),
        (
            "inv carried to fmaj pointwise by the table transport",
            report.transport_ok,
            report.counterexample or f"{group_order(n)} elements",
        ),
    ]
    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        payload = {
            "n": n,
            "passed": passed,
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in checks
            ],
            "inv_distribution": list(report.inv_distribution.coeffs),
            "fmaj_distribution": list(report.fmaj_distribution.coeffs),
            "poincare": list(report.poincare_polynomial.coeffs),
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _write_csv(
            ("check", "passed", "detail"),
            [(name, str(ok).lower(), detail) for name, ok, detail in checks],
        )
    else:
        print(f"inv distribution:  {report.inv_distribution}")
        print(f"fmaj distribution: {report.fmaj_distribution}")
        print(f"bracket product:   {report.poincare_polynomial}")
        for name, ok, detail in checks:
            print(f"[{'PASS' if ok else 'FAIL'}] {name} ({detail})")
        print(f"result: {'PASS' if passed else 'FAIL'} (n={n})")
    if args.plot:
        from .plotting import save_coefficient_figure

        save_coefficient_figure(
            args.plot,
            [
                ("inv", report.inv_distribution),
                ("fmaj", report.fmaj_distribution),
                ("bracket product", report.poincare_polynomial),
            ],
            f"rank-{n} statistic distributions",
        )
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0 if passed else 1


def _add_format(parser) -> None:
    parser.add_argument(
        "--format", choices=FORMATS, default="plain", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bninv",
        description="Statistics, ranking and mixed-radix numerals for signed permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    stat = sub.add_parser("stat", help="statistics of one window")
    stat.add_argument("window", help='comma-separated window, e.g. "2,-5,-3,-1,4"')
    _add_format(stat)
    stat.set_defaults(func=cmd_stat)

    rank_p = sub.add_parser("rank", help="rank of one window")
    rank_p.add_argument("window")
    _add_format(rank_p)
    rank_p.set_defaults(func=cmd_rank)

    unrank_p = sub.add_parser("unrank", help="window at a given rank")
    unrank_p.add_argument("n", type=int)
    unrank_p.add_argument("k", type=int, help="rank in [1, 2^n n!]")
    _add_format(unrank_p)
    unrank_p.set_defaults(func=cmd_unrank)

    radix = sub.add_parser("radix", help="mixed-radix numeral conversion")
    radix_sub = radix.add_subparsers(dest="radix_command", required=True)
    enc = radix_sub.add_parser("encode", help="integer to digit vector")
    enc.add_argument("value", type=int)
    enc.add_argument("--n", type=int, default=None, help="pad to exactly n digits")
    _add_format(enc)
    enc.set_defaults(func=cmd_radix_encode)
    dec = radix_sub.add_parser("decode", help="digit vector to integer")
    dec.add_argument("digits", help='colon-separated, most significant first, e.g. "3:2:1:1"')
    _add_format(dec)
    dec.set_defaults(func=cmd_radix_decode)

    table = sub.add_parser("table", help="rank/window/table/phi rows for a whole group")
    table.add_argument("n", type=int)
    table.add_argument(
        "--max-n-guard", type=int, default=DEFAULT_MAX_N,
        help="largest n the sweep will accept",
    )
    _add_format(table)
    table.set_defaults(func=cmd_table)

    poincare_p = sub.add_parser("poincare", help="bracket product [2]_q ... [2n]_q")
    poincare_p.add_argument("n", type=int)
    poincare_p.add_argument("--plot", help="also render the coefficients to this file")
    _add_format(poincare_p)
    poincare_p.set_defaults(func=cmd_poincare)

    phi_p = sub.add_parser("phi", help="image of a window under the table transport")
    phi_p.add_argument("window")
    _add_format(phi_p)
    phi_p.set_defaults(func=cmd_phi)

    verify = sub.add_parser("verify", help="exhaustive identity checks for one n")
    verify.add_argument("n", type=int)
    verify.add_argument(
        "--max-n-guard", type=int, default=DEFAULT_MAX_N,
        help="largest n the sweep will accept",
    )
    verify.add_argument("--plot", help="also render the distributions to this file")
    _add_format(verify)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
