"""Command line interface.

Subcommands: basis, perpetuants, dims, stroh, verify, qn, relations,
oracle.  Output is byte-deterministic for fixed arguments; --format json
emits the documented schemas.  Exit codes: 0 success, 1 when a
certificate reports a failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basis as basis_mod
from . import binforms, perpetua, symfunc


def _add_format(p):
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="perpetuants",
        description="Exact bases of U-invariants and perpetuants of binary forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="basis of the U-invariants S_{n,g}")
    p.add_argument("n", type=int)
    p.add_argument("g", type=int)
    p.add_argument(
        "--primitive",
        action="store_true",
        help="reduce each element to its primitive part for display",
    )
    _add_format(p)

    p = sub.add_parser("perpetuants", help="threshold-selected perpetuant basis")
    p.add_argument("n", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--primitive", action="store_true")
    _add_format(p)

    p = sub.add_parser("dims", help="dimension table of S_{n,g}")
    p.add_argument("n", type=int)
    p.add_argument("--gmax", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("stroh", help="perpetuant dimension table")
    p.add_argument("n", type=int)
    p.add_argument("--gmax", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("verify", help="complement certificates")
    p.add_argument("n", type=int)
    p.add_argument("g", type=int, nargs="?")
    p.add_argument("--gmax", type=int)
    _add_format(p)

    p = sub.add_parser("qn", help="the symmetric function q_n and its leading exponent")
    p.add_argument("n", type=int)
    _add_format(p)

    p = sub.add_parser("relations", help="classical degree-3/4 identities")
    _add_format(p)

    p = sub.add_parser("oracle", help="kernel-of-derivation basis with span comparison")
    p.add_argument("n", type=int)
    p.add_argument("g", type=int)
    _add_format(p)

    return parser


def _emit_elements(elements, args, out):
    if args.format == "json":
        items = []
        for u in elements:
            d = u.to_json_dict()
            if args.primitive:
                d["poly"] = u.poly.primitive_part().to_json_dict()
            items.append(d)
        out.write(json.dumps(items) + "\n")
    else:
        if not elements:
            out.write("(empty)\n")
        for u in elements:
            poly = u.poly.primitive_part() if args.primitive else u.poly
            out.write(f"U_{{{','.join(str(x) for x in u.k)}}} = {poly}\n")


def run(argv, out=sys.stdout, err=sys.stderr):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0

    if args.command == "basis":
        if args.n < 1 or args.g < 0:
            err.write("need n >= 1 and g >= 0\n")
            return 2
        _emit_elements(basis_mod.u_basis(args.n, args.g), args, out)
        return 0

    if args.command == "perpetuants":
        if args.n < 3:
            err.write(
                "perpetuants for n <= 2 are special: a0 for n = 1, the unique "
                "even-weight degree-2 invariant for n = 2; use n >= 3 here\n"
            )
            return 2
        _emit_elements(perpetua.perpetuant_basis(args.n, args.g), args, out)
        return 0

    if args.command == "dims":
        series = basis_mod.dim_series(args.n, args.gmax)
        return _emit_series(series, args, out)

    if args.command == "stroh":
        series = perpetua.stroh_series(args.n, args.gmax)
        return _emit_series(series, args, out)

    if args.command == "verify":
        if args.n < 3:
            err.write("certificates need n >= 3 (n <= 2 is handled in closed form)\n")
            return 2
        if args.g is None and args.gmax is None:
            err.write("give a weight g or --gmax\n")
            return 2
        weights = [args.g] if args.g is not None else range(args.gmax + 1)
        all_ok = True
        results = []
        for g in weights:
            cert = perpetua.verify_complement(args.n, g)
            results.append(cert)
            all_ok = all_ok and cert.direct_sum_ok
            if args.format == "text":
                out.write(str(cert) + "\n")
        if args.format == "json":
            if args.g is not None:
                out.write(results[0].to_json() + "\n")
            else:
                out.write(json.dumps([c.to_json_dict() for c in results]) + "\n")
        return 0 if all_ok else 1

    if args.command == "qn":
        if args.n < 3:
            err.write("q_n needs n >= 3\n")
            return 2
        q = symfunc.q_n(args.n)
        lead = symfunc.leading_exponent(q)
        if args.format == "json":
            out.write(
                json.dumps(
                    {
                        "n": args.n,
                        "leading_exponent": list(lead.as_tuple(args.n - 1, first_index=1)),
                        "poly": q.to_json_dict(),
                    }
                )
                + "\n"
            )
        else:
            out.write(f"q_{args.n} = {q}\n")
            out.write(f"leading exponent: {lead.as_tuple(args.n - 1, first_index=1)}\n")
        return 0

    if args.command == "relations":
        checks = []
        try:
            d = binforms.verify_s3()
            checks.append(("8*c2^3 + 9*c3^2 = a0^2*D", True, str(d)))
        except AssertionError as e:
            checks.append(("8*c2^3 + 9*c3^2 = a0^2*D", False, str(e)))
        try:
            b, c = binforms.verify_s4()
            checks.append(("2*c4 + c2^2 = a0^2*B", True, str(b)))
            checks.append(("6*c2*B - D = -a0*C", True, str(c)))
        except AssertionError as e:
            checks.append(("degree-4 relations", False, str(e)))
        report = binforms.discriminant_decomposable_check()
        checks.append(("D = 6*c2*B + a0*C", report.identity_holds, ""))
        checks.append(
            ("D decomposable in degree 4", report.in_limit_decomposables, "")
        )
        checks.append(
            (
                "D indecomposable over a0..a3",
                report.indecomposable_in_cubic_algebra,
                "",
            )
        )
        ok = all(passed for _, passed, _ in checks)
        if args.format == "json":
            out.write(
                json.dumps(
                    [
                        {"check": name, "ok": passed, "value": value}
                        for name, passed, value in checks
                    ]
                )
                + "\n"
            )
        else:
            for name, passed, value in checks:
                status = "PASS" if passed else "FAIL"
                suffix = f"  {value}" if value else ""
                out.write(f"{status}  {name}{suffix}\n")
        return 0 if ok else 1

    if args.command == "oracle":
        kernel = basis_mod.kernel_oracle(args.n, args.g)
        ub = basis_mod.u_basis(args.n, args.g)
        equal, ra, rb, ru = basis_mod.span_equal(
            [u.poly for u in ub], kernel
        )
        if args.format == "json":
            out.write(
                json.dumps(
                    {
                        "n": args.n,
                        "g": args.g,
                        "kernel": [p.to_json_dict() for p in kernel],
                        "rank_basis": ra,
                        "rank_kernel": rb,
                        "rank_union": ru,
                        "spans_equal": equal,
                    }
                )
                + "\n"
            )
        else:
            for p in kernel:
                out.write(f"{p}\n")
            out.write(
                f"ranks: basis={ra} kernel={rb} union={ru} "
                f"{'equal' if equal else 'DIFFER'}\n"
            )
        return 0 if equal else 1

    return 2


def _emit_series(series, args, out):
    if args.format == "json":
        out.write(
            json.dumps({"n": series.n, "coefficients": series.coefficients}) + "\n"
        )
    else:
        for g, c in enumerate(series.coefficients):
            out.write(f"{g}\t{c}\n")
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
