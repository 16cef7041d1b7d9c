"""Command-line front end.

One subcommand per operation; --json emits exactly one JSON document on
stdout, human mode pretty-prints.  Exit status 2 for argument errors, 1 for
internal consistency failures (non-exact division), 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .counting import count_embeddings, n_w_polynomial, parse_support_spec
from .gamma import gamma_bruteforce, gamma_classes, gamma_polynomial
from .polyring import ExactDivisionError
from .rootsys import FAMILIES, MIN_RANK, build_diagram, parse_diagram_name
from .restriction import restrict, restrict_along
from .schubert import ConstantCache, equivariant_constant, inner_sum, ordinary_constant, set_disk_cache
from .support import automorphism_count, dynkin_support
from .weyl import canonical_reduced_word, from_word, permutation_to_element

CACHE_ENV = "SCHUBSUMS_CACHE_DIR"


def parse_element(diagram, text: str):
    """Parse "1,2,3,1" as a word; for type A, a one-line permutation like "3241"."""
    text = text.strip()
    if "," in text:
        return from_word(diagram, [int(x) for x in text.split(",") if x])
    if (
        diagram.family == "A"
        and len(text) == diagram.rank + 1
        and text.isdigit()
        and sorted(text) == [str(d) for d in range(1, diagram.rank + 2)]
    ):
        return permutation_to_element(diagram, [int(ch) for ch in text])
    if text in ("", "e", "id"):
        return from_word(diagram, [])
    return from_word(diagram, [int(text)])


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc))
    else:
        print(human)


def _activate_cache(args) -> None:
    directory = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    if directory:
        set_disk_cache(ConstantCache(directory))


def cmd_restrict(args) -> int:
    diagram = parse_diagram_name(args.diagram)
    v = parse_element(diagram, args.v)
    w = parse_element(diagram, args.w)
    poly = restrict(v, w)
    _emit(
        args,
        {"diagram": diagram.name, "restriction": poly.to_json_terms()},
        poly.pretty(),
    )
    return 0


def cmd_constant(args) -> int:
    diagram = parse_diagram_name(args.diagram)
    _activate_cache(args)
    u = parse_element(diagram, args.u)
    v = parse_element(diagram, args.v)
    w = parse_element(diagram, args.w)
    equivariant = equivariant_constant(u, v, w)
    ordinary = ordinary_constant(u, v, w)
    _emit(
        args,
        {
            "diagram": diagram.name,
            "equivariant": equivariant.to_json_terms(),
            "ordinary": ordinary,
        },
        f"equivariant: {equivariant.pretty()}\nordinary: {ordinary}",
    )
    return 0


def cmd_inner_sum(args) -> int:
    diagram = parse_diagram_name(args.diagram)
    _activate_cache(args)
    w = parse_element(diagram, args.w)
    value = inner_sum(w)
    _emit(args, {"diagram": diagram.name, "inner_sum": value}, str(value))
    return 0


def cmd_classes(args) -> int:
    classes = gamma_classes(args.family, args.k)
    if args.json:
        print(json.dumps({"family": args.family, "k": args.k, "classes": [c.to_json() for c in classes]}))
    else:
        for c in classes:
            word = ",".join(map(str, c.key[1])) or "e"
            print(
                f"{c.key[0]}:{word}  length={c.length}  support={c.profile}  "
                f"inner_sum={c.inner_sum}  automorphisms={c.automorphism_count}  "
                f"N(n)={c.n_polynomial.pretty()}"
            )
    return 0


def cmd_count(args) -> int:
    shapes = parse_support_spec(args.support)
    ambient = build_diagram(args.family, args.n)
    value = count_embeddings(shapes, ambient)
    _emit(
        args,
        {"family": args.family, "support": args.support, "n": args.n, "embeddings": value},
        str(value),
    )
    return 0


def cmd_nwpoly(args) -> int:
    letters = [int(x) for x in args.w.split(",") if x]
    rank = args.rank or max(max(letters, default=1), MIN_RANK[args.family])
    diagram = build_diagram(args.family, rank)
    w = from_word(diagram, letters)
    poly = n_w_polynomial(w)
    _emit(
        args,
        {"family": args.family, "w": letters, "n_polynomial": poly.to_json()},
        f"{poly.pretty()}  (valid for n >= {poly.threshold})",
    )
    return 0


def cmd_gamma(args) -> int:
    _activate_cache(args)
    result = gamma_polynomial(args.family, args.k)
    checks = []
    if args.check:
        lo, hi = args.check
        points = [n for n in range(lo, hi + 1) if n >= MIN_RANK[args.family]]
        if args.jobs > 1:
            from multiprocessing import Pool

            with Pool(args.jobs) as pool:
                values = pool.starmap(
                    gamma_bruteforce, [(args.family, args.k, n) for n in points]
                )
        else:
            values = [gamma_bruteforce(args.family, args.k, n) for n in points]
        for n, brute in zip(points, values):
            predicted = result.polynomial(n)
            if n >= result.threshold:
                status = "match" if predicted == brute else "MISMATCH"
            else:
                status = "below threshold (recorded)"
            checks.append(
                {"n": n, "bruteforce": brute, "polynomial": str(predicted), "status": status}
            )
    if args.json:
        doc = result.to_json()
        if checks:
            doc["checks"] = checks
        print(json.dumps(doc))
    else:
        print(f"gamma_{args.k}({args.family}, n) = {result.polynomial.pretty()}  (n >= {result.threshold})")
        for c in result.classes:
            word = ",".join(map(str, c.key[1])) or "e"
            print(
                f"  class {c.key[0]}:{word}  support={c.profile}  inner_sum={c.inner_sum}  "
                f"N(n)={c.n_polynomial.pretty()}"
            )
        for chk in checks:
            print(f"  n={chk['n']}: oracle={chk['bruteforce']} polynomial={chk['polynomial']} {chk['status']}")
    mismatched = any(c["status"] == "MISMATCH" for c in checks)
    return 1 if mismatched else 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return 0 if run_selftest() else 1


def _check_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) == 1:
        n = int(parts[0])
        return n, n
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    raise argparse.ArgumentTypeError(f"bad range {text!r}; expected e.g. 2..5")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubsums",
        description="Exact equivariant Schubert calculus for the classical Weyl groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("restrict", help="restriction polynomial of v at w")
    p.add_argument("--diagram", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    add_json(p)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("constant", help="equivariant and ordinary structure constant")
    p.add_argument("--diagram", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--cache-dir", help=f"constant cache directory (or ${CACHE_ENV})")
    add_json(p)
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("inner-sum", help="sum of ordinary constants below w")
    p.add_argument("--diagram", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--cache-dir")
    add_json(p)
    p.set_defaults(func=cmd_inner_sum)

    p = sub.add_parser("classes", help="equivalence classes of length k in the rank-2k group")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", required=True, type=int)
    add_json(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("count", help="embeddings of a support into the rank-n diagram")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--support", required=True, help='e.g. "A1+A2"')
    p.add_argument("--n", required=True, type=int)
    add_json(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("nwpoly", help="class-counting polynomial of an element")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--w", required=True, help="comma-separated word")
    p.add_argument("--rank", type=int, help="ambient rank (default: minimal)")
    add_json(p)
    p.set_defaults(func=cmd_nwpoly)

    p = sub.add_parser("gamma", help="structure-constant sum polynomial")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--check", type=_check_range, help="oracle-check range, e.g. 2..5")
    p.add_argument("--jobs", type=int, default=1, help="parallel oracle workers")
    p.add_argument("--cache-dir")
    add_json(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("selftest", help="run the built-in property suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExactDivisionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    raise SystemExit(main())
