"""Command line front end.

Counting, q-polynomials, root-of-unity evaluation, streaming enumeration,
fixed-point counts, the structural bijections, and the verification sweep.
Forests travel as JSON objects like {"n": 8, "edges": [[3, 4], [5, 8]]}.

Exit status: 0 on success, 1 when a verification ran and found a mismatch,
2 for bad input or a size over the enumeration guard. The guard defaults to
n <= 12 and is raised through the NCF_SIEVE_MAX_N environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, bijections, enumeration, qpoly, sieving
from .forest import NonCrossingForest

ENV_MAX_N = "NCF_SIEVE_MAX_N"
DEFAULT_MAX_N = 12


def _size_guard(n: int) -> None:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        cap = DEFAULT_MAX_N
    else:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if n > cap:
        raise ValueError(
            f"n = {n} exceeds the enumeration guard ({cap}); "
            f"set {ENV_MAX_N} higher to allow it"
        )


def _read_forest(path: str) -> NonCrossingForest:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return NonCrossingForest.from_json(data)


def _cmd_count(args) -> int:
    count = qpoly.forest_count(args.n, args.k)
    brute = None
    if args.brute:
        _size_guard(args.n)
        brute = enumeration.count_forests(args.n, args.k)
    if args.json:
        out = {"n": args.n, "k": args.k, "count": count}
        if brute is not None:
            out["brute"] = brute
            out["agree"] = brute == count
        print(json.dumps(out))
    elif brute is None:
        print(count)
    else:
        tag = "ok" if brute == count else "MISMATCH"
        print(f"count={count} brute={brute} {tag}")
    return 0 if brute is None or brute == count else 1


def _cmd_qpoly(args) -> int:
    poly = qpoly.forest_count_poly(args.n, args.k)
    if args.json:
        print(json.dumps({"n": args.n, "k": args.k, "coeffs": list(poly.coeffs)}))
    elif args.pretty:
        print(poly.pretty())
    else:
        print(" ".join(str(c) for c in poly.coeffs))
    return 0


def _cmd_eval(args) -> int:
    pv = sieving.poly_eval(args.n, args.k, args.d)
    cf = sieving.closed_form_eval(args.n, args.k, args.d)
    agree = pv == cf
    if args.json:
        print(json.dumps(
            {"n": args.n, "k": args.k, "d": args.d,
             "poly": pv, "closed": cf, "agree": agree}
        ))
    elif agree:
        print(pv)
    else:
        print(f"poly={pv} closed={cf} MISMATCH")
    return 0 if agree else 1


def _cmd_enumerate(args) -> int:
    _size_guard(args.n)
    if args.invariant is None:
        stream = enumeration.enumerate_forests(args.n, args.k)
    else:
        stream = enumeration.enumerate_invariant(
            args.n, args.k, args.invariant, method=args.method
        )
    if args.count:
        print(sum(1 for _ in stream))
        return 0
    for i, forest in enumerate(stream):
        if args.dot:
            print(forest.to_dot(name=f"f{i}"))
        else:
            print(json.dumps(forest.to_json()))
    return 0


def _cmd_fixed(args) -> int:
    n, k, d = args.n, args.k, args.d
    method = args.method
    if method == "closed":
        count = sieving.closed_form_eval(n, k, d)
    elif method == "poly":
        count = sieving.poly_eval(n, k, d)
    elif method == "filter":
        _size_guard(n)
        count = sieving.fixed_count_brute(n, k, d)
    elif method == "bijection":
        _size_guard(n)
        count = sieving.fixed_count_bijection(n, k, d)
    else:
        _size_guard(n)
        count = sum(1 for _ in enumeration.enumerate_invariant(n, k, d, method="orbit"))
    if args.json:
        print(json.dumps({"n": n, "k": k, "d": d, "method": method, "count": count}))
    else:
        print(count)
    return 0


def _cmd_construct(args) -> int:
    phi = _read_forest(args.forest)
    if args.vertex is not None:
        if args.d is None:
            raise ValueError("--vertex needs --d (the fold multiplicity)")
        image = bijections.construct_periodic(phi, args.vertex, args.d)
    else:
        if args.d not in (None, 2):
            raise ValueError("--mark implies d = 2")
        edge = None
        if args.mark_edge is not None:
            edge = (args.mark_edge[0], args.mark_edge[1])
        image = bijections.construct_diameter(phi, bijections.Mark(args.mark, edge))
    print(json.dumps(image.to_json()))
    return 0


def _cmd_decompose(args) -> int:
    forest = _read_forest(args.forest)
    d = args.d
    k = forest.component_count()
    if d == 2 and k % 2 == 1:
        phi, mark = bijections.decompose_diameter(forest)
        out = {
            "kind": "diameter",
            "d": 2,
            "forest": phi.to_json(),
            "mark": {
                "vertex": mark.vertex,
                "edge": list(mark.edge) if mark.edge is not None else None,
            },
        }
    else:
        phi, v = bijections.decompose_periodic(forest, d)
        out = {"kind": "periodic", "d": d, "forest": phi.to_json(), "vertex": v}
    print(json.dumps(out))
    return 0


def _row_line(r: sieving.CspRow) -> str:
    parts = [
        f"n={r.n:<3d} k={r.k:<3d} d={r.d:<3d}",
        f"brute={r.brute} poly={r.poly} closed={r.closed}",
    ]
    if r.bijection is not None:
        parts.append(f"bijection={r.bijection}")
    parts.append("ok" if r.agree else "MISMATCH")
    return "  ".join(parts)


def _cmd_verify(args) -> int:
    if args.n is None and args.max_n is None:
        raise ValueError("give n, or --max-n for a sweep")
    if args.n is not None and args.max_n is not None:
        raise ValueError("give either n or --max-n, not both")
    if args.k is not None and args.n is None:
        raise ValueError("--k needs an explicit n")
    ns = [args.n] if args.n is not None else list(range(1, args.max_n + 1))
    for n in ns:
        _size_guard(n)
    bij = not args.no_bijection
    if args.k is not None:
        cells = [(args.n, args.k, bij)]
    else:
        cells = [(n, k, bij) for n in ns for k in range(1, n + 1)]
    if args.workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(sieving._verify_cell, cells))
    else:
        reports = [sieving._verify_cell(cell) for cell in cells]
    rows = [row for rep in reports for row in rep.rows]
    ok = all(row.agree for row in rows)
    if args.json:
        print(json.dumps(
            {"rows": [row.to_json_dict() for row in rows], "all_agree": ok},
            indent=2,
        ))
    else:
        for row in rows:
            print(_row_line(row))
        bad = sum(1 for row in rows if not row.agree)
        verdict = "all routes agree" if ok else f"{bad} MISMATCHES"
        print(f"{len(rows)} cells checked: {verdict}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncfsieve",
        description="Exact cyclic sieving checks for non-crossing forests.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of non-crossing forests")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--brute", action="store_true",
                   help="also count by enumeration and compare")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("qpoly", help="coefficients of the count q-polynomial")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--pretty", action="store_true", help="print as a polynomial")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_qpoly)

    p = sub.add_parser("eval", help="q-polynomial at a primitive d-th root of unity")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("enumerate", help="stream forests as JSON lines")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--invariant", type=int, metavar="D",
                   help="only forests fixed by the rotation of order D")
    p.add_argument("--method", choices=("orbit", "filter", "bijection"),
                   default="orbit", help="route for --invariant")
    p.add_argument("--dot", action="store_true", help="Graphviz output instead of JSON")
    p.add_argument("--count", action="store_true", help="print only how many")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("fixed", help="count forests fixed by a rotation")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--method",
                   choices=("orbit", "filter", "bijection", "closed", "poly"),
                   default="orbit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fixed)

    p = sub.add_parser(
        "construct",
        help="build an invariant forest from a small forest plus cut data",
    )
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--vertex", type=int, metavar="V",
                      help="good cut vertex (periodic gluing, needs --d)")
    mode.add_argument("--mark", type=int, metavar="V",
                      help="marked vertex (diameter folding, d = 2)")
    p.add_argument("--d", type=int, help="fold multiplicity for --vertex")
    p.add_argument("--mark-edge", type=int, nargs=2, metavar=("U", "W"),
                   help="marked edge incident to the --mark vertex")
    p.add_argument("forest", nargs="?", default="-",
                   help="forest JSON file, or - for stdin (default)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("decompose", help="cut an invariant forest back open")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("forest", nargs="?", default="-",
                   help="forest JSON file, or - for stdin (default)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="run every count route and compare")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int, help="sweep n = 1 .. MAX_N instead")
    p.add_argument("--no-bijection", action="store_true",
                   help="skip the bijection route")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
