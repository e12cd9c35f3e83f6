"""Command-line front end: every library operation behind one subcommand.

Exit codes: 0 success, 2 usage error, 3 domain error (bad value, non-prime
input, malformed brackets, invalid pair fixture), 4 prime-cap overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, bijection, forests, pairing, scans
from .errors import CapExceeded, MatulaError, NotPrime, ParseError
from .primes import DEFAULT_CAP, PrimeTable

_SCAN_NAMES = (
    "pan-apn",
    "fusion",
    "mrd",
    "sousselier",
    "three-n",
    "cut-decrease",
    "tuple-width",
    "nap",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matula",
        description="Rooted-forest arithmetic on the positive integers.",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        metavar="N",
        help="hard cap for sieved primes (default 2**32)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_arg(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("arborify", help="forest of an integer, as brackets")
    p.add_argument("n", type=int)
    fmt_arg(p, ("text", "json", "dot"))

    p = sub.add_parser("number-of", help="integer of a bracket forest")
    p.add_argument("brackets")

    p = sub.add_parser("stats", help="vertex/edge/leaf/factor/degree counts")
    p.add_argument("n", type=int)
    fmt_arg(p)

    p = sub.add_parser("degree-list", help="all integers of a given degree")
    p.add_argument("m", type=int)
    fmt_arg(p)

    p = sub.add_parser("leaf-class", help="integers with a given leaf count")
    p.add_argument("leaves", type=int)
    p.add_argument("--max", type=int, required=True, metavar="N")
    fmt_arg(p)

    p = sub.add_parser("butcher", help="graft prime P onto the root of prime Q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("fuse", help="merge the roots of two primes")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("cuts", help="all single-edge cuts of a prime")
    p.add_argument("p", type=int)
    p.add_argument("--trace", action="store_true", help="show descent chains")
    fmt_arg(p)

    p = sub.add_parser("table", help="n<TAB>brackets for a range of integers")
    p.add_argument("--from", dest="lo", type=int, default=1, metavar="A")
    p.add_argument("--to", dest="hi", type=int, required=True, metavar="B")

    p = sub.add_parser("ratio-table", help="exact p_k p_l / p_(kl) rectangle")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    fmt_arg(p)

    p = sub.add_parser("scan", help="exhaustive inequality scans (JSON output)")
    p.add_argument("which", choices=_SCAN_NAMES)
    p.add_argument("--max", type=int, metavar="N", help="main range bound")
    p.add_argument("--max-a", type=int, metavar="A", help="pan-apn: bound for a")
    p.add_argument("--max-n", type=int, metavar="N", help="pan-apn/fusion: bound for n")
    p.add_argument("--max-m", type=int, metavar="M", help="fusion: bound for m")
    p.add_argument("--timings", action="store_true", help="include elapsed_ms")

    p = sub.add_parser("constellation", help="minimal admissible k-tuple width")
    p.add_argument("k", type=int)
    fmt_arg(p)

    p = sub.add_parser("summatory", help="Mertens/Liouville partial sum")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=pairing.MODES, default=pairing.LIOUVILLE)

    p = sub.add_parser("partners", help="one-move partners of an integer")
    p.add_argument("k", type=int)
    p.add_argument("--mode", choices=pairing.MODES, default=pairing.LIOUVILLE)
    fmt_arg(p)

    p = sub.add_parser("pair", help="greedy opposite-sign pairing of 1..N")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=pairing.MODES, default=pairing.LIOUVILLE)
    p.add_argument("--policy", choices=pairing.POLICIES, default="largest")
    fmt_arg(p)

    p = sub.add_parser("validate-pairs", help="check a hand-written pair list")
    p.add_argument("file")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--mode", choices=pairing.MODES, default=pairing.LIOUVILLE)
    fmt_arg(p)

    return parser


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, separators=(", ", ": ")))


def _run(args: argparse.Namespace) -> int:
    table = PrimeTable(cap=args.cap)
    cmd = args.command

    if cmd == "arborify":
        forest = bijection.arborify(args.n, table)
        if args.format == "dot":
            print(forests.render(forest, "dot"))
        elif args.format == "json":
            _emit({"n": args.n, "forest": forests.print_forest(forest)})
        else:
            print(forests.print_forest(forest))

    elif cmd == "number-of":
        print(bijection.number_of(forests.parse_forest(args.brackets), table))

    elif cmd == "stats":
        st = bijection.stats_of(args.n, table)
        walked = forests.stats(bijection.arborify(args.n, table))
        if (st.vertices, st.edges, st.leaves) != tuple(walked):
            raise MatulaError(f"statistic paths disagree for {args.n}")
        doc = {
            "n": args.n,
            "vertices": st.vertices,
            "edges": st.edges,
            "leaves": st.leaves,
            "factors": st.factors,
            "degree": st.degree,
        }
        if args.format == "json":
            _emit(doc)
        else:
            print(
                "vertices={vertices} edges={edges} leaves={leaves} "
                "factors={factors} degree={degree}".format(**doc)
            )

    elif cmd == "degree-list":
        ns = bijection.integers_of_degree(args.m, table)
        if args.format == "json":
            _emit({"degree": args.m, "integers": ns})
        else:
            print(" ".join(map(str, ns)))

    elif cmd == "leaf-class":
        ns = bijection.integers_with_leaf_count(args.leaves, args.max, table)
        if args.format == "json":
            _emit({"leaves": args.leaves, "max": args.max, "integers": ns})
        else:
            print(" ".join(map(str, ns)))

    elif cmd == "butcher":
        print(algebra.butcher(args.p, args.q, table))

    elif cmd == "fuse":
        print(algebra.fuse(args.p, args.q, table))

    elif cmd == "cuts":
        pairs = sorted(algebra.cuts(args.p, table))
        chains = algebra.cut_chains(args.p, table) if args.trace else None
        if args.format == "json":
            doc: dict = {
                "prime": args.p,
                "cuts": [
                    {"detached": c.detached, "remaining": c.remaining, "product": c.product}
                    for c in pairs
                ],
            }
            if chains is not None:
                doc["chains"] = [list(chain) for _, chain in chains]
            _emit(doc)
        elif not pairs:
            print("no cuts")
        else:
            for c in pairs:
                print(f"{c.detached} {c.remaining} -> {c.product}")
            if chains:
                for _, chain in chains:
                    print("chain: " + " -> ".join(map(str, chain)))

    elif cmd == "table":
        if args.lo < 1 or args.hi < args.lo:
            raise ValueError(f"bad range: from {args.lo} to {args.hi}")
        for n in range(args.lo, args.hi + 1):
            print(f"{n}\t{forests.print_forest(bijection.arborify(n, table))}")

    elif cmd == "ratio-table":
        entries = scans.ratio_table(args.k, args.l, table)
        if args.format == "json":
            _emit(
                {
                    "k_max": args.k,
                    "l_max": args.l,
                    "entries": [
                        [k, l, f.numerator, f.denominator]
                        for (k, l), f in sorted(entries.items())
                    ],
                }
            )
        else:
            for (k, l), f in sorted(entries.items()):
                print(f"{k}\t{l}\t{f.numerator}/{f.denominator}")

    elif cmd == "scan":
        report = _run_scan(args, table)
        print(report.to_json(with_elapsed=args.timings))

    elif cmd == "constellation":
        w = scans.min_constellation_width(args.k, table)
        if args.format == "json":
            _emit({"k": w.k, "width": w.width, "pattern": list(w.pattern)})
        else:
            print(f"k={w.k} width={w.width} pattern={' '.join(map(str, w.pattern))}")

    elif cmd == "summatory":
        print(pairing.summatory(args.n, args.mode, table))

    elif cmd == "partners":
        ls = pairing.partner_candidates(args.k, args.mode, table)
        if args.format == "json":
            _emit({"k": args.k, "mode": args.mode, "partners": ls})
        else:
            print(" ".join(map(str, ls)) if ls else "no partners")

    elif cmd == "pair":
        report = pairing.pair_range(args.n, args.mode, args.policy, table)
        if args.format == "json":
            print(report.to_json())
        else:
            print(
                f"N={report.n} mode={report.mode} policy={report.policy} "
                f"pairs={len(report.pairs)} singletons={len(report.singletons)} "
                f"bound={report.bound} exact={report.exact}"
            )

    elif cmd == "validate-pairs":
        with open(args.file, "r", encoding="utf-8") as fh:
            pairs = pairing.load_pairs(fh.read())
        report = pairing.report_from_pairs(args.max, args.mode, pairs, table=table)
        errors = pairing.validation_errors(report, table)
        if args.format == "json":
            print(report.to_json())
        if errors:
            for e in errors:
                print(f"invalid: {e}", file=sys.stderr)
            return 3
        if args.format != "json":
            print(
                f"valid: {len(report.pairs)} pairs, "
                f"{len(report.singletons)} singletons, bound={report.bound}, "
                f"exact={report.exact}"
            )

    return 0


def _run_scan(args: argparse.Namespace, table: PrimeTable) -> scans.ScanReport:
    which = args.which
    if which == "pan-apn":
        a_max = args.max_a or args.max
        n_max = args.max_n or args.max
        if a_max is None or n_max is None:
            raise ValueError("pan-apn needs --max or --max-a/--max-n")
        return scans.scan_prime_rank_growth(a_max, n_max, table)
    if which == "fusion":
        m_max = args.max_m or args.max
        n_max = args.max_n or args.max
        if m_max is None or n_max is None:
            raise ValueError("fusion needs --max or --max-m/--max-n")
        return scans.scan_fusion(m_max, n_max, table)
    if args.max is None:
        raise ValueError(f"{which} needs --max")
    if which == "mrd":
        return scans.scan_prime_size_bounds(args.max, table)
    if which == "sousselier":
        return scans.scan_rank_ratio_monotone(args.max, table)
    if which == "cut-decrease":
        return scans.scan_cut_decrease(args.max, table)
    if which == "tuple-width":
        return scans.check_tuple_width_bound(args.max, table)
    if which == "nap":
        return scans.scan_nap_law(args.max, table)
    return scans.scan_three_n(args.max, table)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (NotPrime, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MatulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
