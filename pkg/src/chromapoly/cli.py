"""Command-line front end.

File format: the first meaningful line holds the vertex count n; every
further non-empty line not starting with ``#`` is one edge, written as
whitespace-separated 1-based vertex labels.  Edge order in the file is the
default edge ordering.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from typing import Callable

from .chromatic import (
    MAX_COLOURINGS,
    chromatic_bruteforce,
    chromatic_deletion_contraction,
    chromatic_subset_expansion,
    interpolate_from_counts,
)
from .complete import (
    a1_complete_piecewise,
    a1_complete_recursive,
    a1_complete_sequence,
    zemyan_identity_residual,
)
from .core import Hypergraph, HypergraphError, IntPolynomial, SizeGuardError, bits, mask_of
from .recursion import coefficients_recursive
from .whitney import (
    BrokenFamily,
    EdgeOrdering,
    berge_cycle_broken_sets,
    delta_cycle_broken_sets,
    enumerate_broken_cyclic,
    nbc_counts,
    pruned_expansion_stats,
)

log = logging.getLogger("chromapoly")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3

ALGORITHMS = ("brute", "expand", "delcon", "whitney", "pruned", "recursion")
FAMILIES = ("maximal", "delta", "berge", "none")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_hypergraph(text: str) -> Hypergraph:
    n = None
    edges: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1:
                raise ParseError(lineno, "first line must hold the vertex count only")
            n = nums[0]
            if n < 1:
                raise ParseError(lineno, f"vertex count must be at least 1, got {n}")
            continue
        for v in nums:
            if not 1 <= v <= n:
                raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
        if len(set(nums)) != len(nums):
            raise ParseError(lineno, "edge repeats a vertex")
        if len(nums) < 2:
            raise ParseError(lineno, "edge cardinality < 2")
        e = mask_of(v - 1 for v in nums)
        if e in seen:
            raise ParseError(lineno, f"duplicate edge (first seen on line {seen[e]})")
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise ParseError(0, "empty input: missing vertex count")
    try:
        return Hypergraph(n, tuple(edges))
    except HypergraphError as exc:
        raise ParseError(0, str(exc)) from None


def format_hypergraph(H: Hypergraph) -> str:
    lines = [str(H.n)]
    lines += [" ".join(str(v + 1) for v in bits(e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, m: int) -> EdgeOrdering:
    if text in ("file", "identity"):
        return EdgeOrdering.identity(m)
    if text == "reverse":
        return EdgeOrdering.reverse(m)
    if text.startswith("random:"):
        return EdgeOrdering.random(m, random.Random(int(text.split(":", 1)[1])))
    raise ValueError(f"unknown ordering {text!r}")


def build_family(H: Hypergraph, name: str, order: EdgeOrdering, max_subsets: int | None) -> BrokenFamily:
    if name == "maximal":
        return enumerate_broken_cyclic(H, order, max_subsets)
    if name == "delta":
        return delta_cycle_broken_sets(H, order, max_subsets)
    if name == "berge":
        return berge_cycle_broken_sets(H, order)
    if name == "none":
        return BrokenFamily(order)
    raise ValueError(f"unknown family {name!r}")


def run_algorithm(H: Hypergraph, name: str, order: EdgeOrdering, family: str = "maximal",
                  max_subsets: int | None = None) -> tuple[IntPolynomial, dict]:
    """Coefficients of ``H`` by the named algorithm plus any extra report fields."""
    if name == "brute":
        return interpolate_from_counts(H), {}
    if name == "expand":
        return chromatic_subset_expansion(H, max_subsets), {"subsets_visited": 1 << H.m}
    if name == "delcon":
        return chromatic_deletion_contraction(H), {}
    if name == "whitney":
        return nbc_counts(H, order, max_subsets).signed, {}
    if name == "pruned":
        res = pruned_expansion_stats(H, build_family(H, family, order, max_subsets), max_subsets)
        return res.coefficients, {"subsets_visited": res.subsets_visited, "family": family}
    if name == "recursion":
        return coefficients_recursive(H), {}
    raise ValueError(f"unknown algorithm {name!r}")


def _read(path: str) -> Hypergraph:
    if path == "-":
        return parse_hypergraph(sys.stdin.read())
    with open(path) as fh:
        return parse_hypergraph(fh.read())


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def cmd_compute(args) -> int:
    H = _read(args.file)
    order = parse_ordering(args.ordering, H.m)
    if args.algorithm == "brute" and args.lam is not None:
        count = chromatic_bruteforce(H, args.lam)
        if args.plain:
            print(count)
        else:
            _emit({"n": H.n, "m": H.m, "algorithm": "brute", "lambda": args.lam, "count": str(count)})
        return EXIT_OK
    t0 = time.perf_counter()
    poly, extra = run_algorithm(H, args.algorithm, order, args.family, args.max_subsets)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.plain:
        print(" ".join(poly.as_strings()))
        return EXIT_OK
    out = {"n": H.n, "m": H.m, "algorithm": args.algorithm, "coefficients": poly.as_strings(),
           "elapsed_ms": round(elapsed, 3)}
    out.update(extra)
    _emit(out)
    return EXIT_OK


def compare_runs(H: Hypergraph, orderings: int = 5, seed: int = 0,
                 max_subsets: int | None = None) -> dict:
    """Run every applicable algorithm and report whether all coefficient vectors agree."""
    rng = random.Random(seed)
    runs: list[tuple[str, Callable[[], IntPolynomial]]] = []
    ident = EdgeOrdering.identity(H.m)
    runs.append(("expand", lambda: run_algorithm(H, "expand", ident, max_subsets=max_subsets)[0]))
    runs.append(("recursion", lambda: run_algorithm(H, "recursion", ident)[0]))
    skipped = []
    if H.n ** H.n <= MAX_COLOURINGS:
        runs.append(("brute", lambda: run_algorithm(H, "brute", ident)[0]))
    else:
        skipped.append("brute")
    if H.is_graph:
        runs.append(("delcon", lambda: run_algorithm(H, "delcon", ident)[0]))
    orders = [("file", ident)] + [
        (f"random{k}", EdgeOrdering.random(H.m, rng)) for k in range(orderings)
    ]
    for oname, order in orders:
        if H.is_graph:
            runs.append((f"whitney[{oname}]", lambda o=order: run_algorithm(H, "whitney", o, max_subsets=max_subsets)[0]))
        for fam in FAMILIES:
            runs.append((f"pruned[{fam},{oname}]",
                         lambda o=order, f=fam: run_algorithm(H, "pruned", o, f, max_subsets)[0]))

    results = {name: fn() for name, fn in runs}
    reference = results["expand"]
    mismatches = []
    for name, poly in results.items():
        if poly != reference:
            diff = [i for i in range(1, H.n + 1) if poly[i] != reference[i]]
            mismatches.append({"algorithm": name, "first_index": diff[0] if diff else None,
                               "expected": reference.as_strings(), "got": poly.as_strings()})
    return {
        "n": H.n,
        "m": H.m,
        "agree": not mismatches,
        "results": {name: poly.as_strings() for name, poly in results.items()},
        "mismatches": mismatches,
        "skipped": skipped,
    }


def cmd_compare(args) -> int:
    H = _read(args.file)
    report = compare_runs(H, args.orderings, args.seed, args.max_subsets)
    _emit(report)
    if not report["agree"]:
        log.error("algorithms disagree: %s", [m["algorithm"] for m in report["mismatches"]])
        return EXIT_MISMATCH
    return EXIT_OK


def complete_table(r: int, n_max: int) -> dict:
    if r < 2:
        raise ValueError("r must be at least 2")
    values = a1_complete_sequence(r, n_max)
    rows = []
    for n, val in enumerate(values, 1):
        pw = a1_complete_piecewise(r, n)
        rows.append({
            "n": n,
            "a1": str(val),
            "recursive_agrees": a1_complete_recursive(r, n) == val,
            "piecewise": None if pw is None else str(pw),
            "piecewise_agrees": None if pw is None else pw == val,
        })
    zem = {str(m): str(zemyan_identity_residual(r, m)) for m in range(1, n_max - r + 1)}
    return {"r": r, "n_max": n_max, "a1": [str(v) for v in values], "rows": rows, "zemyan_residuals": zem}


def cmd_complete(args) -> int:
    table = complete_table(args.r, args.n_max)
    if args.plain:
        print(" ".join(table["a1"]))
    else:
        _emit(table)
    ok = all(row["recursive_agrees"] and row["piecewise_agrees"] is not False for row in table["rows"])
    ok = ok and all(v == "0" for v in table["zemyan_residuals"].values())
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_eval(args) -> int:
    H = _read(args.file)
    order = parse_ordering(args.ordering, H.m)
    poly, _ = run_algorithm(H, args.algorithm, order, args.family, args.max_subsets)
    value = poly(args.lam)
    if args.plain:
        print(value)
    else:
        _emit({"n": H.n, "m": H.m, "algorithm": args.algorithm, "lambda": args.lam, "value": str(value)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromapoly", description="Exact chromatic polynomials of graphs and hypergraphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algorithm_default="expand"):
        p.add_argument("file", help="hypergraph file, or - for stdin")
        p.add_argument("--algorithm", choices=ALGORITHMS, default=algorithm_default)
        p.add_argument("--ordering", default="file", help="file | reverse | random:SEED")
        p.add_argument("--family", choices=FAMILIES, default="maximal", help="broken-cyclic family for --algorithm pruned")
        p.add_argument("--max-subsets", type=int, default=None, help="override the edge-subset size guard")
        p.add_argument("--plain", action="store_true", help="print bare values instead of JSON")

    p = sub.add_parser("compute", help="compute the chromatic polynomial")
    common(p)
    p.add_argument("--lambda", dest="lam", type=int, default=None, help="with --algorithm brute: count colourings")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="run all applicable algorithms and check agreement")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orderings", type=int, default=5, help="number of random edge orderings")
    p.add_argument("--max-subsets", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("complete", help="a_1 of r-complete hypergraphs")
    p.add_argument("r", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("eval", help="evaluate the chromatic polynomial at --lambda")
    common(p)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except SizeGuardError as exc:
        log.error("%s", exc)
        return EXIT_SIZE
    except (ParseError, HypergraphError, ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
