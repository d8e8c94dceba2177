"""Command-line interface.

    arithtutte tutte GRAPH.agf [--method subset|dc|both] [--json]
    arithtutte chromatic GRAPH.agf [--q Q] [--json]
    arithtutte flow GRAPH.agf [--q Q] [--json]
    arithtutte count-colorings GRAPH.agf --q Q [--cap N] [--json]
    arithtutte count-flows GRAPH.agf --q Q [--cap N] [--json]
    arithtutte verify GRAPH.agf [--cap N] [--json]

Errors exit with status 1 and a single ``error: <kind>: <detail>`` line on
stderr (or a JSON object with an ``error`` key under ``--json``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import brute
from .chroma import Admissibility, chromatic_poly, eval_counting, flow_poly
from .errors import ArithTutteError, CapExceededError
from .graph import (
    LabelledGraph,
    components,
    orient_default,
    read_graph,
)
from .matroid import DEFAULT_AXIOM_CAP, check_axioms, direct_sum, dual, matroid_of
from .poly import BiPoly, UniPoly
from .tutte import arithmetic_tutte_dc, arithmetic_tutte_subset, classical_tutte

VERIFY_ENUM_CAP = 10**7


class MethodMismatch(ArithTutteError):
    kind = "method-mismatch"


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithtutte",
        description="Arithmetic Tutte, chromatic and flow polynomials of labelled graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, q_required=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="input graph in AGF format")
        if q_required is not None:
            p.add_argument("--q", type=_positive_int, required=q_required)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--method", choices=("subset", "dc", "both"), default="both")
        p.add_argument("--cap", type=_positive_int, default=None, help="enumeration cap override")
        return p

    add("tutte", "arithmetic Tutte polynomial M(x, y)")
    add("chromatic", "arithmetic chromatic polynomial (optionally evaluated at --q)", False)
    add("flow", "arithmetic flow polynomial (optionally evaluated at --q)", False)
    add("count-colorings", "count arithmetic q-colorings by enumeration", True)
    add("count-flows", "count arithmetic q-flows by enumeration", True)
    add("verify", "run the full consistency battery on one graph")
    return parser


def _tutte(g: LabelledGraph, method: str) -> BiPoly:
    if method == "subset":
        return arithmetic_tutte_subset(matroid_of(g))
    if method == "dc":
        return arithmetic_tutte_dc(g)
    by_subset = arithmetic_tutte_subset(matroid_of(g))
    by_dc = arithmetic_tutte_dc(g)
    if by_subset != by_dc:
        raise MethodMismatch(f"subset gives {by_subset}, dc gives {by_dc}")
    return by_subset


def _terms(p: BiPoly) -> list[list[int]]:
    return [[a, b, c] for (a, b), c in sorted(p.terms.items(), key=lambda t: (-t[0][0], t[0][1]))]


def _specialization(g, args, make: Callable[..., UniPoly]):
    p = make(g, tutte=_tutte(g, args.method))
    result = {"polynomial": str(p), "coefficients": list(p.coeffs)}
    lines = [str(p)]
    if args.q is not None:
        value = eval_counting(p, g, args.q)
        result.update(q=args.q, value=value)
        lines.append(str(value))
    return result, lines


def run_verify(g: LabelledGraph, cap: int = VERIFY_ENUM_CAP) -> list[tuple[str, str, str]]:
    """Run every consistency check on ``g``.

    Returns (status, name, detail) triples with status PASS, FAIL or SKIP.
    """
    out = []

    def record(name, ok, detail=""):
        out.append(("PASS" if ok else "FAIL", name, detail))

    m = matroid_of(g)
    if m.ground_size <= DEFAULT_AXIOM_CAP:
        report = check_axioms(m)
        record("axioms", report.passed,
               "" if report.passed else f"{len(report.violations)} violations, first {report.violations[0]}")
    else:
        out.append(("SKIP", "axioms", f"ground size {m.ground_size} > cap {DEFAULT_AXIOM_CAP}"))

    poly = arithmetic_tutte_subset(m)
    by_dc = arithmetic_tutte_dc(g)
    record("subset-vs-dc", poly == by_dc, f"subset={poly} dc={by_dc}")

    record("duality", arithmetic_tutte_subset(dual(m)) == poly.swap())

    parts = components(g)
    product = BiPoly.constant(1)
    summed = None
    for part in parts:
        pm = matroid_of(part)
        product = product * arithmetic_tutte_subset(pm)
        summed = pm if summed is None else direct_sum(summed, pm)
    # the direct sum lists edges component by component
    regrouped = matroid_of(LabelledGraph(g.vertices, tuple(e for part in parts for e in part.edges)))
    record("direct-sum", product == poly and summed == regrouped, f"{len(parts)} components")

    og = orient_default(g)
    flips_ok = all(
        arithmetic_tutte_subset(matroid_of(og.flipped(i))) == poly for i in range(len(g.edges))
    )
    record("orientation", flips_ok)

    chi = chromatic_poly(g, tutte=poly)
    chi_star = flow_poly(g, tutte=poly)
    lcm = Admissibility.of(g).lcm_labels
    n_vertices, n_edges = len(g.vertices), len(g.edges)
    for q in (lcm, 2 * lcm):
        if q**n_vertices <= cap:
            count = brute.count_colorings(g, q, cap)
            record(f"colorings q={q}", count == chi(q), f"brute={count} poly={chi(q)}")
        else:
            out.append(("SKIP", f"colorings q={q}", f"q^|V|={q**n_vertices} > cap {cap}"))
        if q**n_edges <= cap:
            count = brute.count_flows(og, q, cap)
            record(f"flows q={q}", count == chi_star(q), f"brute={count} poly={chi_star(q)}")
        else:
            out.append(("SKIP", f"flows q={q}", f"q^|E|={q**n_edges} > cap {cap}"))

    if not g.dotted and all(e.label == 1 for e in g.edges):
        record("classical-tutte", classical_tutte(m) == poly)
    return out


def _graph_summary(g: LabelledGraph) -> dict:
    return {"v": len(g.vertices), "r": len(g.regular), "d": len(g.dotted)}


def run(args: argparse.Namespace) -> tuple[int, dict, list[str]]:
    """Execute a parsed command; returns (exit status, JSON payload, text lines)."""
    g = read_graph(args.graph)
    payload = {"command": args.command, "graph": _graph_summary(g), "method": None}
    cap = args.cap if args.cap is not None else brute.DEFAULT_ENUM_CAP
    status = 0
    if args.command == "tutte":
        p = _tutte(g, args.method)
        payload["method"] = args.method
        payload["result"] = {"polynomial": str(p), "terms": _terms(p)}
        if args.method == "both":
            # reaching here means the two methods agreed
            payload["result"]["by_method"] = {"subset": str(p), "dc": str(p)}
        lines = [str(p)]
    elif args.command in ("chromatic", "flow"):
        make = chromatic_poly if args.command == "chromatic" else flow_poly
        payload["method"] = args.method
        payload["result"], lines = _specialization(g, args, make)
    elif args.command == "count-colorings":
        n = brute.count_colorings(g, args.q, cap)
        payload["result"] = {"q": args.q, "count": n}
        lines = [str(n)]
    elif args.command == "count-flows":
        n = brute.count_flows(orient_default(g), args.q, cap)
        payload["result"] = {"q": args.q, "count": n}
        lines = [str(n)]
    else:
        checks = run_verify(g, args.cap if args.cap is not None else VERIFY_ENUM_CAP)
        failed = [c for c in checks if c[0] == "FAIL"]
        payload["result"] = {
            "passed": not failed,
            "checks": [{"status": s, "name": n, "detail": d} for s, n, d in checks],
        }
        lines = [f"{s} {n}" + (f" ({d})" if d and s != "PASS" else "") for s, n, d in checks]
        lines.append("verify: ok" if not failed else f"verify: {len(failed)} check(s) failed")
        status = 1 if failed else 0
    return status, payload, lines


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, payload, lines = run(args)
    except (ArithTutteError, OSError) as exc:
        kind = getattr(exc, "kind", "io-error") if isinstance(exc, ArithTutteError) else "io-error"
        if isinstance(exc, CapExceededError):
            detail = f"{exc} (L={_safe_lcm(args.graph)})"
        else:
            detail = str(exc)
        if args.json:
            print(json.dumps({"command": args.command, "error": kind, "detail": detail}))
        else:
            print(f"error: {kind}: {detail}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))
    return status


def _safe_lcm(path) -> int | str:
    try:
        return Admissibility.of(read_graph(path)).lcm_labels
    except (ArithTutteError, OSError):
        return "?"


if __name__ == "__main__":
    sys.exit(main())
