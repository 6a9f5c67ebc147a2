"""Command-line front end.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
All output is deterministic; --json writes the machine-readable form with
a top-level schema marker.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ToricrankError
from .graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_even_cycles,
    is_bipartite,
    parse_graph,
)
from .ideals import (
    edge_variable_name,
    enumerate_fiber,
    fiber_graph,
    format_monomial,
    minimal_generating_set,
    sample_multiple_divisibility,
    _fibers_of_total_degree,
)
from .invariants import (
    REPORT_CIRCUIT_CAP,
    extremality_check,
    kn_expected,
    report,
)
from .linalg import circuits_bruteforce
from .simplicial import (
    build_delta,
    classify_component,
    delta_components,
    delta_value,
)

SCHEMA = 1


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="edge-list file (see README)")
    p.add_argument("--kn", type=int, metavar="N", help="complete graph on N vertices")
    p.add_argument(
        "--kmn", type=int, nargs=2, metavar=("A", "B"), help="complete bipartite graph"
    )
    p.add_argument("--cycle", type=int, metavar="L", help="cycle graph of length L")


def _load_graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Graph:
    picks = [
        args.file is not None,
        args.kn is not None,
        args.kmn is not None,
        args.cycle is not None,
    ]
    if sum(picks) != 1:
        parser.error("give exactly one of <file>, --kn, --kmn, --cycle")
    if args.kn is not None:
        return complete_graph(args.kn)
    if args.kmn is not None:
        return complete_bipartite_graph(*args.kmn)
    if args.cycle is not None:
        return cycle_graph(args.cycle)
    return parse_graph(Path(args.file).read_text())


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _parse_j(text: str, dim: int) -> set[int]:
    if text.strip().lower() == "omega":
        return set(range(max(dim, 0) + 1))
    try:
        dims = {int(x) for x in text.split(",") if x.strip() != ""}
    except ValueError:
        raise ToricrankError(f"bad dimension set {text!r}; use e.g. 0,1 or omega")
    if not dims:
        raise ToricrankError("dimension set must be nonempty")
    return dims


def _cmd_analyze(args, parser) -> int:
    g = _load_graph(args, parser)
    rep = report(g, degree_bound=args.max_degree)
    for line in rep.text_lines():
        print(line)
    _write_json(args.json, rep.to_json_dict())
    return 0


def _cmd_circuits(args, parser) -> int:
    g = _load_graph(args, parser)
    circuits = circuits_bruteforce(g.incidence_columns(), cap=REPORT_CIRCUIT_CAP)
    print(f"circuits: {len(circuits)}")
    rows = []
    for cv in circuits:
        plus = [0] * g.m
        minus = [0] * g.m
        for j, x in enumerate(cv.vector):
            if x > 0:
                plus[j] = x
            elif x < 0:
                minus[j] = -x
        text = f"{format_monomial(g, plus)} - {format_monomial(g, minus)}"
        rows.append({"vector": list(cv.vector), "text": text})
        print(text)
    _write_json(args.json, {"schema": SCHEMA, "circuits": rows})
    return 0


def _cmd_cycles(args, parser) -> int:
    g = _load_graph(args, parser)
    cycles = enumerate_even_cycles(g, max_length=args.max_cycle_len)
    print(f"even cycles: {len(cycles)}")
    rows = []
    for c in cycles:
        verts = "-".join(str(v) for v in c.vertices)
        labels = ",".join(edge_variable_name(g, j) for j in c.edge_indices)
        rows.append(
            {"vertices": list(c.vertices), "edges": [j + 1 for j in c.edge_indices]}
        )
        print(f"length {len(c)}: {verts} ({labels})")
    _write_json(args.json, {"schema": SCHEMA, "cycles": rows})
    return 0


def _cmd_complex(args, parser) -> int:
    g = _load_graph(args, parser)
    delta = build_delta(g, circuit_cap=REPORT_CIRCUIT_CAP)
    j_texts = args.j if args.j else ["0,1", "omega"]
    table = {}
    for text in j_texts:
        dims = _parse_j(text, delta.dim)
        if delta.vertices:
            value, matching = delta_value(delta, dims)
            witness = [list(f) for f in matching.faces]
        else:
            value, witness = 0, []
        table[text] = {"value": value, "witness": witness}
    components = [
        {
            "vertices": [list(s) for s in _original_indices(delta, comp)],
            "kind": classify_component(comp).value,
        }
        for comp in delta_components(delta)
    ]
    payload = {
        "schema": SCHEMA,
        "vertices": [[j + 1 for j in s] for s in delta.vertices],
        "faces": [list(f) for f in delta.faces],
        "components": components,
        "delta": table,
    }
    print(json.dumps(payload, indent=2))
    _write_json(args.json, payload)
    return 0


def _original_indices(delta, comp):
    # Components inherit support sets verbatim; report them 1-based.
    return [tuple(j + 1 for j in s) for s in comp.vertices]


def _cmd_fibers(args, parser) -> int:
    g = _load_graph(args, parser)
    if not args.degree:
        parser.error("fibers requires --degree")
    try:
        b = tuple(int(x) for x in args.degree.split(","))
    except ValueError:
        raise ToricrankError(f"bad degree vector {args.degree!r}")
    if len(b) != g.n:
        raise ToricrankError(f"degree vector needs {g.n} entries, got {len(b)}")
    fib = enumerate_fiber(g, b)
    print(f"fiber size: {len(fib.members)}")
    for mon in fib.members:
        print(format_monomial(g, mon))
    _write_json(
        args.json,
        {"schema": SCHEMA, "degree": list(b), "fiber": [list(u) for u in fib.members]},
    )
    return 0


def _cmd_generators(args, parser) -> int:
    g = _load_graph(args, parser)
    gs = minimal_generating_set(g, degree_bound=args.max_degree)
    tag = "exact" if gs.exact else f"relative to degree bound {gs.degree_bound}"
    print(f"mu: {gs.mu} ({tag})")
    rows = []
    for b, ind in zip(gs.binomials, gs.indispensable):
        suffix = " [indispensable]" if ind else ""
        print(b.text(g) + suffix)
        rows.append(
            {
                "plus": list(b.plus),
                "minus": list(b.minus),
                "text": b.text(g),
                "indispensable": ind,
            }
        )
    _write_json(
        args.json,
        {
            "schema": SCHEMA,
            "mu": gs.mu,
            "exact": gs.exact,
            "degree_bound": gs.degree_bound,
            "generators": rows,
        },
    )
    return 0


def _cmd_selftest(args, parser) -> int:
    g = _load_graph(args, parser)
    checks: list[tuple[str, bool]] = []
    rep = report(g, degree_bound=args.max_degree)

    if args.kn is not None:
        expected = kn_expected(args.kn)
        delta = build_delta(g, circuit_cap=REPORT_CIRCUIT_CAP)
        comps = delta_components(delta)
        kinds = {classify_component(c).value for c in comps}
        got = {
            "mu": rep.mu,
            "ht": rep.height,
            "vertices": len(delta.vertices),
            "components": len(comps),
            "indispensable": rep.indispensable_count,
            "bar": rep.bar,
            "araG": rep.ara_g,
        }
        for key, want in expected.items():
            checks.append((f"kn {key}={want}", got[key] == want))
        checks.append(("kn all components 2-simplices", kinds == {"two_simplex"}))

    checks.append(("extremality", extremality_check(g)))

    gs = minimal_generating_set(g, degree_bound=args.max_degree or rep.degree_bound)
    sound = True
    for t in range(2, gs.degree_bound + 1):
        for degree, members in sorted(_fibers_of_total_degree(g, t).items()):
            if len(members) < 2:
                continue
            fib = enumerate_fiber(g, degree)
            if not fiber_graph(fib, gs.binomials).connected:
                sound = False
    checks.append(("generation soundness", sound))

    sampled = True
    if is_bipartite(g) is not None:
        cycles = [c for c in enumerate_even_cycles(g, max_length=4) if len(c) == 4]
        for c in cycles[:5]:
            sampled = sampled and sample_multiple_divisibility(
                g, c, trials=20, seed=args.seed
            )
    checks.append(("multiple-divisibility sampling", sampled))

    failed = [name for name, ok in checks if not ok]
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    print(f"selftest: {'PASS' if not failed else 'FAIL'}")
    _write_json(
        args.json,
        {
            "schema": SCHEMA,
            "checks": [{"name": n, "pass": ok} for n, ok in checks],
            "pass": not failed,
        },
    )
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricrank",
        description="Exact invariants of toric ideals of graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    specs = {
        "analyze": (_cmd_analyze, "full invariant report"),
        "circuits": (_cmd_circuits, "list the circuits"),
        "cycles": (_cmd_cycles, "list the even cycles"),
        "complex": (_cmd_complex, "dump the support complex and delta values"),
        "fibers": (_cmd_fibers, "list the monomials of one degree fiber"),
        "generators": (_cmd_generators, "list a minimal generating set"),
        "selftest": (_cmd_selftest, "run built-in consistency checks"),
    }
    for name, (func, help_text) in specs.items():
        p = sub.add_parser(name, help=help_text)
        _add_graph_args(p)
        p.add_argument("--max-degree", type=int, help="generator scan degree bound")
        p.add_argument("--max-cycle-len", type=int, help="cycle length cap")
        p.add_argument(
            "--j",
            action="append",
            metavar="DIMS",
            help="allowed face dimensions, e.g. 0,1 or omega (complex verb)",
        )
        p.add_argument("--degree", help="comma-separated degree vector (fibers verb)")
        p.add_argument("--json", metavar="PATH", help="also write JSON here")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ToricrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
