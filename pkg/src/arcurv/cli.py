"""Command-line surface: generation, parameter detection, curvature, verification."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import generators as gen
from . import witness as wit
from .curvature import (
    CurvatureError,
    curvature_all_edges,
    lly_curvature,
    ollivier_kappa_p,
    plan_cost,
)
from .graph import (
    AmplyViolation,
    Graph,
    GraphError,
    detect_amply_params,
    dump_edge_list,
    load_edge_list,
)
from .matching import MatchingError, konig_decomposition
from .report import (
    ReportError,
    frac_str,
    render_text,
    report_to_dict,
    verify_graph,
)
from .search import search_amply
from .spectral import SpectralError, adjacency_spectrum

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_INPUT = 2

_FAMILY_ARITIES = {
    "hamming": 2,
    "hypercube": 1,
    "paley": 1,
    "shrikhande": 0,
    "cocktail": 1,
    "complete": 1,
    "cycle": 1,
}


def _build_family(name: str, args: list[int], size_cap: int) -> Graph:
    if name == "hamming":
        return gen.gen_hamming(args[0], args[1], size_cap=size_cap)
    if name == "hypercube":
        return gen.gen_hypercube(args[0], size_cap=size_cap)
    if name == "paley":
        return gen.gen_paley(args[0])
    if name == "shrikhande":
        return gen.gen_shrikhande()
    if name == "cocktail":
        return gen.gen_cocktail(args[0])
    if name == "complete":
        return gen.gen_complete(args[0])
    if name == "cycle":
        return gen.gen_cycle(args[0])
    raise GraphError(f"unknown family {name!r}")


def _read_graph(path: str) -> Graph:
    if path == "-":
        return load_edge_list(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh.read())


def _cmd_gen(args) -> int:
    arity = _FAMILY_ARITIES.get(args.family)
    if arity is None:
        print(f"error: unknown family {args.family!r}", file=sys.stderr)
        return EXIT_INPUT
    if len(args.args) != arity:
        print(
            f"error: family {args.family!r} takes {arity} argument(s), got {len(args.args)}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    g = _build_family(args.family, args.args, args.size_cap)
    sys.stdout.write(dump_edge_list(g))
    return EXIT_OK


def _cmd_params(args) -> int:
    g = _read_graph(args.file)
    result = detect_amply_params(g)
    if isinstance(result, AmplyViolation):
        if args.format == "json":
            print(json.dumps({
                "violation": result.kind,
                "pair": list(result.pair),
                "found": result.found,
                "expected": result.expected,
            }))
        else:
            print(
                f"violation: {result.kind} at pair {result.pair} "
                f"(found {result.found}, expected {result.expected})"
            )
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps({
            "n": result.n, "d": result.d, "alpha": result.alpha,
            "beta": result.beta, "girth": result.girth,
        }))
    else:
        beta = "-" if result.beta is None else result.beta
        print(f"({result.n},{result.d},{result.alpha},{beta})")
    return EXIT_OK


def _curvature_rows(g: Graph, args) -> list[tuple[int, int, Fraction]]:
    if args.p is not None:
        p = Fraction(args.p)
        if args.all:
            return [(u, v, ollivier_kappa_p(g, u, v, p)) for u, v in g.edges()]
        u, v = args.edge
        return [(u, v, ollivier_kappa_p(g, u, v, p))]
    if args.all:
        table = curvature_all_edges(g, threads=args.threads)
        return [(u, v, k) for u, v, k in table.rows]
    u, v = args.edge
    return [(u, v, lly_curvature(g, u, v))]


def _cmd_curvature(args) -> int:
    if not args.all and args.edge is None:
        print("error: pass --all or --edge u v", file=sys.stderr)
        return EXIT_INPUT
    g = _read_graph(args.file)
    rows = _curvature_rows(g, args)
    if args.format == "json":
        print(json.dumps([
            {"u": u, "v": v, "kappa": frac_str(k)} for u, v, k in rows
        ]))
    elif args.format == "csv":
        print("u,v,kappa")
        for u, v, k in rows:
            print(f"{u},{v},{frac_str(k)}")
    else:
        for u, v, k in rows:
            print(f"{u} {v} {frac_str(k)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.file)
    report = verify_graph(g, graph_id=args.file, threads=args.threads)
    if args.format == "json":
        print(json.dumps(report_to_dict(report), sort_keys=True))
    elif args.format == "csv":
        print("u,v,kappa,passed")
        for row in report.edge_rows:
            print(f"{row.u},{row.v},{frac_str(row.kappa)},{row.passed}")
    else:
        sys.stdout.write(render_text(report))
    return EXIT_OK if report.overall_pass else EXIT_ASSERTION


def _hgraph_payload(g: Graph, x: int, y: int) -> dict:
    h = wit.build_transport_bipartite(g, x, y)
    reg = wit.check_h_regular(h)
    classes = konig_decomposition(h.to_bipartite())
    class_dumps = []
    for m in classes:
        chains = wit.reachable_map(h, m)
        class_dumps.append({
            "edges": sorted([u, w] for u, w in m.pairs.items()),
            "chains": [
                {"v0": c.v0, "w0": c.w0, "rho": c.rho, "k": c.k} for c in chains
            ],
        })
    cert = wit.witness_curvature_bound(g, x, y)
    return {
        "edge": [x, y],
        "left": [h.left_name(i) for i in range(h.side_size)],
        "right": [h.right_name(i) for i in range(h.side_size)],
        "regular": reg.ok,
        "degree": reg.expected,
        "edge_classes": {
            str(i + 1): sorted([u, w] for u, w in cls)
            for i, cls in enumerate(h.edge_classes)
        },
        "matchings": class_dumps,
        "pi0_cost": frac_str(cert.pi0_cost),
        "kappa_lower_bound": frac_str(cert.kappa_lb),
        "kappa": frac_str(cert.kappa),
    }


def _cmd_hgraph(args) -> int:
    g = _read_graph(args.file)
    x, y = args.edge
    payload = _hgraph_payload(g, x, y)
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    print(f"transport-bipartite graph of edge ({x},{y})")
    print("left:  " + " ".join(payload["left"]))
    print("right: " + " ".join(payload["right"]))
    print(f"regular: {payload['regular']} (degree {payload['degree']})")
    for name, edges in payload["edge_classes"].items():
        label = wit.CLASS_NAMES[int(name)]
        print(f"  E{name} ({label}): {edges}")
    for i, m in enumerate(payload["matchings"], start=1):
        print(f"matching {i}: {m['edges']}")
        for c in m["chains"]:
            print(f"  chain {c['v0']} -> {c['w0']}  rho={c['rho']} k={c['k']}")
    print(f"pi0 cost: {payload['pi0_cost']}")
    print(f"kappa lower bound: {payload['kappa_lower_bound']}  (exact {payload['kappa']})")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.file)
    spec = adjacency_spectrum(g, cap=args.size_cap if args.size_cap else 4096)
    if args.format == "json":
        print(json.dumps({
            "eigenvalues": list(spec.eigenvalues),
            "residual": spec.residual,
        }))
    else:
        for e in spec.eigenvalues:
            print(f"{e:.12g}")
        print(f"# residual {spec.residual:.3e}")
    return EXIT_OK


def _cmd_diameter(args) -> int:
    g = _read_graph(args.file)
    print(g.diameter())
    return EXIT_OK


def _cmd_search(args) -> int:
    beta = None if args.beta in ("none", "-") else int(args.beta)
    found = search_amply(args.n, args.d, args.alpha, beta)
    if found is None:
        print("none")
        return EXIT_OK
    sys.stdout.write(dump_edge_list(found))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcurv",
        description="Exact curvature, matching-witness, and spectral verification of amply regular graphs.",
    )
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0, help="reserved; affects nothing mathematical")
    parser.add_argument("--size-cap", type=int, default=0, help="override generator/spectrum size caps")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a builtin family as an edge list")
    p_gen.add_argument("family")
    p_gen.add_argument("args", nargs="*", type=int)
    p_gen.set_defaults(func=_cmd_gen)

    p_params = sub.add_parser("params", help="detect amply-regular parameters")
    p_params.add_argument("file")
    p_params.set_defaults(func=_cmd_params)

    p_curv = sub.add_parser("curvature", help="exact edge curvature")
    p_curv.add_argument("file")
    p_curv.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"))
    p_curv.add_argument("--all", action="store_true")
    p_curv.add_argument("--p", help="idleness as num/den; switches to p-idleness curvature")
    p_curv.set_defaults(func=_cmd_curvature)

    p_verify = sub.add_parser("verify", help="run the full verification report")
    p_verify.add_argument("file")
    p_verify.set_defaults(func=_cmd_verify)

    p_hgraph = sub.add_parser("hgraph", help="dump the transport-bipartite graph of an edge")
    p_hgraph.add_argument("file")
    p_hgraph.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"), required=True)
    p_hgraph.set_defaults(func=_cmd_hgraph)

    p_spec = sub.add_parser("spectrum", help="adjacency eigenvalues")
    p_spec.add_argument("file")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_diam = sub.add_parser("diameter", help="graph diameter")
    p_diam.add_argument("file")
    p_diam.set_defaults(func=_cmd_diameter)

    p_search = sub.add_parser("search", help="exhaustive search for an amply regular instance")
    p_search.add_argument("n", type=int)
    p_search.add_argument("d", type=int)
    p_search.add_argument("alpha", type=int)
    p_search.add_argument("beta", help="integer, or 'none' for no distance-2 pair")
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.size_cap == 0:
        args.size_cap = gen.DEFAULT_SIZE_CAP
    try:
        return args.func(args)
    except (GraphError, CurvatureError, MatchingError, wit.WitnessError,
            SpectralError, ReportError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
