"""Command line front end: ``decmin <command> ...``.

Exit codes: 0 success, 2 infeasible (a certificate is printed), 3 input
error, 4 enumeration cap or step budget exceeded.  Output is deterministic
and contains integers only (plus ``+inf`` / ``-inf`` markers for bounds).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import instances
from .errors import DecminError, ParseError
from .io import parse_bounds, parse_digraph, parse_graph, parse_int_list, parse_mixed, read_setfn, read_text
from .mconvex import box_intersect, decmin_basic, decmin_strong, handle_from_supermodular
from .netflow import feasible_m_flow, megiddo_discrete
from .oracle import check_equivalences, enumerate_base_elements, enumerate_orientations
from .orient import (
    MixedGraph,
    UndirGraph,
    capacitated_decmin_orientation,
    cheapest_decmin_orientation,
    decmin_kec_orientation,
    decmin_orientation,
    decmin_orientation_bounded,
    decmin_strong_orientation,
    orientation_canonical,
)
from .semimatching import VARIANTS, semimatching_decmin
from .setfn import POS_INF, ext_repr, members


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _vec(v) -> str:
    return " ".join(str(ext_repr(x)) for x in v)


def _set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def _decomp_lines(decomp) -> list[str]:
    out = [f"values: {_vec(decomp.values)}"]
    for i, (blk, beta) in enumerate(zip(decomp.partition, decomp.values), 1):
        out.append(f"block {i} (value {beta}): {_set(blk)}")
    out.append(f"f*: {_vec(decomp.f_star)}")
    out.append(f"g*: {_vec(decomp.g_star)}")
    return out


def _parallel_copies(G: UndirGraph) -> UndirGraph:
    edges, cost = [], []
    for e, uv in enumerate(G.edges):
        edges += [uv] * G.mult[e]
        if G.cost:
            cost += [G.cost[e]] * G.mult[e]
    return UndirGraph(G.n, edges, None, cost or None, G.labels)


def _load_bounds(path, n):
    return parse_bounds(read_text(path), n) if path else None


# ---------------------------------------------------------------- commands

def cmd_decmin(args) -> None:
    p = read_setfn(args.pfile)
    h = handle_from_supermodular(p)
    if args.box:
        b = parse_bounds(read_text(args.box), p.n)
        h = box_intersect(h, b.lower, b.upper)
    if args.basic:
        m = decmin_basic(h, budget=args.budget)
        _emit(args, {"vector": list(m)}, [f"vector: {_vec(m)}"])
        return
    res = decmin_strong(h)
    lines = [f"vector: {_vec(res.vector)}", f"square-sum: {sum(v * v for v in res.vector)}"]
    lines += _decomp_lines(res.decomposition)
    for i, nd in enumerate(res.rounds, 1):
        lines.append(f"round {i}: mu {_vec(nd.mus)}; sets " + " ".join(_set(x) for x in nd.sets)
                     + f"; beta {nd.beta1}")
    payload = {
        "vector": list(res.vector),
        "decomposition": res.decomposition.to_json(),
        "rounds": [nd.to_json() for nd in res.rounds],
    }
    _emit(args, payload, lines)


def cmd_orient(args) -> None:
    G = parse_graph(read_text(args.graph))
    bounds = _load_bounds(args.bounds, G.n)
    if G.mult and not args.capacitated:
        G = _parallel_copies(G)
    if args.capacitated:
        res = capacitated_decmin_orientation(G, bounds)
        _emit(args, res.to_json(),
              [f"indegree: {_vec(res.indegree)}", f"toward second endpoint: {_vec(res.toward_second)}"])
        return
    if args.k is not None or args.l is not None:
        k = args.k if args.k is not None else args.l
        l = args.l if args.l is not None else args.k
        D = decmin_kec_orientation(G, k, l, args.root, bounds)
    elif args.strong:
        D = decmin_strong_orientation(G)
    elif args.cheapest or args.cost:
        res = cheapest_decmin_orientation(G, bounds)
        D = res.orientation
        payload = D.to_json()
        payload.update({"cost": res.cost, "z_chain": [members(z) for z in res.z_chain],
                        "forced": [list(a) for a in res.forced]})
        lines = [f"indegree: {_vec(D.indegree())}", f"cost: {res.cost}",
                 "z-chain: " + " ".join(_set(z) for z in res.z_chain),
                 "forced arcs: " + " ".join(f"{u}->{v}" for u, v in res.forced),
                 "arcs: " + " ".join(f"{u}->{v}" for u, v in D.arcs())]
        _emit(args, payload, lines)
        return
    elif bounds is not None:
        D = decmin_orientation_bounded(G, bounds)
    else:
        D = decmin_orientation(G)
    payload = D.to_json()
    lines = [f"indegree: {_vec(D.indegree())}", "arcs: " + " ".join(f"{u}->{v}" for u, v in D.arcs())]
    if args.canonical:
        _, decomp = orientation_canonical(G, bounds, D)
        payload["decomposition"] = decomp.to_json()
        lines += _decomp_lines(decomp)
    _emit(args, payload, lines)


def cmd_semimatch(args) -> None:
    G = parse_graph(read_text(args.graph))
    S = parse_int_list(args.servers)
    T = [v for v in range(G.n) if v not in set(S)]
    kw = {}
    if args.client_degrees:
        kw["m_T"] = _per_node(parse_int_list(args.client_degrees), T, G.n, 0)
    if args.server_bounds:
        b = parse_bounds(read_text(args.server_bounds), G.n)
        kw["f_S"], kw["g_S"] = b.lower, b.upper
    if args.client_bounds:
        hi = POS_INF if args.variant == "capacitated" else 1
        b = parse_bounds(read_text(args.client_bounds), G.n, 0, hi)
        kw["f_T"], kw["g_T"] = b.lower, b.upper
    if args.size is not None:
        kw["size"] = args.size
    if args.cost:
        if G.cost is None:
            raise ParseError("--cost needs cost columns in the graph file")
        kw["cost"] = [c[0] for c in G.cost]
    res = semimatching_decmin(G, S, T, args.variant, **kw)
    lines = [f"load: {_vec(res.load)}", f"square-sum: {res.square_sum}",
             f"completion time: {res.completion_time}",
             "edges: " + " ".join(f"{u}-{v}" for u, v in res.edges(G))]
    _emit(args, res.to_json(G), lines)


def _per_node(values, nodes, n, fill):
    out = [fill] * n
    if len(values) != len(nodes):
        raise ParseError(f"expected {len(nodes)} values, got {len(values)}")
    for v, x in zip(nodes, values):
        out[v] = x
    return out


def cmd_flow(args) -> None:
    D, bounds, _ = parse_digraph(read_text(args.digraph))
    if args.mode == "feasible":
        m = parse_int_list(args.demand) if args.demand else [0] * D.n
        if len(m) != D.n:
            raise ParseError(f"demand needs {D.n} entries")
        z = feasible_m_flow(D, bounds, m)
        _emit(args, {"flow": list(z)}, [f"flow: {_vec(z)}"])
        return
    if args.sources is None or args.sinks is None or args.value is None:
        raise ParseError("megiddo needs --sources, --sinks and --value")
    res = megiddo_discrete(D, bounds.upper, parse_int_list(args.sources), parse_int_list(args.sinks), args.value)
    _emit(args, {"sources": res.sources, "net_inflow": list(res.vector), "flow": list(res.flow)},
          [f"sources: {_vec(res.sources)}", f"net in-flow: {_vec(res.vector)}", f"flow: {_vec(res.flow)}"])


def cmd_verify(args) -> None:
    if args.setfn:
        _verify_setfn(args)
        return
    if args.instance:
        if args.instance not in instances.NAMED:
            raise ParseError(f"unknown instance {args.instance!r}; choose from {', '.join(sorted(instances.NAMED))}")
        G = instances.NAMED[args.instance]()
    elif args.mixed:
        G = parse_mixed(read_text(args.mixed))
    elif args.graph:
        G = parse_graph(read_text(args.graph))
    else:
        raise ParseError("verify needs --instance, --graph, --mixed or --setfn")
    predicate = "strong" if args.strong else None
    mixed = isinstance(G, MixedGraph)
    report = enumerate_orientations(G, predicate=predicate,
                                    vector="undirected" if args.undirected else "total")
    lines = [f"feasible orientations: {report.feasible_count}",
             f"distinct vectors: {len(report.vectors)}",
             "dec-min: " + "; ".join(_vec(v) for v in report.decmin_set),
             "inc-max: " + "; ".join(_vec(v) for v in report.incmax_set),
             "square-sum min: " + "; ".join(_vec(v) for v in report.squaresum_min_set)]
    same = check_equivalences(report)
    payload = report.to_json()
    if mixed:
        lines.append("dec-min = inc-max" if same else "dec-min ≠ inc-max (expected for mixed)")
    else:
        D = decmin_strong_orientation(G) if args.strong else decmin_orientation(G)
        ok = D.indegree() in report.decmin_set
        payload["solver"] = list(D.indegree())
        payload["solver_is_decmin"] = ok
        lines.append(f"solver: {_vec(D.indegree())} ({'dec-min' if ok else 'NOT dec-min'})")
        lines.append("dec-min = inc-max = square-sum min" if same else "equivalence FAILED")
    _emit(args, payload, lines)


def _verify_setfn(args) -> None:
    p = read_setfn(args.setfn)
    box = None
    h = handle_from_supermodular(p)
    if args.box:
        b = parse_bounds(read_text(args.box), p.n)
        box = (b.lower, b.upper)
        h = box_intersect(h, b.lower, b.upper)
    report = enumerate_base_elements(p, box)
    m = decmin_strong(h).vector
    ok = m in report.decmin_set
    same = check_equivalences(report)
    lines = [f"elements: {report.feasible_count}",
             "dec-min: " + "; ".join(_vec(v) for v in report.decmin_set),
             f"solver: {_vec(m)} ({'dec-min' if ok else 'NOT dec-min'})",
             "dec-min = inc-max = square-sum min" if same else "equivalence FAILED"]
    payload = report.to_json()
    payload.update({"solver": list(m), "solver_is_decmin": ok})
    _emit(args, payload, lines)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decmin", description="Decreasingly minimal elements of M-convex sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = common(sub.add_parser("decmin", help="dec-min element of a set-function base polyhedron"))
    p.add_argument("pfile", help="set function JSON")
    p.add_argument("--box", help="bounds file 'v lower upper'")
    p.add_argument("--basic", action="store_true", help="use the 1-tightening solver only")
    p.add_argument("--budget", type=int, default=10**7, help="step budget of --basic")
    p.set_defaults(func=cmd_decmin)

    p = common(sub.add_parser("orient", help="dec-min orientation of a graph"))
    p.add_argument("graph")
    p.add_argument("--bounds", help="in-degree bounds file")
    p.add_argument("--strong", action="store_true", help="strongly connected orientations only")
    p.add_argument("--k", type=int, help="arc-disjoint paths out of the root")
    p.add_argument("--l", type=int, help="arc-disjoint paths into the root")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--cost", action="store_true", help="cheapest dec-min orientation (costs from the file)")
    p.add_argument("--cheapest", action="store_true", help="same as --cost")
    p.add_argument("--canonical", action="store_true", help="also print the canonical decomposition")
    p.add_argument("--capacitated", action="store_true", help="edge multiplicities are capacities")
    p.set_defaults(func=cmd_orient)

    p = common(sub.add_parser("semimatch", help="dec-min semi-matching"))
    p.add_argument("graph")
    p.add_argument("--servers", required=True, help="comma separated server nodes")
    p.add_argument("--variant", choices=VARIANTS, default="unit")
    p.add_argument("--client-degrees", help="required degree of each client, in node order")
    p.add_argument("--server-bounds", help="load bounds file for servers")
    p.add_argument("--client-bounds", help="degree bounds file for clients (unlisted: 0..1, capacitated 0..inf)")
    p.add_argument("--size", type=int)
    p.add_argument("--cost", action="store_true", help="cheapest dec-min (first cost column)")
    p.set_defaults(func=cmd_semimatch)

    p = common(sub.add_parser("flow", help="flows with prescribed net in-flow"))
    p.add_argument("mode", choices=("feasible", "megiddo"))
    p.add_argument("digraph")
    p.add_argument("--demand", help="net in-flow per node (feasible); write --demand=-1,1 for negative values")
    p.add_argument("--sources")
    p.add_argument("--sinks")
    p.add_argument("--value", type=int)
    p.set_defaults(func=cmd_flow)

    p = common(sub.add_parser("verify", help="compare solver output with exhaustive enumeration"))
    p.add_argument("--instance", help="named instance: " + ", ".join(sorted(instances.NAMED)))
    p.add_argument("--graph")
    p.add_argument("--mixed")
    p.add_argument("--setfn")
    p.add_argument("--box")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--undirected", action="store_true", help="mixed graphs: count free edges only")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except DecminError as exc:
        if args.json and hasattr(exc, "to_json"):
            print(json.dumps(exc.to_json(), sort_keys=True, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
            subset = getattr(exc, "subset", None)
            if subset is not None:
                print(f"certificate: {{{','.join(map(str, subset))}}}"
                      + (f" ({exc.reason})" if exc.reason else ""), file=sys.stderr)
        return exc.exit_code
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
