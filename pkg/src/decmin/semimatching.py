"""Semi-matchings with decreasingly minimal load on the servers.

``G`` is bipartite with server side ``S`` and client side ``T``.  A
semi-matching ``F`` picks edges so that client ``t`` gets ``d_F(t)`` of
them (exactly one in the classic case); the load vector is ``d_F`` on
``S``.  Dec-min loads also minimise ``sum d(d+1)``, the total completion
time of unit jobs.

Two reductions are used.  When client degrees are prescribed, orienting
the edges of ``F`` toward ``S`` and the rest toward ``T`` turns the problem
into a dec-min orientation with fixed in-degrees on ``T``.  Otherwise the
loads of size-``gamma`` semi-matchings are the server coordinates of net
in-flows in the network ``s -> t -> tau`` with the other coordinates
fixed, which is again an M-convex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleError
from .mconvex import MConvexHandle, box_function, decmin_strong
from .netflow import ArcBounds, Digraph, _solve_m_flow, inflow_bound, min_cost_circulation
from .orient import NodeBounds, UndirGraph, cheapest_decmin_orientation, decmin_orientation_bounded, \
    min_indegree_T_orientation
from .setfn import NEG_INF, POS_INF, GroundSet, SetFunctionOracle, is_finite, members

VARIANTS = ("unit", "spec", "bounded", "fixed_size", "capacitated")


@dataclass
class SemiMatching:
    """Edge multiplicities ``z`` (0/1 unless capacitated) and server loads."""

    servers: list[int]
    z: tuple
    load: tuple

    @property
    def size(self) -> int:
        return sum(self.z)

    @property
    def square_sum(self) -> int:
        return sum(d * d for d in self.load)

    @property
    def completion_time(self) -> int:
        return sum(d * (d + 1) for d in self.load)

    def edges(self, G: UndirGraph) -> list[tuple[int, int]]:
        out = []
        for e, k in enumerate(self.z):
            out += [G.edges[e]] * k
        return out

    def to_json(self, G: UndirGraph) -> dict:
        return {"edges": [list(e) for e in self.edges(G)], "load": list(self.load),
                "size": self.size, "square_sum": self.square_sum,
                "completion_time": self.completion_time}


def _server_side(G: UndirGraph, S: Sequence[int]) -> list[tuple[int, int]]:
    """Edges as ``(server, client)`` pairs."""
    sset = set(S)
    out = []
    for u, v in G.edges:
        if (u in sset) == (v in sset):
            raise ValueError(f"edge ({u}, {v}) does not join the two sides")
        out.append((u, v) if u in sset else (v, u))
    return out


def _full(vals, default, n):
    return list(vals) if vals is not None else [default] * n


def semimatching_decmin(G: UndirGraph, S: Sequence[int], T: Sequence[int], variant: str = "unit", *,
                        m_T: Sequence[int] | None = None,
                        f_S=None, g_S=None, f_T=None, g_T=None,
                        size: int | None = None,
                        cost: Sequence[int] | None = None) -> SemiMatching:
    """Dec-min server loads for the chosen variant.

    Bounds are indexed by node id (length ``n``); ``cost[e]`` is paid per
    chosen copy of edge ``e`` and, when given, the cheapest dec-min
    semi-matching is returned.

    * ``unit``: every client gets exactly one edge.
    * ``spec``: client ``t`` gets exactly ``m_T[t]`` edges.
    * ``bounded``: loads within ``[f_S, g_S]``, client degrees within
      ``[f_T, g_T]`` (default ``[0, 1]``), of maximum size.
    * ``fixed_size``: as ``bounded`` with exactly ``size`` edges.
    * ``capacitated``: edge ``e`` may be used up to ``G.mult[e]`` times;
      client degrees default to ``[0, inf]``; size as given, otherwise
      maximum.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    S, T = list(S), list(T)
    n = G.n
    if sorted(S + T) != list(range(n)):
        raise ValueError("S and T must partition the nodes")
    pairs = _server_side(G, S)
    f_S = _full(f_S, NEG_INF, n)
    g_S = _full(g_S, POS_INF, n)
    if variant in ("unit", "spec"):
        if variant == "unit":
            m_T = [1] * n
        if m_T is None:
            raise ValueError("spec variant needs m_T")
        return _prescribed(G, S, T, pairs, m_T, f_S, g_S, cost)
    f_T = _full(f_T, 0, n)
    g_T = _full(g_T, POS_INF if variant == "capacitated" else 1, n)
    mult = list(G.mult) if variant == "capacitated" and G.mult else [1] * G.m
    if variant == "fixed_size" and size is None:
        raise ValueError("fixed_size variant needs size")
    if size is None:
        size = max_size(G, S, T, pairs, mult, f_S, g_S, f_T, g_T)
    return _fixed_size(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, size, cost)


def _prescribed(G, S, T, pairs, m_T, f_S, g_S, cost) -> SemiMatching:
    n = G.n
    deg = G.degrees()
    lower, upper = [NEG_INF] * n, [POS_INF] * n
    for s in S:
        lower[s], upper[s] = f_S[s], g_S[s]
    for t in T:
        lower[t] = upper[t] = deg[t] - m_T[t]
    bounds = NodeBounds(lower, upper)
    if cost is None:
        D = decmin_orientation_bounded(G, bounds)
    else:
        costs = []
        for (u, v), c, (s, _) in zip(G.edges, cost, pairs):
            # head in S means the edge is chosen
            costs.append((c if v == s else 0, c if u == s else 0))
        D = cheapest_decmin_orientation(G, bounds, costs).orientation
    sset = set(S)
    z = tuple(1 if h in sset else 0 for h in D.heads)
    return _result(G, S, pairs, z)


def _result(G, S, pairs, z) -> SemiMatching:
    load = [0] * G.n
    for (s, _), k in zip(pairs, z):
        load[s] += k
    return SemiMatching(list(S), tuple(z), tuple(load[s] for s in S))


def _network(G, S, T, pairs, mult, f_T, g_T):
    tau = G.n
    arcs = list(pairs) + [(t, tau) for t in T]
    lower = [0] * len(pairs) + [f_T[t] if is_finite(f_T[t]) else 0 for t in T]
    upper = list(mult) + [g_T[t] for t in T]
    return Digraph(G.n + 1, arcs), ArcBounds(lower, upper)


def max_size(G, S, T, pairs, mult, f_S, g_S, f_T, g_T) -> int:
    """Largest number of edges of a semi-matching within the bounds."""
    if any(k != 1 for k in mult):
        return _max_size_by_flow(G, S, T, pairs, mult, f_S, g_S, f_T, g_T)
    # Orient chosen edges toward S; the size is |E| minus the in-degree of T.
    n = G.n
    deg = G.degrees()
    lower, upper = [NEG_INF] * n, [POS_INF] * n
    for s in S:
        lower[s], upper[s] = f_S[s], g_S[s]
    for t in T:
        lower[t] = deg[t] - g_T[t] if is_finite(g_T[t]) else NEG_INF
        upper[t] = deg[t] - f_T[t]
    res = min_indegree_T_orientation(G, NodeBounds(lower, upper), T)
    indeg = res.orientation.indegree()
    return G.m - sum(indeg[t] for t in T)


def _max_size_by_flow(G, S, T, pairs, mult, f_S, g_S, f_T, g_T) -> int:
    # Maximise the flow on the return arc: a circulation paying -1 per unit there.
    ext, bounds = _size_network(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, None)
    cost = [0] * (ext.m - 1) + [-1]
    try:
        z, _ = min_cost_circulation(ext, bounds, cost)
    except InfeasibleError as exc:
        raise InfeasibleError("no semi-matching within the bounds", subset=exc.subset,
                              reason=exc.reason) from exc
    return z[-1]


def _size_network(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma):
    D, bounds = _network(G, S, T, pairs, mult, f_T, g_T)
    sigma = D.n
    arcs = list(D.arcs) + [(sigma, s) for s in S] + [(G.n, sigma)]
    lower = list(bounds.lower) + [f_S[s] if is_finite(f_S[s]) else 0 for s in S]
    upper = list(bounds.upper) + [g_S[s] for s in S]
    lower.append(0 if gamma is None else gamma)
    upper.append(POS_INF if gamma is None else gamma)
    return Digraph(D.n + 1, arcs), ArcBounds(lower, upper)


def _size_feasible(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma) -> bool:
    ext, bounds = _size_network(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma)
    return _solve_m_flow(ext, bounds, [0] * ext.n)[0] is not None


def load_function(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma) -> SetFunctionOracle:
    """``X -> min d_F(X)`` over size-``gamma`` semi-matchings, on the server side."""
    D, bounds = _network(G, S, T, pairs, mult, f_T, g_T)
    lo, hi = [0] * D.n, [0] * D.n
    for s in S:
        lo[s] = -g_S[s]
        hi[s] = -f_S[s]
    lo[G.n] = hi[G.n] = gamma
    pflow = SetFunctionOracle(D.ground(), lambda x: inflow_bound(D, bounds, x), "supermodular", "fully")
    pbox = box_function(pflow, lo, hi)
    smask_all = 0
    for s in S:
        smask_all |= 1 << s

    def value(y: int):
        # minimum load of X is gamma minus the largest load of S - X,
        # i.e. gamma + min over net in-flows of S - X
        rest = smask_all
        for i, s in enumerate(S):
            if y >> i & 1:
                rest &= ~(1 << s)
        v = pbox(rest)
        return gamma + v if is_finite(v) else NEG_INF

    labels = [G.ground().labels[s] for s in S]
    return SetFunctionOracle(GroundSet(len(S), labels), value, "supermodular", "fully")


def _fixed_size(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma, cost) -> SemiMatching:
    if not _size_feasible(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma):
        raise InfeasibleError(f"no semi-matching of size {gamma} within the bounds")
    k = len(S)
    p = load_function(G, S, T, pairs, mult, f_S, g_S, f_T, g_T, gamma)

    def realize(load, lo=None, hi=None, cost_=None, blocks=None):
        return _realize(G, S, T, pairs, mult, f_T, g_T, gamma, load, lo, hi, cost_, blocks)

    def contains(d):
        if any(not f_S[s] <= d[i] <= g_S[s] for i, s in enumerate(S)):
            return False
        return realize(d) is not None

    def exchange(d, a, b):
        if a == b:
            return True
        x = list(d)
        x[a] += 1
        x[b] -= 1
        return contains(x)

    h = MConvexHandle(n=k, total=gamma, exchange_feasible=exchange, p_oracle=p, contains=contains)
    res = decmin_strong(h)
    if cost is None:
        z = realize(res.vector)
    else:
        dec = res.decomposition
        blocks = []
        for i, blk in enumerate(dec.partition):
            before = dec.chain[i - 1] if i else 0
            blocks.append((members(blk), p(dec.chain[i]) - p(before)))
        lo = [max(dec.f_star[i], f_S[s]) for i, s in enumerate(S)]
        hi = [min(dec.g_star[i], g_S[s]) for i, s in enumerate(S)]
        z = realize(None, lo, hi, cost, blocks)
    return _result(G, S, pairs, z)


def _realize(G, S, T, pairs, mult, f_T, g_T, gamma, load, lo, hi, cost, blocks):
    """Edge multiplicities with the given loads (or load box and block sums)."""
    D, bounds = _network(G, S, T, pairs, mult, f_T, g_T)
    tau = G.n
    sigma = D.n
    arcs = list(D.arcs)
    lower, upper = list(bounds.lower), list(bounds.upper)
    costs = list(cost) + [0] * len(T) if cost is not None else [0] * len(arcs)
    node_count = D.n + 1
    if blocks is None:
        for i, s in enumerate(S):
            arcs.append((sigma, s))
            lower.append(load[i])
            upper.append(load[i])
            costs.append(0)
    else:
        for members_i, total in blocks:
            hub = node_count
            node_count += 1
            arcs.append((sigma, hub))
            lower.append(total)
            upper.append(total)
            costs.append(0)
            for i in members_i:
                arcs.append((hub, S[i]))
                lower.append(lo[i])
                upper.append(hi[i])
                costs.append(0)
    arcs.append((tau, sigma))
    lower.append(gamma)
    upper.append(gamma)
    costs.append(0)
    ext = Digraph(node_count, arcs)
    eb = ArcBounds(lower, upper)
    if cost is None:
        z = _solve_m_flow(ext, eb, [0] * node_count)[0]
        if z is None:
            return None
    else:
        z, _ = min_cost_circulation(ext, eb, costs)
    return tuple(z[: len(pairs)])
