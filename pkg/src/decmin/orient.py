"""Orientations of undirected graphs with decreasingly minimal in-degrees.

The in-degree vectors of the orientations of ``G`` form the M-convex set of
the supermodular function ``i_G(X)`` (edges induced by ``X``).  Moving one
unit of in-degree from ``t`` to ``s`` is possible exactly when the current
orientation has a dipath from ``s`` to ``t``; reversing it does the move.
The solvers below are all built on that fact, with extra path conditions
for node bounds and for connectivity requirements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InfeasibleError
from .mconvex import (
    CanonicalDecomposition,
    MConvexHandle,
    base_member,
    box_intersect,
    canonical_chain,
    decmin_strong,
    fold_box,
    translate,
)
from .netflow import (
    ArcBounds,
    Digraph,
    _solve_m_flow,
    feasible_m_flow,
    max_flow_min_cut,
    min_cost_circulation,
    netinflow_handle,
)
from .setfn import NEG_INF, POS_INF, GroundSet, SetFunctionOracle, check_enum, is_finite, members, to_mask


@dataclass
class UndirGraph:
    """Undirected multigraph.

    ``mult`` gives edge capacities for capacitated orientations (each edge
    stands for that many parallel copies), ``cost[e] = (c_uv, c_vu)`` the
    cost of orienting edge ``e = (u, v)`` as ``u -> v`` or ``v -> u``.
    """

    n: int
    edges: list[tuple[int, int]]
    mult: list[int] | None = None
    cost: list[tuple[int, int]] | None = None
    labels: list[str] | None = None

    def __post_init__(self):
        self.edges = [tuple(e) for e in self.edges]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError("loops are not allowed")
        if self.mult is not None and len(self.mult) != len(self.edges):
            raise ValueError("need one multiplicity per edge")
        if self.cost is not None and len(self.cost) != len(self.edges):
            raise ValueError("need one cost pair per edge")

    @property
    def m(self) -> int:
        return len(self.edges)

    def ground(self) -> GroundSet:
        return GroundSet(self.n, self.labels)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e, (u, v) in enumerate(self.edges):
            w = self.mult[e] if self.mult else 1
            deg[u] += w
            deg[v] += w
        return deg

    def induced(self, x: int) -> int:
        return sum((self.mult[e] if self.mult else 1)
                   for e, (u, v) in enumerate(self.edges) if x >> u & 1 and x >> v & 1)


@dataclass
class MixedGraph:
    """Graph with undirected ``edges`` still to orient and fixed ``arcs``."""

    n: int
    edges: list[tuple[int, int]]
    arcs: list[tuple[int, int]]
    labels: list[str] | None = None

    def __post_init__(self):
        self.edges = [tuple(e) for e in self.edges]
        self.arcs = [tuple(a) for a in self.arcs]


@dataclass
class NodeBounds:
    lower: list
    upper: list

    @classmethod
    def free(cls, n: int) -> "NodeBounds":
        return cls([NEG_INF] * n, [POS_INF] * n)

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper bounds differ in length")


@dataclass
class Orientation:
    """Orientation given by the head of every edge."""

    graph: UndirGraph
    heads: list[int]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u if h == v else v, h) for (u, v), h in zip(self.graph.edges, self.heads)]

    def indegree(self) -> tuple:
        deg = [0] * self.graph.n
        for h in self.heads:
            deg[h] += 1
        return tuple(deg)

    def cost(self) -> int:
        if self.graph.cost is None:
            return 0
        return sum(c[0] if h == v else c[1]
                   for (u, v), h, c in zip(self.graph.edges, self.heads, self.graph.cost))

    def reverse(self, e: int) -> None:
        u, v = self.graph.edges[e]
        self.heads[e] = u if self.heads[e] == v else v

    def to_json(self) -> dict:
        return {"arcs": [list(a) for a in self.arcs()], "indegree": list(self.indegree())}


def induced_edges_function(G: UndirGraph) -> SetFunctionOracle:
    return SetFunctionOracle(G.ground(), G.induced, "supermodular", "fully")


def _bounds(G: UndirGraph, bounds: NodeBounds | None) -> tuple[list, list]:
    if bounds is None:
        return [NEG_INF] * G.n, [POS_INF] * G.n
    if len(bounds.lower) != G.n:
        raise ValueError("bounds need one entry per node")
    return list(bounds.lower), list(bounds.upper)


# ------------------------------------------------------------ dipaths

def _out_lists(n: int, arcs: Sequence[tuple[int, int]]) -> list[list[int]]:
    out = [[] for _ in range(n)]
    for e, (u, _) in enumerate(arcs):
        out[u].append(e)
    return out


def _in_lists(n: int, arcs: Sequence[tuple[int, int]]) -> list[list[int]]:
    inn = [[] for _ in range(n)]
    for e, (_, v) in enumerate(arcs):
        inn[v].append(e)
    return inn


def _bfs_to(n, arcs, t) -> tuple[list[int], list]:
    """Nodes that reach ``t`` in BFS order, with the arc each uses to step toward ``t``."""
    inn = _in_lists(n, arcs)
    nxt: list = [None] * n
    seen = [False] * n
    seen[t] = True
    order = [t]
    queue = deque([t])
    while queue:
        v = queue.popleft()
        for e in inn[v]:
            u = arcs[e][0]
            if not seen[u]:
                seen[u] = True
                nxt[u] = e
                order.append(u)
                queue.append(u)
    return order, nxt


def _bfs_from(n, arcs, sources) -> tuple[list[int], list]:
    out = _out_lists(n, arcs)
    prev: list = [None] * n
    seen = [False] * n
    order = []
    queue = deque()
    for s in sources:
        if not seen[s]:
            seen[s] = True
            order.append(s)
            queue.append(s)
    while queue:
        u = queue.popleft()
        for e in out[u]:
            v = arcs[e][1]
            if not seen[v]:
                seen[v] = True
                prev[v] = e
                order.append(v)
                queue.append(v)
    return order, prev


def reaches(n: int, arcs: Sequence[tuple[int, int]], t: int) -> int:
    """Mask of nodes with a dipath to ``t`` (``t`` included)."""
    return to_mask(_bfs_to(n, arcs, t)[0])


def _path_to(nxt, arcs, s, t) -> list[int]:
    path = []
    v = s
    while v != t:
        e = nxt[v]
        path.append(e)
        v = arcs[e][1]
    return path


def _path_from(prev, arcs, t) -> list[int]:
    path = []
    v = t
    while prev[v] is not None:
        e = prev[v]
        path.append(e)
        v = arcs[e][0]
    return path[::-1]


def is_strongly_connected(n: int, arcs: Sequence[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    return len(_bfs_from(n, arcs, [0])[0]) == n and len(_bfs_to(n, arcs, 0)[0]) == n


def _arc_disjoint_paths(n: int, arcs, s, t, need: int) -> bool:
    if need <= 0:
        return True
    return max_flow_min_cut(Digraph(n, arcs), [1] * len(arcs), s, t)[0] >= need


# -------------------------------------------------------- basic orienting

def _orient_by_flow(G: UndirGraph, lower: Sequence, upper: Sequence) -> Orientation:
    """Orientation with in-degrees in ``[lower, upper]``, or a violating set."""
    m, n = G.m, G.n
    arcs = []
    for e, (u, v) in enumerate(G.edges):
        arcs += [(e, m + u), (e, m + v)]
    tau = m + n
    arcs += [(m + v, tau) for v in range(n)]
    lo = [0] * (2 * m) + [max(0, lower[v]) if is_finite(lower[v]) else 0 for v in range(n)]
    hi = [1] * (2 * m) + [upper[v] for v in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        v = next(v for v in range(n) if lo[2 * m + v] > hi[2 * m + v])
        raise InfeasibleError("node bounds are inconsistent", subset=[v], reason="lower bound above upper bound")
    D = Digraph(m + n + 1, arcs)
    demand = [-1] * m + [0] * n + [m]
    z, _ = _solve_m_flow(D, ArcBounds(lo, hi), demand)
    if z is None:
        raise _orientation_certificate(G, lower, upper)
    heads = [u if z[2 * e] else v for e, (u, v) in enumerate(G.edges)]
    return Orientation(G, heads)


def _orientation_certificate(G: UndirGraph, lower, upper) -> InfeasibleError:
    # Smallest violating set: too many induced edges for the upper bounds or
    # too few incident edges for the lower bounds.
    check_enum(G.n)
    deg_in = [0] * (1 << G.n)
    for x in range(1 << G.n):
        deg_in[x] = G.induced(x)
    total = G.m
    for x in range(1, 1 << G.n):
        up = sum(upper[v] for v in members(x))
        if deg_in[x] > up:
            return InfeasibleError("no orientation within the bounds", subset=members(x),
                                   reason=f"{deg_in[x]} induced edges exceed the upper bounds' sum {up}")
        lo = sum(lower[v] for v in members(x))
        reach = total - deg_in[((1 << G.n) - 1) & ~x]
        if lo > reach:
            return InfeasibleError("no orientation within the bounds", subset=members(x),
                                   reason=f"lower bounds' sum {lo} exceeds the {reach} incident edges")
    return InfeasibleError("no orientation within the bounds")


def orient_with_indegree(G: UndirGraph, m: Sequence[int]) -> Orientation:
    """Orientation with in-degree vector exactly ``m``.

    Raises :class:`InfeasibleError` with a set ``X`` where ``m(X) < i_G(X)``
    (or ``m(V) != |E|``).
    """
    if len(m) != G.n:
        raise ValueError("in-degree vector has wrong length")
    if sum(m) != G.m:
        raise InfeasibleError("in-degrees must sum to the number of edges",
                              subset=list(range(G.n)), reason=f"sum {sum(m)} != {G.m}")
    if any(v < 0 for v in m):
        v = next(v for v in range(G.n) if m[v] < 0)
        raise InfeasibleError("negative in-degree", subset=[v], reason="in-degree below zero")
    try:
        return _orient_by_flow(G, list(m), list(m))
    except InfeasibleError:
        pass
    check_enum(G.n)
    for x in range(1, 1 << G.n):
        have = sum(m[v] for v in members(x))
        if have < G.induced(x):
            raise InfeasibleError("no orientation with this in-degree vector", subset=members(x),
                                  reason=f"in-degree sum {have} < {G.induced(x)} induced edges")
    raise InfeasibleError("no orientation with this in-degree vector")


def bounded_orientation(G: UndirGraph, bounds: NodeBounds | None = None) -> Orientation:
    """Some orientation whose in-degrees respect ``bounds``."""
    lower, upper = _bounds(G, bounds)
    return _orient_by_flow(G, lower, upper)


def _low_to_high(G: UndirGraph) -> Orientation:
    return Orientation(G, [max(u, v) for u, v in G.edges])


def _improve_bounded(D: Orientation, lower, upper, gap: int = 2) -> Orientation:
    G = D.graph
    n = G.n
    while True:
        deg = D.indegree()
        arcs = D.arcs()
        step = None
        for t in sorted(range(n), key=lambda v: (-deg[v], v)):
            if deg[t] <= lower[t]:
                continue
            order, nxt = _bfs_to(n, arcs, t)
            for s in order[1:]:
                if deg[s] < upper[s] and deg[s] <= deg[t] - gap:
                    step = _path_to(nxt, arcs, s, t)
                    break
            if step:
                break
        if step is None:
            return D
        for e in step:
            D.reverse(e)


def decmin_orientation(G: UndirGraph) -> Orientation:
    """Dec-min orientation by reversing dipaths from low to high in-degree.

    Starts from the orientation pointing every edge to its larger endpoint;
    the highest in-degree node is served first, through the shortest path.
    """
    lower, upper = _bounds(G, None)
    return _improve_bounded(_low_to_high(G), lower, upper)


def decmin_orientation_bounded(G: UndirGraph, bounds: NodeBounds) -> Orientation:
    """Dec-min orientation among those with in-degrees in ``[lower, upper]``."""
    lower, upper = _bounds(G, bounds)
    return _improve_bounded(_orient_by_flow(G, lower, upper), lower, upper)


def orientation_handle(G: UndirGraph, bounds: NodeBounds | None = None) -> MConvexHandle:
    """Handle for the (bounded) in-degree vectors, tests answered by flows."""
    lower, upper = _bounds(G, bounds)

    def contains(x):
        if any(not lower[v] <= x[v] <= upper[v] for v in range(G.n)):
            return False
        try:
            orient_with_indegree(G, x)
            return True
        except InfeasibleError:
            return False

    def exchange(m, s, t):
        if s == t:
            return True
        x = list(m)
        x[s] += 1
        x[t] -= 1
        return contains(x)

    h = MConvexHandle(n=G.n, total=G.m, exchange_feasible=exchange,
                      member=lambda: _orient_by_flow(G, lower, upper).indegree(),
                      p_oracle=induced_edges_function(G), contains=contains, labels=G.labels)
    if bounds is None:
        return h
    boxed = box_intersect(h, lower, upper, member=h.member)
    boxed.exchange_feasible = exchange
    return boxed


def _orientation_as_handle(D: Orientation, lower, upper) -> MConvexHandle:
    """Exchange tests for the in-degree vector of ``D`` read off its dipaths."""
    G = D.graph
    base = D.indegree()
    arcs = D.arcs()
    reach = [reaches(G.n, arcs, t) for t in range(G.n)]

    def exchange(m, s, t):
        if tuple(m) != base:
            raise ValueError("orientation handle only answers for its own in-degree vector")
        if s == t:
            return True
        return bool(reach[t] >> s & 1) and m[s] < upper[s] and m[t] > lower[t]

    return MConvexHandle(n=G.n, total=G.m, exchange_feasible=exchange, member=lambda: base)


def orientation_canonical(G: UndirGraph, bounds: NodeBounds | None = None,
                          D: Orientation | None = None) -> tuple[Orientation, CanonicalDecomposition]:
    """Canonical decomposition of the dec-min bounded orientations.

    The smallest tight set of ``u`` is ``{u}`` when ``u`` sits at its lower
    bound, and otherwise ``u`` together with every node below its upper
    bound that has a dipath to ``u``.
    """
    lower, upper = _bounds(G, bounds)
    if D is None:
        D = decmin_orientation_bounded(G, NodeBounds(lower, upper))
    return D, canonical_chain(_orientation_as_handle(D, lower, upper), D.indegree())


def reachable_chain(D: Orientation, decomp: CanonicalDecomposition, upper: Sequence) -> list[int]:
    """``Z_i``: nodes reachable in ``D`` from the nodes outside ``C_i`` below their upper bound.

    The family is the same for every dec-min bounded orientation.
    """
    n = D.graph.n
    deg = D.indegree()
    arcs = D.arcs()
    out = []
    for c in decomp.chain:
        starts = [v for v in range(n) if not c >> v & 1 and deg[v] < upper[v]]
        out.append(to_mask(_bfs_from(n, arcs, starts)[0]))
    return out


@dataclass
class CheapestOrientation:
    orientation: Orientation
    cost: int
    z_chain: list[int] = field(default_factory=list)
    forced: list[tuple[int, int]] = field(default_factory=list)
    decomposition: CanonicalDecomposition | None = None


def cheapest_decmin_orientation(G: UndirGraph, bounds: NodeBounds | None = None,
                                cost: Sequence[tuple[int, int]] | None = None) -> CheapestOrientation:
    """Minimum-cost orientation among the dec-min bounded ones.

    For each chain member ``C_i``, let ``Z_i`` be the set reachable from
    the nodes outside ``C_i`` that are below their upper bound.  Every
    dec-min orientation directs the edges leaving ``Z_i`` into it.  The
    remaining edges are oriented by a min-cost circulation that keeps each
    in-degree in the small box and each block's in-degree sum at its
    dec-min value; the box and the arcs into ``Z_i`` alone do not force
    the chain sums once upper bounds bind.
    """
    if cost is not None:
        G = UndirGraph(G.n, G.edges, G.mult, list(cost), G.labels)
    lower, upper = _bounds(G, bounds)
    D, decomp = orientation_canonical(G, NodeBounds(lower, upper))
    n = G.n
    z_chain = reachable_chain(D, decomp, upper)
    fixed_head: dict[int, int] = {}
    for z in z_chain:
        for e, (u, v) in enumerate(G.edges):
            if (z >> u & 1) != (z >> v & 1):
                fixed_head[e] = u if z >> u & 1 else v
    lo = [max(decomp.f_star[v], lower[v]) for v in range(n)]
    hi = [min(decomp.g_star[v], upper[v]) for v in range(n)]
    pinned = [0] * n
    for h in fixed_head.values():
        pinned[h] += 1
    free = [e for e in range(G.m) if e not in fixed_head]
    k = len(free)
    q = len(decomp.partition)
    # nodes: free edges, graph nodes, block hubs, sigma
    hub = k + n
    sigma = hub + q
    deg = D.indegree()
    arcs_c, lb, ub, cc = [], [], [], []
    costs = G.cost or [(0, 0)] * G.m
    for i, e in enumerate(free):
        u, v = G.edges[e]
        arcs_c += [(sigma, i), (i, k + v), (i, k + u)]
        lb += [1, 0, 0]
        ub += [1, 1, 1]
        cc += [0, costs[e][0], costs[e][1]]
    for v in range(n):
        arcs_c.append((k + v, hub + decomp.block_of(v)))
        lb.append(lo[v] - pinned[v])
        ub.append(hi[v] - pinned[v])
        cc.append(0)
    for j, blk in enumerate(decomp.partition):
        need = sum(deg[v] - pinned[v] for v in members(blk))
        arcs_c.append((hub + j, sigma))
        lb.append(need)
        ub.append(need)
        cc.append(0)
    z, _ = min_cost_circulation(Digraph(sigma + 1, arcs_c), ArcBounds(lb, ub), cc)
    heads = list(D.heads)
    for e, h in fixed_head.items():
        heads[e] = h
    for i, e in enumerate(free):
        u, v = G.edges[e]
        heads[e] = v if z[3 * i + 1] else u
    best = Orientation(G, heads)
    forced = sorted((G.edges[e][0] if h == G.edges[e][1] else G.edges[e][1], h)
                    for e, h in fixed_head.items())
    return CheapestOrientation(best, best.cost(), z_chain, forced, decomp)


# ------------------------------------------------------ connectivity

def _bridges(G: UndirGraph) -> list[int]:
    n = G.n
    adj = [[] for _ in range(n)]
    for e, (u, v) in enumerate(G.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, pe, it = stack[-1]
            advanced = False
            for v, e in it:
                if e == pe:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, e, iter(adj[v])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    w = stack[-1][0]
                    low[w] = min(low[w], low[u])
                    if low[u] > disc[w]:
                        out.append(pe)
    return sorted(out)


def _component(G: UndirGraph, start: int, skip: int = -1) -> int:
    adj = [[] for _ in range(G.n)]
    for e, (u, v) in enumerate(G.edges):
        if e != skip:
            adj[u].append(v)
            adj[v].append(u)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return to_mask(seen)


def check_two_edge_connected(G: UndirGraph) -> None:
    if G.n <= 1:
        return
    comp = _component(G, 0)
    if comp != (1 << G.n) - 1:
        raise InfeasibleError("graph is disconnected", subset=members(comp),
                              reason="no edge leaves the subset")
    br = _bridges(G)
    if br:
        e = br[0]
        side = _component(G, G.edges[e][0], skip=e)
        raise InfeasibleError(f"edge {G.edges[e]} is a bridge", subset=members(side),
                              reason=f"only edge {e} leaves the subset")


def strong_orientation(G: UndirGraph) -> Orientation:
    """Strongly connected orientation by depth-first search.

    Tree edges point away from the root, all others toward the endpoint
    discovered first.
    """
    check_two_edge_connected(G)
    n = G.n
    adj = [[] for _ in range(n)]
    for e, (u, v) in enumerate(G.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    disc = [-1] * n
    heads = [None] * G.m
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = timer
        timer += 1
        stack = [(root, iter(adj[root]))]
        while stack:
            u, it = stack[-1]
            for v, e in it:
                if heads[e] is not None:
                    continue
                if disc[v] == -1:
                    heads[e] = v
                    disc[v] = timer
                    timer += 1
                    stack.append((v, iter(adj[v])))
                    break
                heads[e] = v if disc[v] < disc[u] else u
            else:
                stack.pop()
    return Orientation(G, heads)


def decmin_strong_orientation(G: UndirGraph) -> Orientation:
    """Dec-min in-degrees among strongly connected orientations.

    An improving move from ``t`` to ``s`` keeps strong connectivity iff
    there are two arc-disjoint ``s -> t`` dipaths; then reversing any one
    ``s -> t`` dipath does it.
    """
    D = strong_orientation(G)
    n = G.n
    while True:
        deg = D.indegree()
        arcs = D.arcs()
        step = None
        for t in sorted(range(n), key=lambda v: (-deg[v], v)):
            for s in sorted(range(n), key=lambda v: (deg[v], v)):
                if deg[t] < deg[s] + 2:
                    break
                if _arc_disjoint_paths(n, arcs, s, t, 2):
                    order, nxt = _bfs_to(n, arcs, t)
                    step = _path_to(nxt, arcs, s, t)
                    break
            if step:
                break
        if step is None:
            return D
        for e in step:
            D.reverse(e)


def kl_requirement(n: int, k: int, l: int, root: int):
    """``h(X)``: ``k`` for sets avoiding the root, ``l`` for proper sets containing it."""
    full = (1 << n) - 1

    def h(x: int) -> int:
        if x == 0 or x == full:
            return 0
        return l if x >> root & 1 else k

    return h


def kl_function(G: UndirGraph, k: int, l: int, root: int) -> SetFunctionOracle:
    h = kl_requirement(G.n, k, l, root)
    return SetFunctionOracle(G.ground(), lambda x: h(x) + G.induced(x), "supermodular", "crossing")


def is_kl_connected(n: int, arcs, k: int, l: int, root: int) -> bool:
    """Every node has ``k`` arc-disjoint paths from the root and ``l`` to it."""
    for v in range(n):
        if v == root:
            continue
        if not _arc_disjoint_paths(n, arcs, root, v, k):
            return False
        if not _arc_disjoint_paths(n, arcs, v, root, l):
            return False
    return True


def decmin_kec_orientation(G: UndirGraph, k: int, l: int, root: int = 0,
                           bounds: NodeBounds | None = None) -> Orientation:
    """Dec-min in-degrees among ``(k, l)``-edge-connected orientations.

    ``(k, l)``-edge-connected means ``k`` arc-disjoint paths from ``root``
    to every node and ``l`` back; with ``k = l`` it is plain
    ``k``-edge-connectivity.  An improving move ``t -> s`` must leave every
    set containing ``t`` but not ``s`` one arc above its requirement, which
    is checked by at most two max-flow computations.
    """
    lower, upper = _bounds(G, bounds)
    n = G.n
    p = kl_function(G, k, l, root)
    if bounds is not None:
        p = fold_box(p, lower, upper)
    m = base_member(p)
    D = orient_with_indegree(G, m)
    while True:
        deg = D.indegree()
        arcs = D.arcs()
        step = None
        for t in sorted(range(n), key=lambda v: (-deg[v], v)):
            if deg[t] <= lower[t]:
                continue
            for s in sorted(range(n), key=lambda v: (deg[v], v)):
                if deg[t] < deg[s] + 2:
                    break
                if deg[s] >= upper[s] or not _kl_exchange(n, arcs, s, t, k, l, root):
                    continue
                order, nxt = _bfs_to(n, arcs, t)
                step = _path_to(nxt, arcs, s, t)
                break
            if step:
                break
        if step is None:
            return D
        for e in step:
            D.reverse(e)


def _kl_exchange(n, arcs, s, t, k, l, root) -> bool:
    if s == root:
        return _arc_disjoint_paths(n, arcs, s, t, k + 1)
    if t == root:
        return _arc_disjoint_paths(n, arcs, s, t, l + 1)
    return (_arc_disjoint_paths(n, arcs, [s, root], t, k + 1)
            and _arc_disjoint_paths(n, arcs, s, [t, root], l + 1))


# -------------------------------------------------- in-degree of a subset

@dataclass
class MinIndegreeResult:
    orientation: Orientation
    x_t: int
    bounds: NodeBounds


def min_indegree_T_orientation(G: UndirGraph, bounds: NodeBounds | None, T: Sequence[int]) -> MinIndegreeResult:
    """Bounded orientation with the least total in-degree on ``T``.

    In-degree is pushed out of ``T`` along dipaths from nodes outside
    ``T`` with room below their upper bound.  At the end no such path
    exists; ``X_T`` collects the nodes that reach a node of ``T`` above its
    lower bound, and the returned bounds pin the nodes whose in-degree every
    optimal orientation shares.
    """
    lower, upper = _bounds(G, bounds)
    n = G.n
    tmask = to_mask(T)
    D = _orient_by_flow(G, lower, upper)
    while True:
        deg = D.indegree()
        arcs = D.arcs()
        starts = [v for v in range(n) if not tmask >> v & 1 and deg[v] < upper[v]]
        order, prev = _bfs_from(n, arcs, starts)
        hit = next((v for v in order if tmask >> v & 1 and deg[v] > lower[v]), None)
        if hit is None:
            break
        for e in _path_from(prev, arcs, hit):
            D.reverse(e)
    deg = D.indegree()
    arcs = D.arcs()
    targets = [v for v in range(n) if tmask >> v & 1 and deg[v] > lower[v]]
    x_t = 0
    for t in targets:
        x_t |= reaches(n, arcs, t)
    f2, g2 = list(lower), list(upper)
    for v in range(n):
        if x_t >> v & 1 and not tmask >> v & 1:
            f2[v] = upper[v]
        if tmask >> v & 1 and not x_t >> v & 1:
            g2[v] = lower[v]
    return MinIndegreeResult(D, x_t, NodeBounds(f2, g2))


# ------------------------------------------------------ capacitated

@dataclass
class CapacitatedOrientation:
    """``toward_second[e]`` of the ``mult[e]`` copies of edge ``(u, v)`` point to ``v``."""

    graph: UndirGraph
    toward_second: tuple
    indegree: tuple

    def to_json(self) -> dict:
        return {"toward_second": list(self.toward_second), "indegree": list(self.indegree)}


def capacitated_handle(G: UndirGraph, bounds: NodeBounds | None = None) -> tuple[MConvexHandle, Digraph, list]:
    """Handle for in-degree vectors of capacitated orientations.

    With ``z`` the number of copies of ``(u, v)`` sent to ``v`` on the
    reference arc ``u -> v``, the in-degree is the net in-flow of ``z`` plus
    the out-capacity of each node, so the set is a shifted net in-flow set.
    """
    mult = G.mult or [1] * G.m
    D = Digraph(G.n, list(G.edges), G.labels)
    cap = ArcBounds([0] * G.m, list(mult))
    shift = [0] * G.n
    for (u, _), c in zip(G.edges, mult):
        shift[u] += c
    h = translate(netinflow_handle(D, cap), shift)
    if bounds is not None:
        lower, upper = _bounds(G, bounds)
        tau = G.n
        ext = Digraph(G.n + 1, list(G.edges) + [(v, tau) for v in range(G.n)])
        ext_bounds = ArcBounds(
            [0] * G.m + [lower[v] - shift[v] if is_finite(lower[v]) else NEG_INF for v in range(G.n)],
            list(mult) + [upper[v] - shift[v] if is_finite(upper[v]) else POS_INF for v in range(G.n)])

        def member():
            z = feasible_m_flow(ext, ext_bounds, [0] * (G.n + 1))
            deg = list(shift)
            for (u, v), val in zip(G.edges, z):
                deg[v] += val
                deg[u] -= val
            return tuple(deg)

        h = box_intersect(h, lower, upper, member=member)
    return h, D, shift


def capacitated_decmin_orientation(G: UndirGraph, bounds: NodeBounds | None = None) -> CapacitatedOrientation:
    h, D, shift = capacitated_handle(G, bounds)
    h.get_member()
    m = decmin_strong(h).vector
    mult = G.mult or [1] * G.m
    z = feasible_m_flow(D, ArcBounds([0] * G.m, list(mult)), [a - b for a, b in zip(m, shift)])
    return CapacitatedOrientation(G, tuple(z), tuple(m))
