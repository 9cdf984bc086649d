"""Flows with lower and upper arc bounds, and net-in-flow vectors.

Everything is integral.  Infinite bounds are replaced internally by a
finite big number ``M = sum of |finite bounds| + |m|_1 + 1``, which is
large enough that no cut through such an arc can be minimum while a
finite one exists.

Max flow is Edmonds-Karp: breadth-first augmenting paths, arcs scanned in
insertion order, so results are reproducible.  Min-cost circulation
cancels negative cycles found by Bellman-Ford.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DecminError, InfeasibleError
from .mconvex import MConvexHandle, box_function, decmin_strong
from .setfn import NEG_INF, POS_INF, GroundSet, SetFunctionOracle, is_finite, members, to_mask


@dataclass
class Digraph:
    """Directed multigraph on nodes ``0..n-1``; arcs are ``(tail, head)`` pairs."""

    n: int
    arcs: list[tuple[int, int]]
    labels: list[str] | None = None

    def __post_init__(self):
        self.arcs = [tuple(a) for a in self.arcs]
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def ground(self) -> GroundSet:
        return GroundSet(self.n, self.labels)


@dataclass
class ArcBounds:
    lower: list
    upper: list

    @classmethod
    def uniform(cls, m: int, lower=0, upper=POS_INF) -> "ArcBounds":
        return cls([lower] * m, [upper] * m)

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper bounds differ in length")
        for a, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo > hi:
                raise ValueError(f"arc {a}: lower bound {lo} exceeds upper bound {hi}")


FlowVector = tuple


def net_inflow(D: Digraph, z: Sequence[int]) -> tuple:
    psi = [0] * D.n
    for (u, v), val in zip(D.arcs, z):
        psi[v] += val
        psi[u] -= val
    return tuple(psi)


class _Network:
    """Residual network for Edmonds-Karp.  Edge ``i ^ 1`` is the reverse of ``i``."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, c: int) -> int:
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [c, 0]
        self.adj[u].append(idx)
        self.adj[v].append(idx + 1)
        return idx

    def flow_on(self, idx: int) -> int:
        return self.cap[idx ^ 1]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            pred = [-1] * self.n
            pred[s] = -2
            queue = deque([s])
            while queue and pred[t] == -1:
                u = queue.popleft()
                for e in self.adj[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and pred[v] == -1:
                        pred[v] = e
                        queue.append(v)
            if pred[t] == -1:
                return total
            push = None
            v = t
            while v != s:
                e = pred[v]
                push = self.cap[e] if push is None else min(push, self.cap[e])
                v = self.to[e ^ 1]
            v = t
            while v != s:
                e = pred[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.to[e ^ 1]
            total += push

    def reachable(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _as_mask(nodes) -> int:
    if isinstance(nodes, int):
        return 1 << nodes
    return to_mask(nodes)


def max_flow_min_cut(D: Digraph, cap: Sequence, s, t) -> tuple[int, FlowVector, int]:
    """Maximum flow from ``s`` to ``t`` (nodes or node sets) under arc capacities.

    Returns ``(value, flow, cut)`` where ``cut`` is the mask of nodes
    reachable from the sources in the final residual network.  An infinite
    value is reported as ``POS_INF``.
    """
    src, snk = _as_mask(s), _as_mask(t)
    if src & snk:
        raise ValueError("source and sink sets overlap")
    big = sum(c for c in cap if is_finite(c)) + 1
    net = _Network(D.n + 2)
    sigma, tau = D.n, D.n + 1
    idx = [net.add(u, v, c if is_finite(c) else big) for (u, v), c in zip(D.arcs, cap)]
    inf_src = (D.m + 1) * big
    for v in members(src):
        net.add(sigma, v, inf_src)
    for v in members(snk):
        net.add(v, tau, inf_src)
    value = net.max_flow(sigma, tau)
    side = net.reachable(sigma)
    cut = to_mask(v for v in range(D.n) if side[v])
    if value >= big:
        return POS_INF, tuple(net.flow_on(i) for i in idx), cut
    return value, tuple(net.flow_on(i) for i in idx), cut


def _finite_bounds(bounds: ArcBounds, m: Sequence[int] = ()) -> tuple[list[int], list[int]]:
    big = sum(abs(v) for v in list(bounds.lower) + list(bounds.upper) if is_finite(v))
    big += sum(abs(v) for v in m) + 1
    lower = [v if is_finite(v) else -big for v in bounds.lower]
    upper = [v if is_finite(v) else big for v in bounds.upper]
    return lower, upper


def _solve_m_flow(D: Digraph, bounds: ArcBounds, m: Sequence[int]):
    """Flow with net in-flow ``m``, or ``(None, X)`` with ``X`` most violating."""
    if len(m) != D.n:
        raise ValueError("demand vector has wrong length")
    if sum(m) != 0:
        raise ValueError("net in-flow vector must sum to zero")
    lower, upper = _finite_bounds(bounds, m)
    net = _Network(D.n + 2)
    sigma, tau = D.n, D.n + 1
    idx = [net.add(u, v, hi - lo) for (u, v), lo, hi in zip(D.arcs, lower, upper)]
    base = net_inflow(D, lower)
    need = 0
    for v in range(D.n):
        d = m[v] - base[v]
        if d > 0:
            net.add(v, tau, d)
            need += d
        elif d < 0:
            net.add(sigma, v, -d)
    if net.max_flow(sigma, tau) == need:
        return tuple(lo + net.flow_on(i) for lo, i in zip(lower, idx)), None
    side = net.reachable(sigma)
    return None, to_mask(v for v in range(D.n) if side[v])


def inflow_bound(D: Digraph, bounds: ArcBounds, x: int):
    """``p_fg(X)``: least in-flow into ``X`` over all flows within the bounds."""
    val = 0
    for a, (u, v) in enumerate(D.arcs):
        if (x >> v & 1) and not (x >> u & 1):
            val += bounds.lower[a]
        elif (x >> u & 1) and not (x >> v & 1):
            val -= bounds.upper[a]
        if val == NEG_INF:
            return NEG_INF
    return val


def feasible_m_flow(D: Digraph, bounds: ArcBounds, m: Sequence[int]) -> FlowVector:
    """Flow within the bounds whose net in-flow is ``m``.

    When none exists, raises :class:`InfeasibleError` carrying the set
    ``X`` maximising ``p_fg(X) - m(X)``, which is then positive.
    """
    z, cut = _solve_m_flow(D, bounds, m)
    if z is not None:
        return z
    gap = inflow_bound(D, bounds, cut) - sum(m[v] for v in members(cut))
    err = InfeasibleError("no flow with the requested net in-flow", subset=members(cut),
                          reason=f"least in-flow exceeds demand by {gap}")
    err.violation = gap
    raise err


def netinflow_function(D: Digraph, bounds: ArcBounds) -> SetFunctionOracle:
    return SetFunctionOracle(D.ground(), lambda x: inflow_bound(D, bounds, x), "supermodular", "fully")


def netinflow_handle(D: Digraph, bounds: ArcBounds) -> MConvexHandle:
    """Handle for the net in-flow vectors of feasible flows.

    Exchange and membership are decided by one max-flow computation each.
    """
    def member():
        pick = [lo if is_finite(lo) else (hi if is_finite(hi) else 0)
                for lo, hi in zip(bounds.lower, bounds.upper)]
        return net_inflow(D, pick)

    def contains(x):
        return _solve_m_flow(D, bounds, x)[0] is not None

    def exchange(m, s, t):
        if s == t:
            return True
        x = list(m)
        x[s] += 1
        x[t] -= 1
        return contains(x)

    return MConvexHandle(n=D.n, total=0, exchange_feasible=exchange, member=member,
                         p_oracle=netinflow_function(D, bounds), contains=contains,
                         labels=D.labels)


def min_cost_circulation(D: Digraph, bounds: ArcBounds, cost: Sequence[int]) -> tuple[FlowVector, int]:
    """Cheapest circulation within the bounds; returns ``(flow, cost)``."""
    z = feasible_m_flow(D, bounds, [0] * D.n)
    lower, upper = _finite_bounds(bounds)
    z = list(z)
    unbounded_fwd = [not is_finite(g) for g in bounds.upper]
    unbounded_bwd = [not is_finite(f) for f in bounds.lower]
    while True:
        cycle = _negative_cycle(D, z, lower, upper, cost)
        if cycle is None:
            break
        if all(unbounded_fwd[a] if fwd else unbounded_bwd[a] for a, fwd in cycle):
            raise DecminError("circulation cost is unbounded below")
        push = min(upper[a] - z[a] if fwd else z[a] - lower[a] for a, fwd in cycle)
        for a, fwd in cycle:
            z[a] += push if fwd else -push
    return tuple(z), sum(c * v for c, v in zip(cost, z))


def _negative_cycle(D, z, lower, upper, cost):
    res = []
    for a, (u, v) in enumerate(D.arcs):
        if z[a] < upper[a]:
            res.append((u, v, cost[a], a, True))
        if z[a] > lower[a]:
            res.append((v, u, -cost[a], a, False))
    dist = [0] * D.n
    pred: list = [None] * D.n
    last = None
    for _ in range(D.n):
        last = None
        for u, v, c, a, fwd in res:
            if dist[u] + c < dist[v]:
                dist[v] = dist[u] + c
                pred[v] = (u, a, fwd)
                last = v
        if last is None:
            return None
    v = last
    for _ in range(D.n):
        v = pred[v][0]
    cycle, u = [], v
    while True:
        w, a, fwd = pred[u]
        cycle.append((a, fwd))
        u = w
        if u == v:
            break
    cycle.reverse()
    return cycle


# ------------------------------------------------------------ Megiddo

@dataclass
class MegiddoResult:
    """Outflows of the sources (as negative net in-flows) and a witness flow."""

    sources: list[int]
    vector: tuple
    flow: FlowVector


def megiddo_face_function(D: Digraph, cap: Sequence, sources: Sequence[int],
                          sinks: Sequence[int], value: int) -> SetFunctionOracle:
    """Set function of the source net in-flows of value-``value`` flows.

    Built from the net in-flow polyhedron by cutting with the box that
    forbids in-flow at sources, out-flow at sinks and anything elsewhere,
    projecting to the sources and taking the face of total ``-value``.
    """
    bounds = ArcBounds([0] * D.m, list(cap))
    lo, hi = [0] * D.n, [0] * D.n
    for s in sources:
        lo[s] = NEG_INF
    for t in sinks:
        hi[t] = POS_INF
    pbox = box_function(netinflow_function(D, bounds), lo, hi)
    full = (1 << D.n) - 1
    smask = to_mask(sources)
    top = pbox(full)

    def value_of(y: int):
        x = 0
        for i, s in enumerate(sources):
            if y >> i & 1:
                x |= 1 << s
        a = pbox(x)
        b = pbox(full & ~(smask & ~x))
        b = -value - top + b if is_finite(b) else NEG_INF
        return max(a, b)

    labels = [D.ground().labels[s] for s in sources]
    return SetFunctionOracle(GroundSet(len(sources), labels), value_of, "supermodular", "fully")


def megiddo_face_function_by_cuts(D: Digraph, cap: Sequence, sources: Sequence[int],
                                  sinks: Sequence[int], value: int) -> SetFunctionOracle:
    """Same function as :func:`megiddo_face_function`, as ``-min(value, maxflow(X, sinks))``."""
    def value_of(y: int):
        xs = [s for i, s in enumerate(sources) if y >> i & 1]
        if not xs:
            return 0
        f = max_flow_min_cut(D, cap, xs, list(sinks))[0]
        return -min(value, f)

    labels = [D.ground().labels[s] for s in sources]
    return SetFunctionOracle(GroundSet(len(sources), labels), value_of, "supermodular", "fully")


def _sink_extended(D: Digraph, cap: Sequence, sinks: Sequence[int]):
    tau = D.n
    arcs = list(D.arcs) + [(t, tau) for t in sinks]
    ext = Digraph(D.n + 1, arcs)
    bounds = ArcBounds([0] * len(arcs), list(cap) + [POS_INF] * len(sinks))
    return ext, bounds


def megiddo_discrete(D: Digraph, cap: Sequence, sources: Sequence[int], sinks: Sequence[int],
                     value: int) -> MegiddoResult:
    """Flow of the given value whose source outflow vector is increasingly maximal.

    Source net in-flows are at most zero, so increasing maximality of the
    outflows is decreasing minimality of the net in-flows, found on the
    face described by :func:`megiddo_face_function`.
    """
    sources, sinks = list(sources), list(sinks)
    if set(sources) & set(sinks):
        raise ValueError("sources and sinks overlap")
    best, _, cut = max_flow_min_cut(D, cap, sources, sinks)
    if best < value:
        raise InfeasibleError(f"maximum flow value is {best} < {value}", subset=members(cut),
                              reason="cut capacity below the requested value")
    ext, bounds = _sink_extended(D, cap, sinks)
    k = len(sources)

    def demand(y):
        m = [0] * ext.n
        for i, s in enumerate(sources):
            m[s] = y[i]
        m[ext.n - 1] = -sum(y)
        return m

    def contains(y):
        return sum(y) == -value and _solve_m_flow(ext, bounds, demand(y))[0] is not None

    def exchange(y, s, t):
        if s == t:
            return True
        x = list(y)
        x[s] += 1
        x[t] -= 1
        return contains(x)

    p3 = megiddo_face_function(D, cap, sources, sinks, value)
    h = MConvexHandle(n=k, total=-value, exchange_feasible=exchange, p_oracle=p3,
                      contains=contains)
    y = decmin_strong(h).vector
    z = feasible_m_flow(ext, bounds, demand(y))
    return MegiddoResult(sources, y, z[:D.m])
