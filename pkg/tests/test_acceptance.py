"""Acceptance criteria 1-9, one test each, exact comparisons throughout.

Every test prints a single ``[PASS]``/``[FAIL]`` line through the
``verdict`` fixture before asserting.  Criterion ``k`` draws its random
instances from ``random.Random(k)``.
"""

from __future__ import annotations

import functools
import itertools
import random
import time
from dataclasses import dataclass

from decmin import instances
from decmin.mconvex import (
    box_intersect,
    canonical_chain,
    dec_compare,
    decmin_basic,
    decmin_strong,
    handle_from_supermodular,
    base_member,
)
from decmin.netflow import feasible_m_flow, max_flow_min_cut, megiddo_discrete, net_inflow, Digraph
from decmin.errors import InfeasibleError
from decmin.oracle import (
    canonical_by_definition,
    check_equivalences,
    enumerate_base_elements,
    enumerate_megiddo,
    enumerate_orientations,
    enumerate_semimatchings,
    hoffman_violation,
)
from decmin.orient import (
    Orientation,
    UndirGraph,
    capacitated_decmin_orientation,
    cheapest_decmin_orientation,
    decmin_orientation,
    decmin_strong_orientation,
    induced_edges_function,
    is_strongly_connected,
    orient_with_indegree,
    orientation_canonical,
)
from decmin.semimatching import semimatching_decmin
from decmin.setfn import POS_INF, members, popcount

from gen import random_bipartite, random_bounds, random_box, random_digraph, random_fully_supermodular, random_graph


def subset_sum(x, mask):
    return sum(x[v] for v in members(mask))


# ------------------------------------------------------ shared instance pool

@dataclass
class Instance:
    name: str
    n: int
    handle: object
    report: object
    outputs: list
    graph: UndirGraph | None = None


@functools.lru_cache(maxsize=None)
def equivalence_pool() -> tuple[list[Instance], float]:
    """Random graphs with at most 7 edges and boxed fully supermodular functions, n <= 5."""
    rng = random.Random(1)
    start = time.perf_counter()
    pool = []
    for i in range(30):
        G = random_graph(rng, n_max=5, m_max=7)
        h = handle_from_supermodular(induced_edges_function(G))
        outs = [decmin_orientation(G).indegree(), decmin_strong(h).vector, decmin_basic(h)]
        pool.append(Instance(f"graph {i}", G.n, h, enumerate_orientations(G), outs, G))
    for i in range(30):
        p = random_fully_supermodular(rng, rng.randint(1, 5))
        lower, upper = random_box(rng, base_member(p), width=4)
        h = box_intersect(handle_from_supermodular(p), lower, upper)
        outs = [decmin_strong(h).vector, decmin_basic(h)]
        pool.append(Instance(f"function {i}", p.n, h, enumerate_base_elements(p, (lower, upper)), outs))
    return pool, time.perf_counter() - start


def enumerated_function(inst: Instance):
    """``X -> min x(X)`` over the enumerated set."""
    return [min(subset_sum(x, mask) for x in inst.report.vectors) for mask in range(1 << inst.n)]


# ---------------------------------------------------------------- criterion 1

def test_criterion_1_equivalence_suite(verdict):
    pool, elapsed = equivalence_pool()
    bad = [inst.name for inst in pool
           if not check_equivalences(inst.report)
           or any(tuple(out) not in inst.report.decmin_set for out in inst.outputs)]
    ok = len(pool) >= 50 and not bad and elapsed < 60
    verdict(1, ok, f"{len(pool)} instances, {len(bad)} failing {bad[:3]}, {elapsed:.2f}s (< 60s)")
    assert ok


# ---------------------------------------------------------------- criterion 2

def test_criterion_2_newton_dinkelbach(verdict):
    pool, _ = equivalence_pool()
    bad = []
    for inst in pool:
        res = decmin_strong(inst.handle)
        for nd in res.rounds:
            sizes = [popcount(x) for x in nd.sets]
            if not (all(a < b for a, b in zip(nd.mus, nd.mus[1:]))
                    and all(a > b for a, b in zip(sizes, sizes[1:]))
                    and len(nd.sets) <= inst.n):
                bad.append(inst.name)
        p = enumerated_function(inst)
        beta1 = max(-(-p[x] // popcount(x)) for x in range(1, 1 << inst.n))
        if res.rounds[0].beta1 != beta1:
            bad.append(inst.name)
    ok = not bad
    verdict(2, ok, f"{len(pool)} traces checked, {len(bad)} failing {bad[:3]}")
    assert ok


# ---------------------------------------------------------------- criterion 3

def test_criterion_3_canonical_invariance(verdict):
    pool, _ = equivalence_pool()
    bad, checked = [], 0
    for inst in pool:
        dset = inst.report.decmin_set
        if len(dset) < 2:
            continue
        checked += 1
        if inst.graph is not None:
            found = [orientation_canonical(inst.graph, None, orient_with_indegree(inst.graph, m))[1] for m in dset]
        else:
            found = [canonical_chain(inst.handle, m) for m in dset]
        reference = canonical_by_definition(inst.report.vectors, dset[0])
        if any(d != found[0] for d in found) or found[0] != reference:
            bad.append(inst.name)
    ok = checked > 0 and not bad
    verdict(3, ok, f"{checked} instances with several dec-min elements, {len(bad)} failing {bad[:3]}")
    assert ok


# ---------------------------------------------------------------- criterion 4

def test_criterion_4_mixed_graphs(verdict):
    start = time.perf_counter()
    total = enumerate_orientations(instances.mixed_total_example(), predicate="strong")
    part = enumerate_orientations(instances.mixed_undirected_example(), predicate="strong", vector="undirected")
    elapsed = time.perf_counter() - start
    first, second = (3, 1, 1, 1, 1, 1, 1, 1), (2, 2, 0, 2, 1, 1, 1, 1)
    ok = (set(total.vectors) == {(3, 1, 3, 3), (2, 2, 2, 4)}
          and total.decmin_set == [(3, 1, 3, 3)] and total.incmax_set == [(2, 2, 2, 4)]
          and set(part.vectors) == {first, second}
          and part.incmax_set == [first] and part.decmin_set == [second]
          and elapsed < 1)
    verdict(4, ok, f"total {total.vectors}, free-edge {part.vectors}, {elapsed * 1000:.1f}ms (< 1s)")
    assert ok


# ---------------------------------------------------------------- criterion 5

def structural_set(G, report, res):
    """Bounded orientations with in-degrees in the small box and no arc leaving any ``Z_i``."""
    dec = res.decomposition
    out = set()
    for vec, witnesses in report.witnesses.items():
        if any(not dec.f_star[v] <= vec[v] <= dec.g_star[v] for v in range(G.n)):
            continue
        for heads in witnesses:
            arcs = Orientation(G, list(heads)).arcs()
            if all(not any(z >> u & 1 and not z >> v & 1 for u, v in arcs) for z in res.z_chain):
                out.add(heads)
    return out


def test_criterion_5_cheapest_structure(verdict):
    rng = random.Random(5)
    count = 40
    set_bad, cost_bad = [], []
    for i in range(count):
        G = random_graph(rng, m_max=6, with_cost=True)
        b = random_bounds(rng, G)
        report = enumerate_orientations(G, b)
        res = cheapest_decmin_orientation(G, b)
        decmin_heads = {h for v in report.decmin_set for h in report.witnesses[v]}
        if structural_set(G, report, res) != decmin_heads:
            set_bad.append(i)
        best = min(Orientation(G, list(h)).cost() for h in decmin_heads)
        if res.cost != best or tuple(res.orientation.heads) not in decmin_heads:
            cost_bad.append(i)
    ok = not set_bad and not cost_bad
    verdict(5, ok, f"{count} instances; structural set differs from dec-min set on {len(set_bad)} {set_bad}; "
                   f"cheapest cost wrong on {len(cost_bad)} {cost_bad}")
    assert ok


# ---------------------------------------------------------------- criterion 6

def connected(n, edges):
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == n


def two_edge_connected_graphs(max_edges=6):
    """Every labelled simple 2-edge-connected graph with at most ``max_edges`` edges."""
    for n in range(3, max_edges + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for m in range(n, max_edges + 1):
            for edges in itertools.combinations(pairs, m):
                deg = [0] * n
                for u, v in edges:
                    deg[u] += 1
                    deg[v] += 1
                if min(deg) < 2 or not connected(n, edges):
                    continue
                if all(connected(n, edges[:i] + edges[i + 1:]) for i in range(m)):
                    yield UndirGraph(n, list(edges))


def reach(arcs, s):
    seen, stack = {s}, [s]
    while stack:
        u = stack.pop()
        for a, b in arcs:
            if a == u and b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def two_arc_disjoint_paths(arcs, s, t):
    # two arc-disjoint s-t paths iff no single arc separates t from s
    return t in reach(arcs, s) and all(t in reach(arcs[:i] + arcs[i + 1:], s) for i in range(len(arcs)))


def test_criterion_6_strong_orientations(verdict):
    graphs = list(two_edge_connected_graphs()) + [instances.complete(4), instances.theta()]
    bad = []
    for i, G in enumerate(graphs):
        D = decmin_strong_orientation(G)
        arcs, deg = D.arcs(), D.indegree()
        report = enumerate_orientations(G, predicate="strong")
        improvable = any(deg[t] >= deg[s] + 2 and two_arc_disjoint_paths(arcs, s, t)
                         for s in range(G.n) for t in range(G.n) if s != t)
        if not is_strongly_connected(G.n, arcs) or deg not in report.decmin_set or improvable:
            bad.append(i)
    ok = not bad
    verdict(6, ok, f"{len(graphs)} graphs, {len(bad)} failing {bad[:3]}")
    assert ok


# ---------------------------------------------------------------- criterion 7

def test_criterion_7_capacitated(verdict):
    G = UndirGraph(2, [(0, 1)], mult=[10**6])
    start = time.perf_counter()
    res = capacitated_decmin_orientation(G)
    elapsed = time.perf_counter() - start
    big_ok = res.indegree == (500000, 500000) and elapsed < 0.1
    rng = random.Random(7)
    bad = []
    for i in range(20):
        H = random_graph(rng)
        unit = UndirGraph(H.n, H.edges, mult=[1] * H.m)
        if dec_compare(capacitated_decmin_orientation(unit).indegree, decmin_orientation(H).indegree()) != 0:
            bad.append(i)
    ok = big_ok and not bad
    verdict(7, ok, f"l=10^6 gives {res.indegree} in {elapsed * 1000:.2f}ms (< 100ms); "
                   f"unit capacities differ on {len(bad)}/20")
    assert ok


# ---------------------------------------------------------------- criterion 8

def test_criterion_8_flows(verdict):
    rng = random.Random(8)
    flow_bad = []
    for i in range(60):
        D, b = random_digraph(rng, n_max=5, m_max=7, lo=-2, hi=2)
        m = [rng.randint(-2, 2) for _ in range(D.n - 1)]
        m.append(-sum(m))
        passes = hoffman_violation(D, b, m) is None
        try:
            z = feasible_m_flow(D, b, m)
        except InfeasibleError:
            if passes:
                flow_bad.append(i)
        else:
            valid = net_inflow(D, z) == tuple(m) and all(lo <= x <= hi for x, lo, hi in zip(z, b.lower, b.upper))
            if not passes or not valid:
                flow_bad.append(i)
    megiddo_bad, done = [], 0
    while done < 25:
        n = rng.randint(3, 5)
        D = Digraph(n, [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(2, 6))])
        cap = [rng.randint(0, 2) for _ in D.arcs]
        S, T = list(range(rng.randint(1, n - 2))), [n - 1]
        value = rng.randint(0, max_flow_min_cut(D, cap, S, T)[0])
        res = megiddo_discrete(D, cap, S, T, value)
        report = enumerate_megiddo(D, cap, S, T, value)
        if tuple(-v for v in res.vector) not in report.incmax_set:
            megiddo_bad.append(done)
        done += 1
    ok = not flow_bad and not megiddo_bad
    verdict(8, ok, f"60 m-flow instances, {len(flow_bad)} disagree with the subset scan; "
                   f"25 Megiddo instances, {len(megiddo_bad)} not inc-max")
    assert ok


# ---------------------------------------------------------------- criterion 9

def test_criterion_9_semimatchings(verdict):
    rng = random.Random(9)
    bad = []
    count = 25
    for i in range(count):
        G, S, T = random_bipartite(rng, s_max=4, t_max=4)
        n = G.n
        unit = enumerate_semimatchings(G, S, T, client_degree=[1] * n)
        res = semimatching_decmin(G, S, T)
        best = min(sum(d * (d + 1) for d in v) for v in unit.vectors)
        if res.completion_time != best or res.load not in unit.decmin_set:
            bad.append((i, "unit"))

        deg = G.degrees()
        m_T = [rng.randint(0, deg[v]) if v in T else 0 for v in range(n)]
        spec = enumerate_semimatchings(G, S, T, client_degree=m_T)
        if semimatching_decmin(G, S, T, "spec", m_T=m_T).load not in spec.decmin_set:
            bad.append((i, "spec"))

        f_S, g_S = [0] * n, [POS_INF] * n
        for s in S:
            g_S[s] = rng.randint(1, 3)
        bounded = enumerate_semimatchings(G, S, T, f_S=f_S, g_S=g_S, max_size=True)
        if semimatching_decmin(G, S, T, "bounded", f_S=f_S, g_S=g_S).load not in bounded.decmin_set:
            bad.append((i, "bounded"))

        size = rng.randint(0, len(T))
        fixed = enumerate_semimatchings(G, S, T, f_S=f_S, size=size)
        if semimatching_decmin(G, S, T, "fixed_size", f_S=f_S, size=size).load not in fixed.decmin_set:
            bad.append((i, "fixed_size"))

        cost = [rng.randint(0, 4) for _ in G.edges]
        res = semimatching_decmin(G, S, T, cost=cost)
        cheapest = min(sum(k * c for k, c in zip(z, cost)) for v in unit.decmin_set for z in unit.witnesses[v])
        if res.load not in unit.decmin_set or sum(k * c for k, c in zip(res.z, cost)) != cheapest:
            bad.append((i, "min_cost"))
    ok = not bad
    verdict(9, ok, f"{count} bipartite instances x 5 variants, {len(bad)} failing {bad[:3]}")
    assert ok
