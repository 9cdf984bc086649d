"""Seeded random instance generators shared by the test modules."""

from __future__ import annotations

import itertools
import random

from decmin.netflow import ArcBounds, Digraph
from decmin.orient import NodeBounds, UndirGraph
from decmin.setfn import ExplicitSetFunction, GroundSet, members, popcount


def random_graph(rng: random.Random, n_max: int = 5, m_max: int = 7, n_min: int = 2,
                 with_cost: bool = False) -> UndirGraph:
    """Multigraph with parallel edges allowed and no loops."""
    n = rng.randint(n_min, n_max)
    m = rng.randint(1, m_max)
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    cost = [(rng.randint(0, 5), rng.randint(0, 5)) for _ in edges] if with_cost else None
    return UndirGraph(n, edges, cost=cost)


def random_bounds(rng: random.Random, G: UndirGraph) -> NodeBounds:
    """Bounds around the in-degrees of a random orientation, so they are feasible."""
    deg = [0] * G.n
    for u, v in G.edges:
        deg[rng.choice((u, v))] += 1
    lower = [max(0, d - rng.randint(0, 2)) for d in deg]
    upper = [d + rng.randint(0, 2) for d in deg]
    return NodeBounds(lower, upper)


def random_fully_supermodular(rng: random.Random, n: int) -> ExplicitSetFunction:
    """Sum of nonnegatively weighted hyperedge indicators, a convex function of |X| and a modular part."""
    hyper = []
    for _ in range(rng.randint(1, 2 * n)):
        k = rng.randint(2, n) if n >= 2 else 1
        hyper.append((sum(1 << v for v in rng.sample(range(n), k)), rng.randint(0, 3)))
    modular = [rng.randint(-2, 2) for _ in range(n)]
    curve = [0]
    step = rng.randint(-1, 1)
    for _ in range(n):
        curve.append(curve[-1] + step)
        step += rng.randint(0, 1)
    values = []
    for x in range(1 << n):
        val = sum(w for e, w in hyper if x & e == e)
        val += sum(modular[v] for v in members(x))
        val += curve[popcount(x)]
        values.append(val)
    values = [v - values[0] for v in values]
    return ExplicitSetFunction(GroundSet(n), values, kind="supermodular", cls="fully")


def random_box(rng: random.Random, m, width: int = 4) -> tuple[list[int], list[int]]:
    """Box of width at most ``width`` per coordinate containing ``m``."""
    lower, upper = [], []
    for v in m:
        w = rng.randint(0, width)
        lo = v - rng.randint(0, w)
        lower.append(lo)
        upper.append(lo + w)
    return lower, upper


def random_digraph(rng: random.Random, n_max: int = 5, m_max: int = 7, lo: int = -2, hi: int = 2):
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    arcs = [tuple(rng.sample(range(n), 2)) for _ in range(m)]
    lower, upper = [], []
    for _ in arcs:
        a, b = sorted((rng.randint(lo, hi), rng.randint(lo, hi)))
        lower.append(a)
        upper.append(b)
    return Digraph(n, arcs), ArcBounds(lower, upper)


def random_bipartite(rng: random.Random, s_max: int = 4, t_max: int = 4, m_max: int = 9, with_cost=False):
    """Bipartite graph with servers ``0..|S|-1`` and clients after them; every client has an edge."""
    ns, nt = rng.randint(1, s_max), rng.randint(1, t_max)
    S, T = list(range(ns)), list(range(ns, ns + nt))
    pairs = set((rng.choice(S), t) for t in T)
    extra = rng.randint(0, max(0, m_max - len(pairs)))
    all_pairs = list(itertools.product(S, T))
    for _ in range(extra):
        pairs.add(rng.choice(all_pairs))
    edges = sorted(pairs)
    cost = [(rng.randint(0, 4), 0) for _ in edges] if with_cost else None
    return UndirGraph(ns + nt, edges, cost=cost), S, T
