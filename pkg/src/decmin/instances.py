"""Small named instances used in examples, tests and ``decmin verify``."""

from __future__ import annotations

from .orient import MixedGraph, UndirGraph


def triangle() -> UndirGraph:
    return UndirGraph(3, [(0, 1), (0, 2), (1, 2)], labels=["a", "b", "c"])


def complete(n: int) -> UndirGraph:
    return UndirGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k4_pendant() -> UndirGraph:
    """``K4`` on nodes 0..3 plus a pendant node 4 attached to node 3."""
    return UndirGraph(5, complete(4).edges + [(3, 4)])


def cycle(n: int) -> UndirGraph:
    return UndirGraph(n, [(i, (i + 1) % n) for i in range(n)])


def theta() -> UndirGraph:
    """Two poles 0 and 1 joined by three paths of length two."""
    return UndirGraph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def octahedron() -> UndirGraph:
    """``K_{2,2,2}``: nodes ``2i`` and ``2i+1`` are the non-adjacent pairs."""
    return UndirGraph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2])


def mixed_total_example() -> MixedGraph:
    """Mixed graph whose dec-min and inc-max strong orientations differ.

    Edges ``ab`` and ``dc`` are free; the fixed arcs give in-degrees
    ``(2, 1, 2, 3)``.  Exactly two orientations are strong: ``ba, dc`` with
    total in-degrees ``(3, 1, 3, 3)`` and ``ab, cd`` with ``(2, 2, 2, 4)``.
    """
    a, b, c, d = range(4)
    arcs = [(a, d)] * 3 + [(b, c)] * 2 + [(c, b)] + [(d, a)] * 2
    return MixedGraph(4, [(a, b), (d, c)], arcs, labels=["a", "b", "c", "d"])


def mixed_undirected_example() -> MixedGraph:
    """Variant measured on the free edges only.

    Nodes ``a, b, c, d, u, v, x, y``.  The free edges are ``ab``, ``dc`` and
    four parallel pairs ``au, av, bx, dy``; a strong orientation must
    direct each pair both ways.  The two strong choices for ``ab, dc`` give
    free-edge in-degrees ``(3,1,1,1,1,1,1,1)`` and ``(2,2,0,2,1,1,1,1)``.
    """
    a, b, c, d, u, v, x, y = range(8)
    pairs = [(a, u), (a, v), (b, x), (d, y)]
    edges = [(a, b), (d, c)] + [e for e in pairs for _ in range(2)]
    arcs = [(a, d), (b, c), (c, b), (d, a)]
    return MixedGraph(8, edges, arcs, labels=list("abcduvxy"))


NAMED = {
    "triangle": triangle,
    "k4": lambda: complete(4),
    "k4-pendant": k4_pendant,
    "c4": lambda: cycle(4),
    "theta": theta,
    "octahedron": octahedron,
    "mixed-total": mixed_total_example,
    "mixed-undirected": mixed_undirected_example,
}
