"""Brute-force enumeration used to cross-check the solvers.

Everything here lists all feasible objects of a small instance and reads
the answers off by definition: dec-min and inc-max by sorting, square-sum
by summing, the canonical chain from tight sets of the enumerated set.  No
exchange test or flow algorithm is involved, so agreement with the solvers
is an independent confirmation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapacityError
from .mconvex import CanonicalDecomposition, _decomposition, square_sum, subset_sums
from .netflow import ArcBounds, Digraph, net_inflow
from .orient import MixedGraph, NodeBounds, UndirGraph, is_kl_connected, is_strongly_connected
from .setfn import POS_INF, SetFunctionOracle, check_enum, is_finite, members

MAX_FREE_EDGES = 22
MAX_BASE_N = 8
MAX_BASE_WIDTH = 6


def dec_key(x: Sequence[int]) -> list[int]:
    return sorted(x, reverse=True)


@dataclass
class EnumerationReport:
    """Distinct feasible vectors of an instance and the optima among them.

    ``witnesses`` maps each vector to the enumerated objects realising it
    (edge heads, flows, ...), when they were kept.
    """

    feasible_count: int
    vectors: list[tuple]
    decmin_set: list[tuple]
    incmax_set: list[tuple]
    squaresum_min_set: list[tuple]
    witnesses: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_vectors(cls, items: Iterable[tuple[tuple, object]]) -> "EnumerationReport":
        count = 0
        wit: dict[tuple, list] = {}
        for vec, obj in items:
            count += 1
            wit.setdefault(tuple(vec), []).append(obj)
        vectors = sorted(wit)
        if not vectors:
            return cls(0, [], [], [], [], {})
        dmin = min(dec_key(v) for v in vectors)
        imax = max(sorted(v) for v in vectors)
        smin = min(square_sum(v) for v in vectors)
        return cls(
            feasible_count=count,
            vectors=vectors,
            decmin_set=[v for v in vectors if dec_key(v) == dmin],
            incmax_set=[v for v in vectors if sorted(v) == imax],
            squaresum_min_set=[v for v in vectors if square_sum(v) == smin],
            witnesses=wit,
        )

    def canonical_from_enumeration(self) -> CanonicalDecomposition:
        return canonical_by_definition(self.vectors, self.decmin_set[0])

    def to_json(self) -> dict:
        return {
            "feasible_count": self.feasible_count,
            "distinct_vectors": len(self.vectors),
            "decmin_set": [list(v) for v in self.decmin_set],
            "incmax_set": [list(v) for v in self.incmax_set],
            "squaresum_min_set": [list(v) for v in self.squaresum_min_set],
            "equivalent": check_equivalences(self),
        }


def check_equivalences(report: EnumerationReport) -> bool:
    """Whether dec-min, inc-max and square-sum minimal vectors coincide."""
    return report.decmin_set == report.incmax_set == report.squaresum_min_set


def canonical_by_definition(vectors: Sequence[tuple], m: Sequence[int]) -> CanonicalDecomposition:
    """Canonical chain of a listed M-convex set, seen from its dec-min member ``m``.

    ``p(X) = min x(X)`` over the list gives the tight sets of ``m``; each
    chain member is the intersection of all tight sets containing the
    elements of value at least the current level.
    """
    n = len(m)
    check_enum(n)
    size = 1 << n
    p = [None] * size
    for v in vectors:
        sums = subset_sums(v)
        for x in range(size):
            if p[x] is None or sums[x] < p[x]:
                p[x] = sums[x]
    msum = subset_sums(m)
    tight = [x for x in range(size) if msum[x] == p[x]]
    full = size - 1
    chain = 0
    blocks, values = [], []
    while chain != full:
        beta = max(m[v] for v in range(n) if not chain >> v & 1)
        need = chain | sum(1 << v for v in range(n) if m[v] >= beta)
        grown = full
        for x in tight:
            if x & need == need:
                grown &= x
        blocks.append(grown & ~chain)
        values.append(beta)
        chain = grown
    return _decomposition(n, blocks, values)


# ---------------------------------------------------------- orientations

def _predicate(pred):
    if pred is None:
        return None
    if pred == "strong":
        return lambda n, arcs: is_strongly_connected(n, arcs)
    if isinstance(pred, tuple) and pred[0] == "kec":
        _, k, l, root = pred
        return lambda n, arcs: is_kl_connected(n, arcs, k, l, root)
    raise ValueError(f"unknown predicate {pred!r}")


def enumerate_orientations(G: UndirGraph | MixedGraph, bounds: NodeBounds | None = None,
                           predicate=None, vector: str = "total",
                           cap: int = MAX_FREE_EDGES) -> EnumerationReport:
    """All orientations of the undirected edges, filtered.

    ``predicate`` is ``None``, ``"strong"`` or ``("kec", k, l, root)``.
    For mixed graphs ``vector="undirected"`` reports in-degrees counted on
    the oriented edges only.  Witnesses are head tuples.
    """
    edges = list(G.edges)
    fixed = list(G.arcs) if isinstance(G, MixedGraph) else []
    if len(edges) > cap:
        raise CapacityError(f"{len(edges)} free edges exceed the enumeration cap {cap}")
    n = G.n
    test = _predicate(predicate)
    base = [0] * n
    for _, v in fixed:
        base[v] += 1

    def items():
        for choice in itertools.product((0, 1), repeat=len(edges)):
            heads = tuple(v if c == 0 else u for (u, v), c in zip(edges, choice))
            deg = [0] * n if vector == "undirected" else list(base)
            for h in heads:
                deg[h] += 1
            total = list(base)
            for h in heads:
                total[h] += 1
            if bounds is not None and any(not bounds.lower[v] <= total[v] <= bounds.upper[v]
                                          for v in range(n)):
                continue
            if test is not None:
                arcs = fixed + [(u if h == v else v, h) for (u, v), h in zip(edges, heads)]
                if not test(n, arcs):
                    continue
            yield tuple(deg), heads

    return EnumerationReport.from_vectors(items())


# ---------------------------------------------------- base polyhedra

def enumerate_base_elements(p: SetFunctionOracle, box: tuple[Sequence, Sequence] | None = None,
                            max_n: int = MAX_BASE_N, max_width: int = MAX_BASE_WIDTH) -> EnumerationReport:
    """Every integral element of ``B'(p)`` inside ``box``, by checking all constraints."""
    n = p.n
    if n > max_n:
        raise CapacityError(f"ground set of size {n} exceeds the enumeration cap {max_n}")
    full = p.full
    top = p(full)
    ranges = []
    for v in range(n):
        lo = p(1 << v)
        rest = p(full & ~(1 << v))
        hi = top - rest if is_finite(rest) else POS_INF
        if box is not None:
            lo = max(lo, box[0][v])
            hi = min(hi, box[1][v])
        if not (is_finite(lo) and is_finite(hi)):
            raise CapacityError(f"coordinate {v} is unbounded; supply a box")
        if hi - lo + 1 > max_width:
            raise CapacityError(f"coordinate {v} ranges over {hi - lo + 1} values, cap {max_width}")
        ranges.append(range(int(lo), int(hi) + 1))
    table = p.table()

    def items():
        for x in itertools.product(*ranges):
            if sum(x) != top:
                continue
            sums = subset_sums(x)
            if all(sums[z] >= table[z] for z in range(1 << n) if is_finite(table[z])):
                yield x, x

    return EnumerationReport.from_vectors(items())


# --------------------------------------------------------------- flows

def enumerate_flows(D: Digraph, bounds: ArcBounds) -> dict[tuple, tuple]:
    """Map from net in-flow vector to one flow realising it (finite bounds only)."""
    ranges = []
    for lo, hi in zip(bounds.lower, bounds.upper):
        if not (is_finite(lo) and is_finite(hi)):
            raise CapacityError("flow enumeration needs finite bounds")
        ranges.append(range(lo, hi + 1))
    out: dict[tuple, tuple] = {}
    for z in itertools.product(*ranges):
        out.setdefault(net_inflow(D, z), z)
    return out


def hoffman_violation(D: Digraph, bounds: ArcBounds, m: Sequence[int]):
    """Set ``X`` of largest ``rho_f(X) - delta_g(X) - m(X) > 0``, scanning all subsets; else ``None``."""
    check_enum(D.n)
    best, best_x = 0, None
    for x in range(1 << D.n):
        val = 0
        for a, (u, v) in enumerate(D.arcs):
            if x >> v & 1 and not x >> u & 1:
                val += bounds.lower[a]
            elif x >> u & 1 and not x >> v & 1:
                val -= bounds.upper[a]
        val -= sum(m[v] for v in members(x))
        if val > best:
            best, best_x = val, x
    return best_x


def enumerate_megiddo(D: Digraph, cap: Sequence[int], sources: Sequence[int], sinks: Sequence[int],
                      value: int) -> EnumerationReport:
    """Source outflow vectors of all integral flows of the given value."""
    sset, tset = set(sources), set(sinks)

    def items():
        for z in itertools.product(*(range(c + 1) for c in cap)):
            psi = net_inflow(D, z)
            if any(psi[v] != 0 for v in range(D.n) if v not in sset and v not in tset):
                continue
            if any(psi[s] > 0 for s in sset) or any(psi[t] < 0 for t in tset):
                continue
            out = tuple(-psi[s] for s in sources)
            if sum(out) == value:
                yield out, z

    return EnumerationReport.from_vectors(items())


# ------------------------------------------------------- semi-matchings

def enumerate_semimatchings(G: UndirGraph, S: Sequence[int], T: Sequence[int], *,
                            client_degree: Sequence[int] | None = None,
                            f_S=None, g_S=None, f_T=None, g_T=None,
                            size: int | None = None, max_size: bool = False,
                            mult: Sequence[int] | None = None) -> EnumerationReport:
    """Server load vectors of all edge multisets meeting the constraints.

    ``client_degree`` prescribes client degrees exactly; otherwise they lie
    in ``[f_T, g_T]``.  With ``max_size`` only the largest feasible size is
    kept.  Witnesses are multiplicity tuples.
    """
    n = G.n
    sset = set(S)
    servers = [u if u in sset else v for u, v in G.edges]
    clients = [v if u in sset else u for u, v in G.edges]
    mult = list(mult) if mult is not None else [1] * G.m
    found = []
    for z in itertools.product(*(range(k + 1) for k in mult)):
        load, cdeg = [0] * n, [0] * n
        for e, k in enumerate(z):
            load[servers[e]] += k
            cdeg[clients[e]] += k
        if client_degree is not None:
            if any(cdeg[t] != client_degree[t] for t in T):
                continue
        elif any(not (f_T[t] if f_T else 0) <= cdeg[t] <= (g_T[t] if g_T else 1) for t in T):
            continue
        if f_S is not None and any(load[s] < f_S[s] for s in S):
            continue
        if g_S is not None and any(load[s] > g_S[s] for s in S):
            continue
        if size is not None and sum(z) != size:
            continue
        found.append((tuple(load[s] for s in S), z))
    if max_size and found:
        best = max(sum(z) for _, z in found)
        found = [(v, z) for v, z in found if sum(z) == best]
    return EnumerationReport.from_vectors(found)


def tight_chain_holds(vectors: Sequence[tuple], decomp: CanonicalDecomposition, m: Sequence[int]) -> bool:
    """Whether ``m`` is minimal on every chain set among ``vectors`` and sits in the small box."""
    if any(not decomp.f_star[v] <= m[v] <= decomp.g_star[v] for v in range(len(m))):
        return False
    for c in decomp.chain:
        val = sum(m[v] for v in members(c))
        if any(sum(x[v] for v in members(c)) < val for x in vectors):
            return False
    return True
