"""Decreasing minimisation on M-convex sets.

An M-convex set is the set of integral elements of an integral base
polyhedron ``B'(p) = {x : x(S) = p(S), x(Z) >= p(Z) for all Z}``.  Solvers
reach it through an :class:`MConvexHandle`: a member, an exchange test
``m + e_s - e_t in B`` and, when available, the set function ``p``.

Two solvers are provided.  :func:`decmin_basic` repeats 1-tightening steps
(move one unit from a coordinate to one at least two smaller) until none
applies, which is pseudo-polynomial.  :func:`decmin_strong` peels off the
canonical partition one block at a time using a Newton-Dinkelbach search for
the block value and a greedy member that respects it, so the number of
exchange tests is polynomial in ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BudgetError, InfeasibleError, NotDecMinError
from .setfn import (
    NEG_INF,
    POS_INF,
    GroundSet,
    SetFunctionOracle,
    check_enum,
    is_finite,
    maximize_shifted_supermodular,
    members,
    partition_extremum,
    popcount,
    restrict,
    submasks,
)

Vector = tuple


# ------------------------------------------------------------ comparisons

def dec_compare(x: Sequence[int], y: Sequence[int]) -> int:
    """-1 if ``x`` is decreasingly smaller than ``y``, 1 if larger, 0 if value-equivalent."""
    a, b = sorted(x, reverse=True), sorted(y, reverse=True)
    return (a > b) - (a < b)


def inc_compare(x: Sequence[int], y: Sequence[int]) -> int:
    """1 if ``x`` is increasingly larger than ``y``, -1 if smaller, 0 if value-equivalent."""
    a, b = sorted(x), sorted(y)
    return (a > b) - (a < b)


def square_sum(x: Sequence[int]) -> int:
    return sum(v * v for v in x)


def subset_sums(x: Sequence[int]) -> list[int]:
    sums = [0] * (1 << len(x))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + x[low.bit_length() - 1]
    return sums


# ----------------------------------------------------------------- handle

@dataclass
class MConvexHandle:
    """Access to an M-convex set on ``{0, .., n-1}``.

    ``exchange_feasible(m, s, t)`` must answer whether ``m + e_s - e_t`` is
    in the set, for ``m`` in the set.  ``p_oracle`` is the defining
    supermodular function when it is known.
    """

    n: int
    total: int
    exchange_feasible: Callable[[Sequence[int], int, int], bool]
    member: Callable[[], Vector] | None = None
    p_oracle: SetFunctionOracle | None = None
    contains: Callable[[Sequence[int]], bool] | None = None
    labels: list[str] | None = None

    def get_member(self) -> Vector:
        if self.member is None:
            raise ValueError("handle has no member routine")
        return tuple(self.member())


class _SlackTable:
    """Slacks ``m(X) - p(X)`` for one vector, reused across exchange tests."""

    def __init__(self, p: SetFunctionOracle):
        self.p = p
        self.key = None
        self.slack: list = []

    def get(self, m: Sequence[int]) -> list:
        key = tuple(m)
        if key != self.key:
            p = self.p
            sums = subset_sums(key)
            self.slack = [sums[x] - p(x) if is_finite(p(x)) else POS_INF for x in range(len(sums))]
            self.key = key
        return self.slack


def exchange_capacity(p: SetFunctionOracle, m: Sequence[int], s: int, t: int, _table=None):
    """Largest ``c`` with ``m + c(e_s - e_t)`` in ``B'(p)``; ``POS_INF`` if unbounded."""
    if s == t:
        return POS_INF
    slack = (_table or _SlackTable(p)).get(m)
    free = p.full & ~(1 << s) & ~(1 << t)
    return min(slack[x] for x in submasks(free, 1 << t))


def in_base(p: SetFunctionOracle, x: Sequence[int]) -> bool:
    check_enum(p.n)
    if len(x) != p.n:
        return False
    sums = subset_sums(x)
    if sums[-1] != p(p.full):
        return False
    return all(sums[z] >= p(z) for z in range(len(sums)) if is_finite(p(z)))


def handle_from_supermodular(p: SetFunctionOracle) -> MConvexHandle:
    """Handle for ``B'(p)`` with exchange tests answered by enumeration."""
    if p.kind != "supermodular":
        raise ValueError("handle_from_supermodular needs a supermodular function")
    table = _SlackTable(p)

    def exchange(m, s, t):
        return s == t or exchange_capacity(p, m, s, t, table) >= 1

    return MConvexHandle(
        n=p.n,
        total=p(p.full),
        exchange_feasible=exchange,
        member=lambda: base_member(p),
        p_oracle=p,
        contains=lambda x: in_base(p, x),
        labels=p.ground.labels,
    )


# ---------------------------------------------------------------- members

def base_member(p: SetFunctionOracle) -> Vector:
    """Some integral element of ``B'(p)``.

    Fully supermodular functions use the greedy chain that gives each
    element in turn its largest possible value.  Otherwise (or when the
    chain runs through infinite values) a sandwich argument is used; it
    raises :class:`InfeasibleError` with a violating set when ``B'(p)`` is
    empty.
    """
    if p.cls == "fully":
        x = _greedy_member(p)
        if x is not None and in_base(p, x):
            return x
    x = _sandwich_member(p)
    if not in_base(p, x):
        raise InfeasibleError("no integral element found", reason="base polyhedron empty")
    return x


def _greedy_member(p: SetFunctionOracle):
    x = []
    rest = p.full
    prev = p(rest)
    for i in range(p.n):
        rest &= ~(1 << i)
        cur = p(rest)
        if not is_finite(cur):
            return None
        x.append(prev - cur)
        prev = cur
    return tuple(x)


def _sandwich_member(p: SetFunctionOracle) -> Vector:
    # Fix the last element s0.  The constraints on y = x restricted to the
    # rest split into lower bounds p(Y) (sets avoiding s0) and upper bounds
    # p(S) - p(S - W) (sets containing s0).  Both are intersecting, so their
    # partition truncations are fully super/submodular and an integral y
    # between them exists iff truncations do not cross.
    n = p.n
    check_enum(n)
    top = p(p.full)
    if n == 0:
        return ()
    if n == 1:
        return (top,)
    k = n - 1
    size = 1 << k

    def upper(w):
        v = p(p.full & ~w)
        return top - v if is_finite(v) else POS_INF

    lo = partition_extremum(p, k, maximize=True)
    hi = partition_extremum(upper, k, maximize=False)
    for x in range(size):
        if lo[x] > hi[x]:
            raise InfeasibleError(
                "base polyhedron is empty", subset=members(x),
                reason=f"lower bound {lo[x]} exceeds upper bound {hi[x]} on the subset")

    lower_box: list = [NEG_INF] * k
    upper_box: list = [POS_INF] * k

    def extended(table, box, maximize):
        out = list(table)
        for x in range(1, size):
            best = out[x]
            y = x
            while y:
                low = y & -y
                v = box[low.bit_length() - 1]
                if is_finite(v):
                    cand = out[x ^ low] + v
                    if (cand > best) if maximize else (cand < best):
                        best = cand
                y ^= low
            out[x] = best
        return out

    def feasible(lb, ub):
        a = extended(lo, lb, True)
        b = extended(hi, ub, False)
        return all(a[x] <= b[x] for x in range(size))

    def fits_upper(i, c):
        ub = list(upper_box)
        ub[i] = min(ub[i], c)
        return feasible(lower_box, ub)

    def fits_lower(i, c):
        lb = list(lower_box)
        lb[i] = max(lb[i], c)
        return feasible(lb, upper_box)

    for i in range(k):
        a = extended(lo, lower_box, True)[1 << i]
        b = extended(hi, upper_box, False)[1 << i]
        c = 0
        if is_finite(a):
            c = max(c, a)
        if is_finite(b):
            c = min(c, b)
        if not fits_upper(i, c):
            c = _search_up(lambda v: fits_upper(i, v), c)
        elif not fits_lower(i, c):
            c = _search_down(lambda v: fits_lower(i, v), c)
        lower_box[i] = upper_box[i] = c
    y = tuple(int(v) for v in lower_box)
    return y + (top - sum(y),)


def _search_up(pred, bad: int) -> int:
    """Smallest ``v > bad`` with ``pred(v)``, for a predicate monotone in ``v``."""
    step = 1
    while not pred(bad + step):
        step *= 2
    lo, hi = bad + step // 2, bad + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _search_down(pred, bad: int) -> int:
    return -_search_up(lambda v: pred(-v), -bad)


def fully_closure(p: SetFunctionOracle) -> SetFunctionOracle:
    """The fully supermodular function defining the same base polyhedron.

    ``X -> min{x(X) : x in B'(p)}``, computed by pushing value out of ``X``
    along exchange capacities from one member; a linear objective that no
    exchange improves is optimal on an M-convex set.
    """
    if p.cls == "fully":
        return p
    start = base_member(p)
    table = _SlackTable(p)
    n = p.n

    def value(x: int):
        m = list(start)
        inside, outside = members(x), members(p.full & ~x)
        while True:
            moved = False
            for t in inside:
                for s in outside:
                    c = exchange_capacity(p, m, s, t, table)
                    if c == POS_INF:
                        return NEG_INF
                    if c > 0:
                        m[s] += c
                        m[t] -= c
                        moved = True
            if not moved:
                return sum(m[i] for i in inside)

    return SetFunctionOracle(GroundSet(n, p.ground.labels), value, "supermodular", "fully")


def fold_box(p: SetFunctionOracle, lower: Sequence, upper: Sequence) -> SetFunctionOracle:
    """Crossing supermodular function whose base polyhedron is ``B'(p)`` cut by a box.

    Bounds are folded into singletons and co-singletons, which never take
    part in a crossing pair, so the result stays crossing supermodular.
    """
    full = p.full
    top = p(full)
    if p.n == 1 and not lower[0] <= top <= upper[0]:
        raise InfeasibleError("box misses the set", subset=[0], reason="single element out of bounds")
    single = {1 << i: lower[i] for i in range(p.n)}
    cosingle = {full & ~(1 << i): top - upper[i] for i in range(p.n)}

    def value(x: int):
        v = p(x)
        if x == full or x == 0:
            return v
        if x in single and single[x] > v:
            v = single[x]
        if x in cosingle and cosingle[x] > v:
            v = cosingle[x]
        return v

    return SetFunctionOracle(p.ground, value, "supermodular", "crossing")


# ---------------------------------------------------------- basic solver

def tighten_once(h: MConvexHandle, m: Sequence[int]):
    """One 1-tightening step, or ``None`` if ``m`` admits none.

    The receiving coordinate ``t`` is scanned by decreasing value and the
    giving one ``s`` by increasing value, ties by index.  Returns
    ``(m', s, t)`` with ``m' = m + e_s - e_t``.
    """
    n = len(m)
    by_high = sorted(range(n), key=lambda i: (-m[i], i))
    by_low = sorted(range(n), key=lambda i: (m[i], i))
    for t in by_high:
        for s in by_low:
            if m[t] < m[s] + 2:
                break
            if h.exchange_feasible(m, s, t):
                out = list(m)
                out[s] += 1
                out[t] -= 1
                return tuple(out), s, t
    return None


def decmin_basic(h: MConvexHandle, budget: int = 10**7, start: Sequence[int] | None = None) -> Vector:
    m = tuple(start) if start is not None else h.get_member()
    for _ in range(budget):
        step = tighten_once(h, m)
        if step is None:
            return m
        m = step[0]
    raise BudgetError(f"no dec-min element within {budget} tightening steps")


# --------------------------------------------------------- strong solver

@dataclass
class NDResult:
    """Outcome of the Newton-Dinkelbach search for the smallest feasible maximum.

    ``mus`` holds every tried value (the last is the answer), ``sets`` the
    maximising set found for each rejected value.
    """

    beta1: int
    witness: int
    mus: list[int] = field(default_factory=list)
    sets: list[int] = field(default_factory=list)

    def to_json(self, ground: GroundSet | None = None) -> dict:
        show = (lambda x: ground.names(x)) if ground else members
        return {"beta1": self.beta1, "witness": show(self.witness),
                "mu": self.mus, "sets": [show(x) for x in self.sets]}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def newton_dinkelbach_beta1(p: SetFunctionOracle) -> NDResult:
    """Smallest ``beta`` with ``p(X) <= beta*|X|`` for all ``X``, by Newton-Dinkelbach.

    This is the largest component of every dec-min element of ``B'(p)``.
    """
    if p.cls != "fully":
        p = fully_closure(p)
    n = p.n
    if n == 0:
        raise ValueError("empty ground set")
    mu = _ceil_div(p(p.full), n) - 1
    res = NDResult(beta1=mu, witness=0, mus=[mu])
    for _ in range(n + 1):
        x, val = maximize_shifted_supermodular(p, mu)
        if val <= 0:
            res.beta1 = mu
            res.witness = res.sets[-1]
            return res
        res.sets.append(x)
        mu = _ceil_div(p(x), popcount(x))
        res.mus.append(mu)
    raise AssertionError("Newton-Dinkelbach did not stop within n+1 rounds")


def beta1_covered_member(p: SetFunctionOracle, beta1: int, order: Sequence[int] | None = None) -> Vector:
    """Element of ``B'(p)`` bounded by ``beta1``, built greedily.

    In ``order``, each element gets the least value keeping the vector,
    with every unprocessed element at ``beta1``, inside the upper hull of
    ``B'(p)``.  ``p`` must be fully supermodular.
    """
    if p.cls != "fully":
        p = fully_closure(p)
    n = p.n
    check_enum(n)
    order = list(range(n)) if order is None else list(order)
    x = [beta1] * n
    for s in order:
        bit = 1 << s
        best = NEG_INF
        for z in submasks(p.full & ~bit, bit):
            v = p(z)
            if not is_finite(v):
                continue
            v -= sum(x[i] for i in members(z & ~bit))
            if v > best:
                best = v
        x[s] = best
    if sum(x) != p(p.full) or max(x, default=beta1) > beta1:
        raise ValueError(f"{beta1} is below the smallest feasible maximum")
    return tuple(x)


def smallest_tight_set(h: MConvexHandle, m: Sequence[int], u: int) -> int:
    """Mask of the smallest ``m``-tight set containing ``u``."""
    mask = 1 << u
    for s in range(len(m)):
        if s != u and h.exchange_feasible(m, s, u):
            mask |= 1 << s
    return mask


def pre_decmin(h: MConvexHandle, m: Sequence[int], beta1: int) -> tuple[Vector, int]:
    """Tighten a ``beta1``-covered member at its peak elements.

    Returns the new member and the mask of the first canonical block, the
    union of the smallest tight sets of the elements still at ``beta1``.
    """
    m = list(m)
    n = len(m)
    changed = True
    while changed:
        changed = False
        for t in range(n):
            if m[t] != beta1:
                continue
            for s in sorted(range(n), key=lambda i: (m[i], i)):
                if m[s] > beta1 - 2:
                    break
                if h.exchange_feasible(m, s, t):
                    m[s] += 1
                    m[t] -= 1
                    changed = True
                    break
    block = 0
    for t in range(n):
        if m[t] == beta1:
            block |= smallest_tight_set(h, m, t)
    return tuple(m), block


@dataclass
class CanonicalDecomposition:
    """Canonical chain ``C_1 < .. < C_q``, its blocks, values and small box."""

    chain: list[int]
    partition: list[int]
    values: list[int]
    f_star: tuple
    g_star: tuple

    def block_of(self, v: int) -> int:
        for i, blk in enumerate(self.partition):
            if blk >> v & 1:
                return i
        raise ValueError(f"element {v} not covered")

    def to_json(self, ground: GroundSet | None = None) -> dict:
        show = (lambda x: ground.names(x)) if ground else members
        return {
            "chain": [show(c) for c in self.chain],
            "partition": [show(s) for s in self.partition],
            "values": list(self.values),
            "f_star": list(self.f_star),
            "g_star": list(self.g_star),
        }


def _decomposition(n: int, blocks: list[int], values: list[int]) -> CanonicalDecomposition:
    chain, acc = [], 0
    f_star, g_star = [0] * n, [0] * n
    for blk, beta in zip(blocks, values):
        acc |= blk
        chain.append(acc)
        for v in members(blk):
            f_star[v], g_star[v] = beta - 1, beta
    return CanonicalDecomposition(chain, list(blocks), list(values), tuple(f_star), tuple(g_star))


@dataclass
class StrongResult:
    vector: Vector
    decomposition: CanonicalDecomposition
    rounds: list[NDResult]


def decmin_strong(h: MConvexHandle) -> StrongResult:
    """Dec-min element and canonical decomposition by peeling blocks.

    Each round contracts the blocks found so far, finds the next block
    value by Newton-Dinkelbach, builds a member bounded by it and tightens
    it at its peak elements.  Exchange tests go to ``h`` on the full
    vector, so flow-backed handles keep their fast test.
    """
    if h.p_oracle is None:
        raise ValueError("decmin_strong needs the defining set function")
    p = h.p_oracle
    if p.cls != "fully":
        p = fully_closure(p)
    n = h.n
    vec = [0] * n
    done = 0
    blocks, values, rounds = [], [], []
    while done != p.full:
        rest = [v for v in range(n) if not done >> v & 1]
        q = restrict(p, rest, done, p(done), "fully")
        nd = newton_dinkelbach_beta1(q)
        local = beta1_covered_member(q, nd.beta1)

        def exchange(y, s, t, rest=rest):
            full = list(vec)
            for i, v in enumerate(rest):
                full[v] = y[i]
            return h.exchange_feasible(full, rest[s], rest[t])

        sub = MConvexHandle(n=len(rest), total=q(q.full), exchange_feasible=exchange)
        local, block_local = pre_decmin(sub, local, nd.beta1)
        block = 0
        for i, v in enumerate(rest):
            vec[v] = local[i]
            if block_local >> i & 1:
                block |= 1 << v
        blocks.append(block)
        values.append(nd.beta1)
        rounds.append(nd)
        done |= block
    return StrongResult(tuple(vec), _decomposition(n, blocks, values), rounds)


def canonical_chain(h: MConvexHandle, m: Sequence[int]) -> CanonicalDecomposition:
    """Canonical decomposition read off a dec-min element ``m``.

    Raises :class:`NotDecMinError` when ``m`` is not dec-min, since then
    some block holds a value outside ``{beta-1, beta}``.
    """
    n = len(m)
    full = (1 << n) - 1
    tight: dict[int, int] = {}
    chain = 0
    blocks, values = [], []
    while chain != full:
        beta = max(m[v] for v in range(n) if not chain >> v & 1)
        grown = chain
        for u in range(n):
            if m[u] >= beta:
                if u not in tight:
                    tight[u] = smallest_tight_set(h, m, u)
                grown |= tight[u]
        block = grown & ~chain
        for v in members(block):
            if not beta - 1 <= m[v] <= beta:
                raise NotDecMinError(f"element {v} has value {m[v]} in a block of value {beta}")
        blocks.append(block)
        values.append(beta)
        chain = grown
    return _decomposition(n, blocks, values)


def is_tight(h: MConvexHandle, m: Sequence[int], x: int) -> bool:
    """Whether ``m(X)`` is minimal over the set, answered by exchange tests."""
    if h.p_oracle is not None and h.p_oracle.cls == "fully":
        return sum(m[v] for v in members(x)) == h.p_oracle(x)
    n = len(m)
    inside = members(x)
    outside = [v for v in range(n) if not x >> v & 1]
    return not any(h.exchange_feasible(m, s, t) for t in inside for s in outside)


def verify_decmin(h: MConvexHandle, m: Sequence[int], decomp: CanonicalDecomposition) -> bool:
    """Check that the chain is tight for ``m`` and ``m`` sits in the small box."""
    if h.contains is not None and not h.contains(m):
        return False
    if any(not decomp.f_star[v] <= m[v] <= decomp.g_star[v] for v in range(len(m))):
        return False
    return all(is_tight(h, m, c) for c in decomp.chain)


# ------------------------------------------------------------ adaptors

def box_intersect(h: MConvexHandle, lower: Sequence, upper: Sequence,
                  member: Callable[[], Vector] | None = None) -> MConvexHandle:
    """Handle for the set cut by the box ``lower <= x <= upper``.

    Without an explicit ``member`` routine, a member of ``h`` is repaired by
    unit exchanges that reduce the box violation; when no exchange helps,
    the box misses the set and a violating subset is reported.
    """
    lower, upper = list(lower), list(upper)
    n = h.n

    def exchange(m, s, t):
        if s == t:
            return True
        return m[s] < upper[s] and m[t] > lower[t] and h.exchange_feasible(m, s, t)

    def contains(x):
        if any(not lower[v] <= x[v] <= upper[v] for v in range(n)):
            return False
        return h.contains(x) if h.contains is not None else True

    p_box = None
    if h.p_oracle is not None:
        p_box = box_function(h.p_oracle, lower, upper)

    return MConvexHandle(
        n=n, total=h.total, exchange_feasible=exchange,
        member=member or (lambda: repair_into_box(h, lower, upper)),
        p_oracle=p_box, contains=contains, labels=h.labels)


def repair_into_box(h: MConvexHandle, lower: Sequence, upper: Sequence) -> Vector:
    m = list(h.get_member())
    n = h.n
    while True:
        v = next((i for i in range(n) if not lower[i] <= m[i] <= upper[i]), None)
        if v is None:
            return tuple(m)
        if m[v] > upper[v]:
            cands = sorted((s for s in range(n) if s != v and m[s] < upper[s]),
                           key=lambda s: (m[s] >= lower[s], s))
            s = next((s for s in cands if h.exchange_feasible(m, s, v)), None)
            if s is None:
                tight = smallest_tight_set(h, m, v)
                raise InfeasibleError("box misses the set", subset=members(tight),
                                      reason="set function exceeds upper bounds on the subset")
            m[s] += 1
            m[v] -= 1
        else:
            cands = sorted((t for t in range(n) if t != v and m[t] > lower[t]),
                           key=lambda t: (m[t] <= upper[t], t))
            t = next((t for t in cands if h.exchange_feasible(m, v, t)), None)
            if t is None:
                reach = [v] + [t for t in range(n) if t != v and h.exchange_feasible(m, v, t)]
                raise InfeasibleError("box misses the set", subset=reach,
                                      reason="lower bounds exceed the largest possible sum on the subset")
            m[v] += 1
            m[t] -= 1


def box_function(p: SetFunctionOracle, lower: Sequence, upper: Sequence) -> SetFunctionOracle:
    """Set function of ``B'(p)`` cut by a box: ``max_X p(X) + l(Y-X) - u(X-Y)``."""
    if p.cls != "fully":
        p = fully_closure(p)
    n = p.n
    check_enum(n)

    def value(y: int):
        best = NEG_INF
        for x in range(1 << n):
            v = p(x)
            if not is_finite(v):
                continue
            for i in members(y & ~x):
                v += lower[i]
            for i in members(x & ~y):
                v -= upper[i]
            if v > best:
                best = v
        return best

    return SetFunctionOracle(GroundSet(n, p.ground.labels), value, "supermodular", "fully")


def translate(h: MConvexHandle, shift: Sequence[int]) -> MConvexHandle:
    """Handle for the set shifted by the vector ``shift``."""
    shift = tuple(shift)
    n = h.n

    def back(m):
        return [m[i] - shift[i] for i in range(n)]

    p_shift = None
    if h.p_oracle is not None:
        p = h.p_oracle
        p_shift = SetFunctionOracle(
            p.ground, lambda x: p(x) + sum(shift[i] for i in members(x)) if is_finite(p(x)) else p(x),
            "supermodular", p.cls)
    return MConvexHandle(
        n=n, total=h.total + sum(shift),
        exchange_feasible=lambda m, s, t: h.exchange_feasible(back(m), s, t),
        member=None if h.member is None else (lambda: tuple(a + b for a, b in zip(h.get_member(), shift))),
        p_oracle=p_shift,
        contains=None if h.contains is None else (lambda x: h.contains(back(x))),
        labels=h.labels)


def min_cost_decmin(h: MConvexHandle, decomp: CanonicalDecomposition, cost: Sequence[int],
                    m: Sequence[int] | None = None) -> Vector:
    """Cheapest dec-min element for the linear cost ``sum cost(v) m(v)``.

    The dec-min elements form the M-convex set of members on which every
    chain set is tight and that sit in the small box; its exchanges stay
    inside a block.  Cost-decreasing exchanges are applied until none is
    left, which is optimal for a linear objective.
    """
    if m is None:
        m = decmin_strong(h).vector if h.p_oracle is not None else decmin_basic(h)
    if not verify_decmin(h, m, decomp):
        raise NotDecMinError("start vector does not match the decomposition")
    m = list(m)
    f_star, g_star = decomp.f_star, decomp.g_star
    while True:
        best = None
        for blk in decomp.partition:
            elems = members(blk)
            for s in elems:
                if m[s] != f_star[s]:
                    continue
                for t in elems:
                    if m[t] != g_star[t] or cost[s] >= cost[t]:
                        continue
                    gain = cost[t] - cost[s]
                    if best is not None and gain <= best[0]:
                        continue
                    if h.exchange_feasible(m, s, t):
                        best = (gain, s, t)
        if best is None:
            return tuple(m)
        _, s, t = best
        m[s] += 1
        m[t] -= 1
