"""Set functions over small ground sets.

Subsets are bitmasks: element ``i`` is bit ``1 << i``.  Values are Python
ints, with ``POS_INF`` / ``NEG_INF`` as markers for the infinite values a
set function may take.  Every minimisation here is exhaustive, which keeps
the results exact and deterministic (ties go to the numerically smallest
mask); the size cap guards against accidental blow-ups.
"""

from __future__ import annotations

import json
import os
from typing import Callable, Iterable, Iterator

from .errors import CapacityError, ParseError

POS_INF = float("inf")
NEG_INF = float("-inf")
INT64_MAX = 2**63 - 1

KINDS = ("supermodular", "submodular")
CLASSES = ("fully", "intersecting", "crossing")

_enum_cap: int | None = None


def enum_cap() -> int:
    """Largest ground set the enumeration routines accept."""
    if _enum_cap is not None:
        return _enum_cap
    return int(os.environ.get("DECMIN_ENUM_CAP", "24"))


def set_enum_cap(cap: int | None) -> None:
    global _enum_cap
    _enum_cap = cap


def check_enum(n: int) -> None:
    cap = enum_cap()
    if n > cap:
        raise CapacityError(f"ground set of size {n} exceeds enumeration cap {cap}")


def is_finite(v) -> bool:
    return not isinstance(v, float)


def checked(v):
    """Return ``v`` unchanged, raising if a finite value leaves the int64 range."""
    if is_finite(v) and not -INT64_MAX <= v <= INT64_MAX:
        raise OverflowError(f"value {v} exceeds 64-bit range")
    return v


def ext_repr(v) -> int | str:
    if is_finite(v):
        return v
    return "+inf" if v > 0 else "-inf"


def ext_parse(token) -> int | float:
    if isinstance(token, int) and not isinstance(token, bool):
        return token
    if isinstance(token, str):
        t = token.strip()
        if t in ("+inf", "inf", "+oo"):
            return POS_INF
        if t in ("-inf", "-oo"):
            return NEG_INF
        try:
            return int(t)
        except ValueError:
            pass
    raise ParseError(f"not an extended integer: {token!r}")


# ---------------------------------------------------------------- bitmasks

def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def submasks(free: int, required: int = 0) -> Iterator[int]:
    """All ``required | X`` with ``X`` a subset of ``free``, in increasing order."""
    sub = 0
    while True:
        yield required | sub
        sub = (sub - free) & free
        if sub == 0:
            return


def vec_sum(x, mask: int):
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += x[i]
        mask >>= 1
        i += 1
    return total


class GroundSet:
    """Finite ground set ``{0, .., n-1}`` with optional display labels."""

    def __init__(self, n: int, labels: list[str] | None = None):
        if n < 0:
            raise ValueError("ground set size must be non-negative")
        if labels is not None and len(labels) != n:
            raise ValueError("need one label per element")
        self.n = n
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self.full = (1 << n) - 1

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.n == other.n

    def __hash__(self) -> int:
        return hash(self.n)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in members(mask)]


class SetFunctionOracle:
    """Value oracle for a super- or submodular set function.

    ``cls`` records on which pairs of sets the inequality is promised:
    all pairs (``fully``), intersecting pairs or crossing pairs.  Values are
    cached, so the oracle may be queried freely.
    """

    def __init__(self, ground: GroundSet | int, func: Callable[[int], int | float],
                 kind: str = "supermodular", cls: str = "fully"):
        if isinstance(ground, int):
            ground = GroundSet(ground)
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if cls not in CLASSES:
            raise ValueError(f"unknown class {cls!r}")
        self.ground = ground
        self.func = func
        self.kind = kind
        self.cls = cls
        self._cache: dict[int, int | float] = {}

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    def __call__(self, mask: int):
        v = self._cache.get(mask)
        if v is None:
            v = self.func(mask)
            if mask == 0 and v != 0:
                raise ValueError("set function must vanish on the empty set")
            if mask == self.full and not is_finite(v):
                raise ValueError("set function must be finite on the ground set")
            if self.kind == "supermodular" and v == POS_INF:
                raise ValueError("supermodular function takes value +inf")
            if self.kind == "submodular" and v == NEG_INF:
                raise ValueError("submodular function takes value -inf")
            v = checked(v)
            self._cache[mask] = v
        return v

    def table(self) -> list:
        check_enum(self.n)
        return [self(x) for x in range(1 << self.n)]

    def to_explicit(self) -> "ExplicitSetFunction":
        return ExplicitSetFunction(self.ground, self.table(), self.kind, self.cls)


class ExplicitSetFunction(SetFunctionOracle):
    """Set function stored as a full table indexed by bitmask."""

    def __init__(self, ground: GroundSet | int, values, kind: str = "supermodular",
                 cls: str = "fully"):
        if isinstance(ground, int):
            ground = GroundSet(ground)
        check_enum(ground.n)
        values = list(values)
        if len(values) != 1 << ground.n:
            raise ValueError("table length must be 2**n")
        self.values = values
        super().__init__(ground, values.__getitem__, kind, cls)

    @classmethod
    def from_json(cls, data: dict | str) -> "ExplicitSetFunction":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad set function JSON: {exc}") from exc
        try:
            n = int(data["n"])
            kind = data.get("kind", "supermodular")
            klass = data.get("class", "fully")
            default = data.get("default")
            entries = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad set function JSON: {exc}") from exc
        check_enum(n)
        table: list = [None] * (1 << n)
        table[0] = 0
        for item in entries:
            if len(item) != 2:
                raise ParseError(f"entry must be [mask, value]: {item!r}")
            mask, value = int(item[0]), ext_parse(item[1])
            if not 0 <= mask < 1 << n:
                raise ParseError(f"mask {mask} out of range for n={n}")
            table[mask] = value
        if any(v is None for v in table):
            if default is None:
                raise ParseError("missing entries and no default value")
            dv = ext_parse(default)
            table = [dv if v is None else v for v in table]
        labels = data.get("labels")
        try:
            return cls(GroundSet(n, labels), table, kind, klass)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "class": self.cls,
            "default": None,
            "entries": [[x, ext_repr(v)] for x, v in enumerate(self.values)],
        }


# ------------------------------------------------------------- operations

def negate(h: SetFunctionOracle) -> SetFunctionOracle:
    kind = "submodular" if h.kind == "supermodular" else "supermodular"
    return SetFunctionOracle(h.ground, lambda x: -h(x), kind, h.cls)


def complement_function(h: SetFunctionOracle, allow_downgrade: bool = False) -> SetFunctionOracle:
    """The complementary function ``X -> h(S) - h(S - X)``.

    It has the opposite modularity.  Complementing an intersecting function
    yields one that is only co-intersecting; that is refused unless
    ``allow_downgrade`` is set, in which case the result is labelled
    crossing (the weaker promise that still holds).
    """
    cls = h.cls
    if cls == "intersecting":
        if not allow_downgrade:
            raise ValueError("complement of an intersecting function is not intersecting")
        cls = "crossing"
    kind = "submodular" if h.kind == "supermodular" else "supermodular"
    full = h.full
    top = h(full)
    return SetFunctionOracle(h.ground, lambda x: top - h(full & ~x), kind, cls)


def minimize_submodular(b: SetFunctionOracle, family="all") -> tuple[int, int | float]:
    """Minimise ``b`` over a family of subsets by enumeration.

    ``family`` is ``"all"``, ``"nonempty-proper"`` or a tuple
    ``("ts", t, s)`` meaning sets that contain ``t`` and avoid ``s``.
    Returns ``(mask, value)``; ties go to the smallest mask.
    """
    if b.kind != "submodular":
        raise ValueError("minimize_submodular needs a submodular function; negate first")
    return _argmin(b, _family(b.n, family))


def _family(n: int, family) -> Iterator[int]:
    check_enum(n)
    full = (1 << n) - 1
    if family == "all":
        return iter(range(1 << n))
    if family == "nonempty-proper":
        return iter(range(1, full))
    if isinstance(family, tuple) and len(family) == 3 and family[0] == "ts":
        _, t, s = family
        if t == s:
            raise ValueError("ts-family needs t != s")
        return submasks(full & ~(1 << t) & ~(1 << s), 1 << t)
    raise ValueError(f"unknown family {family!r}")


def _argmin(func: Callable[[int], int | float], masks: Iterable[int]):
    best_mask, best = None, None
    for x in masks:
        v = func(x)
        if best is None or v < best:
            best_mask, best = x, v
    if best_mask is None:
        raise ValueError("empty family")
    return best_mask, best


def maximize_shifted_supermodular(p: SetFunctionOracle, mu: int) -> tuple[int, int | float]:
    """Maximise ``p(X) - mu*|X|`` over all subsets (the empty set scores 0).

    Ties go to the smallest mask.
    """
    check_enum(p.n)
    best_mask, best = 0, 0
    for x in range(1, 1 << p.n):
        v = p(x)
        if v == NEG_INF:
            continue
        v = v - mu * popcount(x)
        if v > best:
            best_mask, best = x, v
    return best_mask, best


def partition_extremum(func: Callable[[int], int | float], n: int, maximize: bool = True) -> list:
    """Best value of ``sum func(X_i)`` over partitions of every subset.

    Returns a table indexed by mask.  With ``maximize`` this is the
    fully supermodular truncation of an intersecting supermodular
    function; otherwise the fully submodular one of an intersecting
    submodular function.  Runs in ``O(3^n)``.
    """
    check_enum(n)
    table = [0] * (1 << n)
    for x in range(1, 1 << n):
        low = x & -x
        rest = x & ~low
        best = None
        for y in submasks(rest, low):
            a = func(y)
            if a == (NEG_INF if maximize else POS_INF):
                continue
            b = table[x & ~y]
            if b == (NEG_INF if maximize else POS_INF):
                continue
            v = a + b
            if best is None or (v > best if maximize else v < best):
                best = v
        table[x] = best if best is not None else (NEG_INF if maximize else POS_INF)
    return table


def restrict(h: SetFunctionOracle, elems: list[int], base: int = 0, offset=0,
             cls: str | None = None) -> SetFunctionOracle:
    """``Y -> h(Y' | base) - offset`` on a smaller ground set.

    ``elems`` lists the original indices of the new elements; ``Y'`` is the
    image of ``Y`` under that map.  With ``base`` the tight set of a
    contraction and ``offset = h(base)`` this is the usual contraction.
    """
    bits = [1 << e for e in elems]

    def value(y: int):
        x = base
        i = 0
        while y:
            if y & 1:
                x |= bits[i]
            y >>= 1
            i += 1
        v = h(x)
        return v - offset if is_finite(v) else v

    labels = [h.ground.labels[e] for e in elems]
    return SetFunctionOracle(GroundSet(len(elems), labels), value, h.kind, cls or h.cls)


def is_supermodular_on(p: SetFunctionOracle, cls: str = "fully") -> bool:
    """Exhaustive check of the supermodular inequality on the pairs of ``cls``."""
    check_enum(p.n)
    full = p.full
    size = 1 << p.n
    for x in range(size):
        px = p(x)
        for y in range(x + 1, size):
            inter, union = x & y, x | y
            if inter in (x, y):
                continue
            if cls in ("intersecting", "crossing") and inter == 0:
                continue
            if cls == "crossing" and union == full:
                continue
            lhs = px + p(y)
            if lhs == NEG_INF:
                continue
            if lhs > p(inter) + p(union):
                return False
    return True
