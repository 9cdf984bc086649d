"""Plain-text instance formats.

Graph-like files start with a header line ``n m`` followed by ``m`` item
lines; ``#`` starts a comment.  Bound values may be ``-inf`` / ``+inf``.

* digraph: ``tail head [lower upper [cost]]`` (defaults 0, +inf, 0)
* graph:   ``u v [mult] [cost_uv cost_vu]``
* mixed:   ``u v U|D [mult]`` (``D`` is a fixed arc ``u -> v``)
* bounds:  ``v lower upper`` per line, no header; missing nodes get the
  caller's defaults (free unless stated otherwise)

Set functions are JSON (see :meth:`ExplicitSetFunction.from_json`).
"""

from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path

from .errors import ParseError
from .netflow import ArcBounds, Digraph
from .orient import MixedGraph, NodeBounds, UndirGraph
from .setfn import NEG_INF, POS_INF, ExplicitSetFunction, ext_parse


class _Row(list):
    """Tokens of one input line plus its line number."""

    lineno = 0


def _lines(text: str) -> list[_Row]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            row = _Row(line.split())
            row.lineno = i
            out.append(row)
    return out


@contextmanager
def _at(row: _Row):
    """Prefix parse errors raised while reading ``row`` with its line number."""
    try:
        yield
    except (ParseError, ValueError) as exc:
        raise ParseError(f"line {row.lineno}: {exc}") from None


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}") from None


def _header(rows: list[list[str]]) -> tuple[int, int, list[list[str]]]:
    if not rows or len(rows[0]) != 2:
        raise ParseError("missing 'n m' header line")
    n, m = _int(rows[0][0]), _int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} items, found {len(body)}")
    return n, m, body


def _check_node(v: int, n: int) -> int:
    if not 0 <= v < n:
        raise ParseError(f"node {v} outside 0..{n - 1}")
    return v


def parse_digraph(text: str) -> tuple[Digraph, ArcBounds, list[int]]:
    n, _, body = _header(_lines(text))
    arcs, lower, upper, cost = [], [], [], []
    for row in body:
        with _at(row):
            if len(row) not in (2, 4, 5):
                raise ParseError(f"bad arc line {' '.join(row)!r}")
            u, v = _check_node(_int(row[0]), n), _check_node(_int(row[1]), n)
            arcs.append((u, v))
            lo, hi = (ext_parse(row[2]), ext_parse(row[3])) if len(row) >= 4 else (0, POS_INF)
            if lo > hi:
                raise ParseError(f"arc {u}->{v}: lower bound above upper bound")
            lower.append(lo)
            upper.append(hi)
            cost.append(_int(row[4]) if len(row) == 5 else 0)
    return Digraph(n, arcs), ArcBounds(lower, upper), cost


def parse_graph(text: str) -> UndirGraph:
    n, _, body = _header(_lines(text))
    edges, mult, cost = [], [], []
    for row in body:
        with _at(row):
            if len(row) not in (2, 3, 4, 5):
                raise ParseError(f"bad edge line {' '.join(row)!r}")
            u, v = _check_node(_int(row[0]), n), _check_node(_int(row[1]), n)
            if u == v:
                raise ParseError(f"loop at node {u}")
            edges.append((u, v))
            rest = row[2:]
            mult.append(_int(rest[0]) if len(rest) in (1, 3) else 1)
            if len(rest) >= 2:
                cost.append((_int(rest[-2]), _int(rest[-1])))
    if any(k < 0 for k in mult):
        raise ParseError("negative edge multiplicity")
    has_mult = any(k != 1 for k in mult)
    if cost and len(cost) != len(edges):
        raise ParseError("either every edge or no edge carries costs")
    return UndirGraph(n, edges, mult if has_mult else None, cost or None)


def parse_mixed(text: str) -> MixedGraph:
    n, _, body = _header(_lines(text))
    edges, arcs = [], []
    for row in body:
        with _at(row):
            if len(row) not in (3, 4):
                raise ParseError(f"bad mixed line {' '.join(row)!r}")
            u, v = _check_node(_int(row[0]), n), _check_node(_int(row[1]), n)
            kind = row[2].upper()
            if kind not in ("U", "D"):
                raise ParseError(f"third column must be U or D, got {row[2]!r}")
            k = _int(row[3]) if len(row) == 4 else 1
            (edges if kind == "U" else arcs).extend([(u, v)] * k)
    return MixedGraph(n, edges, arcs)


def parse_bounds(text: str, n: int, lower_default=NEG_INF, upper_default=POS_INF) -> NodeBounds:
    lower, upper = [lower_default] * n, [upper_default] * n
    for row in _lines(text):
        with _at(row):
            if len(row) != 3:
                raise ParseError(f"bad bounds line {' '.join(row)!r}")
            v = _check_node(_int(row[0]), n)
            lower[v], upper[v] = ext_parse(row[1]), ext_parse(row[2])
            if lower[v] > upper[v]:
                raise ParseError(f"node {v}: lower bound above upper bound")
    return NodeBounds(lower, upper)


def parse_int_list(text: str) -> list[int]:
    return [_int(t) for t in text.replace(",", " ").split()]


def read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def read_setfn(path: str) -> ExplicitSetFunction:
    return ExplicitSetFunction.from_json(read_text(path))
