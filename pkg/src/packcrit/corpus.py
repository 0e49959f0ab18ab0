"""Exhaustive small-graph corpora, one representative per isomorphism class.

Connected classes are grown a vertex at a time: every connected graph on n+1
vertices arises from a connected graph on n vertices by attaching a new vertex
to a nonempty neighbor set, so extending every class with every nonempty mask
and deduplicating by canonical key covers everything.  Disconnected classes
are rebuilt as multisets of connected components.
"""

from __future__ import annotations

from .canon import canonical_key
from .graphs import Graph, disjoint_union, metric_summary
from .families import enumerate_block_graphs_diam2, enumerate_block_graphs_diam3, \
    enumerate_caterpillars, enumerate_trees

_CONN_CACHE = {1: (Graph.empty(1),)}


def _connected_exactly(n: int):
    if n in _CONN_CACHE:
        return _CONN_CACHE[n]
    prev = _connected_exactly(n - 1)
    seen = {}
    for g in prev:
        for mask in range(1, 1 << g.n):
            rows = [r | (((mask >> v) & 1) << g.n) for v, r in enumerate(g.rows)]
            rows.append(mask)
            h = Graph(g.n + 1, rows)
            key = canonical_key(h, max_perms=None)
            if key not in seen:
                seen[key] = h
    out = tuple(h for _, h in sorted(seen.items()))
    _CONN_CACHE[n] = out
    return out


def connected_graphs(max_n: int):
    """All connected isomorphism classes with 1..max_n vertices."""
    for n in range(1, max_n + 1):
        yield from _connected_exactly(n)


def _all_exactly(n: int):
    conn = {k: _connected_exactly(k) for k in range(1, n + 1)}
    out = []

    def rec(remaining, min_size, min_idx, parts):
        if remaining == 0:
            g = parts[0]
            for p in parts[1:]:
                g = disjoint_union(g, p)
            out.append(g)
            return
        for size in range(min_size, remaining + 1):
            start = min_idx if size == min_size else 0
            for idx in range(start, len(conn[size])):
                rec(remaining - size, size, idx, parts + [conn[size][idx]])

    rec(n, 1, 0, [])
    return out


def all_graphs(max_n: int):
    """All isomorphism classes (connected or not) with 1..max_n vertices."""
    for n in range(1, max_n + 1):
        yield from _all_exactly(n)


def _diam2(max_n: int):
    for g in connected_graphs(max_n):
        if metric_summary(g).diameter == 2:
            yield g


def _trees_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_trees(n)


def _caterpillars_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_caterpillars(n)


_BUILTINS = {
    "connected-le5": lambda: connected_graphs(5),
    "connected-le6": lambda: connected_graphs(6),
    "connected-le7": lambda: connected_graphs(7),
    "all-le5": lambda: all_graphs(5),
    "all-le6": lambda: all_graphs(6),
    "connected-le6-diam2": lambda: _diam2(6),
    "connected-le7-diam2": lambda: _diam2(7),
    "trees-le12": lambda: _trees_upto(12),
    "caterpillars-le12": lambda: _caterpillars_upto(12),
    "block-diam2-le10": lambda: enumerate_block_graphs_diam2(10),
    "block-diam3-le12": lambda: enumerate_block_graphs_diam3(12),
}


def corpus_names():
    return sorted(_BUILTINS)


def load_corpus(name: str):
    """Materialize a builtin corpus as a list; labeled entries keep labels."""
    if name not in _BUILTINS:
        raise ValueError("unknown corpus %r; known: %s"
                         % (name, ", ".join(corpus_names())))
    return list(_BUILTINS[name]())
