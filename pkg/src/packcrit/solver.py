"""Exact packing-coloring decision procedure and chromatic value computation.

A coloring assigns positive integer colors; any two vertices sharing color c
must be at distance greater than c.  The decision procedure is a depth-first
search with forward checking over per-vertex color domains, plus a symmetry
break: vertices with interchangeable distance profiles are forced into
non-decreasing color order, which is safe because swapping colors between two
such vertices preserves every distance constraint.

The optimizer seeds an upper bound from the smaller of two cheap witnesses:
color one maximum independent set 1 and everything else distinct, or color
greedily in label order with the least legal color.  It then walks downward
until the first infeasible palette size.  Values are memoized per exact
adjacency and per canonical form; witnesses are always rebuilt by a fresh
decision call so cache state never changes reported colorings.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .canon import canonical_key
from .graphs import (
    INFINITY,
    Graph,
    all_pairs_distances,
    connected_components,
    independence_number,
    induced_subgraph,
)


class SolveTimeout(Exception):
    """Deadline expired before the search finished."""


@dataclass(frozen=True)
class PackingColoring:
    """Vertex colors, 1-based; colors[v] is the color of vertex v."""

    colors: tuple

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    @classmethod
    def from_mapping(cls, n: int, mapping) -> "PackingColoring":
        colors = [0] * n
        for v, c in mapping.items():
            colors[v] = c
        return cls(tuple(colors))

    def color_class(self, c: int) -> frozenset:
        return frozenset(v for v, cv in enumerate(self.colors) if cv == c)


@dataclass(frozen=True)
class ChiRhoResult:
    value: int
    witness: PackingColoring
    node_count: int


def is_valid_packing_coloring(g: Graph, coloring) -> bool:
    """Every vertex colored >= 1 and every same-colored pair far enough apart."""
    colors = coloring.colors if isinstance(coloring, PackingColoring) else tuple(coloring)
    if len(colors) != g.n:
        return False
    if any(c < 1 for c in colors):
        return False
    dist = all_pairs_distances(g).dist
    for u in range(g.n):
        cu = colors[u]
        for v in range(u + 1, g.n):
            if colors[v] == cu and dist[u][v] <= cu:
                return False
    return True


def _twin_groups(g: Graph):
    """Partition vertices into groups whose members have identical distance
    rows away from each other (so any color swap inside a group is safe)."""
    n = g.n
    dist = all_pairs_distances(g).dist
    groups = []
    for v in range(n):
        placed = False
        for grp in groups:
            r = grp[0]
            ok = all(dist[v][w] == dist[r][w] for w in range(n) if w != v and w != r)
            if ok:
                grp.append(v)
                placed = True
                break
        if not placed:
            groups.append([v])
    return groups


def _search(g: Graph, k: int, pinned, deadline):
    """Core DFS.  Returns (color tuple or None, nodes expanded)."""
    if deadline is not None and time.monotonic() > deadline:
        raise SolveTimeout("deadline expired before search started")
    n = g.n
    if n == 0:
        return (), 0
    if k <= 0:
        return None, 0
    dist = all_pairs_distances(g).dist

    full = (1 << k) - 1
    domains = [full] * n
    for v, c in pinned.items():
        domains[v] = 1 << (c - 1)

    # conflict[v][c]: vertices that cannot share color c with v
    conflict = [[0] * (k + 1) for _ in range(n)]
    for v in range(n):
        acc = 0
        by_d = {}
        for u in range(n):
            if u != v and dist[v][u] <= k:
                by_d.setdefault(int(dist[v][u]), []).append(u)
        for c in range(1, k + 1):
            for u in by_d.get(c, ()):
                acc |= 1 << u
            conflict[v][c] = acc

    groups = _twin_groups(g)
    pinset = set(pinned)
    twin_pred = [None] * n
    ordered_groups = []
    for grp in groups:
        members = [v for v in grp if v not in pinset]
        if not members:
            continue
        if not (set(grp) & pinset):
            for a, b in zip(members, members[1:]):
                twin_pred[b] = a
        ordered_groups.append(members)
    ordered_groups.sort(key=lambda ms: (-g.degree(ms[0]), ms[0]))
    order = sorted(pinset) + [v for ms in ordered_groups for v in ms]

    colors = [0] * n
    unassigned = (1 << n) - 1
    nodes = 0
    ticker = 0

    def dfs(idx: int) -> bool:
        nonlocal unassigned, nodes, ticker
        if idx == n:
            return True
        v = order[idx]
        dom = domains[v]
        pred = twin_pred[v]
        if pred is not None:
            # twins take colors in non-decreasing id order
            dom &= ~((1 << (colors[pred] - 1)) - 1)
        unassigned &= ~(1 << v)
        m = dom
        while m:
            low = m & -m
            m ^= low
            c = low.bit_length()
            nodes += 1
            ticker += 1
            if deadline is not None and ticker >= 1024:
                ticker = 0
                if time.monotonic() > deadline:
                    raise SolveTimeout("packing coloring search timed out")
            colors[v] = c
            changes = []
            ok = True
            um = conflict[v][c] & unassigned
            while um:
                ul = um & -um
                um ^= ul
                u = ul.bit_length() - 1
                du = domains[u]
                if (du >> (c - 1)) & 1:
                    domains[u] = du & ~(1 << (c - 1))
                    changes.append((u, du))
                    if domains[u] == 0:
                        ok = False
                        break
            if ok and dfs(idx + 1):
                return True
            for u, du in changes:
                domains[u] = du
        colors[v] = 0
        unassigned |= 1 << v
        return False

    if dfs(0):
        return tuple(colors), nodes
    return None, nodes


def _check_pins(g: Graph, k: int, pinned):
    pinned = dict(pinned or {})
    for v, c in pinned.items():
        if not 0 <= v < g.n:
            raise ValueError("pinned vertex %r outside graph" % (v,))
        if not 1 <= c <= k:
            raise ValueError("pinned color %r outside 1..%d" % (c, k))
    return pinned


def decide_packing_k_colorable(g: Graph, k: int, pinned=None, deadline=None):
    """Color tuple using colors 1..k honoring pins, or None if impossible."""
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    pinned = _check_pins(g, k, pinned)
    return _search(g, k, pinned, deadline)[0]


_VALUE_MEMO: dict = {}
_CANON_MEMO: dict = {}


def clear_caches():
    _VALUE_MEMO.clear()
    _CANON_MEMO.clear()


def _greedy_upper(g: Graph) -> int:
    """Palette size of the least-legal-color greedy coloring in label order."""
    dist = all_pairs_distances(g).dist
    colors = [0] * g.n
    worst = 0
    for v in range(g.n):
        row = dist[v]
        c = 1
        while any(colors[u] == c and row[u] <= c for u in range(v)):
            c += 1
        colors[v] = c
        if c > worst:
            worst = c
    return worst


def _component_value(g: Graph, upper_bound, deadline):
    """Chi-rho of a connected (or empty) graph, with memoization."""
    exact = (g.n, g.rows)
    if exact in _VALUE_MEMO:
        return _VALUE_MEMO[exact], 0
    # the canonical layer catches relabelings across corpus sweeps; above
    # this size the enumeration cost outweighs any realistic reuse
    ckey = canonical_key(g) if g.n <= 20 else None
    if ckey is not None and ckey in _CANON_MEMO:
        value = _CANON_MEMO[ckey]
        _VALUE_MEMO[exact] = value
        return value, 0

    if g.n == 0:
        value, nodes = 0, 0
    else:
        alpha = independence_number(g)[0]
        ub = min(g.n - alpha + 1, _greedy_upper(g))
        if upper_bound is not None and upper_bound < ub:
            ub = upper_bound
        k = ub
        witness, nodes = _search(g, k, {}, deadline)
        if witness is None:
            # caller's bound was below the optimum; climb until feasible
            while witness is None:
                k += 1
                witness, extra = _search(g, k, {}, deadline)
                nodes += extra
        while k > 1:
            lower, extra = _search(g, k - 1, {}, deadline)
            nodes += extra
            if lower is None:
                break
            k -= 1
        value = k

    _VALUE_MEMO[exact] = value
    if ckey is not None:
        _CANON_MEMO[ckey] = value
    return value, nodes


def packing_chromatic_number(g: Graph, upper_bound=None, deadline=None) -> ChiRhoResult:
    """Exact packing chromatic number with an optimal witness coloring.

    upper_bound, when given, must be a genuine upper bound hint; a too-small
    hint costs extra work but never changes the answer.
    """
    comps = connected_components(g)
    total_nodes = 0
    if len(comps) <= 1:
        value, nodes = _component_value(g, upper_bound, deadline)
        total_nodes += nodes
    else:
        # color classes never interact across components, so take the max
        value = 0
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            v, nodes = _component_value(sub, upper_bound, deadline)
            total_nodes += nodes
            if v > value:
                value = v
    if g.n == 0:
        return ChiRhoResult(0, PackingColoring(()), total_nodes)
    witness = decide_packing_k_colorable(g, value, deadline=deadline)
    if witness is None:
        raise AssertionError("memoized value %d is infeasible; cache corrupt" % value)
    return ChiRhoResult(value, PackingColoring(witness), total_nodes)


def brute_force_chi_rho(g: Graph) -> int:
    """Independent small-graph oracle: plain exhaustive search, n <= 8 only.

    Shares no code with the main solver on purpose; distances come from
    Floyd-Warshall here rather than BFS.
    """
    n = g.n
    if n > 8:
        raise ValueError("instance too large for the brute force oracle")
    if n == 0:
        return 0
    big = n + 1
    dist = [[0 if i == j else (1 if g.has_edge(i, j) else big) for j in range(n)]
            for i in range(n)]
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][m] + dist[m][j] < dist[i][j]:
                    dist[i][j] = dist[i][m] + dist[m][j]

    best = n  # distinct colors 1..n always work
    colors = [0] * n

    def extend(v: int, used_max: int):
        nonlocal best
        if used_max >= best:
            return
        if v == n:
            best = used_max
            return
        for c in range(1, best):
            good = True
            for u in range(v):
                if colors[u] == c and dist[u][v] <= c:
                    good = False
                    break
            if good:
                colors[v] = c
                extend(v + 1, max(used_max, c))
        colors[v] = 0

    extend(0, 0)
    return best
