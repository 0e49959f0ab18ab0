"""Deterministic constructions of the named graphs and graph families used by
the verification suite, plus exact enumerators for trees, caterpillars and
the two shapes of small-diameter block graphs.

Vertex numbering is fixed per generator (cliques first, then attachments in
owner order) so labels and tests stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, GraphError, induced_subgraph, is_tree


@dataclass(frozen=True)
class LabeledGraph:
    """A graph plus named distinguished vertices/edges."""

    graph: Graph
    labels: dict = field(default_factory=dict)


def gen_basic(kind: str, n: int) -> LabeledGraph:
    """Standard small families: path, cycle, complete, star (n = leaf count)."""
    if kind == "path":
        if n < 1:
            raise ValueError("path needs n >= 1")
        return LabeledGraph(Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)]))
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return LabeledGraph(Graph.from_edges(n, edges))
    if kind == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return LabeledGraph(Graph.from_edges(n, edges))
    if kind == "star":
        if n < 1:
            raise ValueError("star needs at least one leaf")
        edges = [(0, i) for i in range(1, n + 1)]
        return LabeledGraph(Graph.from_edges(n + 1, edges), {"hub": 0})
    raise ValueError("unknown kind %r" % (kind,))


def gen_sharpness_family(n: int) -> LabeledGraph:
    """Two n-cliques joined by a bridge, 2n-2 leaves per non-bridge clique
    vertex.  The value halves (2n-1 down to n) when the bridge goes.

    Vertices: clique A = 0..n-1 with a = 0, clique B = n..2n-1 with b = n,
    then leaves grouped by owner (A side first).
    """
    if n < 2:
        raise ValueError("sharpness family needs n >= 2")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j))
            edges.append((n + i, n + j))
    edges.append((0, n))
    total = 2 * n
    owners = [v for v in range(1, n)] + [n + v for v in range(1, n)]
    for owner in owners:
        for _ in range(2 * n - 2):
            edges.append((owner, total))
            total += 1
    g = Graph.from_edges(total, edges)
    return LabeledGraph(g, {"a": 0, "b": n, "bridge": (0, n)})


def gen_realization(k: int, n: int) -> LabeledGraph:
    """A graph whose value is k and drops to exactly n when edge "e" goes.

    Needs k >= 3 and ceil((k+1)/2) <= n <= k: the full reachable range of
    single-edge drops.  n = k is a clique with one pendant leaf; smaller n
    joins an n-clique to a (k+1-n)-clique by a bridge and hangs k-1 leaves
    on every non-bridge clique vertex.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if not (k + 2) // 2 <= n <= k:
        raise ValueError("n must lie in [ceil((k+1)/2), k]")
    if n == k:
        edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
        edges.append((0, k))
        return LabeledGraph(Graph.from_edges(k + 1, edges), {"e": (0, k)})
    sizes = (n, k + 1 - n)
    edges = []
    for i in range(sizes[0]):
        for j in range(i + 1, sizes[0]):
            edges.append((i, j))
    for i in range(sizes[1]):
        for j in range(i + 1, sizes[1]):
            edges.append((n + i, n + j))
    edges.append((0, n))
    total = n + sizes[1]
    owners = [v for v in range(1, n)] + [n + v for v in range(1, sizes[1])]
    for owner in owners:
        for _ in range(k - 1):
            edges.append((owner, total))
            total += 1
    g = Graph.from_edges(total, edges)
    return LabeledGraph(g, {"a": 0, "b": n, "e": (0, n)})


def gen_leafy_unicyclic(cycle_len: int, leaf_counts) -> LabeledGraph:
    """One cycle with leaf_counts[i] pendant leaves on cycle vertex i."""
    leaf_counts = list(leaf_counts)
    if cycle_len < 3:
        raise ValueError("cycle length must be at least 3")
    if len(leaf_counts) != cycle_len:
        raise ValueError("need one leaf count per cycle vertex")
    if any(c < 0 for c in leaf_counts):
        raise ValueError("leaf counts must be nonnegative")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    labels = {"cycle[%d]" % i: i for i in range(cycle_len)}
    nxt = cycle_len
    for i, cnt in enumerate(leaf_counts):
        for j in range(cnt):
            edges.append((i, nxt))
            labels["leaf[%d][%d]" % (i, j)] = nxt
            nxt += 1
    return LabeledGraph(Graph.from_edges(nxt, edges), labels)


def gen_net() -> LabeledGraph:
    """Triangle with one pendant leaf on each vertex."""
    return gen_leafy_unicyclic(3, [1, 1, 1])


def gen_decorated_c4() -> LabeledGraph:
    """Four-cycle with one pendant leaf on each of two adjacent vertices."""
    return gen_leafy_unicyclic(4, [1, 1, 0, 0])


def gen_decorated_c8() -> LabeledGraph:
    """Eight-cycle with one pendant leaf on each of two vertices at distance
    three; drops under every vertex deletion but not under every edge
    deletion."""
    return gen_leafy_unicyclic(8, [1, 0, 0, 1, 0, 0, 0, 0])


def is_caterpillar(g: Graph) -> bool:
    """Tree whose non-leaf vertices form a path."""
    if not is_tree(g):
        return False
    if g.n <= 3:
        return True
    interior = [v for v in range(g.n) if g.degree(v) >= 2]
    if len(interior) <= 1:
        return True
    core, _ = induced_subgraph(g, interior)
    return is_tree(core) and all(core.degree(v) <= 2 for v in range(core.n))


# ---------------------------------------------------------------------------
# tree enumeration: rooted level sequences, reduced to one representative per
# free-tree isomorphism class via center-rooted subtree codes


def _rooted_level_sequences(n: int):
    # successor walk over level sequences, reverse lexicographic
    seq = list(range(1, n + 1))
    while True:
        yield tuple(seq)
        p = None
        for i in range(n - 1, -1, -1):
            if seq[i] > 2:
                p = i
                break
        if p is None:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _tree_from_levels(levels) -> Graph:
    n = len(levels)
    edges = []
    for i in range(1, n):
        parent = i - 1
        while levels[parent] != levels[i] - 1:
            parent -= 1
        edges.append((parent, i))
    return Graph.from_edges(n, edges)


def _subtree_code(g: Graph, v: int, parent: int) -> str:
    parts = sorted(_subtree_code(g, u, v) for u in g.neighbors(v) if u != parent)
    return "(" + "".join(parts) + ")"


def tree_canonical_code(g: Graph):
    """Isomorphism-invariant code for a tree, rooted at its center."""
    if not is_tree(g):
        raise GraphError("canonical tree code requires a tree")
    if g.n == 1:
        return ("1", "()")
    # find the one or two centers by repeated leaf stripping
    degrees = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    layer = [v for v in alive if degrees[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in g.neighbors(v):
                if u in alive:
                    degrees[u] -= 1
                    if degrees[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = sorted(alive)
    if len(centers) == 1:
        return ("1", _subtree_code(g, centers[0], -1))
    c1, c2 = centers
    halves = sorted([_subtree_code(g, c1, c2), _subtree_code(g, c2, c1)])
    return ("2", halves[0], halves[1])


def enumerate_trees(n: int):
    """All trees on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 13:
        raise ValueError("tree enumeration capped at 13 vertices")
    if n == 1:
        yield Graph.empty(1)
        return
    seen = set()
    for levels in _rooted_level_sequences(n):
        t = _tree_from_levels(levels)
        code = tree_canonical_code(t)
        if code not in seen:
            seen.add(code)
            yield t


def enumerate_caterpillars(n: int):
    """All caterpillars on n vertices, one per isomorphism class.

    Built as a spine path with a pendant-leaf count per spine vertex; the
    same caterpillar arises from several spine choices, so results are
    reduced by the tree code.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 16:
        raise ValueError("caterpillar enumeration capped at 16 vertices")
    if n == 1:
        yield Graph.empty(1)
        return
    seen = set()

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    for spine in range(1, n + 1):
        for counts in compositions(n - spine, spine):
            edges = [(i, i + 1) for i in range(spine - 1)]
            nxt = spine
            for i, cnt in enumerate(counts):
                for _ in range(cnt):
                    edges.append((i, nxt))
                    nxt += 1
            t = Graph.from_edges(n, edges)
            code = tree_canonical_code(t)
            if code not in seen:
                seen.add(code)
                yield t


# ---------------------------------------------------------------------------
# small-diameter block graphs, enumerated by shape parameters


def _side_multisets(budget: int):
    """Sorted tuples of side-block orders (each >= 2) costing sum(t-1) <= budget."""
    out = [()]
    def rec(prefix, minimum, left):
        for t in range(minimum, left + 2):
            nxt = prefix + (t,)
            out.append(nxt)
            rec(nxt, t, left - (t - 1))
    rec((), 2, budget)
    return out


def enumerate_block_graphs_diam2(max_n: int):
    """Every diameter-2 block graph with at most max_n vertices, once per
    isomorphism class: a hub vertex shared by at least two complete blocks."""
    if max_n < 3:
        return
    def rec(prefix, minimum, left):
        if len(prefix) >= 2:
            yield prefix
        for t in range(minimum, left + 2):
            if t - 1 <= left:
                yield from rec(prefix + (t,), t, left - (t - 1))
    for orders in rec((), 2, max_n - 1):
        edges = []
        nxt = 1
        for t in orders:
            block = [0] + list(range(nxt, nxt + t - 1))
            nxt += t - 1
            for i in range(len(block)):
                for j in range(i + 1, len(block)):
                    edges.append((block[i], block[j]))
        yield LabeledGraph(Graph.from_edges(nxt, edges), {"hub": 0})


def enumerate_block_graphs_diam3(max_n: int):
    """Every diameter-3 block graph with at most max_n vertices, once per
    isomorphism class.

    Shape parameters: central clique size b >= 2 and, per central vertex, a
    multiset of side-block orders.  Diameter exactly 3 needs side blocks on
    at least two central vertices.  Listing the per-vertex multisets in
    sorted order makes the parameterization injective up to isomorphism.
    """
    if max_n < 4:
        return
    for b in range(2, max_n + 1):
        budget = max_n - b
        choices = _side_multisets(budget)

        def assign(idx, remaining, prev):
            if idx == b:
                yield ()
                return
            for ms in choices:
                if ms < prev:
                    continue
                cost = sum(t - 1 for t in ms)
                if cost > remaining:
                    continue
                for rest in assign(idx + 1, remaining - cost, ms):
                    yield (ms,) + rest

        for combo in assign(0, budget, ()):
            if sum(1 for ms in combo if ms) < 2:
                continue
            edges = []
            for i in range(b):
                for j in range(i + 1, b):
                    edges.append((i, j))
            nxt = b
            labels = {"central[%d]" % i: i for i in range(b)}
            for i, ms in enumerate(combo):
                for t in ms:
                    block = [i] + list(range(nxt, nxt + t - 1))
                    nxt += t - 1
                    for x in range(len(block)):
                        for y in range(x + 1, len(block)):
                            edges.append((block[x], block[y]))
            yield LabeledGraph(Graph.from_edges(nxt, edges), labels)
