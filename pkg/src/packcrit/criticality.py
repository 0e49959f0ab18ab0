"""Criticality analysis: how the packing chromatic number reacts to deleting
single edges or vertices.

A graph counts as deletion-critical when every proper subgraph colors with a
strictly smaller palette.  For edge-criticality that reduces to: the graph is
a single vertex, or it has no isolated vertex and every edge deletion drops
the value (a graph with an isolated vertex plus anything else can shed that
vertex without changing the value, so it is never critical).

Deleting one edge can at most halve the value, in the precise sense
chi(G) <= 2*chi(G-e) - 1, except in the degenerate situation where G-e is
edgeless and chi(G-e) = 1 (then chi(G) = 2 is possible).  The floor below and
the constructive repair both carry that exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    INFINITY,
    Graph,
    all_pairs_distances,
    delete_edge,
    delete_vertex,
    metric_summary,
)
from .solver import (
    PackingColoring,
    decide_packing_k_colorable,
    is_valid_packing_coloring,
    packing_chromatic_number,
)


class EdgeBoundViolation(RuntimeError):
    """A computed edge-deletion value broke a proven bound: solver defect."""


class RepairError(ValueError):
    """Coloring repair received invalid input or could not proceed."""


def edge_deletion_lower_bound(chi: int) -> int:
    """Largest guaranteed floor for chi(G-e) given chi(G) = chi.

    ceil((chi+1)/2) in general; the chi = 2 case drops to 1 because deleting
    the only edge of K2 leaves an edgeless graph.
    """
    if chi <= 1:
        return 0
    if chi == 2:
        return 1
    return (chi + 2) // 2


@dataclass(frozen=True)
class CriticalityReport:
    chi_rho: int
    edge_values: dict
    vertex_values: dict
    is_edge_critical: bool
    is_vertex_critical: bool
    edge_witnesses: object = None
    vertex_witnesses: object = None


def criticality_report(g: Graph, include_witnesses: bool = False,
                       deadline=None) -> CriticalityReport:
    """Exact per-edge and per-vertex deleted values plus the two verdicts.

    Vertex witnesses map original vertex ids to colors, skipping the deleted
    vertex; edge witnesses are colorings on the unchanged vertex set.
    """
    chi = packing_chromatic_number(g, deadline=deadline).value
    edge_values = {}
    edge_wit = {} if include_witnesses else None
    for e in g.edges:
        res = packing_chromatic_number(delete_edge(g, e), upper_bound=chi,
                                       deadline=deadline)
        edge_values[e] = res.value
        if include_witnesses:
            edge_wit[e] = res.witness
    vertex_values = {}
    vertex_wit = {} if include_witnesses else None
    for v in range(g.n):
        sub, kept = delete_vertex(g, v)
        res = packing_chromatic_number(sub, upper_bound=chi, deadline=deadline)
        vertex_values[v] = res.value
        if include_witnesses:
            vertex_wit[v] = {kept[i]: c for i, c in enumerate(res.witness.colors)}
    edge_crit = g.n == 1 or (
        g.n >= 2 and g.min_degree() >= 1
        and all(val < chi for val in edge_values.values()))
    vertex_crit = g.n >= 1 and all(val < chi for val in vertex_values.values())
    return CriticalityReport(chi, edge_values, vertex_values, edge_crit,
                             vertex_crit, edge_wit, vertex_wit)


def is_edge_critical(g: Graph, deadline=None) -> bool:
    """Early-exit edge-criticality: one decision solve per edge."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    if g.min_degree() == 0:
        return False
    chi = packing_chromatic_number(g, deadline=deadline).value
    for e in g.edges:
        if decide_packing_k_colorable(delete_edge(g, e), chi - 1,
                                      deadline=deadline) is None:
            return False
    return True


def is_vertex_critical(g: Graph, deadline=None) -> bool:
    """Early-exit vertex-criticality: one decision solve per vertex."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    chi = packing_chromatic_number(g, deadline=deadline).value
    for v in range(g.n):
        sub, _ = delete_vertex(g, v)
        if decide_packing_k_colorable(sub, chi - 1, deadline=deadline) is None:
            return False
    return True


def edge_drop_profile(g: Graph, deadline=None):
    """Map each edge to (chi(G-e), drop).  Bound breaches are hard errors."""
    chi = packing_chromatic_number(g, deadline=deadline).value
    floor = edge_deletion_lower_bound(chi)
    out = {}
    for e in g.edges:
        val = packing_chromatic_number(delete_edge(g, e), upper_bound=chi,
                                       deadline=deadline).value
        if val > chi:
            raise EdgeBoundViolation(
                "edge %r: deleted value %d exceeds chi %d" % (e, val, chi))
        if val < floor:
            raise EdgeBoundViolation(
                "edge %r: deleted value %d below guaranteed floor %d" % (e, val, floor))
        out[e] = (val, chi - val)
    return out


def _conflict_pairs(colors, dist, k):
    """Same-color-k pairs sitting at distance <= k."""
    members = [v for v, c in enumerate(colors) if c == k]
    pairs = []
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if dist[x][y] <= k:
                pairs.append((x, y))
    return pairs


def repair_coloring(g: Graph, e, c_prime) -> PackingColoring:
    """Turn a valid coloring of G-e into a valid coloring of G.

    Per broken color class the conflicting pairs always share one common
    vertex (shortest paths between conflicting vertices must all cross the
    restored edge, which forces a star shape); that vertex moves to a fresh
    color.  Fresh colors are handed out compactly above the old palette, and
    classes 1 and 2 never break at once, so at most m-1 fresh colors are
    needed for an m-color input: the result stays within palette 2m-1.  The
    one exception is m = 1 with a conflict (only K2 plus isolated vertices),
    which needs palette 2.
    """
    u1, u2 = e
    if u1 > u2:
        u1, u2 = u2, u1
    h = delete_edge(g, (u1, u2))
    colors = list(c_prime.colors if isinstance(c_prime, PackingColoring)
                  else c_prime)
    if len(colors) != g.n:
        raise RepairError("coloring covers %d vertices, graph has %d"
                          % (len(colors), g.n))
    if not is_valid_packing_coloring(h, colors):
        raise RepairError("input coloring is not valid on the edge-deleted graph")

    m = max(colors)
    dist = all_pairs_distances(g).dist
    fresh = m
    for k in sorted(set(colors)):
        pairs = _conflict_pairs(colors, dist, k)
        if not pairs:
            continue
        common = set(pairs[0])
        for p in pairs[1:]:
            common &= set(p)
        if not common:
            raise RepairError(
                "conflicting pairs for color %d share no common vertex" % k)
        # tie-break: nearest to the lower edge endpoint, then smallest id
        z = min(common, key=lambda w: (dist[w][u1], w))
        fresh += 1
        colors[z] = fresh

    result = PackingColoring(tuple(colors))
    if not is_valid_packing_coloring(g, result):
        raise RepairError("repair produced an invalid coloring")
    cap = 2 if m == 1 else 2 * m - 1
    if result.palette_size > cap:
        raise RepairError("repair exceeded the palette cap %d" % cap)
    return result


def detour_drop_criterion(g: Graph, e, u: int, v: int, deadline=None) -> bool:
    """Sufficient test for a strict drop under deleting e.

    True iff deleting e stretches the (finite) diameter, u and v end up
    farther apart than the old diameter, and some optimal coloring gives u
    and v distinct colors both at least that diameter.  The coloring search
    runs as pinned decision solves.  A True result guarantees
    chi(G-e) < chi(G).
    """
    uu, vv = e
    if not g.has_edge(uu, vv):
        raise ValueError("edge %r not present" % (e,))
    diam = metric_summary(g).diameter
    if diam == INFINITY or diam < 1:
        return False
    h = delete_edge(g, (uu, vv))
    if metric_summary(h).diameter <= diam:
        return False
    if all_pairs_distances(h).dist[u][v] <= diam:
        return False
    chi = packing_chromatic_number(g, deadline=deadline).value
    k = int(diam)
    for i in range(k, chi + 1):
        for j in range(i + 1, chi + 1):
            for pu, pv in ((u, v), (v, u)):
                if decide_packing_k_colorable(
                        g, chi, pinned={pu: i, pv: j},
                        deadline=deadline) is not None:
                    return True
    return False
