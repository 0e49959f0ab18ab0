"""Structural criticality tests and the machinery that cross-checks each one
against brute-force ground truth over a corpus.

Every characterization here is a fast shape predicate; ground truth always
comes from the solver via the criticality module.  A corpus run that produces
any disagreement means the implementation (not the mathematics) is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .criticality import (
    EdgeBoundViolation,
    edge_drop_profile,
    detour_drop_criterion,
    is_edge_critical,
    is_vertex_critical,
)
from .graph6 import emit_graph6
from .graphs import (
    Graph,
    all_pairs_distances,
    block_decomposition,
    delete_edge,
    exists_alpha_set_avoiding,
    independence_number,
    is_connected,
    is_tree,
    metric_summary,
)
from .families import LabeledGraph
from .solver import packing_chromatic_number


class ShapeError(ValueError):
    """Input violates a characterization's structural precondition."""


@dataclass(frozen=True)
class TheoremVerdict:
    """Agreement record between a structural test and solver ground truth."""

    theorem_id: str
    graph6: str
    structural_verdict: bool
    ground_truth: bool
    agree: bool
    details: object = None


@dataclass(frozen=True)
class VerificationSummary:
    theorem_id: str
    checked: int
    skipped: int
    disagreements: tuple
    positives: tuple


@dataclass(frozen=True)
class BlockDiam3Classification:
    """Which of the three critical shapes a diameter-3 block graph matches."""

    case: str
    central_block: frozenset
    per_vertex: dict
    p3: int
    block_count: int


def classify_small_critical(g: Graph):
    """2 for the single-edge graph, 3 for the triangle or the 4-path, else None.

    These are exactly the shapes that are deletion-critical with values 2
    and 3.
    """
    if g.n == 2 and g.edge_count == 1:
        return 2
    if g.n == 3 and g.edge_count == 3:
        return 3
    if g.n == 4 and g.edge_count == 3 and is_connected(g) \
            and g.degree_sequence() == (2, 2, 1, 1):
        return 3
    return None


def _two_core(g: Graph):
    # iterated leaf stripping; returns the surviving vertex set
    degrees = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    queue = [v for v in alive if degrees[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                degrees[u] -= 1
                if degrees[u] <= 1:
                    queue.append(u)
    return alive


def is_leafy_unicyclic(g: Graph) -> bool:
    """Connected, exactly one cycle, and everything off the cycle is a leaf
    hanging directly on a cycle vertex."""
    if g.n < 3 or not is_connected(g) or g.edge_count != g.n:
        return False
    cycle = _two_core(g)
    for v in range(g.n):
        if v in cycle:
            continue
        if g.degree(v) != 1 or g.neighbors(v)[0] not in cycle:
            return False
    return True


def classify_4critical_leafy_unicyclic(g: Graph) -> bool:
    """Among leafy unicyclic graphs, recognize the three shapes that are
    deletion-critical with value 4: long cycles whose length is not a
    multiple of four, the triangle with a leaf on every vertex, and the
    4-cycle with leaves on two adjacent vertices."""
    if not is_leafy_unicyclic(g):
        raise ShapeError("input is not a leafy unicyclic graph")
    cycle = _two_core(g)
    length = len(cycle)
    if g.n == length:
        return length >= 5 and length % 4 != 0
    counts = {v: 0 for v in cycle}
    for v in range(g.n):
        if v not in cycle:
            counts[g.neighbors(v)[0]] += 1
    if length == 3:
        return all(c == 1 for c in counts.values())
    if length == 4:
        supports = [v for v, c in counts.items() if c > 0]
        return (len(supports) == 2
                and all(counts[v] == 1 for v in supports)
                and g.has_edge(supports[0], supports[1]))
    return False


def check_diam2_characterization(g: Graph, deadline=None) -> TheoremVerdict:
    """Per-edge test for diameter-2 graphs: deleting the edge either raises
    the independence number, or separates some closed-neighborhood vertex
    from the opposite endpoint by distance >= 3 while a maximum independent
    set avoids both."""
    if not is_connected(g) or metric_summary(g).diameter != 2:
        raise ShapeError("characterization requires a connected graph of diameter 2")
    alpha = independence_number(g)[0]
    details = {}
    structural = True
    for e in g.edges:
        h = delete_edge(g, e)
        if independence_number(h)[0] > alpha:
            details[e] = "alpha-raise"
            continue
        dh = all_pairs_distances(h).dist
        tag = "none"
        for ui, uj in (e, (e[1], e[0])):
            for y in [ui] + g.neighbors(ui):
                if dh[y][uj] >= 3 and exists_alpha_set_avoiding(g, (y, uj)):
                    tag = "far-pair"
                    break
            if tag != "none":
                break
        details[e] = tag
        if tag == "none":
            structural = False
    truth = is_edge_critical(g, deadline=deadline)
    return TheoremVerdict("diam2", emit_graph6(g), structural, truth,
                          structural == truth, details)


def check_block_diam2(g: Graph, deadline=None) -> TheoremVerdict:
    """Diameter-2 block graphs are deletion-critical exactly when they have
    no leaf."""
    if not is_connected(g):
        raise ShapeError("input must be connected")
    if metric_summary(g).diameter != 2:
        raise ShapeError("input must have diameter 2")
    if not block_decomposition(g).is_block_graph:
        raise ShapeError("input must be a block graph")
    structural = g.min_degree() >= 2
    truth = is_edge_critical(g, deadline=deadline)
    return TheoremVerdict("block-diam2", emit_graph6(g), structural, truth,
                          structural == truth, {"min_degree": g.min_degree()})


def classify_block_diam3(g: Graph) -> BlockDiam3Classification:
    """Classify a diameter-3 block graph against the three critical shapes.

    With B the central block (the metric center) of size b, the graph is
    critical exactly when one of these holds, matched in order:
      a: every central vertex has degree b (one pendant leaf each);
      b: every central vertex has degree b+1 and all but one carry two leaf
         neighbors;
      c: every central vertex either sits in a side block of order >= 4
         without leaf neighbors (c1), sits in two side blocks of order 3
         without leaf neighbors (c2), or has degree b+1 with two leaf
         neighbors (c3) -- and some central vertex satisfies c1 or c2.
    """
    if g.n == 0 or not is_connected(g):
        raise ShapeError("input must be connected")
    bd = block_decomposition(g)
    if not bd.is_block_graph:
        raise ShapeError("input must be a block graph")
    if metric_summary(g).diameter != 3:
        raise ShapeError("input must have diameter 3")
    if bd.central_block is None:
        raise ShapeError("center does not span a block")
    central = bd.blocks[bd.central_block]
    b = len(central)
    side_orders = {x: [] for x in central}
    for i, blk in enumerate(bd.blocks):
        if i == bd.central_block:
            continue
        for x in blk:
            if x in central:
                side_orders[x].append(len(blk))
    leaf_neighbors = {x: sum(1 for u in g.neighbors(x) if g.degree(u) == 1)
                      for x in central}
    per_vertex = {}
    for x in central:
        tags = set()
        if leaf_neighbors[x] == 0 and any(t >= 4 for t in side_orders[x]):
            tags.add("c1")
        if leaf_neighbors[x] == 0 and sum(1 for t in side_orders[x] if t == 3) >= 2:
            tags.add("c2")
        if g.degree(x) == b + 1 and leaf_neighbors[x] == 2:
            tags.add("c3")
        per_vertex[x] = frozenset(tags)
    if all(g.degree(x) == b for x in central):
        case = "a"
    elif (all(g.degree(x) == b + 1 for x in central)
          and sum(1 for x in central if leaf_neighbors[x] == 2) == b - 1):
        case = "b"
    elif (all(per_vertex[x] for x in central)
          and any(per_vertex[x] & {"c1", "c2"} for x in central)):
        case = "c"
    else:
        case = "none"
    p3 = sum(1 for x in central if "c3" in per_vertex[x])
    return BlockDiam3Classification(case, frozenset(central), per_vertex, p3,
                                    len(bd.blocks))


def check_block_diam3(g: Graph, deadline=None) -> TheoremVerdict:
    cls = classify_block_diam3(g)
    structural = cls.case != "none"
    truth = is_edge_critical(g, deadline=deadline)
    return TheoremVerdict("block-diam3", emit_graph6(g), structural, truth,
                          structural == truth,
                          {"case": cls.case, "p3": cls.p3})


def check_tree_equivalence(t: Graph, deadline=None) -> TheoremVerdict:
    """For trees, dropping under every vertex deletion and dropping under
    every edge deletion are the same property."""
    if not is_tree(t):
        raise ShapeError("input must be a tree")
    structural = is_vertex_critical(t, deadline=deadline)
    truth = is_edge_critical(t, deadline=deadline)
    return TheoremVerdict("tree-equivalence", emit_graph6(t), structural, truth,
                          structural == truth, None)


def _check_small(tid: str, target: int, g: Graph, deadline):
    structural = classify_small_critical(g) == target
    chi = packing_chromatic_number(g, deadline=deadline).value
    truth = chi == target and is_edge_critical(g, deadline=deadline)
    return TheoremVerdict(tid, emit_graph6(g), structural, truth,
                          structural == truth, {"chi": chi})


def _check_leafy(g: Graph, deadline):
    structural = classify_4critical_leafy_unicyclic(g)
    chi = packing_chromatic_number(g, deadline=deadline).value
    truth = chi == 4 and is_edge_critical(g, deadline=deadline)
    return TheoremVerdict("leafy-unicyclic-4critical", emit_graph6(g),
                          structural, truth, structural == truth, {"chi": chi})


def _check_edge_bound(g: Graph, deadline):
    try:
        profile = edge_drop_profile(g, deadline=deadline)
        ok = True
        details = {e: val for e, (val, _) in profile.items()}
    except EdgeBoundViolation as exc:
        ok = False
        details = str(exc)
    return TheoremVerdict("edge-bound", emit_graph6(g), ok, True, ok, details)


def _check_connected_critical(g: Graph, deadline):
    crit = is_edge_critical(g, deadline=deadline)
    structural = (not crit) or is_connected(g)
    return TheoremVerdict("connected-critical", emit_graph6(g), structural,
                          True, structural, {"edge_critical": crit})


def _check_vertex_implication(g: Graph, deadline):
    crit = is_edge_critical(g, deadline=deadline)
    structural = (not crit) or is_vertex_critical(g, deadline=deadline)
    return TheoremVerdict("vertex-critical-implication", emit_graph6(g),
                          structural, True, structural, {"edge_critical": crit})


def _check_detour_drop(g: Graph, deadline):
    """Wherever the detour criterion fires, the solver must confirm a strict
    drop for that edge."""
    chi = packing_chromatic_number(g, deadline=deadline).value
    diam = metric_summary(g).diameter
    fired = 0
    ok = True
    for e in g.edges:
        h = delete_edge(g, e)
        if metric_summary(h).diameter <= diam:
            continue
        dh = all_pairs_distances(h).dist
        dropped = None
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if dh[u][v] <= diam:
                    continue
                if detour_drop_criterion(g, e, u, v, deadline=deadline):
                    fired += 1
                    if dropped is None:
                        after = packing_chromatic_number(
                            h, upper_bound=chi, deadline=deadline).value
                        dropped = after < chi
                    if not dropped:
                        ok = False
    return TheoremVerdict("detour-drop", emit_graph6(g), ok, True, ok,
                          {"fired": fired})


_REGISTRY = {
    "small-critical-2": (lambda g: True,
                         lambda g, d: _check_small("small-critical-2", 2, g, d)),
    "small-critical-3": (lambda g: True,
                         lambda g, d: _check_small("small-critical-3", 3, g, d)),
    "leafy-unicyclic-4critical": (is_leafy_unicyclic, _check_leafy),
    "diam2": (lambda g: is_connected(g) and metric_summary(g).diameter == 2,
              lambda g, d: check_diam2_characterization(g, deadline=d)),
    "block-diam2": (lambda g: is_connected(g)
                    and metric_summary(g).diameter == 2
                    and block_decomposition(g).is_block_graph,
                    lambda g, d: check_block_diam2(g, deadline=d)),
    "block-diam3": (lambda g: is_connected(g)
                    and metric_summary(g).diameter == 3
                    and block_decomposition(g).is_block_graph,
                    lambda g, d: check_block_diam3(g, deadline=d)),
    "tree-equivalence": (is_tree,
                         lambda g, d: check_tree_equivalence(g, deadline=d)),
    "edge-bound": (lambda g: g.n >= 1, _check_edge_bound),
    "connected-critical": (lambda g: g.n >= 1, _check_connected_critical),
    "vertex-critical-implication": (lambda g: g.n >= 1, _check_vertex_implication),
    "detour-drop": (is_connected, _check_detour_drop),
}


def theorem_ids():
    return sorted(_REGISTRY)


def theorem_check(theorem_id: str, g, deadline=None):
    """Run one theorem's check on one graph.

    Returns None when the graph fails the theorem's shape filter.
    """
    if theorem_id not in _REGISTRY:
        raise ValueError("unknown theorem id %r" % (theorem_id,))
    if isinstance(g, LabeledGraph):
        g = g.graph
    shape, run = _REGISTRY[theorem_id]
    if not shape(g):
        return None
    return run(g, deadline)


def verify_theorem(theorem_id: str, corpus, deadline=None) -> VerificationSummary:
    """Check every corpus graph that fits the theorem's shape; collect
    disagreements (sorted by graph6) and structural positives."""
    checked = 0
    skipped = 0
    disagreements = []
    positives = []
    for g in corpus:
        verdict = theorem_check(theorem_id, g, deadline=deadline)
        if verdict is None:
            skipped += 1
            continue
        checked += 1
        if not verdict.agree:
            disagreements.append(verdict)
        if verdict.structural_verdict:
            positives.append(verdict.graph6)
    disagreements.sort(key=lambda v: v.graph6)
    return VerificationSummary(theorem_id, checked, skipped,
                               tuple(disagreements), tuple(sorted(positives)))
