from collections import deque

import pytest

from packcrit import (
    LabeledGraph,
    are_isomorphic,
    canonical_key,
    gen_basic,
    is_connected,
)
from packcrit.corpus import all_graphs, connected_graphs, corpus_names, load_corpus


# published counts of connected / arbitrary unlabeled simple graphs
CONNECTED_EXACT = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
ALL_EXACT = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def naive_diameter(g):
    # independent check: dict-based BFS, no shared code with the package metric
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    q.append(u)
        if len(dist) < g.n:
            return None
        best = max(best, max(dist.values()))
    return best


class TestConnectedEnumeration:
    @pytest.mark.parametrize("n,count", sorted(CONNECTED_EXACT.items()))
    def test_counts(self, n, count):
        got = sum(1 for g in connected_graphs(n) if g.n == n)
        assert got == count

    def test_all_connected(self):
        assert all(is_connected(g) for g in connected_graphs(5))

    def test_pairwise_distinct(self):
        graphs = list(connected_graphs(6))
        keys = {canonical_key(g, max_perms=None) for g in graphs}
        assert len(keys) == len(graphs)

    def test_contains_known_graphs(self):
        c5 = gen_basic("cycle", 5).graph
        assert any(are_isomorphic(g, c5) for g in connected_graphs(5) if g.n == 5)
        k4 = gen_basic("complete", 4).graph
        assert any(are_isomorphic(g, k4) for g in connected_graphs(4) if g.n == 4)


class TestAllGraphEnumeration:
    @pytest.mark.parametrize("n,count", sorted(ALL_EXACT.items()))
    def test_counts(self, n, count):
        got = sum(1 for g in all_graphs(n) if g.n == n)
        assert got == count

    def test_includes_disconnected(self):
        assert any(not is_connected(g) for g in all_graphs(4))

    def test_pairwise_distinct(self):
        graphs = list(all_graphs(5))
        keys = {canonical_key(g, max_perms=None) for g in graphs}
        assert len(keys) == len(graphs)


class TestRegistry:
    def test_names(self):
        names = corpus_names()
        for expected in ("connected-le5", "connected-le6", "connected-le7",
                         "all-le5", "all-le6", "connected-le6-diam2",
                         "connected-le7-diam2", "trees-le12",
                         "caterpillars-le12", "block-diam2-le10",
                         "block-diam3-le12"):
            assert expected in names

    def test_unknown_corpus(self):
        with pytest.raises(ValueError):
            load_corpus("no-such-corpus")

    def test_sizes(self):
        assert len(load_corpus("connected-le5")) == 31
        assert len(load_corpus("connected-le6")) == 143
        assert len(load_corpus("all-le5")) == 52
        assert len(load_corpus("all-le6")) == 208
        assert len(load_corpus("trees-le12")) == 987

    def test_diam2_selection_matches_naive_bfs(self):
        subset = load_corpus("connected-le6-diam2")
        keys = {canonical_key(g, max_perms=None) for g in subset}
        recomputed = {canonical_key(g, max_perms=None)
                      for g in connected_graphs(6) if naive_diameter(g) == 2}
        assert keys == recomputed

    def test_labeled_entries_carry_labels(self):
        entries = load_corpus("block-diam2-le10")
        assert all(isinstance(lg, LabeledGraph) for lg in entries)
        assert all("hub" in lg.labels for lg in entries)


class TestEnumeratorCrossChecks:
    def test_block_diam3_matches_corpus_filter(self):
        # construction route vs selection route on the shared <= 7 range
        from packcrit import block_decomposition, metric_summary

        built = [lg.graph for lg in load_corpus("block-diam3-le12")
                 if lg.graph.n <= 7]
        built_keys = {canonical_key(g, max_perms=None) for g in built}
        assert len(built_keys) == len(built)

        selected_keys = set()
        for g in connected_graphs(7):
            if metric_summary(g).diameter != 3:
                continue
            if not block_decomposition(g).is_block_graph:
                continue
            selected_keys.add(canonical_key(g, max_perms=None))
        assert built_keys == selected_keys

    def test_block_diam2_matches_corpus_filter(self):
        from packcrit import block_decomposition, metric_summary

        built = [lg.graph for lg in load_corpus("block-diam2-le10")
                 if lg.graph.n <= 7]
        built_keys = {canonical_key(g, max_perms=None) for g in built}

        selected_keys = set()
        for g in connected_graphs(7):
            if metric_summary(g).diameter != 2:
                continue
            if not block_decomposition(g).is_block_graph:
                continue
            selected_keys.add(canonical_key(g, max_perms=None))
        assert built_keys == selected_keys

    def test_trees_corpus_matches_connected_filter(self):
        from packcrit import is_tree

        tree_keys = {canonical_key(t, max_perms=None)
                     for t in load_corpus("trees-le12") if t.n <= 7}
        selected = {canonical_key(g, max_perms=None)
                    for g in connected_graphs(7) if is_tree(g)}
        assert tree_keys == selected
