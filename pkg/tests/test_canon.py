"""Soundness of the canonical code against pure permutation-search ground truth."""

import random
from itertools import combinations, permutations

from hyperzagreb.canon import canonical_code, cycle_vertices, tree_centroids
from hyperzagreb.enumeration import (
    _graph_from_mask,
    _orbit_partition,
    brute_isomorphic,
    labeled_oracle,
)
from hyperzagreb.families import cycle, cycle_with_stars, path, star
from hyperzagreb.graphs import make_graph


def _relabel(g, perm):
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_relabeling_invariance_examples():
    a = make_graph(3, [(0, 1), (1, 2)])
    b = make_graph(3, [(1, 0), (0, 2)])
    assert canonical_code(a) == canonical_code(b)


def test_distinguishes_non_isomorphic():
    assert canonical_code(path(4)) != canonical_code(star(4))
    k4 = make_graph(4, list(combinations(range(4), 2)))
    assert canonical_code(cycle(4)) != canonical_code(k4)


def test_exact_on_all_graphs_up_to_5():
    # Ground truth: full permutation orbits over every labeled graph.  The
    # code is sound iff it is constant on each orbit and distinct across
    # orbit representatives.
    for n in range(1, 6):
        npairs = n * (n - 1) // 2
        all_masks = set(range(1 << npairs))
        reps = [rep for rep, _ in _orbit_partition(n, all_masks)] if n > 1 else [0]
        rep_codes = [canonical_code(_graph_from_mask(n, rep)) for rep in reps]
        assert len(set(rep_codes)) == len(reps)
        for rep, code in zip(reps, rep_codes):
            g = _graph_from_mask(n, rep)
            for perm in permutations(range(n)):
                assert canonical_code(_relabel(g, perm)) == code


def test_exact_on_all_graphs_order_6_sampled_relabelings():
    # All 156 isomorphism classes on 6 vertices get distinct codes; the
    # relabeling invariance is sampled (the <= 5 test covers it in full).
    all_masks = set(range(1 << 15))
    reps = [rep for rep, _ in _orbit_partition(6, all_masks)]
    assert len(reps) == 156
    rep_codes = [canonical_code(_graph_from_mask(6, rep)) for rep in reps]
    assert len(set(rep_codes)) == 156
    rng = random.Random(2)
    perms = [tuple(rng.sample(range(6), 6)) for _ in range(40)]
    for rep, code in zip(reps, rep_codes):
        g = _graph_from_mask(6, rep)
        for perm in perms:
            assert canonical_code(_relabel(g, perm)) == code


def test_trees_on_7_vertices_distinct_codes():
    oracle = labeled_oracle(7, "trees")
    assert len(oracle.classes) == 11
    codes = [canonical_code(g) for g in oracle.classes]
    assert len(set(codes)) == 11
    for a, b in combinations(oracle.classes, 2):
        assert not brute_isomorphic(a, b)


def test_unicyclic_code_invariance_random():
    rng = random.Random(5)
    for counts in ([3], [1, 2], [2, 0, 5], [1, 1, 1, 1]):
        for m in (3, 4, 5, 6):
            g = cycle_with_stars(m, counts[: m - 1] or [1])
            code = canonical_code(g)
            for _ in range(40):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_code(_relabel(g, perm)) == code


def test_disconnected_codes():
    two_edges = make_graph(4, [(0, 1), (2, 3)])
    other_labeling = make_graph(4, [(0, 2), (1, 3)])
    assert canonical_code(two_edges) == canonical_code(other_labeling)
    edge_plus_isolated = make_graph(4, [(0, 1)])
    assert canonical_code(two_edges) != canonical_code(edge_plus_isolated)


def test_centroids_and_cycle_helpers():
    assert tree_centroids(path(4)) == [1, 2]
    assert tree_centroids(path(5)) == [2]
    assert tree_centroids(star(7)) == [0]
    assert sorted(cycle_vertices(cycle_with_stars(4, [3, 1]))) == [0, 1, 2, 3]


def test_deterministic_across_runs():
    g = cycle_with_stars(5, [2, 0, 3])
    assert canonical_code(g) == canonical_code(g)
    expected = canonical_code(star(9))
    for _ in range(3):
        assert canonical_code(star(9)) == expected
