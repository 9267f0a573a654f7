"""Generator certification: independent counting formulas and labeled oracle."""

from itertools import combinations

import pytest

from hyperzagreb.canon import canonical_code
from hyperzagreb.codec import encode_graph6
from hyperzagreb.enumeration import (
    _labeled_tree_masks,
    brute_isomorphic,
    labeled_oracle,
    trees,
    unicyclic_graphs,
)
from hyperzagreb.graphs import is_tree, is_unicyclic, make_graph


def rooted_count_series(n_max):
    r = [0, 1]
    for n in range(1, n_max):
        total = 0
        for k in range(1, n + 1):
            dsum = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += dsum * r[n - k + 1]
        r.append(total // n)
    return r


def free_tree_count(n, r):
    """Otter's dissimilarity formula from the rooted series."""
    if n <= 1:
        return 1
    pairs = sum(r[i] * r[n - i] for i in range(1, n))
    diag = r[n // 2] if n % 2 == 0 else 0
    return r[n] - (pairs - diag) // 2


def unicyclic_count(n, r):
    """Dihedral (necklace) counting of rooted forests around each cycle.

    Uses the cycle index of the dihedral group acting on the cycle
    positions, with the rooted-tree generating function as bead weight.
    """

    def poly_mul(a, b):
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if i + j <= n and bj:
                        out[i + j] += ai * bj
        return out

    def poly_pow(a, e):
        out = [0] * (n + 1)
        out[0] = 1
        for _ in range(e):
            out = poly_mul(out, a)
        return out

    def substituted(k):
        # R(x^k) truncated at degree n
        out = [0] * (n + 1)
        for i in range(1, n + 1):
            if i * k <= n:
                out[i * k] = r[i]
        return out

    def phi(d):
        result, x = d, d
        p = 2
        while p * p <= x:
            if x % p == 0:
                while x % p == 0:
                    x //= p
                result -= result // p
            p += 1
        if x > 1:
            result -= result // x
        return result

    total = 0
    for m in range(3, n + 1):
        # rotations
        rot = 0
        for d in range(1, m + 1):
            if m % d == 0:
                rot += phi(d) * poly_pow(substituted(d), m // d)[n]
        # reflections
        if m % 2 == 1:
            refl = m * poly_mul(substituted(1), poly_pow(substituted(2), (m - 1) // 2))[n]
        else:
            refl = (m // 2) * (
                poly_pow(substituted(2), m // 2)[n]
                + poly_mul(poly_pow(substituted(1), 2), poly_pow(substituted(2), (m - 2) // 2))[n]
            )
        count2m = rot + refl
        assert count2m % (2 * m) == 0
        total += count2m // (2 * m)
    return total


def test_tree_counts_match_otter():
    r = rooted_count_series(16)
    for n in range(1, 13):
        assert sum(1 for _ in trees(n)) == free_tree_count(n, r), n


def test_tree_count_at_15():
    r = rooted_count_series(16)
    assert free_tree_count(15, r) == 7741
    assert sum(1 for _ in trees(15)) == 7741


def test_unicyclic_counts_match_necklace_formula():
    r = rooted_count_series(16)
    known = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657}
    for n in range(3, 11):
        formula = unicyclic_count(n, r)
        assert formula == known[n]
        assert sum(1 for _ in unicyclic_graphs(n)) == formula, n


def test_unicyclic_formula_large_orders():
    # the n = 15 and 16 totals used by the ranking checks
    r = rooted_count_series(16)
    assert unicyclic_count(15, r) == 110381
    assert unicyclic_count(16, r) == 311465


def test_class_purity_and_no_duplicates():
    for n in range(1, 10):
        seen = set()
        for g in trees(n):
            assert is_tree(g)
            code = canonical_code(g)
            assert code not in seen
            seen.add(code)
    for n in range(3, 10):
        seen = set()
        for g in unicyclic_graphs(n):
            assert is_unicyclic(g)
            code = canonical_code(g)
            assert code not in seen
            seen.add(code)


def test_emission_deterministic():
    a = [encode_graph6(g) for g in trees(9)]
    b = [encode_graph6(g) for g in trees(9)]
    assert a == b
    a = [encode_graph6(g) for g in unicyclic_graphs(8)]
    b = [encode_graph6(g) for g in unicyclic_graphs(8)]
    assert a == b


def test_prufer_scan_agrees_with_subset_scan():
    # independent cross-check of the oracle's labeled-tree source
    for n in range(2, 7):
        pairs = list(combinations(range(n), 2))
        subset_masks = set()
        for chosen in combinations(range(len(pairs)), n - 1):
            edges = [pairs[i] for i in chosen]
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            merges = 0
            for u, v in edges:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    merges += 1
            if merges == n - 1:
                subset_masks.add(sum(1 << i for i in chosen))
        assert subset_masks == _labeled_tree_masks(n)


def test_oracle_examples():
    r = labeled_oracle(4, "trees")
    assert len(r.classes) == 2
    r = labeled_oracle(4, "unicyclic")
    assert len(r.classes) == 2
    r = labeled_oracle(7, "trees")
    assert len(r.classes) == 11
    with pytest.raises(ValueError):
        labeled_oracle(9, "trees")
    with pytest.raises(ValueError):
        labeled_oracle(5, "multigraphs")


def test_oracle_agrees_with_generators_to_7():
    # class-for-class bijection by canonical code (n = 8 runs in acceptance)
    for n in range(1, 8):
        oracle_codes = {canonical_code(g) for g in labeled_oracle(n, "trees").classes}
        gen_codes = {canonical_code(g) for g in trees(n)}
        assert oracle_codes == gen_codes
    for n in range(3, 8):
        oracle_codes = {
            canonical_code(g) for g in labeled_oracle(n, "unicyclic").classes
        }
        gen_codes = {canonical_code(g) for g in unicyclic_graphs(n)}
        assert oracle_codes == gen_codes


def test_brute_isomorphic():
    assert brute_isomorphic(
        make_graph(3, [(0, 1), (1, 2)]), make_graph(3, [(0, 2), (0, 1)])
    )
    assert not brute_isomorphic(
        make_graph(4, [(0, 1), (1, 2), (2, 3)]),
        make_graph(4, [(0, 1), (0, 2), (0, 3)]),
    )


def test_domain_guards():
    with pytest.raises(ValueError):
        list(trees(0))
    with pytest.raises(ValueError):
        list(unicyclic_graphs(2))
