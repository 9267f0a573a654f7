"""Exhaustive generation of non-isomorphic trees and unicyclic graphs.

Free trees come from centroid decomposition: a tree with one centroid is a
multiset of rooted subtrees of size <= floor((n-1)/2) around a root, and a
tree with two centroids is an unordered pair of rooted halves of size n/2.
Both correspondences are bijections, so every isomorphism class is emitted
exactly once with no dedup pass.

Unicyclic graphs come cycle-first: a class is a cycle length m plus a
necklace (sequence up to rotation and reflection) of rooted-tree forms
hanging from the cycle positions.  The generator emits the sequence that
equals its own dihedral minimum, again exactly one per class.

The labeled oracle is the independent ground truth used to certify both
generators at small orders: it scans every labeled graph of the class and
partitions them into isomorphism classes purely by permutation orbits.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .graphs import Graph, from_adjacency, make_graph
from .rooted import Form, forests, form_edges, rooted_forms

ORACLE_MAX_ORDER = 8


def trees(n: int) -> Iterator[Graph]:
    """All free trees on n vertices, one canonical representative per class."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        yield from_adjacency([[]])
        return
    if n == 2:
        yield make_graph(2, [(0, 1)])
        return
    # Single centroid: every hanging subtree has at most floor((n-1)/2)
    # vertices.  (A subtree of exactly n/2 vertices would move the centroid.)
    for children in forests(n - 1, (n - 1) // 2):
        edges, last = form_edges(tuple(children), 0, 1)
        yield make_graph(last, edges)
    # Two adjacent centroids: unordered pair of rooted halves on n/2 vertices.
    if n % 2 == 0:
        halves = rooted_forms(n // 2)
        for i, f1 in enumerate(halves):
            for f2 in halves[i:]:
                edges, last = form_edges(f1, 0, 1)
                root2 = last
                more, last = form_edges(f2, root2, root2 + 1)
                edges = edges + [(0, root2)] + more
                yield make_graph(last, edges)


# Registry of rooted forms as dense integer ids.  Ids ascend in (size, form)
# order, so tuple-of-id comparisons agree with the form_key order used by
# canonical codes.
_REG_FORMS: list[Form] = []
_REG_IDS_BY_SIZE: list[list[int]] = [[]]  # index 0 unused
_REG_SIZES: list[int] = []


def _registry_ensure(size: int) -> None:
    while len(_REG_IDS_BY_SIZE) - 1 < size:
        s = len(_REG_IDS_BY_SIZE)
        ids = []
        for f in rooted_forms(s):
            ids.append(len(_REG_FORMS))
            _REG_FORMS.append(f)
            _REG_SIZES.append(s)
        _REG_IDS_BY_SIZE.append(ids)


def unicyclic_graphs(n: int) -> Iterator[Graph]:
    """All connected unicyclic graphs on n vertices, one per class."""
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    _registry_ensure(n - 2)
    for m in range(3, n + 1):
        yield from _cycle_necklaces(m, n)


def _cycle_necklaces(m: int, n: int) -> Iterator[Graph]:
    """Unicyclic classes with cycle length m: dihedral-minimal id tuples."""
    sizes = _REG_SIZES
    ids_by_size = _REG_IDS_BY_SIZE
    extra = n - m  # vertices beyond the cycle

    def build(t: tuple[int, ...]) -> Graph:
        edges = [(i, (i + 1) % m) for i in range(m)]
        next_id = m
        for pos, fid in enumerate(t):
            if sizes[fid] > 1:
                more, next_id = form_edges(_REG_FORMS[fid], pos, next_id)
                edges.extend(more)
        return make_graph(n, edges)

    def is_dihedral_min(t: tuple[int, ...]) -> bool:
        t0 = t[0]
        for s in (t, t[::-1]):
            for i in range(m):
                if s[i] == t0:
                    rot = s[i:] + s[:i]
                    if rot < t:
                        return False
        return True

    # Fill positions left to right; position 0 carries the smallest id, so
    # only rotations aligned on that id can compete in the dihedral check.
    prefix = [0] * m

    def fill(pos: int, remaining: int, min_id: int) -> Iterator[Graph]:
        slots_left = m - pos
        if slots_left == 0:
            if remaining == 0:
                t = tuple(prefix)
                if is_dihedral_min(t):
                    yield build(t)
            return
        max_size = remaining - (slots_left - 1)
        for s in range(1, max_size + 1):
            for fid in ids_by_size[s]:
                if fid < min_id:
                    continue
                prefix[pos] = fid
                yield from fill(pos + 1, remaining - s, min_id)

    for s0 in range(1, extra + 2):
        for fid0 in ids_by_size[s0]:
            prefix[0] = fid0
            yield from fill(1, n - s0, fid0)


# ---------------------------------------------------------------------------
# Labeled brute-force oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    """Isomorphism classes of all labeled graphs of one kind and order."""

    n: int
    kind: str
    classes: tuple[Graph, ...]
    labeled_total: int


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(_edge_pairs(n))}


def _graph_from_mask(n: int, mask: int) -> Graph:
    pairs = _edge_pairs(n)
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return make_graph(n, edges)


def _labeled_tree_masks(n: int) -> set[int]:
    """Edge-bit masks of every labeled tree on n vertices.

    Scans the Cayley parametrization: each sequence in [0..n-1]^(n-2) is
    decoded to its labeled tree, covering all n^(n-2) trees exactly once.
    """
    if n == 1:
        return {0}
    if n == 2:
        return {1}
    index = _pair_index(n)
    masks: set[int] = set()
    seq = [0] * (n - 2)
    while True:
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        mask = 0
        for x in seq:
            leaf = heapq.heappop(leaves)
            mask |= 1 << index[(leaf, x) if leaf < x else (x, leaf)]
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        u = heapq.heappop(leaves)
        v = heapq.heappop(leaves)
        mask |= 1 << index[(u, v)]
        masks.add(mask)
        # next sequence in lexicographic order
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return masks


def _labeled_unicyclic_masks(n: int) -> set[int]:
    """Edge-bit masks of every labeled connected unicyclic graph.

    Every connected graph with n edges is a labeled spanning tree plus one
    extra edge, so expanding each labeled tree by each absent edge and
    deduplicating covers the class exactly.
    """
    npairs = n * (n - 1) // 2
    masks: set[int] = set()
    for tmask in _labeled_tree_masks(n):
        for i in range(npairs):
            bit = 1 << i
            if not tmask & bit:
                masks.add(tmask | bit)
    return masks


def _transposition_tables(n: int) -> list[list[list[int]]]:
    """Byte-lookup tables applying each adjacent vertex transposition.

    Table[g][b][v] is the contribution of byte b with value v to the edge
    mask after swapping vertices g and g+1.
    """
    pairs = _edge_pairs(n)
    index = _pair_index(n)
    npairs = len(pairs)
    nbytes = (npairs + 7) // 8
    tables = []
    for g in range(n - 1):
        a, b = g, g + 1
        perm = list(range(npairs))
        for k, (u, v) in enumerate(pairs):
            uu = b if u == a else a if u == b else u
            vv = b if v == a else a if v == b else v
            if uu > vv:
                uu, vv = vv, uu
            perm[k] = index[(uu, vv)]
        byte_tables = []
        for bt in range(nbytes):
            table = [0] * 256
            for val in range(1, 256):
                out = 0
                for bit in range(8):
                    if val >> bit & 1:
                        k = bt * 8 + bit
                        if k < npairs:
                            out |= 1 << perm[k]
                table[val] = out
            byte_tables.append(table)
        tables.append(byte_tables)
    return tables


def _orbit_partition(n: int, masks: set[int]) -> list[tuple[int, int]]:
    """Split labeled masks into relabeling orbits by permutation search.

    Adjacent transpositions generate the full symmetric group, so the BFS
    closure of a mask under them is its complete isomorphism orbit.  Returns
    (representative mask, orbit size) pairs, smallest representative first.
    """
    tables = _transposition_tables(n)
    nbytes = len(tables[0])
    seen: set[int] = set()
    out = []
    for start in sorted(masks):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        orbit_size = 1
        while stack:
            x = stack.pop()
            bytes_x = [(x >> (8 * i)) & 255 for i in range(nbytes)]
            for byte_tables in tables:
                y = 0
                for i in range(nbytes):
                    y |= byte_tables[i][bytes_x[i]]
                if y not in seen:
                    seen.add(y)
                    orbit_size += 1
                    stack.append(y)
        out.append((start, orbit_size))
    return out


def labeled_oracle(n: int, kind: str) -> OracleResult:
    """Ground-truth isomorphism classes from a labeled brute-force scan.

    kind is "trees" or "unicyclic".  Guarded to n <= ORACLE_MAX_ORDER: the
    scan and the orbit partition are exponential in nature and exist to
    certify the generators, not to replace them.
    """
    if kind not in ("trees", "unicyclic"):
        raise ValueError(f"kind must be 'trees' or 'unicyclic', got {kind!r}")
    if n > ORACLE_MAX_ORDER:
        raise ValueError(f"labeled oracle supports n <= {ORACLE_MAX_ORDER}, got {n}")
    if kind == "trees":
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        masks = _labeled_tree_masks(n)
    else:
        if n < 3:
            raise ValueError(f"order must be >= 3, got {n}")
        masks = _labeled_unicyclic_masks(n)
    total = len(masks)
    if n == 1:
        return OracleResult(1, kind, (from_adjacency([[]]),), 1)
    classes = tuple(
        _graph_from_mask(n, rep) for rep, _ in _orbit_partition(n, masks)
    )
    return OracleResult(n, kind, classes, total)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by raw permutation search (small graphs only)."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    n = g.n
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    if n > 9:
        raise ValueError("brute_isomorphic is limited to n <= 9")
    g_edges = list(g.edges())
    h_sets = h.adj
    for perm in permutations(range(n)):
        ok = True
        for u, v in g_edges:
            if perm[v] not in h_sets[perm[u]]:
                ok = False
                break
        if ok:
            return True
    return False
