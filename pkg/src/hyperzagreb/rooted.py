"""Canonical rooted-tree forms.

A rooted tree is represented by a nested tuple: the empty tuple is a single
vertex, and a node is the tuple of its child forms sorted in descending
(size, form) order.  This representation is unique per rooted isomorphism
class, hashable, and totally ordered via form_key, which makes it the shared
currency between canonical codes, family builders and the enumerators.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Form = tuple  # nested tuples of Form


@lru_cache(maxsize=None)
def form_size(form: Form) -> int:
    """Number of vertices in the rooted tree."""
    return 1 + sum(form_size(c) for c in form)


def form_key(form: Form) -> tuple[int, Form]:
    """Total order on forms: by size, then lexicographically."""
    return (form_size(form), form)


@lru_cache(maxsize=None)
def rooted_forms(size: int) -> tuple[Form, ...]:
    """All canonical rooted-tree forms on `size` vertices, ascending by key."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if size == 1:
        return ((),)
    forms = [tuple(children) for children in _forests(size - 1, None)]
    forms.sort(key=form_key)
    return tuple(forms)


def _forests(budget: int, bound: tuple[int, Form] | None) -> Iterator[tuple[Form, ...]]:
    """All non-increasing form sequences with the given total vertex count.

    Each emitted form's key is <= bound, keeping multiset representations
    unique.
    """
    if budget == 0:
        yield ()
        return
    max_size = budget if bound is None else min(budget, bound[0])
    for s in range(max_size, 0, -1):
        for f in reversed(rooted_forms(s)):
            k = (s, f)
            if bound is not None and k > bound:
                continue
            for rest in _forests(budget - s, k):
                yield (f,) + rest


def forests(budget: int, max_part: int) -> Iterator[tuple[Form, ...]]:
    """Non-increasing form multisets of total size `budget`, parts <= max_part.

    Used to enumerate the subtrees hanging from a tree's centroid.
    """
    if max_part < 1:
        raise ValueError(f"max_part must be >= 1, got {max_part}")
    top = rooted_forms(min(budget, max_part))[-1] if budget else ()
    yield from _forests(budget, (min(budget, max_part), top) if budget else None)


def star_form(pendants: int) -> Form:
    """Star with `pendants` leaves, rooted at the center."""
    return ((),) * pendants


def path_form(length_edges: int) -> Form:
    """Path with the given edge count, rooted at one endpoint."""
    f: Form = ()
    for _ in range(length_edges):
        f = (f,)
    return f


def rooted_form(adj, root: int, skip: frozenset[int] | set[int] = frozenset()) -> Form:
    """Canonical form of the tree hanging from `root` in an adjacency list.

    Traversal never enters vertices in `skip`; for a hanging tree of a
    unicyclic graph, `skip` holds the other cycle vertices.  The reachable
    region must be acyclic.
    """
    parent: dict[int, int] = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in skip or v in parent:
                continue
            parent[v] = u
            order.append(v)
            stack.append(v)
    children: dict[int, list[Form]] = {u: [] for u in order}
    for u in reversed(order):
        kids = children[u]
        kids.sort(key=form_key, reverse=True)
        f = tuple(kids)
        p = parent[u]
        if p == -1:
            return f
        children[p].append(f)
    raise AssertionError("unreachable")


def form_edges(form: Form, root_id: int, next_id: int) -> tuple[list[tuple[int, int]], int]:
    """Edges realizing `form` with its root at `root_id`.

    New vertices take consecutive ids starting at `next_id`; returns the
    edge list and the next free id.
    """
    edges: list[tuple[int, int]] = []
    stack: list[tuple[Form, int]] = [(form, root_id)]
    while stack:
        f, vid = stack.pop()
        for child in f:
            edges.append((vid, next_id))
            stack.append((child, next_id))
            next_id += 1
    return edges, next_id
