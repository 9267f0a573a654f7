"""Index-monotone graph rewrites.

Each rewrite returns new graphs (inputs are never mutated) and reports the
degree conditions under which its inequality is guaranteed, so callers can
use them both constructively and as randomized-test subjects.  Inputs that
break a hypothesis produce an inapplicable outcome instead of an error;
inputs outside a rewrite's structural domain raise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code, cycle_vertices
from .graphs import Graph, GraphError, hyper_zagreb, is_unicyclic, make_graph
from .families import cycle_with_stars


class StructureError(GraphError):
    """Input graph is outside the rewrite's structural domain."""


def coalesce(g: Graph, u: int, h: Graph, z: int) -> Graph:
    """Identify vertex u of g with vertex z of h.

    g keeps its vertex ids; h's remaining vertices follow, in id order.  The
    merged vertex has degree deg_g(u) + deg_h(z).
    """
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range for g")
    if not 0 <= z < h.n:
        raise GraphError(f"vertex {z} out of range for h")
    remap = {}
    nxt = g.n
    for v in range(h.n):
        if v == z:
            remap[v] = u
        else:
            remap[v] = nxt
            nxt += 1
    edges = list(g.edges())
    edges.extend((remap[a], remap[b]) for a, b in h.edges())
    return make_graph(g.n + h.n - 1, edges)


@dataclass(frozen=True)
class AttachComparison:
    """Both ways of hanging h onto g, with the monotonicity conditions.

    g1 coalesces h at u, g2 at w.  When degree_condition (deg(u) <= deg(w))
    and neighbor_sum_condition (sum of neighbor degrees of u, minus w, at
    most that of w, minus u) both hold, the index of g2 is >= that of g1,
    with equality only when both conditions are tight.
    """

    g1: Graph
    g2: Graph
    degree_condition: bool
    neighbor_sum_condition: bool

    @property
    def applicable(self) -> bool:
        return self.degree_condition and self.neighbor_sum_condition


def attach_conditions(g: Graph, u: int, w: int) -> tuple[bool, bool, bool, bool]:
    """The two dominance conditions for moving an attachment from u to w.

    Returns (degree holds, sum holds, degree tight, sum tight).
    """
    du, dw = g.degree(u), g.degree(w)
    su = sum(g.degree(x) for x in g.neighbors(u) if x != w)
    sw = sum(g.degree(x) for x in g.neighbors(w) if x != u)
    return (du <= dw, su <= sw, du == dw, su == sw)


def compare_attachment_sites(
    g: Graph, u: int, w: int, h: Graph, z: int
) -> AttachComparison:
    """Build g(u)oh(z) and g(w)oh(z) and report the dominance conditions."""
    if u == w:
        raise GraphError("u and w must be distinct")
    cond_a, cond_b, _, _ = attach_conditions(g, u, w)
    return AttachComparison(
        g1=coalesce(g, u, h, z),
        g2=coalesce(g, w, h, z),
        degree_condition=cond_a,
        neighbor_sum_condition=cond_b,
    )


@dataclass(frozen=True)
class JoinIdentifyPair:
    """Same vertex budget spent two ways: a bridging edge vs a pendant.

    joined adds an edge between u in g1 and v in g2; identified merges u
    with v and attaches one new pendant to the merged vertex.  Both graphs
    have order n(g1) + n(g2).  When both merged endpoints have degree >= 2
    in joined, the identified graph has the strictly larger index.
    """

    joined: Graph
    identified: Graph
    applicable: bool


def join_vs_identify(g1: Graph, u: int, g2: Graph, v: int) -> JoinIdentifyPair:
    if not 0 <= u < g1.n:
        raise GraphError(f"vertex {u} out of range for g1")
    if not 0 <= v < g2.n:
        raise GraphError(f"vertex {v} out of range for g2")
    offset = g1.n
    joined_edges = list(g1.edges())
    joined_edges.extend((a + offset, b + offset) for a, b in g2.edges())
    joined_edges.append((u, v + offset))
    joined = make_graph(g1.n + g2.n, joined_edges)

    merged = coalesce(g1, u, g2, v)
    ident_edges = list(merged.edges())
    ident_edges.append((u, merged.n))
    identified = make_graph(merged.n + 1, ident_edges)

    applicable = joined.degree(u) >= 2 and joined.degree(v + offset) >= 2
    return JoinIdentifyPair(joined=joined, identified=identified, applicable=applicable)


@dataclass(frozen=True)
class StarProfile:
    """Star-attachment shape of a unicyclic graph.

    cycle holds the cycle vertices in walk order; counts[i] is the number of
    pendant leaves at cycle position i.  Present only when every vertex off
    the cycle is a leaf adjacent to a cycle vertex.
    """

    cycle: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def attachment_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.counts) if c > 0)


def star_attachment_profile(g: Graph) -> StarProfile | None:
    """Recognize C_m(l_1, ..., l_k) structurally; None when trees run deeper."""
    if not is_unicyclic(g):
        raise StructureError("input must be connected and unicyclic")
    cyc = cycle_vertices(g)
    on_cycle = set(cyc)
    counts = [0] * len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    for v in range(g.n):
        if v in on_cycle:
            continue
        if g.degree(v) != 1:
            return None
        nbr = g.adj[v][0]
        if nbr not in on_cycle:
            return None
        counts[pos[nbr]] += 1
    return StarProfile(cycle=tuple(cyc), counts=tuple(counts))


@dataclass(frozen=True)
class MergeOutcome:
    """Result of re-attaching one star's pendants to a neighboring one."""

    applicable: bool
    result: Graph | None
    reason: str


def _rebuild_from_counts(m: int, counts: list[int]) -> Graph:
    return cycle_with_stars(m, counts)


def merge_adjacent_star(g: Graph, i: int) -> MergeOutcome:
    """Move the i-th attachment's pendants onto an adjacent attachment.

    The i-th attachment vertex (in cycle walk order) must have a cycle
    neighbor that also carries pendants, with degree at least both the
    source's degree and the degree of the source's other cycle neighbor.
    The move preserves order and strictly increases the index.
    """
    profile = star_attachment_profile(g)
    if profile is None:
        raise StructureError("attachments must all be pendant stars")
    positions = profile.attachment_positions
    if not 0 <= i < len(positions):
        raise GraphError(f"attachment index {i} out of range (k={len(positions)})")
    m = len(profile.cycle)
    counts = list(profile.counts)
    src = positions[i]

    candidates = []
    for step in (1, m - 1):
        tgt = (src + step) % m
        if tgt != src and counts[tgt] > 0:
            candidates.append(tgt)
    if not candidates:
        return MergeOutcome(False, None, "no adjacent attachment")
    # Prefer the heavier target; break ties toward the walk successor.
    candidates.sort(key=lambda t: -counts[t])
    deg = lambda p: 2 + counts[p]
    for tgt in candidates:
        other = (2 * src - tgt) % m  # the source's cycle neighbor away from tgt
        if deg(src) <= deg(tgt) and deg(other) <= deg(tgt):
            new_counts = counts[:]
            new_counts[tgt] += new_counts[src]
            new_counts[src] = 0
            return MergeOutcome(True, _rebuild_from_counts(m, new_counts), "")
    return MergeOutcome(False, None, "target degree below source or its neighbor")


def reduce_to_single_attachment(g: Graph) -> list[Graph]:
    """Monotone chain from a unicyclic graph down to one pendant star.

    Steps: collapse every hanging tree to a pendant star of the same vertex
    count, then repeatedly merge stars into the currently largest attachment
    until one remains.  The index strictly increases at every appended step,
    and the final graph is the cycle with a single pendant star (or the bare
    cycle when there was nothing to move).
    """
    if not is_unicyclic(g):
        raise StructureError("input must be connected and unicyclic")
    chain = [g]
    profile = star_attachment_profile(g)
    if profile is None:
        # Star-collapse: keep the cycle, flatten each hanging tree.
        cyc = cycle_vertices(g)
        on_cycle = set(cyc)
        counts = [0] * len(cyc)
        seen = set(cyc)
        for idx, v in enumerate(cyc):
            stack = [v]
            while stack:
                x = stack.pop()
                for y in g.adj[x]:
                    if y not in on_cycle and y not in seen:
                        seen.add(y)
                        counts[idx] += 1
                        stack.append(y)
        current = _rebuild_from_counts(len(cyc), counts)
        chain.append(current)
    else:
        current = g

    while True:
        profile = star_attachment_profile(current)
        assert profile is not None
        m = len(profile.cycle)
        counts = list(profile.counts)
        positions = profile.attachment_positions
        if len(positions) <= 1:
            break
        deg = lambda p: 2 + counts[p]
        # Target: the attachment of maximum degree, deterministic tie-break.
        tgt = max(positions, key=lambda p: (counts[p], -p))
        adjacent_sources = [
            p for p in positions
            if p != tgt and (p - tgt) % m in (1, m - 1)
        ]
        if adjacent_sources:
            sources = adjacent_sources
        else:
            # No attachment touches the target: move a star whose dominance
            # conditions hold with the target (one always exists).
            sources = []
            for p in positions:
                if p == tgt:
                    continue
                nb = [deg((p + 1) % m), deg((p - 1) % m)]
                lhs = sum(nb)
                rhs = deg((tgt + 1) % m) + deg((tgt - 1) % m) + counts[tgt]
                if lhs <= rhs:
                    sources.append(p)
            assert sources, "no dominance-compatible source attachment"
        best = None
        for src in sources:
            new_counts = counts[:]
            new_counts[tgt] += new_counts[src]
            new_counts[src] = 0
            cand = _rebuild_from_counts(m, new_counts)
            key = canonical_code(cand)
            if best is None or key < best[0]:
                best = (key, cand)
        assert best is not None
        nxt = best[1]
        if hyper_zagreb(nxt) <= hyper_zagreb(current):
            raise AssertionError("merge step failed to increase the index")
        chain.append(nxt)
        current = nxt
    return chain
