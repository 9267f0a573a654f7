"""graph6 and plain edge-list codecs.

graph6 packs the upper triangle of the adjacency matrix, column by column,
into 6-bit chunks offset by 63; the optional ">>graph6<<" header is accepted
on input and never emitted.  The edge-list format is "n m" on the first line
followed by m lines "u v" with 0-based ids; '#' starts a comment.
"""

from __future__ import annotations

from .graphs import Graph, make_graph


class CodecError(ValueError):
    """Malformed graph6 or edge-list input."""


_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise CodecError(f"graph6 supports at most 258047 vertices, got {n}")


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, index of first adjacency character)."""
    if not s:
        raise CodecError("empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:  # '~': 18-bit order in the next three characters
        if len(s) < 4:
            raise CodecError("truncated graph6 order")
        vals = [ord(c) - 63 for c in s[1:4]]
        if any(not 0 <= v <= 63 for v in vals):
            raise CodecError("invalid graph6 order characters")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if not 63 <= c0 <= 125:
        raise CodecError(f"invalid graph6 leading character {s[0]!r}")
    return c0 - 63, 1


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a header-free graph6 string."""
    n = g.n
    out = [_encode_order(n)]
    bits = 0
    nbits = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            bits = (bits << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        bits <<= 6 - nbits
        out.append(chr(bits + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional header, surrounding whitespace ok)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    n, pos = _decode_order(s)
    if n == 0:
        raise CodecError("graph6 order 0 not supported")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nchars:
        raise CodecError(
            f"graph6 body for n={n} needs {nchars} characters, got {len(body)}"
        )
    bits = []
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise CodecError(f"invalid graph6 character {c!r}")
        bits.extend((v >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise CodecError("nonzero graph6 padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return make_graph(n, edges)


def parse_edgelist(text: str) -> Graph:
    """Parse the "n m" edge-list format; raises CodecError on any defect."""
    rows = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            rows.append(stripped)
    if not rows:
        raise CodecError("empty edge list")
    head = rows[0].split()
    if len(head) != 2:
        raise CodecError(f"expected 'n m' header, got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise CodecError(f"non-integer header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise CodecError(f"header says {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise CodecError(f"expected 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise CodecError(f"non-integer edge {row!r}") from exc
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise CodecError(str(exc)) from exc


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
