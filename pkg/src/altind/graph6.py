"""graph6 encoding and small text formats for exchanging simple graphs.

graph6 packs the upper triangle of the adjacency matrix column by column
(x01, x02, x12, x03, ...) into 6-bit groups stored as printable bytes with a
+63 offset.  The leading byte(s) encode the vertex count: a single byte for
n <= 62, and 126-prefixed multi-byte forms beyond that.  One graph per line;
an optional ``>>graph6<<`` header prefix is stripped.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
DEFAULT_MAX_N = 62

_EXT_1 = 126  # 63 + 63, marks the 3-byte vertex-count form
_MAX_N_3BYTE = 258047
_MAX_N_6BYTE = 68719476735


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 input."""


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str, max_n: int = DEFAULT_MAX_N) -> Graph:
    """Decode one graph6 line into a :class:`Graph`.

    Raises :class:`Graph6Error` naming the byte offset for malformed input,
    and rejects graphs on more than ``max_n`` vertices.
    """
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 string")
    data = []
    for i, ch in enumerate(line):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r} at offset {i}")
        data.append(val)

    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated extended vertex count")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated extended vertex count")
        n = 0
        for k in range(2, 8):
            n = (n << 6) | data[k]
        pos = 8
    if n > max_n:
        raise Graph6Error(f"graph on {n} vertices exceeds the configured cap {max_n}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated graph6 string: expected {nbytes} data bytes, found {len(body)}"
        )
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage at offset {pos + nbytes}")

    rows = [0] * n
    pairs = _pair_order(n)
    for k, (i, j) in enumerate(pairs):
        if body[k // 6] >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    # Padding bits past the triangle must be zero.
    for k in range(nbits, nbytes * 6):
        if body[k // 6] >> (5 - k % 6) & 1:
            raise Graph6Error(f"nonzero padding bit at offset {pos + k // 6}")
    return Graph(n, tuple(rows))


def to_graph6(g: Graph, max_n: int = DEFAULT_MAX_N) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n > max_n:
        raise Graph6Error(f"graph on {n} vertices exceeds the configured cap {max_n}")
    if n <= 62:
        head = [n + 63]
    elif n <= _MAX_N_3BYTE:
        head = [_EXT_1, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    elif n <= _MAX_N_6BYTE:
        head = [_EXT_1, _EXT_1] + [(n >> (6 * k) & 63) + 63 for k in range(5, -1, -1)]
    else:
        raise Graph6Error(f"graph on {n} vertices is not encodable in graph6")

    out = bytearray(head)
    group = 0
    filled = 0
    for i, j in _pair_order(n):
        group = group << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(group + 63)
            group = 0
            filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def iter_graph6(
    lines: Iterable[str], max_n: int = DEFAULT_MAX_N
) -> Iterator[tuple[int, str, "Graph | None", "str | None"]]:
    """Parse a stream of graph6 lines.

    Yields ``(lineno, text, graph, error)`` with 1-based line numbers; blank
    lines are skipped.  Exactly one of ``graph``/``error`` is non-None.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text, max_n=max_n), None
        except Graph6Error as exc:
            yield lineno, text, None, str(exc)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line ``n m``, then m ``u v`` lines."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"line {lineno}: self-loop {u}-{v}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: edge {u}-{v} out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices, in ascending edge-mask order.

    The edge bit order matches the graph6 upper-triangle order, so graph
    number ``k`` has edge ``pairs[i]`` exactly when bit ``i`` of ``k`` is set.
    """
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m ^= low
        yield Graph(n, tuple(rows))
