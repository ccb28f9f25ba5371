"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from pathlib import Path

from .graph import MAX_VERTICES, Graph, GraphError, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _size_chars(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6 bits per char)."""
    if g.n > MAX_VERTICES:
        raise GraphError(f"cannot encode more than {MAX_VERTICES} vertices")
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return _size_chars(g.n) + "".join(chars)


def graph6_decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise GraphError("empty graph6 string")
    values = []
    for ch in text:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise GraphError(f"invalid graph6 character {ch!r}")
        values.append(code)
    if values[0] == 63:
        if len(values) < 4 or values[1] == 63:
            raise GraphError("graph6 size prefix truncated or too large")
        n = values[1] << 12 | values[2] << 6 | values[3]
        body = values[4:]
    else:
        n = values[0]
        body = values[1:]
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 encodes {n} vertices; limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise GraphError("graph6 bit stream truncated")
    if len(body) > expected:
        raise GraphError("graph6 bit stream has trailing characters")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    """Parse ``n m`` then ``m`` lines of ``u v``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("edge list is empty")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"edge list contains a non-integer token: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphError(f"edge list header promises {m} edges, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise GraphError(f"malformed edge line {' '.join(map(str, row))!r}")
    return from_edge_list(n, body)


def read_graph(path: str | Path) -> Graph:
    """Read a graph file, detecting edge-list versus graph6 by content."""
    text = Path(path).read_text()
    stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if stripped and len(stripped[0].split()) == 2:
        return edgelist_decode(text)
    if len(stripped) != 1:
        raise GraphError(f"{path}: expected a single graph6 line")
    return graph6_decode(stripped[0])


def write_graph(g: Graph, path: str | Path, fmt: str = "graph6") -> None:
    Path(path).write_text(format_graph(g, fmt))


def format_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return graph6_encode(g) + "\n"
    if fmt == "edgelist":
        return edgelist_encode(g)
    raise ValueError(f"unknown graph format {fmt!r}")
