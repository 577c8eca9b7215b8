"""Graph text formats: graph6 and whitespace edge lists.

Both formats are auto-detected from the first byte: edge lists start with a
digit (the header line "n m"), graph6 bytes sit in the 63..126 range.
The graph6 header ">>graph6<<" is accepted and never emitted.
"""

from __future__ import annotations

from .errors import GraphFormatError, ParameterError
from .graph import MAX_VERTICES, Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def _graph6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # long form: '~' then 18 bits, high group first
    return "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))


def _graph6_decode_n(data: str) -> tuple[int, int]:
    """Return (n, number of chars consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 line")
    c0 = ord(data[0])
    if c0 == 126:
        if len(data) >= 2 and ord(data[1]) == 126:
            raise GraphFormatError("graph6 order beyond supported range")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 order")
        vals = [ord(c) - 63 for c in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphFormatError("invalid graph6 order bytes")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if c0 < 63 or c0 > 126:
        raise GraphFormatError(f"invalid graph6 byte {data[0]!r}")
    return c0 - 63, 1


def to_graph6(g: Graph) -> str:
    """Canonical (header-free) graph6 line."""
    n = g.n
    out = [_graph6_encode_n(n)]
    bits_acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits_acc = (bits_acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits_acc + 63))
                bits_acc = 0
                nbits = 0
    if nbits:
        out.append(chr((bits_acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    n, consumed = _graph6_decode_n(line)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    body = line[consumed:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} chars, expected {need}")
    vals = []
    for c in body:
        v = ord(c) - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"invalid graph6 byte {c!r}")
        vals.append(v)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = (vals[k // 6] >> (5 - k % 6)) & 1
            k += 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    # padding bits must be zero for a canonical line
    total = n * (n - 1) // 2
    if total % 6:
        pad = vals[-1] & ((1 << (6 - total % 6)) - 1)
        if pad:
            raise GraphFormatError("nonzero padding bits in graph6 line")
    return Graph(n, adj)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln for ln in (line.strip() for line in text.splitlines()) if ln]
    if not rows:
        raise GraphFormatError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"malformed header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"malformed header {rows[0]!r}") from exc
    if n > MAX_VERTICES:
        raise GraphFormatError(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed edge line {ln!r}") from exc
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except ParameterError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    """Parse either format, detected from the first non-space byte."""
    stripped = text.lstrip()
    if not stripped:
        raise GraphFormatError("empty graph input")
    first = stripped[0]
    if first.isdigit():
        return from_edge_list(text)
    return from_graph6(stripped.splitlines()[0])


def serialize_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edges":
        return to_edge_list(g)
    raise ParameterError(f"unknown graph format {fmt!r}")
