"""graph6 encoding (header-less, label-preserving) for graphs on at most 64 vertices."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class MalformedGraph6(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; degree > 3 raises ``DegreeExceeded``."""
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    if not text:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in text):
        raise MalformedGraph6(f"character outside the graph6 range in {line!r}")
    vals = [ord(ch) - 63 for ch in text]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise MalformedGraph6("unsupported or truncated size prefix")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}")
    bits = [(v >> (5 - k)) & 1 for v in data for k in range(6)]
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    pairs = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                pairs.append((i, j))
            pos += 1
    return Graph.build(n, pairs)


def read_graph6_lines(text: str) -> Iterator[str]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield line
