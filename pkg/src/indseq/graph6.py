"""graph6 encoding (McKay's format) for graphs of up to 64 vertices."""
from __future__ import annotations

from .errors import GraphError
from .graph_core import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g``; bits run over the upper triangle column by column."""
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def read_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"malformed graph6 string {text!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphError(f"unsupported graph6 size header in {text!r}")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length mismatch for n={n}")
    if n == 0:
        raise GraphError("graph6 string encodes the null graph")
    stream = 0
    for v in body:
        stream = (stream << 6) | v
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    stream >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))
