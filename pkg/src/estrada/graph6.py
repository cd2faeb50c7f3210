"""graph6 encoding of simple undirected graphs.

Layout: a size header ``N(n)`` followed by the upper triangle of the
adjacency matrix in column order ``x01, x02, x12, x03, ...``, packed six bits
per byte (most significant first, zero padded), each byte offset by 63.
Sizes up to 62 use one header byte; sizes up to 258047 use ``~`` followed by
three bytes.
"""

from __future__ import annotations

from .errors import Graph6ParseError, UnsupportedSize
from .graph import Graph

MAX_N = 258047
HEADER = ">>graph6<<"


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if not 1 <= n <= MAX_N:
        raise UnsupportedSize(f"graph6 supports 1 <= n <= {MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    # bit index of x_ij (i < j) in column order is j(j-1)/2 + i
    bits = bytearray(nbits + (-nbits) % 6)
    for i, j in g.edges:
        bits[j * (j - 1) // 2 + i] = 1
    out = []
    for k in range(0, len(bits), 6):
        b = bits[k : k + 6]
        out.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return _size_header(n) + "".join(out)


def parse_graph6(text) -> Graph:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii", errors="replace")
    token = text.strip()
    start = 0
    if token.startswith(HEADER):
        start = len(HEADER)
    data = [ord(c) for c in token[start:]]
    if not data:
        raise Graph6ParseError("empty graph6 token", start)
    for pos, v in enumerate(data):
        if not 63 <= v <= 126:
            raise Graph6ParseError(f"byte {v} outside [63, 126]", start + pos)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError(f"8-byte size header unsupported (n > {MAX_N})", start + 1)
        if len(data) < 4:
            raise Graph6ParseError("truncated size header", start + len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    if n < 1:
        raise Graph6ParseError("graph6 token encodes n = 0", start)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} payload bytes for n={n}, got {len(payload)}",
            start + pos + min(len(payload), nbytes),
        )
    pad = nbytes * 6 - nbits
    if pad and (payload[-1] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", start + pos + nbytes - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    edges.sort()
    return Graph(n, tuple(edges))
