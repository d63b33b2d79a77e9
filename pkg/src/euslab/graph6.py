"""graph6 encoding and decoding for graphs of order up to 64.

Format: a size field (one byte ``63 + n`` for ``n <= 62``, else ``~``
followed by three 6-bit bytes), then the upper-triangle adjacency bits in
column-major order ``(0,1), (0,2), (1,2), (0,3), ...``, packed six to a byte
(most significant first), zero padded, each byte offset by 63.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError, edge_pairs

HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~"] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    bits = [g.rows[i] >> j & 1 for i, j in edge_pairs(n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"graph6 string {s!r} has characters outside '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphError("unsupported or truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        if n < 63:
            raise GraphError("long size field used for n < 63")
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n < 1 or n > MAX_ORDER:
        raise GraphError(f"graph6 order {n} outside [1, {MAX_ORDER}]")
    pairs = edge_pairs(n)
    need = -(-len(pairs) // 6)
    if len(body) != need:
        raise GraphError(f"graph6 body for n={n} needs {need} characters, got {len(body)}")
    pad = need * 6 - len(pairs)
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("graph6 padding bits must be zero")
    rows = [0] * n
    for b, (i, j) in enumerate(pairs):
        if body[b // 6] >> (5 - b % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))
