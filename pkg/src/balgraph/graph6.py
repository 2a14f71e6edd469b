"""graph6 encoding: printable-ASCII serialization of small graphs.

The format packs the upper triangle of the adjacency matrix column by
column into 6-bit groups offset by 63.  Round trips are bit-exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph, GraphError

__all__ = ["to_graph6", "from_graph6", "write_graph6_lines", "read_graph6_lines"]

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode a graph as a one-line graph6 string."""
    n = g.n
    out = bytearray(_encode_n(n))
    bits = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + bits)
                bits = 0
                nbits = 0
    if nbits:
        out.append(63 + (bits << (6 - nbits)))
    return out.decode("ascii")


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise GraphError(f"graph6 size {n} out of supported range")


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional >>graph6<< header is stripped)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None:
        raise GraphError(f"graph6 string is not ASCII: {text!r}")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphError(f"invalid graph6 byte {b!r} in {text!r}")
    n, body = _decode_n(data, text)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body length {len(body)} != expected {need} in {text!r}")
    rows = [0] * n
    total = n * (n - 1) // 2
    bit_index = 0
    i, j = 0, 1
    for b in body:
        group = b - 63
        for k in range(5, -1, -1):
            if bit_index >= total:
                break  # trailing padding bits
            if (group >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)


def _decode_n(data: bytes, original: str) -> tuple[int, bytes]:
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError(f"graph6 sizes above 258047 unsupported: {original!r}")
        if len(data) < 4:
            raise GraphError(f"truncated graph6 size in {original!r}")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        return n, data[4:]
    return data[0] - 63, data[1:]


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)


def read_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)
