"""graph6 encoding and decoding.

Bit layout follows the public format description: the upper triangle is
read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed into
6-bit groups, each emitted as ``chr(63 + group)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("empty input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit order field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 18-bit order field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def encode(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data[:1] == b":" or data[:1] == b";" or data[:1] == b"&":
        raise Graph6Error("sparse6/digraph6 input is not graph6")
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the graph6 range 63..126")
    n, off = _decode_n(data)
    body = data[off:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: expected {need} bytes, got {len(body)}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos // 6] - 63
            if (byte >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_file(fh: TextIO) -> Iterator[Graph]:
    """One graph per non-blank line."""
    for line in fh:
        line = line.strip()
        if line:
            yield decode(line)


def write_file(fh: TextIO, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        fh.write(encode(g) + "\n")
