"""graph6 and edge-list readers/writers.

graph6 packs the upper triangle of the adjacency matrix column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, into 6-bit groups, most significant
bit first, each stored as ``63 + value``. The vertex count precedes the
payload: one byte ``63 + n`` for ``n < 63``, otherwise ``~`` followed by
three bytes holding ``n`` in 18 bits.
"""

from __future__ import annotations

import os
from typing import List, Union

from .errors import (
    BadCharError,
    Graph6Error,
    NonzeroPaddingError,
    TruncatedPayloadError,
)
from .graph import Graph, from_edge_list

HEADER = b">>graph6<<"
MAX_GRAPH6_N = 258047

BytesLike = Union[bytes, bytearray, str]


def _as_bytes(text: BytesLike) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise BadCharError(text[exc.start], exc.start) from None
    return bytes(text)


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([63 + n])
    if n <= MAX_GRAPH6_N:
        return bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise Graph6Error(f"n={n} exceeds the supported graph6 size {MAX_GRAPH6_N}")


def parse_graph6(text: BytesLike) -> Graph:
    """Decode one graph6 line (optionally prefixed by ``>>graph6<<``)."""
    data = _as_bytes(text).rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise BadCharError(bytes([b]), pos)
    if not data:
        raise TruncatedPayloadError("empty graph6 string")
    if data[0] != 126:
        n, payload = data[0] - 63, data[1:]
    else:
        if len(data) < 4:
            raise TruncatedPayloadError("incomplete 4-byte size field")
        if data[1] == 126:
            raise Graph6Error("8-byte size field (n > 258047) is not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        payload = data[4:]
    if n < 1:
        raise TruncatedPayloadError("graph6 size field encodes zero vertices")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(payload) < nbytes or (n > 1 and not payload):
        raise TruncatedPayloadError(f"payload has {len(payload)} bytes, need {nbytes}")
    if len(payload) > nbytes:
        raise Graph6Error(f"payload has {len(payload) - nbytes} trailing byte(s)")
    if nbytes:
        pad = nbytes * 6 - nbits
        if (payload[-1] - 63) & ((1 << pad) - 1):
            raise NonzeroPaddingError("padding bits must be zero")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 line without header or newline."""
    n = g.n
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6 * 6)
    for i, j in g.edges:
        # column-major index of (i, j), i < j
        bits[j * (j - 1) // 2 + i] = 1
    out = bytearray(_encode_size(n))
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = (value << 1) | b
        out.append(63 + value)
    return bytes(out)


def read_graph6_file(path: Union[str, os.PathLike]) -> List[Graph]:
    """Read every graph in a graph6 file; the header is honoured on line 1 only."""
    graphs = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh):
            line = line.rstrip(b"\r\n")
            if lineno == 0 and line.startswith(HEADER):
                line = line[len(HEADER):]
            elif line.startswith(HEADER):
                raise Graph6Error(f"{path}:{lineno + 1}: header allowed on the first line only")
            if not line:
                continue
            graphs.append(parse_graph6(line))
    return graphs


def write_graph6_file(path: Union[str, os.PathLike], graphs, header: bool = False) -> None:
    with open(path, "wb") as fh:
        if header:
            fh.write(HEADER)
        for g in graphs:
            fh.write(write_graph6(g) + b"\n")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    The first non-comment line is the vertex count; each following line is
    one edge ``u v`` (0-indexed). ``#`` starts a comment.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if n is None:
                if len(fields) != 1:
                    raise ValueError("expected the vertex count alone on the first line")
                n = int(fields[0])
            else:
                if len(fields) != 2:
                    raise ValueError(f"expected 'u v', got {line!r}")
                edges.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("edge list is empty (missing vertex count)")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, os.PathLike]) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(path: Union[str, os.PathLike], g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
