"""graph6 encoding/decoding and sparse6 decoding (simple graphs only)."""

from __future__ import annotations

from .graph import Graph

HEADER_G6 = ">>graph6<<"
HEADER_S6 = ">>sparse6<<"


class FormatError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]
    raise ValueError(f"graph too large for graph6: n={n}")


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    def byte(i):
        if i >= len(data):
            raise FormatError("truncated vertex count", i)
        c = data[i] - 63
        if not 0 <= c <= 63:
            raise FormatError(f"byte {data[i]!r} outside printable graph6 range", i)
        return c

    c = byte(pos)
    if c < 63:
        return c, pos + 1
    c2 = byte(pos + 1)
    if c2 < 63:
        n = 0
        for i in range(pos + 1, pos + 4):
            n = (n << 6) | byte(i)
        return n, pos + 4
    n = 0
    for i in range(pos + 2, pos + 8):
        n = (n << 6) | byte(i)
    return n, pos + 8


def encode(g: Graph, header: bool = False) -> str:
    """graph6 text for ``g`` (labeled: different labelings give different text)."""
    out = _encode_n(g.n)
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    text = bytes(c + 63 for c in out).decode("ascii")
    return HEADER_G6 + text if header else text


def decode(text: str | bytes) -> Graph:
    """Decode one graph6 or sparse6 line (optional header allowed)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER_G6.encode()):
        data = data[len(HEADER_G6):]
    elif data.startswith(HEADER_S6.encode()):
        data = data[len(HEADER_S6):]
    if data.startswith(b":"):
        return decode_sparse6(data)
    if data.startswith(b";"):
        raise FormatError("incremental sparse6 is not supported", 0)
    n, pos = _decode_n(data, 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise FormatError(f"expected {need} edge bytes for n={n}, found {len(data) - pos}", pos)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for off in range(pos, len(data)):
        c = data[off] - 63
        if not 0 <= c <= 63:
            raise FormatError(f"byte {data[off]!r} outside printable graph6 range", off)
        for shift in range(5, -1, -1):
            if k >= nbits:
                if c >> shift & 1:
                    raise FormatError("non-zero padding bits", off)
                continue
            if c >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, tuple(adj))


def decode_sparse6(data: bytes) -> Graph:
    if not data.startswith(b":"):
        raise FormatError("sparse6 must start with ':'", 0)
    n, pos = _decode_n(data, 1)
    k = max((n - 1).bit_length(), 1) if n > 1 else 1
    stream = []
    for off in range(pos, len(data)):
        c = data[off] - 63
        if not 0 <= c <= 63:
            raise FormatError(f"byte {data[off]!r} outside printable sparse6 range", off)
        stream.extend((c >> s) & 1 for s in range(5, -1, -1))
    adj = [0] * n
    v = 0
    i = 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for bit in stream[i + 1:i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
            continue
        if x == v:
            raise FormatError("loops are not supported", pos + i // 6)
        if adj[x] >> v & 1:
            raise FormatError("parallel edges are not supported", pos + i // 6)
        adj[x] |= 1 << v
        adj[v] |= 1 << x
    return Graph._trusted(n, tuple(adj))


def read_graphs(lines) -> list[Graph]:
    return [decode(line) for line in lines if line.strip()]
