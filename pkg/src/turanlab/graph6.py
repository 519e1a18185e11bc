"""graph6 codec restricted to single-byte size headers (n <= 62).

Encoding: one header byte ``n + 63`` followed by the upper triangle of the
adjacency matrix in column order ((0,1), (0,2), (1,2), (0,3), ...), packed six
bits per byte, big-endian within each byte, zero padded, each byte offset by 63.
"""

from .errors import CapabilityError, ParseError
from .graph import Graph, MAX_VERTICES

MAX_G6_VERTICES = 62


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_G6_VERTICES:
        raise CapabilityError(f"graph6 multi-byte headers unsupported (n={g.n} > {MAX_G6_VERTICES})")
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for pos in range(0, len(bits), 6):
        value = 0
        for b in bits[pos:pos + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside graph6 range 0x3F..0x7E", pos)
    n = ord(text[0]) - 63
    if n == 63:
        raise ParseError("multi-byte graph6 size headers are not supported", 0)
    assert n <= MAX_VERTICES
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) < expected:
        raise ParseError(f"truncated graph6 payload: expected {expected} bytes, got {len(text)}", len(text))
    if len(text) > expected:
        raise ParseError(f"trailing bytes after graph6 payload of {expected} bytes", expected)
    rows = [0] * n
    k = 0
    payload = [ord(ch) - 63 for ch in text[1:]]
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if payload and payload[-1] & ((1 << (-nbits % 6)) - 1):
        raise ParseError("nonzero padding bits in final graph6 byte", len(text) - 1)
    return Graph.trusted(n, tuple(rows))
