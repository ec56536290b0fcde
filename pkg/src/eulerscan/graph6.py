"""graph6 interchange codec (single-byte order form, n <= 62)."""

from __future__ import annotations

from .errors import MalformedGraph6, OrderTooLarge
from .graph import Graph

_MAX_G6_ORDER = 62


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def upper_triangle_bits(g: Graph) -> list[int]:
    """Adjacency bits in column order (0,1),(0,2),(1,2),(0,3),..."""
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    return bits


def encode(g: Graph) -> str:
    if g.n > _MAX_G6_ORDER:
        raise OrderTooLarge(f"graph6 encoding limited to n <= {_MAX_G6_ORDER}")
    bits = upper_triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    if not text:
        raise MalformedGraph6("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside graph6 range")
    n = ord(text[0]) - 63
    if n > _MAX_G6_ORDER:
        raise MalformedGraph6(f"order {n} beyond single-byte form")
    if n < 1:
        raise MalformedGraph6(f"order {n} below 1")
    npairs = _pair_count(n)
    expected_len = 1 + (npairs + 5) // 6
    if len(text) != expected_len:
        raise MalformedGraph6(
            f"expected {expected_len} characters for order {n}, got {len(text)}"
        )
    bits = []
    for ch in text[1:]:
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append(value >> shift & 1)
    if any(bits[npairs:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))
