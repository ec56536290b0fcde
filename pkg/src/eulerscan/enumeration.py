"""Exhaustive desk-scale enumeration of small graph classes.

The Eulerian class is generated through the parity-completion bijection:
every graph on vertices 1..n-1 extends to a unique even graph on n
vertices by joining vertex 0 to the odd-degree vertices, so the labeled
search space is 2^C(n-1,2) instead of 2^C(n,2). The other classes filter
all labeled graphs on n vertices.

Isomorphism deduplication uses a brute-force canonical form: the
lexicographically minimal upper-triangle bit string over all vertex
relabelings, found by branch-and-bound with twin pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import graph6
from .errors import OrderTooLarge, SpecViolation
from .graph import Graph, classify, is_connected

GRAPH_CLASSES = ("eulerian", "connected", "two_edge_connected", "two_connected")

_EULERIAN_MAX_N = 10
_GENERAL_MAX_N = 8
_CANON_MAX_N = 10


@dataclass(frozen=True)
class EnumSpec:
    n: int
    graph_class: str
    dedupe: bool = False

    def validate(self) -> None:
        if self.graph_class not in GRAPH_CLASSES:
            raise SpecViolation(f"unknown graph class {self.graph_class!r}")
        limit = _EULERIAN_MAX_N if self.graph_class == "eulerian" else _GENERAL_MAX_N
        if not 3 <= self.n <= limit:
            raise SpecViolation(
                f"class {self.graph_class} supports 3 <= n <= {limit}, got {self.n}"
            )


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical graph6 encoding, minimal over all vertex permutations."""

    bytes: bytes

    def text(self) -> str:
        return self.bytes.decode("ascii")


def pair_order(n: int, base: int = 0) -> list[tuple[int, int]]:
    """Upper-triangle pairs in column order over vertices base..base+n-1."""
    return [(base + u, base + v) for v in range(1, n) for u in range(v)]


def full_code_to_rows(n: int, code: int) -> list[int]:
    """Decode an upper-triangle bitmask (column order over K_n) to rows."""
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return rows


def rows_to_full_code(n: int, rows: list[int] | tuple[int, ...]) -> int:
    code = 0
    k = 0
    for v in range(1, n):
        for u in range(v):
            code |= (rows[u] >> v & 1) << k
            k += 1
    return code


def eulerian_candidate_rows(n: int, code: int) -> list[int]:
    """Rows of the parity completion of candidate ``code``.

    ``code`` indexes a graph on vertices 1..n-1 (column pair order);
    vertex 0 is joined to every odd-degree vertex.
    """
    rows = [0] * n
    k = 0
    for v in range(2, n):
        for u in range(1, v):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    row0 = 0
    for v in range(1, n):
        if rows[v].bit_count() % 2:
            row0 |= 1 << v
            rows[v] |= 1
    rows[0] = row0
    return rows


def _member_rows(spec: EnumSpec) -> Iterator[tuple[int, ...]]:
    n = spec.n
    if spec.graph_class == "eulerian":
        npairs = (n - 1) * (n - 2) // 2
        for code in range(1 << npairs):
            rows = tuple(eulerian_candidate_rows(n, code))
            g = Graph(n, rows)
            if is_connected(g):
                yield rows
        return
    npairs = n * (n - 1) // 2
    for code in range(1 << npairs):
        rows = tuple(full_code_to_rows(n, code))
        g = Graph(n, rows)
        degs = g.degrees()
        if spec.graph_class in ("two_edge_connected", "two_connected") and min(degs) < 2:
            continue
        flags = classify(g)
        if getattr(flags, spec.graph_class):
            yield rows


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """Stream the labeled members of a class, optionally one per iso class."""
    spec.validate()
    if not spec.dedupe:
        for rows in _member_rows(spec):
            yield Graph(spec.n, rows)
        return
    seen: set[bytes] = set()
    for rows in _member_rows(spec):
        g = Graph(spec.n, rows)
        form = canonical_form(g).bytes
        if form not in seen:
            seen.add(form)
            yield g


def is_isomorphic_to_cycle(g: Graph) -> bool:
    """Constant-time cycle test: connected and 2-regular."""
    return all(d == 2 for d in g.degrees()) and is_connected(g)


def _canonical_rows(g: Graph) -> tuple[int, ...]:
    """Rows of the minimal relabeling of ``g``.

    Minimality is over the upper-triangle bit string in column order,
    earlier bits most significant. Branch and bound with twin pruning
    (vertices with identical neighbourhoods are interchangeable).
    """
    n = g.n
    rows = g.rows
    best_col: list[int] = [0] * n
    have_best = False
    perm: list[int] = [0] * n
    cur_col: list[int] = [0] * n
    state: list[int] = [1] * (n + 1)  # 0 = prefix equals best, 1 = strictly less

    def descend(pos: int, used: int) -> None:
        nonlocal have_best
        tried: list[int] = []
        for v in range(n):
            bit = 1 << v
            if used & bit:
                continue
            if any(
                (rows[u] & ~bit) == (rows[v] & ~(1 << u)) for u in tried
            ):
                continue  # twin of an already-tried candidate
            tried.append(v)
            col = 0
            for i in range(pos):
                col = col << 1 | (rows[v] >> perm[i] & 1)
            if have_best and state[pos] == 0:
                if col > best_col[pos]:
                    continue
                nst = 0 if col == best_col[pos] else 1
            else:
                nst = 1
            perm[pos] = v
            cur_col[pos] = col
            if pos == n - 1:
                best_col[:] = cur_col
                have_best = True
                for i in range(n + 1):
                    state[i] = 0
            else:
                state[pos + 1] = nst
                descend(pos + 1, used | bit)

    descend(0, 0)
    out = [0] * n
    for pos in range(1, n):
        for i in range(pos):
            if best_col[pos] >> (pos - 1 - i) & 1:
                out[i] |= 1 << pos
                out[pos] |= 1 << i
    return tuple(out)


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant canonical graph6 encoding (n <= 10)."""
    if g.n > _CANON_MAX_N:
        raise OrderTooLarge(f"canonical form limited to n <= {_CANON_MAX_N}")
    canon = Graph(g.n, _canonical_rows(g))
    return CanonicalForm(graph6.encode(canon).encode("ascii"))
