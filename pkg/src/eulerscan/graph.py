"""Immutable bitmask graphs, distances, and connectivity classification.

Vertices are 0-based ids. Adjacency is stored as one integer bitmask per
vertex, which keeps BFS and exhaustive enumeration cheap for the orders
this package targets (n <= 64).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DisconnectedGraph,
    LoopEdge,
    OrderOutOfRange,
    VertexOutOfRange,
)

MAX_ORDER = 64

#: Sentinel for the distance between vertices in different components.
#: Deliberately not a large number, so it can never leak into an index sum.
INFINITE = None


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    immutable and safe to share between workers.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise OrderOutOfRange(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.rows) != self.n:
            raise ValueError("rows length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise VertexOutOfRange(f"row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise LoopEdge(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        row = self.rows[v]
        while row:
            low = row & -row
            row ^= low
            yield low.bit_length() - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                row ^= low
                yield (u, low.bit_length() - 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {self.n})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise LoopEdge(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path lengths; INFINITE for disconnected pairs."""

    n: int
    d: tuple[tuple[Optional[int], ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> Optional[int]:
        u, v = pair
        return self.d[u][v]


@dataclass(frozen=True)
class VertexDistanceView:
    """Sorted distances from one source vertex of a connected graph."""

    source: int
    distances: tuple[int, ...]
    eccentricity: int


@dataclass(frozen=True)
class ClassFlags:
    connected: bool
    all_even_degrees: bool
    eulerian: bool
    two_edge_connected: bool
    two_connected: bool
    is_cycle: bool


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Single-source BFS distances; INFINITE where unreachable."""
    g._check_vertex(source)
    dist: list[Optional[int]] = [INFINITE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        nxt = 0
        row = frontier
        while row:
            low = row & -row
            row ^= low
            nxt |= g.rows[low.bit_length() - 1]
        nxt &= ~seen
        if not nxt:
            break
        level += 1
        seen |= nxt
        bits = nxt
        while bits:
            low = bits & -bits
            bits ^= low
            dist[low.bit_length() - 1] = level
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs unweighted shortest paths via BFS from every vertex."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        while row:
            low = row & -row
            row ^= low
            nxt |= g.rows[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def _bridges_and_cut_vertices(g: Graph) -> tuple[bool, bool]:
    """One iterative depth-first low-link pass over a connected graph.

    Returns (has_bridge, has_cut_vertex).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    has_bridge = False
    has_cut = False
    timer = 0
    # Explicit stack of (vertex, parent, remaining-neighbour mask).
    stack_v = [0]
    stack_parent = [-1]
    stack_rem = [g.rows[0]]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack_v:
        v = stack_v[-1]
        rem = stack_rem[-1]
        if rem:
            lowbit = rem & -rem
            stack_rem[-1] = rem ^ lowbit
            u = lowbit.bit_length() - 1
            if u == stack_parent[-1]:
                continue  # the single parent edge of a simple graph
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                if len(stack_v) == 1:
                    root_children += 1
                stack_v.append(u)
                stack_parent.append(v)
                stack_rem.append(g.rows[u])
            else:
                low[v] = min(low[v], disc[u])
        else:
            stack_v.pop()
            stack_parent.pop()
            stack_rem.pop()
            if stack_v:
                p = stack_v[-1]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    has_bridge = True
                if low[v] >= disc[p] and stack_parent[-1] != -1:
                    has_cut = True
    if root_children >= 2:
        has_cut = True
    return has_bridge, has_cut


def classify(g: Graph) -> ClassFlags:
    """Connectivity class flags for ``g``."""
    connected = is_connected(g)
    degs = g.degrees()
    all_even = all(d % 2 == 0 for d in degs)
    eulerian = connected and all_even
    if connected and g.n >= 2:
        has_bridge, has_cut = _bridges_and_cut_vertices(g)
    else:
        has_bridge, has_cut = False, False
    two_edge_connected = connected and g.n >= 2 and not has_bridge
    two_connected = connected and g.n >= 3 and not has_cut
    is_cycle = connected and all(d == 2 for d in degs)
    return ClassFlags(
        connected=connected,
        all_even_degrees=all_even,
        eulerian=eulerian,
        two_edge_connected=two_edge_connected,
        two_connected=two_connected,
        is_cycle=is_cycle,
    )


def vertex_view(g: Graph, v: int) -> VertexDistanceView:
    """Sorted distance sequence from ``v`` plus its eccentricity."""
    g._check_vertex(v)
    dist = bfs_distances(g, v)
    if any(d is INFINITE for d in dist):
        raise DisconnectedGraph("vertex view requires a connected graph")
    seq = tuple(sorted(d for u, d in enumerate(dist) if u != v))
    return VertexDistanceView(source=v, distances=seq, eccentricity=seq[-1] if seq else 0)


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Weak (prefix-sum) majorization, zero-padding the shorter sequence."""
    sa = sorted(a, reverse=True)
    sb = sorted(b, reverse=True)
    length = max(len(sa), len(sb))
    sa += [0] * (length - len(sa))
    sb += [0] * (length - len(sb))
    pa = pb = 0
    for x, y in zip(sa, sb):
        pa += x
        pb += y
        if pa < pb:
            return False
    return True


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: first line "n m", then m lines "u v"."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format (newline-terminated)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
