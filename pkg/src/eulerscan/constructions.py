"""Deterministic builders for the named graph families.

Families: cycles, paths, complete graphs, K_n minus a perfect matching,
cycle bouquets (cycles sharing one vertex), the 7-vertex double-square
gadget ``h``, and the bicyclic/tricyclic pair g1(n)/g2(n) built by gluing
a large cycle to a C7 respectively to ``h``.

Vertex numbering is fixed so identical specs always produce bit-identical
graphs: big-cycle vertices first, gadget vertices appended, the merged
vertex keeps its big-cycle id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import SpecViolation, VertexOutOfRange
from .graph import Graph, from_edge_list

_KINDS = {
    "cycle",
    "path",
    "complete",
    "complete_minus_matching",
    "bouquet",
    "g1",
    "g2",
    "h",
}

# Designated vertices of the h gadget (two squares sharing one vertex).
H_ATTACH = 0  # v1: antipodal to the shared vertex within its square
H_FAR = 2  # v3: at distance 4 from the attachment vertex
H_SHARED = 5  # v6: the degree-4 vertex common to both squares


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    order: Optional[int] = None
    cycle_lengths: tuple[int, ...] = field(default_factory=tuple)

    def validate(self) -> None:
        if self.kind not in _KINDS:
            raise SpecViolation(f"unknown family kind {self.kind!r}")
        n = self.order
        if self.kind == "cycle" and (n is None or n < 3):
            raise SpecViolation("cycle requires order >= 3")
        if self.kind == "path" and (n is None or n < 1):
            raise SpecViolation("path requires order >= 1")
        if self.kind == "complete" and (n is None or n < 1):
            raise SpecViolation("complete requires order >= 1")
        if self.kind == "complete_minus_matching":
            if n is None or n < 4 or n % 2:
                raise SpecViolation("complete_minus_matching requires even order >= 4")
        if self.kind == "bouquet":
            if not self.cycle_lengths:
                raise SpecViolation("bouquet requires at least one cycle length")
            if any(length < 3 for length in self.cycle_lengths):
                raise SpecViolation("bouquet cycle lengths must be >= 3")
        if self.kind in ("g1", "g2") and (n is None or n < 10):
            raise SpecViolation(f"{self.kind} requires order >= 10")
        if self.kind == "h" and n not in (None, 7):
            raise SpecViolation("h has fixed order 7")


def cycle(n: int) -> Graph:
    if n < 3:
        raise SpecViolation("cycle requires n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise SpecViolation("path requires n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise SpecViolation("complete requires n >= 1")
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v)])


def complete_minus_matching(n: int) -> Graph:
    """K_n minus the perfect matching {2i, 2i+1}."""
    if n < 4 or n % 2:
        raise SpecViolation("complete_minus_matching requires even n >= 4")
    edges = [
        (u, v)
        for v in range(n)
        for u in range(v)
        if not (u // 2 == v // 2)
    ]
    return from_edge_list(n, edges)


def amalgamate(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Disjoint union of ``g`` and ``h`` with ``u`` and ``v`` identified.

    The merged vertex keeps id ``u``; the remaining vertices of ``h`` are
    appended after ``g`` in increasing original id order.
    """
    if not 0 <= u < g.n:
        raise VertexOutOfRange(f"vertex {u} outside [0, {g.n})")
    if not 0 <= v < h.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {h.n})")
    remap = {}
    next_id = g.n
    for w in range(h.n):
        if w == v:
            remap[w] = u
        else:
            remap[w] = next_id
            next_id += 1
    edges = list(g.edges())
    edges.extend((remap[a], remap[b]) for a, b in h.edges())
    return from_edge_list(g.n + h.n - 1, edges)


def bouquet(lengths: Sequence[int]) -> Graph:
    """Cycles of the given lengths sharing exactly the single vertex 0."""
    if not lengths or any(length < 3 for length in lengths):
        raise SpecViolation("bouquet requires cycle lengths >= 3")
    g = cycle(lengths[0])
    for length in lengths[1:]:
        g = amalgamate(g, 0, cycle(length), 0)
    return g


def h_gadget() -> Graph:
    """Two 4-cycles sharing one vertex, with the designated labels v1..v7.

    Ids: v1=0 (attachment), v2=1, v3=2 (far vertex), v4=3, v5=4,
    v6=5 (shared, degree 4), v7=6. d(v1, v3) = 4.
    """
    square_a = [(0, 1), (1, 5), (5, 6), (6, 0)]
    square_b = [(5, 3), (3, 2), (2, 4), (4, 5)]
    return from_edge_list(7, square_a + square_b)


def _gadget_label_ids(n: int) -> dict[str, int]:
    """Ids of the labelled gadget vertices v1..v7 inside g1(n)/g2(n)."""
    return {"v1": 0, **{f"v{i}": n - 8 + i for i in range(2, 8)}}


def g_pair(n: int) -> tuple[Graph, Graph]:
    """(g1, g2): the big cycle C_{n-6} glued to C7 respectively to h.

    Both graphs have order n and are glued at big-cycle vertex 0. The six
    appended gadget vertices get ids n-6..n-1 and carry the labels v2..v7
    in both graphs, so per-label distances are directly comparable.
    """
    if n < 10:
        raise SpecViolation("g1/g2 require n >= 10")
    big = cycle(n - 6)
    g1 = amalgamate(big, 0, cycle(7), 0)
    g2 = amalgamate(big, 0, h_gadget(), H_ATTACH)
    return g1, g2


def g_pair_labels(n: int) -> dict[str, int]:
    """Vertex ids of the labels v1..v7 valid for both graphs of g_pair(n)."""
    if n < 10:
        raise SpecViolation("g1/g2 require n >= 10")
    return _gadget_label_ids(n)


def build(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec`` (deterministic)."""
    spec.validate()
    if spec.kind == "cycle":
        return cycle(spec.order)
    if spec.kind == "path":
        return path(spec.order)
    if spec.kind == "complete":
        return complete(spec.order)
    if spec.kind == "complete_minus_matching":
        return complete_minus_matching(spec.order)
    if spec.kind == "bouquet":
        return bouquet(spec.cycle_lengths)
    if spec.kind == "h":
        return h_gadget()
    if spec.kind == "g1":
        return g_pair(spec.order)[0]
    return g_pair(spec.order)[1]
