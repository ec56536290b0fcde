"""Exact topological indices: Wiener, Harary, and the four Zagreb variants.

All arithmetic is exact: Python integers for W/M1/M2/Pi1/Pi2 and reduced
fractions for Harary values. No floating point is involved anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DisconnectedGraph, OrderOutOfRange
from .graph import Graph, bfs_distances

#: Exact rational type used for every Harary value.
Rational = Fraction


@dataclass(frozen=True)
class IndexBundle:
    """The six index values of one graph.

    ``wiener`` and ``harary`` are None when the graph is disconnected; the
    degree-based indices are defined for every graph.
    """

    wiener: Optional[int]
    harary: Optional[Rational]
    m1: int
    m2: int
    pi1: int
    pi2: int


@dataclass(frozen=True)
class DistanceProfile:
    """Multiset of pairwise distances: distance -> number of unordered pairs."""

    multiplicity: dict[int, int]

    @property
    def pair_total(self) -> int:
        return sum(self.multiplicity.values())

    def items(self):
        return sorted(self.multiplicity.items())


def distance_profile(g: Graph) -> DistanceProfile:
    """Multiset of all n(n-1)/2 pairwise distances of a connected graph."""
    counts: Counter[int] = Counter()
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for u in range(s + 1, g.n):
            d = dist[u]
            if d is None:
                raise DisconnectedGraph("distance profile requires a connected graph")
            counts[d] += 1
    return DistanceProfile(dict(counts))


def profile_indices(p: DistanceProfile) -> tuple[int, Rational]:
    """(Wiener, Harary) of a distance profile, exactly."""
    w = sum(d * c for d, c in p.multiplicity.items())
    h = sum((Fraction(c, d) for d, c in p.multiplicity.items()), start=Fraction(0))
    return w, h


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs."""
    w, _ = profile_indices(distance_profile(g))
    return w


def harary(g: Graph) -> Rational:
    """Sum of reciprocal distances over all unordered vertex pairs."""
    _, h = profile_indices(distance_profile(g))
    return h


def zagreb(g: Graph) -> IndexBundle:
    """Degree-based indices; wiener/harary fields are left unset (None).

    Convention 0**0 = 1 keeps pi1/pi2 multiplicative over disjoint unions.
    """
    degs = g.degrees()
    m1 = sum(d * d for d in degs)
    m2 = 0
    for u, v in g.edges():
        m2 += degs[u] * degs[v]
    pi1 = 1
    pi2 = 1
    for d in degs:
        pi1 *= d
        pi2 *= d**d if d > 0 else 1
    return IndexBundle(wiener=None, harary=None, m1=m1, m2=m2, pi1=pi1, pi2=pi2)


def full_bundle(g: Graph) -> IndexBundle:
    """All six indices of a connected graph."""
    w, h = profile_indices(distance_profile(g))
    z = zagreb(g)
    return IndexBundle(wiener=w, harary=h, m1=z.m1, m2=z.m2, pi1=z.pi1, pi2=z.pi2)


def cycle_profile(n: int) -> DistanceProfile:
    """Distance profile of the cycle C_n.

    Odd n: distances 1..(n-1)/2, each n times. Even n = 2k: distances
    1..k-1 each n times, plus the antipodal distance k exactly k times.
    """
    if n < 3:
        raise OrderOutOfRange(f"cycle requires n >= 3, got {n}")
    if n % 2:
        return DistanceProfile({d: n for d in range(1, (n - 1) // 2 + 1)})
    k = n // 2
    mult = {d: n for d in range(1, k)}
    mult[k] = k
    return DistanceProfile(mult)


def harmonic(j: int) -> Rational:
    """The j-th harmonic number as an exact fraction."""
    return sum((Fraction(1, i) for i in range(1, j + 1)), start=Fraction(0))


def cycle_closed_forms(n: int) -> IndexBundle:
    """Closed forms for all six indices of C_n."""
    if n < 3:
        raise OrderOutOfRange(f"cycle requires n >= 3, got {n}")
    if n % 2:
        w = n * (n * n - 1) // 8
        h = n * harmonic((n - 1) // 2)
    else:
        w = n**3 // 8
        h = n * harmonic(n // 2 - 1) + 1
    return IndexBundle(wiener=w, harary=h, m1=4 * n, m2=4 * n, pi1=2**n, pi2=4**n)
