"""Simplicial complexes on an explicit ground set [n].

A complex is stored by its facets. Vertex sets are frozensets of ints in
1..n; many routines also work with the equivalent bitmask (bit v-1 set for
vertex v), which is what the search code uses internally.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import FullSimplex, NotDimensionOne, VertexOutOfRange

VertexSet = frozenset


def to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def face_key(face):
    return tuple(sorted(face))


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks (duplicates removed)."""
    ordered = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    out: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in out):
            out.append(m)
    return out


def minimal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex ``<F_1, ..., F_t>`` on the ground set ``[n]``.

    ``facets`` must be an antichain without duplicates. An empty facet list
    is the void complex; ``(frozenset(),)`` is the complex ``<{}>`` whose
    only face is the empty set. Vertices of ``[n]`` lying in no facet are
    allowed (duals and complements produce them).
    """

    n: int
    facets: tuple = field(default=())

    def __post_init__(self):
        facets = tuple(frozenset(f) for f in self.facets)
        for f in facets:
            for v in f:
                if not 1 <= v <= self.n:
                    raise VertexOutOfRange(f"vertex {v} outside 1..{self.n}")
        if len(set(facets)) != len(facets):
            raise ValueError("duplicate facets")
        for a, b in itertools.combinations(facets, 2):
            if a <= b or b <= a:
                raise ValueError(f"facets {sorted(a)} and {sorted(b)} are comparable")
        object.__setattr__(self, "facets", tuple(sorted(facets, key=face_key)))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by arbitrary faces; non-maximal ones are dropped."""
        masks = maximal_masks(to_mask(f) for f in faces)
        return cls(n, tuple(from_mask(m) for m in masks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls.from_faces(n, (from_mask(m) for m in masks))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (frozenset(range(1, n + 1)),))

    @cached_property
    def masks(self) -> tuple:
        return tuple(to_mask(f) for f in self.facets)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Largest facet dimension; -1 for ``<{}>`` and for the void complex."""
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def is_full_simplex(self) -> bool:
        return self.masks == (self.full_mask,)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    def contains(self, face: Iterable[int]) -> bool:
        m = to_mask(face)
        return any(m & f == m for f in self.masks)

    __contains__ = contains

    def contains_mask(self, m: int) -> bool:
        return any(m & f == m for f in self.masks)

    def faces(self) -> list[frozenset]:
        """Every face, including the empty face unless the complex is void."""
        return [from_mask(m) for m in sorted(self.face_masks(), key=lambda m: (popcount(m), m))]

    def face_masks(self) -> set[int]:
        out: set[int] = set()
        for f in self.masks:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        m = to_mask(face)
        links = [f & ~m for f in self.masks if f & m == m]
        return SimplicialComplex.from_masks(self.n, links)

    def render(self) -> str:
        parts = " ".join("{" + " ".join(map(str, face_key(f))) + "}" for f in self.facets)
        return f"complex n={self.n} {parts}".rstrip()

    def __str__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, face_key(f))) + "}" for f in self.facets)
        return f"<{inner}>"


def complement_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """``<F_1^c, ..., F_t^c>`` with complements taken inside ``[n]``."""
    full = delta.full_mask
    return SimplicialComplex.from_masks(delta.n, (full & ~f for f in delta.masks))


def minimal_nonfaces(delta: SimplicialComplex) -> list[int]:
    """Bitmasks of the minimal non-faces, i.e. the supports of G(I_delta).

    Computed as the minimal transversals of the facet complements: a set is a
    non-face exactly when it meets the complement of every facet.
    """
    full = delta.full_mask
    comps = [full & ~f for f in delta.masks]
    if not comps:
        return [0]
    return minimal_transversals(comps)


def minimal_transversals(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal bitmasks meeting every mask in ``sets``.

    An empty member makes the family untransversable and yields ``[]``.
    """
    covers = [0]
    for s in sets:
        if s == 0:
            return []
        grown = []
        for c in covers:
            if c & s:
                grown.append(c)
            else:
                bits = s
                while bits:
                    low = bits & -bits
                    grown.append(c | low)
                    bits ^= low
        covers = minimal_masks(grown)
    return covers


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """``{F^c : F not in delta}``; its facets are complements of minimal non-faces."""
    if delta.is_full_simplex:
        raise FullSimplex("the full simplex has no non-faces")
    full = delta.full_mask
    return SimplicialComplex.from_masks(delta.n, (full & ~m for m in minimal_nonfaces(delta)))


def matroid_violation(delta: SimplicialComplex):
    """First failure of the facet exchange property, or ``None``.

    Returns ``(F, G, i)``: facets ``F != G`` and ``i`` in ``F - G`` such that no
    ``j`` in ``G - F`` gives a face ``(F - {i}) | {j}``. A non-pure complex is
    reported as ``(F, G, None)`` with ``|F| < |G|``.
    """
    facets = delta.facets
    sizes = sorted({len(f) for f in facets})
    if len(sizes) > 1:
        small = next(f for f in facets if len(f) == sizes[0])
        big = next(f for f in facets if len(f) == sizes[-1])
        return small, big, None
    present = set(facets)
    for F in facets:
        for G in facets:
            if F == G:
                continue
            for i in sorted(F - G):
                if not any((F - {i}) | {j} in present for j in G - F):
                    return F, G, i
    return None


def is_matroid(delta: SimplicialComplex) -> bool:
    return matroid_violation(delta) is None


def is_matroid_by_augmentation(delta: SimplicialComplex) -> bool:
    """Literal face-augmentation definition; quadratic in the number of faces."""
    faces = delta.face_masks()
    for F in faces:
        for G in faces:
            if popcount(F) < popcount(G):
                rest = G & ~F
                if not any((F | (1 << b)) in faces for b in range(delta.n) if rest >> b & 1):
                    return False
    return True


def is_complete_intersection(delta: SimplicialComplex) -> bool:
    """Minimal non-faces pairwise disjoint (I_delta generated by a regular sequence)."""
    nonfaces = [] if delta.is_full_simplex else minimal_nonfaces(delta)
    seen = 0
    for m in nonfaces:
        if seen & m:
            return False
        seen |= m
    return True


def diameter(delta: SimplicialComplex):
    """Graph diameter of a 1-dimensional complex on ``[n]``; ``math.inf`` if disconnected."""
    if delta.dim != 1:
        raise NotDimensionOne(f"complex has dimension {delta.dim}")
    adj = {v: set() for v in range(1, delta.n + 1)}
    for f in delta.facets:
        if len(f) == 2:
            a, b = sorted(f)
            adj[a].add(b)
            adj[b].add(a)
    best = 0
    for source in adj:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < len(adj):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def relabel(delta: SimplicialComplex, perm) -> SimplicialComplex:
    """Apply ``v -> perm[v - 1]``."""
    return SimplicialComplex(delta.n, tuple(frozenset(perm[v - 1] for v in f) for f in delta.facets))


def canonical_form(delta: SimplicialComplex) -> tuple:
    """A relabeling-invariant key: equal exactly for isomorphic complexes.

    Vertices are first sorted by an isomorphism-invariant signature, and the
    lexicographically least facet list is taken over the relabelings that
    respect that sorting (all of them when the signature is constant).
    """
    n = delta.n
    degree = {v: 0 for v in range(1, n + 1)}
    for f in delta.facets:
        for v in f:
            degree[v] += 1
    signature = {
        v: (degree[v], tuple(sorted((len(f), tuple(sorted(degree[u] for u in f))) for f in delta.facets if v in f)))
        for v in degree
    }
    classes: dict = {}
    for v in sorted(degree, key=lambda v: signature[v]):
        classes.setdefault(signature[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        label = {}
        for v in itertools.chain.from_iterable(choice):
            label[v] = len(label) + 1
        key = tuple(sorted(tuple(sorted(label[v] for v in f)) for f in delta.facets))
        if best is None or key < best:
            best = key
    return (n, best)


def dim1_shape(delta: SimplicialComplex):
    """Classify a 1-dimensional complex as ``("path", k)``, ``("cycle", k)`` or ``None``.

    Only complexes using every vertex of ``[n]`` are classified; ``k`` is the
    number of edges.
    """
    if delta.dim != 1 or not delta.is_pure or delta.vertices != frozenset(range(1, delta.n + 1)):
        return None
    degree = {v: 0 for v in range(1, delta.n + 1)}
    for f in delta.facets:
        for v in f:
            degree[v] += 1
    edges = len(delta.facets)
    connected = diameter(delta) != math.inf
    if not connected:
        return None
    degs = sorted(degree.values())
    if edges == delta.n - 1 and degs.count(1) == 2 and all(d <= 2 for d in degs):
        return ("path", edges)
    if edges == delta.n and all(d == 2 for d in degs):
        return ("cycle", edges)
    return None
