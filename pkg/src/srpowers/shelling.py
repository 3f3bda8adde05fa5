"""Checking and finding (non-pure) shellings.

A shelling is an order F_1, ..., F_t of the facets such that for every
i >= 2 the complex <F_1, ..., F_{i-1}> meet <F_i> is pure of dimension
dim F_i - 1, i.e. all of its maximal faces have |F_i| - 1 vertices.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, face_key, from_mask, maximal_masks, popcount, to_mask
from .errors import InvalidShelling, NotAPermutation

# Node budget for the first, optimistic search pass; see find_shelling.
_OPTIMISTIC_NODES = 2000


@dataclass(frozen=True)
class ShellingCertificate:
    """An order of the facets plus, for each step i >= 2, the maximal faces of
    the intersection of <F_1, ..., F_{i-1}> with <F_i>.

    ``witnesses[i]`` belongs to step ``i + 1`` (1-based), so ``witnesses[0]`` is
    always empty.
    """

    n: int
    order: tuple
    witnesses: tuple
    method: str = field(default="check", compare=False)

    def permutation(self, delta: SimplicialComplex) -> tuple:
        index = {f: k for k, f in enumerate(delta.facets)}
        return tuple(index[f] for f in self.order)

    def revalidate(self) -> bool:
        """Re-check the certificate from its own data."""
        masks = [to_mask(f) for f in self.order]
        if len(set(masks)) != len(masks) or len(self.witnesses) != len(masks):
            return False
        for i, F in enumerate(masks):
            wits = [to_mask(w) for w in self.witnesses[i]]
            if i == 0:
                if wits:
                    return False
                continue
            earlier = masks[:i]
            for w in wits:
                if popcount(w) != popcount(F) - 1 or w & F != w:
                    return False
                if not any(w & G == w for G in earlier):
                    return False
            for G in earlier:
                meet = F & G
                if not any(meet & w == meet for w in wits):
                    return False
        return True


def _normalize_order(delta: SimplicialComplex, order) -> list[int]:
    order = list(order)
    if all(isinstance(x, int) for x in order):
        if sorted(order) != list(range(len(delta.facets))):
            raise NotAPermutation(f"{order} is not a permutation of the facet indices")
        return [delta.masks[k] for k in order]
    masks = [to_mask(f) for f in order]
    if sorted(masks) != sorted(delta.masks):
        raise NotAPermutation("order does not list every facet exactly once")
    return masks


def intersection_witnesses(earlier, F: int) -> list[int]:
    """Maximal faces of <earlier> meet <F>."""
    return maximal_masks(F & G for G in earlier)


def check_shelling(delta: SimplicialComplex, order) -> ShellingCertificate:
    """Validate ``order`` (facets, or 0-based facet indices) as a shelling.

    Raises ``InvalidShelling`` carrying the first failing 1-based step.
    """
    masks = _normalize_order(delta, order)
    witnesses = [()]
    for i in range(1, len(masks)):
        F = masks[i]
        wits = intersection_witnesses(masks[:i], F)
        if any(popcount(w) != popcount(F) - 1 for w in wits):
            raise InvalidShelling(i + 1, [from_mask(w) for w in wits])
        witnesses.append(tuple(from_mask(w) for w in sorted(wits, key=lambda m: face_key(from_mask(m)))))
    return ShellingCertificate(delta.n, tuple(from_mask(m) for m in masks), tuple(witnesses))


def _attaches(earlier, F: int) -> bool:
    """Does F meet <earlier> in a pure (|F|-2)-dimensional complex?

    With d_G = F - G, the intersection F & G lies in a codim-one face F - {v}
    that is itself in <earlier> exactly when some v in d_G satisfies
    d_H = {v} for an earlier H.
    """
    if not earlier:
        return True
    ridge = 0
    diffs = []
    for G in earlier:
        d = F & ~G
        if d & (d - 1) == 0:
            ridge |= d
        diffs.append(d)
    if not ridge:
        return False
    return all(d & ridge for d in diffs)


def _strongly_connected(facets: list[int]) -> bool:
    if len(facets) <= 1:
        return True
    k = popcount(facets[0])
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        fa = facets[a]
        for b, fb in enumerate(facets):
            if b not in seen and popcount(fa & fb) == k - 1:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(facets)


def closed_faces(facets) -> set[int]:
    """All intersections of nonempty families of facets."""
    closed = set(facets)
    frontier = set(facets)
    while frontier:
        fresh = set()
        for a in frontier:
            for F in facets:
                x = a & F
                if x not in closed:
                    fresh.add(x)
        closed |= fresh
        frontier = fresh
    return closed


def pure_obstruction(facets: list[int]):
    """A face whose link is not strongly connected, or ``None``.

    For a pure complex this is a proof of non-shellability: links of a pure
    shellable complex are pure shellable, and a pure shellable complex is
    strongly connected. Faces that are not intersections of facets have
    cone links and are skipped.
    """
    for sigma in sorted(closed_faces(facets), key=lambda m: (-popcount(m), m)):
        link = [F & ~sigma for F in facets if F & sigma == sigma]
        if len(link) > 1 and not _strongly_connected(link):
            return sigma
    return None


class _Budget(Exception):
    pass


def _search_layer(base: list[int], layer: list[int], budget):
    """Order ``layer`` so every facet attaches to base + its predecessors.

    Depth-first in input order; a set of placed facets that cannot be
    completed is remembered, since attachability depends only on which
    facets precede, not on their order.
    """
    t = len(layer)
    full = (1 << t) - 1
    dead: set[int] = set()
    nodes = [0]

    def extend(used: int, placed: list[int]):
        if used == full:
            return placed
        if used in dead:
            return None
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _Budget
        earlier = base + [layer[k] for k in placed]
        for k in range(t):
            if not used >> k & 1 and _attaches(earlier, layer[k]):
                found = extend(used | 1 << k, placed + [k])
                if found is not None:
                    return found
        dead.add(used)
        return None

    limit = sys.getrecursionlimit()
    if limit < t + 100:
        sys.setrecursionlimit(t + 100)
    return extend(0, [])


def _layered_search(layers, budget):
    base: list[int] = []
    for layer in layers:
        found = _search_layer(base, layer, budget)
        if found is None:
            return None
        base = base + [layer[k] for k in found]
    return base


def find_shelling(delta: SimplicialComplex):
    """Return a ShellingCertificate, or ``None`` when no shelling exists.

    Facets are placed in order of decreasing size, which loses nothing by the
    Bjorner-Wachs rearrangement lemma; the problem then splits into one
    independent search per facet size. Before an exhaustive search the
    largest facets are tested with ``pure_obstruction``.
    """
    masks = list(delta.masks)
    if len(masks) <= 1:
        return ShellingCertificate(delta.n, delta.facets, ((),) * len(masks), method="search")
    sizes = sorted({popcount(m) for m in masks}, reverse=True)
    layers = [[m for m in masks if popcount(m) == s] for s in sizes]
    try:
        order = _layered_search(layers, _OPTIMISTIC_NODES)
    except _Budget:
        if pure_obstruction(layers[0]) is not None:
            return None
        order = _layered_search(layers, None)
    if order is None:
        return None
    cert = check_shelling(delta, [from_mask(m) for m in order])
    return ShellingCertificate(cert.n, cert.order, cert.witnesses, method="search")


def is_shellable(delta: SimplicialComplex) -> bool:
    return find_shelling(delta) is not None
