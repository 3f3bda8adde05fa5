"""Exhaustive enumeration of small pure complexes."""

from __future__ import annotations

import itertools
from typing import Iterator

from .complexes import SimplicialComplex, canonical_form


def enumerate_pure_complexes(n: int, d: int, up_to_isomorphism: bool = False, covering: bool = True) -> Iterator[SimplicialComplex]:
    """Every pure ``d``-dimensional complex on ``[n]``, each exactly once.

    Complexes come out by number of facets, then lexicographically in the
    facet lists. With ``covering`` (the default) only complexes using every
    vertex are produced. ``up_to_isomorphism`` keeps the first complex of
    each relabeling class.
    """
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    candidates = list(itertools.combinations(range(1, n + 1), d + 1))
    everything = frozenset(range(1, n + 1))
    seen = set()
    for k in range(1, len(candidates) + 1):
        for chosen in itertools.combinations(candidates, k):
            if covering and frozenset().union(*map(frozenset, chosen)) != everything:
                continue
            delta = SimplicialComplex(n, tuple(frozenset(f) for f in chosen))
            if up_to_isomorphism:
                key = canonical_form(delta)
                if key in seen:
                    continue
                seen.add(key)
            yield delta


def count_pure_complexes(n: int, d: int, **kwargs) -> int:
    return sum(1 for _ in enumerate_pure_complexes(n, d, **kwargs))
