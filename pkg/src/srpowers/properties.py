"""Cleanness and Cohen-Macaulayness of S/I for monomial ideals I.

Both properties are read off the polarization I^p and its complex Gamma:

* S/I is pretty clean iff Gamma is (non-pure) shellable, and clean iff in
  addition S/I has no embedded primes. The associated primes of S/I are the
  images of the minimal primes of I^p under x_{i,j} -> x_i.
* S/I is Cohen-Macaulay iff Gamma is. Two exact engines decide this:
  ``"reisner"`` checks Reisner's criterion on Gamma directly, and
  ``"degree-complexes"`` (the default) evaluates the local cohomology of S/I
  degree by degree through Takayama's complexes on the original n vertices,
  which is far cheaper for powers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .complexes import SimplicialComplex, popcount
from .errors import ZeroOrUnit
from .homology import RATIONALS, homology_of_faces
from .ideals import MonomialIdeal, _squarefree_complex
from .polar import has_embedded_primes, polarized_complex
from .shelling import ShellingCertificate, closed_faces, find_shelling

ENGINES = ("degree-complexes", "reisner")


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise ZeroOrUnit(f"{I} must be proper and nonzero")


def pretty_clean_shelling(I: MonomialIdeal, refute: bool = True):
    """A shelling of the polarized complex, or ``None``.

    A pure shellable complex is Cohen-Macaulay, so with ``refute`` a pure
    polarized complex is first tested with the degree-complex engine and an
    obstruction settles the answer without an exhaustive search. With
    ``refute=False`` the search alone decides.
    """
    _require_proper(I)
    gamma, _ = polarized_complex(I)
    if refute and gamma.is_pure and degree_complex_obstructions(I, RATIONALS, first_only=True):
        return None
    return find_shelling(gamma)


def clean_shelling(I: MonomialIdeal, refute: bool = True):
    """Shelling certificate witnessing that S/I is clean, or ``None``."""
    _require_proper(I)
    if has_embedded_primes(I):
        return None
    return pretty_clean_shelling(I, refute)


def is_clean(I: MonomialIdeal, refute: bool = True) -> bool:
    return clean_shelling(I, refute) is not None


def is_pretty_clean(I: MonomialIdeal, refute: bool = True) -> bool:
    return pretty_clean_shelling(I, refute) is not None


# --- Cohen-Macaulay -------------------------------------------------------


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=200_000)
def _cached_homology(faces: tuple, field: int, top: int) -> tuple:
    return homology_of_faces(faces, field, top=top).ranks


def _degree_class_faces(G: int, profile: tuple, everything: int) -> tuple:
    """Faces of the degree complex, ``profile[j]`` being the generators u
    with u_j above the class value.

    F is a face iff no generator u has {j not in G : u_j > a_j} inside F,
    that is, the coordinates outside F and G still meet every generator.
    """
    full = (1 << len(profile)) - 1
    universe = full & ~G
    cover = [0] * (full + 1)
    faces = []
    for S in range(1, full + 1):
        if S & G:
            continue
        low = S & -S
        cover[S] = cover[S ^ low] | profile[low.bit_length() - 1]
    for F in _subsets(universe):
        if cover[universe & ~F] == everything:
            faces.append(F)
    faces.sort()
    return tuple(faces)


def degree_complex_obstructions(I: MonomialIdeal, field: int = RATIONALS, first_only: bool = False) -> list:
    """Nonzero pieces of H^i_m(S/I) for i < dim S/I.

    Each entry is ``(a, i, rank)`` where ``a`` is the degree class (entries
    -1 stand for any negative value). S/I is Cohen-Macaulay iff the list is
    empty.
    """
    _require_proper(I)
    n = I.arity
    radical_complex = _squarefree_complex(I.radical())
    d = radical_complex.dim + 1
    bounds = I.exponent_bounds
    gens = I.generators
    everything = (1 << len(gens)) - 1
    # above[j][c] = generators u with u_j > c, for class values c = 0..bounds[j]-1
    above = [
        [sum(1 << k for k, u in enumerate(gens) if u[j] > c) for c in range(bounds[j])]
        for j in range(n)
    ]
    out = []
    ranges = [[-1] + list(range(bounds[j])) for j in range(n)]
    for a in itertools.product(*ranges):
        G = 0
        for j in range(n):
            if a[j] < 0:
                G |= 1 << j
        top = d - G.bit_count() - 2
        if top < -1 or not radical_complex.contains_mask(G):
            continue
        profile = tuple(0 if a[j] < 0 else above[j][a[j]] for j in range(n))
        cover = 0
        for p in profile:
            cover |= p
        if cover != everything:
            # some generator has no coordinate above a outside G: void complex
            continue
        ranks = _cached_homology(_degree_class_faces(G, profile, everything), field, top)
        for idx, r in enumerate(ranks):
            k = idx - 1
            if r and k <= top:
                out.append((a, k + G.bit_count() + 1, r))
                if first_only:
                    return out
    return out


def reisner_obstructions(I: MonomialIdeal, field: int = RATIONALS, first_only: bool = False) -> list:
    """Faces of the polarized complex violating Reisner's criterion.

    Entries are ``(face, k, rank)`` with the face as 1-based polar vertex
    labels and ``rank`` the dimension of reduced H_k of its link, k below the
    link's dimension. Only intersections of facets are inspected; every
    other face has a cone as its link. A non-pure complex is reported as
    ``[("not pure", None, None)]``.
    """
    _require_proper(I)
    gamma, _ = polarized_complex(I)
    return complex_reisner_obstructions(gamma, field, first_only)


def complex_reisner_obstructions(gamma: SimplicialComplex, field: int = RATIONALS, first_only: bool = False) -> list:
    if not gamma.is_pure:
        return [("not pure", None, None)]
    facets = list(gamma.masks)
    if not facets:
        return []
    out = []
    size = popcount(facets[0])
    for sigma in sorted(closed_faces(facets) | {0}, key=lambda m: (-popcount(m), m)):
        link = [F & ~sigma for F in facets if F & sigma == sigma]
        link_dim = size - popcount(sigma) - 1
        if link_dim <= 0 and len(link) == 1:
            continue
        common = link[0]
        for F in link[1:]:
            common &= F
        if common:
            continue
        faces = set()
        for F in link:
            faces.update(_subsets(F))
        ranks = homology_of_faces(faces, field, top=link_dim - 1).ranks
        for idx, r in enumerate(ranks):
            k = idx - 1
            if r and k < link_dim:
                out.append((tuple(sorted(v + 1 for v in range(gamma.n) if sigma >> v & 1)), k, r))
                if first_only:
                    return out
    return out


def cm_obstructions(I: MonomialIdeal, field: int = RATIONALS, method: str = "degree-complexes", first_only: bool = False):
    if method == "degree-complexes":
        return degree_complex_obstructions(I, field, first_only)
    if method == "reisner":
        return reisner_obstructions(I, field, first_only)
    raise ValueError(f"unknown engine {method!r}; choose from {ENGINES}")


def is_cohen_macaulay(I: MonomialIdeal, field: int = RATIONALS, method: str = "degree-complexes") -> bool:
    """Exact Cohen-Macaulay test for S/I over Q (``field=0``) or GF(p)."""
    _require_proper(I)
    if method == "degree-complexes" and _squarefree_complex(I.radical()).is_pure is False:
        return False
    return not cm_obstructions(I, field, method, first_only=True)


def is_cohen_macaulay_complex(delta: SimplicialComplex, field: int = RATIONALS) -> bool:
    """Reisner's criterion applied to a complex given directly."""
    return not complex_reisner_obstructions(delta, field, first_only=True)


__all__ = [
    "ShellingCertificate",
    "clean_shelling",
    "pretty_clean_shelling",
    "is_clean",
    "is_pretty_clean",
    "cm_obstructions",
    "degree_complex_obstructions",
    "reisner_obstructions",
    "is_cohen_macaulay",
    "is_cohen_macaulay_complex",
]
