"""Reduced simplicial homology from exact boundary-matrix ranks.

Over the rationals (``field=0``) ranks come from fraction-free elimination
on integer rows, each row kept primitive by dividing out its content. Over
a prime field ``p`` elimination is done modulo p, with rows packed into
Python ints when p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex, popcount

RATIONALS = 0


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank_rational(rows: list[dict]) -> int:
    """Rank over Q of a sparse integer matrix given as {column: entry} rows."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(row)
                break
            a, b = piv[col], row[col]
            # row <- a*row - b*piv stays integral and clears `col`
            merged = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                w = merged.get(c, 0) - b * v
                if w:
                    merged[c] = w
                else:
                    merged.pop(c, None)
            row = _primitive(merged) if merged else merged
    return len(pivots)


def rank_mod_p(rows: list[dict], p: int) -> int:
    if p == 2:
        return _rank_gf2([sum(1 << c for c, v in row.items() if v % 2) for row in rows])
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[col]
            for c, v in piv.items():
                w = (row.get(c, 0) - f * v) % p
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
    return len(pivots)


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = r
                break
            r ^= piv
    return len(pivots)


def matrix_rank(rows: list[dict], field: int = RATIONALS) -> int:
    return rank_rational(rows) if field == RATIONALS else rank_mod_p(rows, field)


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology, ``ranks[k]`` for dimension ``k - 1``.

    So ``ranks[0]`` is the rank in dimension -1 and the tuple runs up to the
    dimension of the complex.
    """

    field: int
    ranks: tuple

    def rank(self, k: int) -> int:
        i = k + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    @property
    def is_acyclic(self) -> bool:
        return not any(self.ranks)

    def as_dict(self) -> dict:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}


def faces_by_dimension(face_masks) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for m in face_masks:
        out.setdefault(popcount(m) - 1, []).append(m)
    for k in out:
        out[k].sort()
    return out


def _boundary_rows(faces: list[int], lower: list[int]) -> list[dict]:
    index = {m: i for i, m in enumerate(lower)}
    rows = []
    for f in faces:
        row = {}
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[index[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rows


def homology_of_faces(face_masks, field: int = RATIONALS, top: int | None = None) -> HomologyProfile:
    """Reduced homology of the complex whose face set is ``face_masks``.

    ``top`` limits the computation to dimensions <= top.
    """
    by_dim = faces_by_dimension(face_masks)
    if not by_dim:
        return HomologyProfile(field, ())
    dim = max(by_dim)
    if top is not None:
        dim = min(dim, top)
    ranks = {}

    def boundary_rank(k):
        # rank of the boundary map C_k -> C_{k-1}
        if k not in ranks:
            if k not in by_dim or k - 1 not in by_dim:
                ranks[k] = 0
            else:
                ranks[k] = matrix_rank(_boundary_rows(by_dim[k], by_dim[k - 1]), field)
        return ranks[k]

    out = []
    for k in range(-1, dim + 1):
        size = len(by_dim.get(k, ()))
        out.append(size - boundary_rank(k) - boundary_rank(k + 1))
    return HomologyProfile(field, tuple(out))


def reduced_homology(delta: SimplicialComplex, field: int = RATIONALS) -> HomologyProfile:
    """Reduced homology of ``delta`` over Q (``field=0``) or GF(p).

    The void complex has no homology at all; ``<{}>`` has rank 1 in
    dimension -1.
    """
    return homology_of_faces(delta.face_masks(), field)
