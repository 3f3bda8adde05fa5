"""Second symbolic powers of 1-dimensional complexes.

For a pure graph-like complex delta on [n] the polarization of I_delta^(2)
lives on the 2n vertices x_{i,1}, x_{i,2}. Its complex Gamma has, for each
facet F = {r_1 < ... < r_{n-2}} of the complement of delta, the facets
(F,1)^c and (F,2_j)^c for j = 1..n-2, where (F,1) = {(r,1) : r in F} and
(F,2_j) puts r_j on layer 2 instead.
"""

from __future__ import annotations

import math

from .complexes import SimplicialComplex, diameter, dim1_shape, from_mask
from .errors import DiameterTooLarge, FullSimplex, InvalidShelling, NotDimensionOne
from .polar import PolarContext, PolarVariable
from .shelling import ShellingCertificate, check_shelling, find_shelling

LISTED_SQUARE_SHAPES = {("path", 1), ("path", 2), ("cycle", 3), ("cycle", 4), ("cycle", 5)}


def _require_dim1(delta: SimplicialComplex) -> None:
    if delta.dim != 1 or not delta.is_pure:
        raise NotDimensionOne(f"need a pure 1-dimensional complex, got {delta}")
    if delta.is_full_simplex:
        raise FullSimplex("<{1,2}> on [2] has I_delta = 0")


def _edge_blocks(edge, n: int, ctx: PolarContext) -> list[int]:
    """Masks of (F,1)^c, (F,2_1)^c, ..., (F,2_{n-2})^c for F = [n] - edge."""
    rest = [r for r in range(1, n + 1) if r not in edge]
    full = (1 << ctx.arity) - 1
    layer1 = [1 << ctx.index(PolarVariable(r, 1)) for r in rest]
    base = sum(layer1)
    out = [full & ~base]
    for j, r in enumerate(rest):
        swapped = base & ~layer1[j] | 1 << ctx.index(PolarVariable(r, 2))
        out.append(full & ~swapped)
    return out


def gamma_complex(delta: SimplicialComplex):
    """``(Gamma, ctx)``: the complex of (I_delta^(2))^p on 2n polar vertices."""
    _require_dim1(delta)
    n = delta.n
    ctx = PolarContext.uniform(n, 2)
    masks = [m for edge in delta.facets for m in _edge_blocks(edge, n, ctx)]
    return SimplicialComplex.from_masks(ctx.arity, masks), ctx


def _block_edge_order(delta: SimplicialComplex) -> list[frozenset]:
    """Edges grouped into the blocks A_1, ..., A_n with chosen entry edges.

    A_h holds the edges whose smaller vertex is h. When no earlier edge
    contains h, the block is entered through {h, m} where {1, m} is an edge;
    such an m exists because the diameter is at most 2.
    """
    n = delta.n
    edges = set(delta.facets)
    order: list[frozenset] = []
    for h in range(1, n + 1):
        block = [e for e in delta.facets if min(e) == h]
        if not block:
            continue
        if h > 1:
            if any(h in e for e in order):
                first = block[0]
            else:
                bridge = next(m for m in range(1, n + 1) if m not in (1, h) and frozenset({1, m}) in edges and frozenset({h, m}) in edges)
                first = frozenset({h, bridge})
            block = [first] + [e for e in block if e != first]
        order.extend(block)
    return order


def theorem3_order(delta: SimplicialComplex, ctx: PolarContext) -> list[int]:
    return [m for edge in _block_edge_order(delta) for m in _edge_blocks(edge, delta.n, ctx)]


def theorem3_shelling(delta: SimplicialComplex) -> ShellingCertificate:
    """Shelling of Gamma built block by block, validated by ``check_shelling``.

    ``method`` is ``"construction"`` when the constructed order passes; if it
    ever failed, a searched shelling is returned with ``method`` set to
    ``"search-fallback"``.
    """
    _require_dim1(delta)
    diam = diameter(delta)
    if diam > 2:
        raise DiameterTooLarge(f"diameter {diam}")
    gamma, ctx = gamma_complex(delta)
    order = theorem3_order(delta, ctx)
    try:
        cert = check_shelling(gamma, [from_mask(m) for m in order])
    except InvalidShelling:
        found = find_shelling(gamma)
        if found is None:
            raise
        return ShellingCertificate(found.n, found.order, found.witnesses, method="search-fallback")
    return ShellingCertificate(cert.n, cert.order, cert.witnesses, method="construction")


def listed_square_shape(delta: SimplicialComplex) -> bool:
    """Path with 1 or 2 edges, or a cycle of length 3, 4 or 5."""
    return dim1_shape(delta) in LISTED_SQUARE_SHAPES


def diameter_at_most_two(delta: SimplicialComplex) -> bool:
    d = diameter(delta)
    return d != math.inf and d <= 2
