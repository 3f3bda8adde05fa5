"""Polarization and the linear-quotients construction for symbolic powers.

The polarized ring has variables x_{i,j} for 1 <= j <= a_i. They are
numbered lexicographically in (i, j), so a polarized ideal is an ordinary
``MonomialIdeal`` of arity sum(a_i) interpreted through a ``PolarContext``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .complexes import SimplicialComplex, complement_complex, face_key
from .errors import EmptyFace, FullSimplex, NotEquigenerated
from .ideals import (
    MonomialIdeal,
    _squarefree_complex,
    ideal_sum,
    intersect,
    minimal_primes,
    power,
    prime_power,
    squarefree_dual,
    symbolic_power,
)


class PolarVariable(NamedTuple):
    source: int
    layer: int

    def __str__(self) -> str:
        return f"x{self.source}_{self.layer}"


@dataclass(frozen=True)
class PolarContext:
    """Source arity plus per-variable layer bounds (a_1, ..., a_n)."""

    source_arity: int
    bounds: tuple

    def __post_init__(self):
        if len(self.bounds) != self.source_arity:
            raise ValueError("one layer bound per source variable")

    @classmethod
    def uniform(cls, n: int, layers: int) -> "PolarContext":
        return cls(n, (layers,) * n)

    @cached_property
    def variables(self) -> tuple:
        return tuple(PolarVariable(i, j) for i in range(1, self.source_arity + 1) for j in range(1, self.bounds[i - 1] + 1))

    @cached_property
    def _index(self) -> dict:
        return {v: k for k, v in enumerate(self.variables)}

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, v) -> int:
        """0-based position of ``v`` in the polarized ring."""
        v = PolarVariable(*v)
        if v not in self._index:
            raise ValueError(f"{v} is not admissible for bounds {self.bounds}")
        return self._index[v]

    def vertex(self, v) -> int:
        """1-based vertex label of ``v`` when the ring is read as [arity]."""
        return self.index(v) + 1

    def variable(self, vertex: int) -> PolarVariable:
        return self.variables[vertex - 1]

    @cached_property
    def names(self) -> tuple:
        return tuple(str(v) for v in self.variables)

    def monomial(self, variables) -> tuple:
        exps = [0] * self.arity
        for v in variables:
            exps[self.index(v)] = 1
        return tuple(exps)

    def variables_of(self, u) -> tuple:
        return tuple(self.variables[k] for k, a in enumerate(u) if a)

    def project(self, face) -> frozenset:
        """Source indices of a set of polar vertices (1-based labels)."""
        return frozenset(self.variable(v).source for v in face)

    def theorem2_rank(self, v) -> tuple:
        """Sort key for the variable order x_{i,a} > x_{j,b} iff a < b, or a = b
        and i < j; a smaller key means a larger variable."""
        v = PolarVariable(*v)
        return (v.layer, v.source)


def polarize_monomial(u, ctx: PolarContext) -> tuple:
    return ctx.monomial(PolarVariable(i + 1, j) for i, a in enumerate(u) for j in range(1, a + 1))


def polarize_ideal(I: MonomialIdeal, bounds=None):
    """Return ``(I^p, ctx)``; ``bounds`` may enlarge the polarized ring."""
    natural = I.exponent_bounds
    if bounds is None:
        bounds = natural
    elif any(b < a for a, b in zip(natural, bounds)):
        raise ValueError(f"bounds {bounds} below exponents {natural}")
    ctx = PolarContext(I.arity, tuple(bounds))
    return MonomialIdeal(ctx.arity, (polarize_monomial(u, ctx) for u in I.generators)), ctx


def depolarize(J: MonomialIdeal, ctx: PolarContext) -> MonomialIdeal:
    """Substitute x_{i,j} -> x_i."""
    gens = []
    for u in J.generators:
        exps = [0] * ctx.source_arity
        for v in ctx.variables_of(u):
            exps[v.source - 1] += 1
        gens.append(tuple(exps))
    return MonomialIdeal(ctx.source_arity, gens)


def faridi_power_decomposition(face, m: int) -> list[tuple]:
    """Irreducible components of (P_F^m)^p.

    For F = {s_1 < ... < s_r} these are (x_{s_1,t_1}, ..., x_{s_r,t_r}) with
    1 <= t_j <= m and t_1 + ... + t_r <= m + r - 1; each is returned as a
    tuple of PolarVariables.
    """
    face = sorted(face)
    if not face:
        raise EmptyFace("P_F needs a nonempty F")
    r = len(face)
    comps = []
    for ts in itertools.product(range(1, m + 1), repeat=r):
        if sum(ts) <= m + r - 1:
            comps.append(tuple(PolarVariable(s, t) for s, t in zip(face, ts)))
    return comps


def intersect_primes(components, ctx: PolarContext) -> MonomialIdeal:
    """Intersection of prime ideals given as variable lists."""
    result = None
    for comp in components:
        P = MonomialIdeal(ctx.arity, (ctx.monomial((v,)) for v in comp))
        result = P if result is None else intersect(result, P)
    return result


def theorem2_dual_generators(delta: SimplicialComplex, m: int):
    """J = ((I_delta^(m))^p)^dual straight from its generator description.

    Generators are x_{i_1,a_1} ... x_{i_r,a_r} for {i_1, ..., i_r} a facet of
    the complement of delta, 1 <= a_j <= m and sum a_j <= m + r - 1.
    Returns ``(J, ctx)`` in the ring polarizing I_delta^(m).
    """
    if delta.is_full_simplex:
        raise FullSimplex("I_delta is zero")
    if not delta.is_pure:
        raise ValueError("delta must be pure")
    comp_facets = complement_complex(delta).facets
    used = frozenset().union(*comp_facets)
    ctx = PolarContext(delta.n, tuple(m if i in used else 0 for i in range(1, delta.n + 1)))
    gens = [ctx.monomial(c) for F in comp_facets for c in faridi_power_decomposition(F, m)]
    return MonomialIdeal(ctx.arity, gens), ctx


def dual_of_polarized_symbolic_power(delta: SimplicialComplex, m: int):
    """The same J computed the long way: symbolic power, polarize, dualize."""
    Ip, ctx = polarize_ideal(symbolic_power(delta, m))
    return squarefree_dual(Ip), ctx


def theorem2_order(J: MonomialIdeal, ctx: PolarContext) -> list[tuple]:
    """G(J) from largest to smallest in the reverse lexicographic order
    induced by ``PolarContext.theorem2_rank``.

    Writing each generator's variables in decreasing order, u > v when at
    the last position where they differ u has the larger variable.
    """
    if len(J.degrees) > 1:
        raise NotEquigenerated(f"degrees {sorted(J.degrees)}")

    def key(u):
        ranks = sorted(ctx.theorem2_rank(v) for v in ctx.variables_of(u))
        return tuple(reversed(ranks))

    return sorted(J.generators, key=key)


def projected_primes(I: MonomialIdeal) -> list[frozenset]:
    """Images under x_{i,j} -> x_i of the minimal primes of I^p.

    These are the supports of the associated primes of S/I, recovered from an
    irredundant irreducible decomposition read off the polarization.
    """
    Ip, ctx = polarize_ideal(I)
    images = {ctx.project(p) for p in minimal_primes(Ip)}
    return sorted(images, key=lambda f: (len(f), face_key(f)))


def has_embedded_primes(I: MonomialIdeal) -> bool:
    primes = projected_primes(I)
    return any(p < q for p in primes for q in primes)


def polarized_complex(I: MonomialIdeal):
    """``(Gamma, ctx)`` with Gamma the complex of I^p on [ctx.arity].

    Degree-one generators just leave out a vertex.
    """
    Ip, ctx = polarize_ideal(I)
    return _squarefree_complex(Ip), ctx


def dual_sum_identity(delta: SimplicialComplex, m: int) -> bool:
    """Check ((I^(m))^p)^dual against the sum of the duals of the (P_F^m)^p."""
    J, ctx = dual_of_polarized_symbolic_power(delta, m)
    total = None
    for F in complement_complex(delta).facets:
        Pp, _ = polarize_ideal(prime_power(F, delta.n, m), ctx.bounds)
        piece = squarefree_dual(Pp)
        total = piece if total is None else ideal_sum(total, piece)
    return total.generators == J.generators


def polarized_power(face, n: int, m: int, ctx: PolarContext) -> MonomialIdeal:
    """(P_F^m)^p inside the ring of ``ctx``."""
    return polarize_ideal(power(MonomialIdeal.prime(face, n), m), ctx.bounds)[0]

