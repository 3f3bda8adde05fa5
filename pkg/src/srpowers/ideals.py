"""Monomial ideals with an explicit ambient arity.

Monomials are tuples of exponents. An ideal is kept as its minimal
generating set G(I), sorted by total degree and then lexicographically
with x1 > x2 > ... > xn, so two ideals are equal exactly when their
generator tuples are.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import (
    SimplicialComplex,
    complement_complex,
    from_mask,
    is_matroid,
    minimal_nonfaces,
    minimal_transversals,
    popcount,
    to_mask,
)
from .errors import ArityMismatch, ContainsVariable, FullSimplex, NotSquarefree, ZeroOrUnit

Monomial = tuple


def monomial_key(u: Monomial):
    return (sum(u), tuple(-a for a in u))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def multiply(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def colon(u: Monomial, v: Monomial) -> Monomial:
    """u : v = u / gcd(u, v)."""
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def support(u: Monomial) -> frozenset:
    return frozenset(i + 1 for i, a in enumerate(u) if a)


def support_mask(u: Monomial) -> int:
    mask = 0
    for i, a in enumerate(u):
        if a:
            mask |= 1 << i
    return mask


def squarefree_monomial(face: Iterable[int], n: int) -> Monomial:
    exps = [0] * n
    for v in face:
        exps[v - 1] = 1
    return tuple(exps)


def variable(i: int, n: int) -> Monomial:
    return squarefree_monomial((i,), n)


def render_monomial(u: Monomial, names: Sequence[str] | None = None) -> str:
    if not any(u):
        return "1"
    parts = []
    for i, a in enumerate(u):
        if a:
            name = names[i] if names else f"x{i + 1}"
            parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts)


def minimalize(gens: Iterable[Monomial], arity: int | None = None) -> "MonomialIdeal":
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    gens = [tuple(g) for g in gens]
    arities = {len(g) for g in gens}
    if arity is not None:
        arities.add(arity)
    if len(arities) > 1:
        raise ArityMismatch(f"mixed arities {sorted(arities)}")
    if not arities:
        raise ArityMismatch("arity of an empty generator list must be given")
    (n,) = arities
    # Exponents are packed into fields of width w whose top bit is a guard:
    # h | g iff subtracting h from g-with-guards leaves every guard set.
    w = max((a for g in gens for a in g), default=0).bit_length() + 1
    guard = sum(1 << (w * i + w - 1) for i in range(n))
    kept: list[Monomial] = []
    packed: list[int] = []
    for g in sorted(set(gens), key=monomial_key):
        pg = guard
        for i, a in enumerate(g):
            pg |= a << (w * i)
        if not any((pg - h) & guard == guard for h in packed):
            kept.append(g)
            packed.append(pg & ~guard)
    return MonomialIdeal(n, tuple(kept), _trusted=True)


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    arity: int
    generators: tuple

    def __init__(self, arity: int, generators: Iterable[Monomial] = (), _trusted: bool = False):
        gens = tuple(tuple(g) for g in generators)
        if not _trusted:
            gens = minimalize(gens, arity).generators
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def prime(cls, face: Iterable[int], n: int) -> "MonomialIdeal":
        """P_F = (x_i : i in F)."""
        return cls(n, (variable(i, n) for i in sorted(face)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.arity,)

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.generators for a in g)

    @property
    def degrees(self) -> set:
        return {sum(g) for g in self.generators}

    @property
    def exponent_bounds(self) -> tuple:
        """Largest exponent of each variable over G(I)."""
        return tuple(max((g[i] for g in self.generators), default=0) for i in range(self.arity))

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.generators)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        _same_arity(self, other)
        return all(other.contains(g) for g in self.generators)

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.arity, (tuple(min(a, 1) for a in g) for g in self.generators))

    def render(self, names=None) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(render_monomial(g, names) for g in self.generators) + ")"

    def to_dsl(self) -> str:
        body = ", ".join(render_monomial(g) for g in self.generators) if self.generators else "0"
        return f"ideal n={self.arity}: {body}"

    def __str__(self) -> str:
        return self.render()


def _same_arity(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.arity != J.arity:
        raise ArityMismatch(f"arity {I.arity} vs {J.arity}")


def ideals_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_arity(I, J)
    return I.generators == J.generators


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I meet J, generated by the pairwise lcms of the generators."""
    _same_arity(I, J)
    return minimalize((lcm(u, v) for u in I.generators for v in J.generators), I.arity)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_arity(I, J)
    return minimalize(I.generators + J.generators, I.arity)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_arity(I, J)
    return minimalize((multiply(u, v) for u in I.generators for v in J.generators), I.arity)


def power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise ValueError("power needs m >= 1")
    result = I
    for _ in range(m - 1):
        result = product(result, I)
    return result


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Generated by x_F over the minimal non-faces F; zero for the full simplex."""
    if delta.is_full_simplex:
        return MonomialIdeal.zero(delta.n)
    return MonomialIdeal(delta.n, (squarefree_monomial(from_mask(m), delta.n) for m in minimal_nonfaces(delta)))


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(delta.n, (squarefree_monomial(f, delta.n) for f in delta.facets))


def _squarefree_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the sets containing no generator support.

    Degree-one generators are allowed here and simply leave that vertex out.
    """
    n = I.arity
    full = (1 << n) - 1
    covers = minimal_transversals(support_mask(g) for g in I.generators)
    return SimplicialComplex.from_masks(n, (full & ~c for c in covers))


def complex_from_squarefree_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """The complex delta on [arity] with I_delta = I."""
    if not I.is_squarefree:
        raise NotSquarefree(str(I))
    if I.is_unit or any(sum(g) <= 1 for g in I.generators):
        raise ContainsVariable(str(I))
    if I.is_zero:
        return SimplicialComplex.simplex(I.arity)
    return _squarefree_complex(I)


def squarefree_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual: for I = I_delta, the facet ideal of the complement of delta.

    Equivalently, the ideal generated by x_P over the minimal primes P of I.
    """
    if not I.is_squarefree:
        raise NotSquarefree(str(I))
    if I.is_zero or I.is_unit:
        raise ZeroOrUnit(str(I))
    covers = minimal_transversals(support_mask(g) for g in I.generators)
    return MonomialIdeal(I.arity, (squarefree_monomial(from_mask(c), I.arity) for c in covers))


def is_matroidal(I: MonomialIdeal) -> bool:
    """I is the facet ideal of a matroid (on the support of I)."""
    if not I.is_squarefree or I.is_zero:
        return False
    faces = [support(g) for g in I.generators]
    if any(not f for f in faces):
        return False
    return is_matroid(SimplicialComplex(I.arity, faces))


def minimal_primes(I: MonomialIdeal) -> list[frozenset]:
    """Supports of the minimal primes of a monomial ideal (those of its radical)."""
    if I.is_zero:
        return [frozenset()]
    return [from_mask(c) for c in minimal_transversals(support_mask(g) for g in I.generators)]


def prime_power(face: Iterable[int], n: int, m: int) -> MonomialIdeal:
    """P_F^m, generated by all degree-m monomials in the variables of F."""
    face = sorted(face)
    gens = []
    for combo in itertools.combinations_with_replacement(face, m):
        exps = [0] * n
        for i in combo:
            exps[i - 1] += 1
        gens.append(tuple(exps))
    return MonomialIdeal(n, gens)


def symbolic_power(delta: SimplicialComplex, m: int) -> MonomialIdeal:
    """I_delta^(m) as the intersection of P_F^m over the facets F of the complement."""
    if delta.is_full_simplex:
        raise FullSimplex("I_delta is zero")
    if m < 1:
        raise ValueError("symbolic power needs m >= 1")
    result = None
    for F in complement_complex(delta).facets:
        component = prime_power(F, delta.n, m)
        result = component if result is None else intersect(result, component)
    return result


def is_unmixed(I: MonomialIdeal) -> bool:
    """All minimal primes of the radical have the same height."""
    return len({len(p) for p in minimal_primes(I.radical())}) <= 1
