"""Linear quotients of monomial ideals.

An order u_1, ..., u_m of G(I) has linear quotients when every colon ideal
(u_1, ..., u_{i-1}) : u_i is generated by variables. This holds exactly
when for each j < i there is k < i with u_k : u_i = x_t and x_t dividing
u_j : u_i; those (k, t) pairs are the certificate.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import InvalidLinearQuotients, NotAPermutation
from .ideals import MonomialIdeal, colon, render_monomial


@dataclass(frozen=True)
class LinearQuotientCertificate:
    """``witnesses[i][j] = (k, t)`` (0-based indices into ``order``, variable
    index ``t`` counted from 1) for every ``j < i``."""

    arity: int
    order: tuple
    witnesses: tuple

    def revalidate(self) -> bool:
        order = self.order
        if len(set(order)) != len(order) or len(self.witnesses) != len(order):
            return False
        for i, u in enumerate(order):
            row = self.witnesses[i]
            if len(row) != i:
                return False
            for j, (k, t) in enumerate(row):
                if not 0 <= k < i:
                    return False
                q = colon(order[k], u)
                if sum(q) != 1 or q[t - 1] != 1:
                    return False
                if colon(order[j], u)[t - 1] < 1:
                    return False
        return True

    def colon_generators(self, i: int) -> tuple:
        """Variables generating (u_1, ..., u_i) : u_{i+1} (0-based ``i``)."""
        return tuple(sorted({t for _, t in self.witnesses[i]}))

    def describe(self, names=None) -> str:
        return ", ".join(render_monomial(u, names) for u in self.order)


def _variable_colons(earlier, u):
    """Map t -> k for earlier generators u_k with u_k : u equal to x_t."""
    found = {}
    for k, w in enumerate(earlier):
        q = colon(w, u)
        if sum(q) == 1:
            t = next(i for i, a in enumerate(q) if a) + 1
            found.setdefault(t, k)
    return found


def _step_witnesses(earlier, u):
    """Witness row for appending ``u`` after ``earlier``, or the blocking index."""
    variables = _variable_colons(earlier, u)
    row = []
    for j, w in enumerate(earlier):
        q = colon(w, u)
        hit = next((t for t in sorted(variables) if q[t - 1] >= 1), None)
        if hit is None:
            return None, j
        row.append((variables[hit], hit))
    return tuple(row), None


def _normalize(I: MonomialIdeal, order):
    order = list(order)
    if all(isinstance(u, int) for u in order):
        if sorted(order) != list(range(len(I.generators))):
            raise NotAPermutation(str(order))
        return [I.generators[k] for k in order]
    order = [tuple(u) for u in order]
    if sorted(order) != sorted(I.generators):
        raise NotAPermutation("order must list each minimal generator once")
    return order


def check_linear_quotients(I: MonomialIdeal, order) -> LinearQuotientCertificate:
    """Validate an order of G(I) given as monomials or 0-based indices.

    Raises ``InvalidLinearQuotients`` with the first failing 1-based step.
    """
    seq = _normalize(I, order)
    witnesses = [()]
    for i in range(1, len(seq)):
        row, blocking = _step_witnesses(seq[:i], seq[i])
        if row is None:
            raise InvalidLinearQuotients(i + 1, blocking)
        witnesses.append(row)
    return LinearQuotientCertificate(I.arity, tuple(seq), tuple(witnesses))


def find_linear_quotients_order(I: MonomialIdeal):
    """Backtracking search for an order with linear quotients.

    Whether a generator may come next depends only on the set already used,
    so failed sets are memoized. Ties are broken by generator index.
    """
    gens = I.generators
    t = len(gens)
    if t == 0:
        return LinearQuotientCertificate(I.arity, (), ())
    full = (1 << t) - 1
    dead: set[int] = set()

    def extend(used, placed):
        if used == full:
            return placed
        if used in dead:
            return None
        earlier = [gens[k] for k in placed]
        for k in range(t):
            if used >> k & 1:
                continue
            if placed and _step_witnesses(earlier, gens[k])[0] is None:
                continue
            found = extend(used | 1 << k, placed + [k])
            if found is not None:
                return found
        dead.add(used)
        return None

    if sys.getrecursionlimit() < t + 100:
        sys.setrecursionlimit(t + 100)
    found = extend(0, [])
    if found is None:
        return None
    return check_linear_quotients(I, [gens[k] for k in found])
