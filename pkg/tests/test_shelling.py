import itertools

import pytest

from srpowers import (
    SimplicialComplex,
    check_shelling,
    enumerate_pure_complexes,
    find_shelling,
    parse_complex,
)
from srpowers.errors import InvalidShelling, NotAPermutation
from srpowers.shelling import is_shellable


def subfaces(F):
    return {frozenset(c) for k in range(len(F) + 1) for c in itertools.combinations(sorted(F), k)}


def shelling_step_ok(earlier, F):
    # <earlier> meet <F> must be pure of dimension dim F - 1
    common = set()
    for G in earlier:
        common |= subfaces(F & G)
    maximal = [A for A in common if not any(A < B for B in common)]
    return all(len(A) == len(F) - 1 for A in maximal)


def brute_shellable(delta):
    facets = list(delta.facets)
    for perm in itertools.permutations(facets):
        if all(shelling_step_ok(perm[:i], perm[i]) for i in range(1, len(perm))):
            return True
    return False


def mixed_complexes(n=4, sizes=(1, 2, 3), most=6):
    faces = [frozenset(c) for k in sizes for c in itertools.combinations(range(1, n + 1), k)]
    seen = set()
    for k in range(1, most + 1):
        for chosen in itertools.combinations(faces, k):
            if any(a < b for a in chosen for b in chosen):
                continue
            delta = SimplicialComplex(n, chosen)
            if delta not in seen:
                seen.add(delta)
                yield delta


@pytest.mark.parametrize("n,sizes,most,expected", [(4, (1, 2, 3), 6, 165), (5, (2, 3), 4, None)])
def test_search_agrees_with_permutation_brute_force(n, sizes, most, expected):
    checked = 0
    for delta in mixed_complexes(n, sizes, most):
        cert = find_shelling(delta)
        assert (cert is not None) == brute_shellable(delta), delta
        if cert is not None:
            assert cert.revalidate()
            check_shelling(delta, cert.order)
        checked += 1
    # every antichain of proper nonempty faces of [4]: Dedekind(4) = 168 minus 3
    if expected is not None:
        assert checked == expected


@pytest.mark.parametrize("n,d", [(4, 1), (5, 1), (4, 2)])
def test_pure_search_vs_brute(n, d):
    for delta in enumerate_pure_complexes(n, d):
        if len(delta.facets) > 7:
            continue
        assert is_shellable(delta) == brute_shellable(delta), delta


def test_known_cases():
    assert not is_shellable(parse_complex("complex n=4 {1 2} {3 4}"))
    assert is_shellable(parse_complex("complex n=5 {1 2} {2 3} {3 4} {4 5} {1 5}"))
    # non-pure: a triangle with a pendant edge is shellable, a triangle plus
    # a disjoint edge is not
    assert is_shellable(parse_complex("complex n=4 {1 2 3} {3 4}"))
    assert not is_shellable(parse_complex("complex n=5 {1 2 3} {4 5}"))
    # an isolated vertex can come last
    assert is_shellable(parse_complex("complex n=4 {1 2 3} {4}"))


def test_moebius_band_is_not_shellable():
    band = parse_complex("complex n=5 {1 2 3} {2 3 4} {3 4 5} {1 4 5} {1 2 5}")
    assert find_shelling(band) is None


def test_bipyramid_boundary_is_shellable():
    # boundary of the triangular bipyramid
    delta = parse_complex("complex n=5 {1 2 4} {1 3 4} {2 3 4} {1 2 5} {1 3 5} {2 3 5}")
    cert = find_shelling(delta)
    assert cert is not None and cert.revalidate()


def test_check_shelling_reports_first_failing_step():
    delta = parse_complex("complex n=4 {1 2} {2 3} {3 4}")
    with pytest.raises(InvalidShelling) as info:
        check_shelling(delta, [{1, 2}, {3, 4}, {2, 3}])
    assert info.value.step == 2
    cert = check_shelling(delta, [0, 1, 2])
    assert cert.witnesses == ((), (frozenset({2}),), (frozenset({3}),))


def test_check_shelling_rejects_non_permutations():
    delta = parse_complex("complex n=3 {1 2} {2 3}")
    with pytest.raises(NotAPermutation):
        check_shelling(delta, [0, 0])
    with pytest.raises(NotAPermutation):
        check_shelling(delta, [{1, 2}, {1, 3}])


def test_revalidate_catches_tampering():
    delta = parse_complex("complex n=3 {1 2} {2 3}")
    cert = check_shelling(delta, [0, 1])
    bad = type(cert)(cert.n, cert.order, ((), (frozenset({1}),)))
    assert cert.revalidate()
    assert not bad.revalidate()


def test_search_is_deterministic():
    delta = parse_complex("complex n=5 {1 2 4} {1 3 4} {2 3 4} {1 2 5} {1 3 5} {2 3 5}")
    a, b = find_shelling(delta), find_shelling(delta)
    assert a == b and a.order == b.order
