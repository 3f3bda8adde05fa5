"""Acceptance criteria 1-9, each recorded as one PASS/FAIL line.

The lines are printed in the terminal summary under "acceptance criteria".
The graph sweep on n <= 6 runs once and feeds criteria 5, 6, 8 and 9.
"""

import itertools
import random

import pytest

from srpowers import (
    MonomialIdeal,
    PolarContext,
    SimplicialComplex,
    check_linear_quotients,
    clean_shelling,
    enumerate_pure_complexes,
    faridi_power_decomposition,
    intersect,
    is_clean,
    is_complete_intersection,
    is_matroid,
    is_matroidal,
    parse_complex,
    parse_ideal,
    power,
    reduced_homology,
    reproduce_example,
    run_audit_sweep,
    squarefree_dual,
    symbolic_power,
    theorem2_dual_generators,
    theorem2_order,
    theorem3_shelling,
)
from srpowers.certificates import roundtrip_revalidates
from srpowers.dim1 import diameter_at_most_two
from srpowers.ideals import complex_from_squarefree_ideal, divides
from srpowers.polar import dual_of_polarized_symbolic_power, intersect_primes, polarized_power


def matroid_family():
    for n in range(2, 6):
        for d in range(0, min(3, n)):
            for delta in enumerate_pure_complexes(n, d):
                if not delta.is_full_simplex and is_matroid(delta):
                    yield delta


@pytest.fixture(scope="module")
def power_sweeps():
    return {(which, d): run_audit_sweep(5, d, 3, which) for which in ("cor2.4", "cor2.6") for d in (1, 2)}


@pytest.fixture(scope="module")
def graph_sweep():
    return run_audit_sweep(6, 1, 3, "thm3.1")


@pytest.fixture(scope="module")
def linear_quotient_certificates():
    certs = []
    for delta in matroid_family():
        for m in (1, 2, 3):
            J, ctx = theorem2_dual_generators(delta, m)
            certs.append(check_linear_quotients(J, theorem2_order(J, ctx)))
    return certs


# 1 -------------------------------------------------------------------------


def test_criterion_1_worked_example(verdict):
    I = parse_ideal("ideal n=4: x1*x2, x2*x3, x3*x4")
    delta = complex_from_squarefree_ideal(I)
    dual = squarefree_dual(I)
    checks = {
        "dual": dual == parse_ideal("ideal n=4: x1*x3, x2*x3, x2*x4"),
        "dual not matroidal": not is_matroidal(dual),
        "S/I clean": is_clean(I),
        "I^(m) = I^m": all(symbolic_power(delta, m) == power(I, m) for m in (1, 2, 3)),
        "S/I^3 not clean": not is_clean(power(I, 3)),
        "S/I^(3) not clean": not is_clean(symbolic_power(delta, 3)),
    }
    report = reproduce_example("2.5")
    ok = all(checks.values()) and report.consistent
    verdict(1, ok, ", ".join(k for k, v in checks.items() if not v) or "six facts reproduced")
    assert ok, checks


# 2 -------------------------------------------------------------------------


def test_criterion_2_constructive_suite(verdict, linear_quotient_certificates):
    family = list(matroid_family())
    cases = failures = 0
    for delta in family:
        for m in (1, 2, 3):
            cases += 1
            if not is_clean(symbolic_power(delta, m)):
                failures += 1
    valid = all(c.revalidate() for c in linear_quotient_certificates)
    ok = valid and failures == 0 and len(linear_quotient_certificates) == cases
    verdict(2, ok, f"{len(family)} matroids, {cases} cases, {failures} not clean")
    assert ok


# 3, 4 ----------------------------------------------------------------------


def _equivalence_rows(sweep, base, tag):
    bad = []
    for r in sweep.reports:
        P = r.predicates
        if not P[base] == P[f"clean_{tag}3"] == P[f"cm_{tag}3_Q"]:
            bad.append(r.instance)
    return bad


def test_criterion_3_symbolic_sweep(verdict, power_sweeps):
    sweeps = [power_sweeps[("cor2.4", d)] for d in (1, 2)]
    bad = [x for s in sweeps for x in _equivalence_rows(s, "matroid", "symbolic_m")]
    violations = sum(len(s.violations) for s in sweeps)
    total = sum(len(s.reports) for s in sweeps)
    ok = not bad and not violations
    verdict(3, ok, f"{total} complexes, {violations + len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_4_ordinary_sweep(verdict, power_sweeps):
    sweeps = [power_sweeps[("cor2.6", d)] for d in (1, 2)]
    bad = [x for s in sweeps for x in _equivalence_rows(s, "complete_intersection", "power_m")]
    for s in sweeps:
        for r in s.reports:
            delta = parse_complex(r.instance)
            if r.predicates["complete_intersection"] != is_complete_intersection(delta):
                bad.append(r.instance)
    violations = sum(len(s.violations) for s in sweeps)
    total = sum(len(s.reports) for s in sweeps)
    ok = not bad and not violations
    verdict(4, ok, f"{total} complexes, {violations + len(bad)} violations")
    assert ok, bad[:5]


# 5, 6 ----------------------------------------------------------------------


def test_criterion_5_equivalences(verdict, graph_sweep):
    bad = []
    for r in graph_sweep.reports:
        P = r.predicates
        small = P["diameter"] != "infinite" and P["diameter"] <= 2
        if not P["clean_symbolic_m2"] == P["cm_symbolic_m2_Q"] == small:
            bad.append(r.instance)
    ok = not bad and not graph_sweep.violations
    verdict(5, ok, f"equivalences on {len(graph_sweep.reports)} graphs, {len(bad)} violations")
    assert ok, bad[:5]


@pytest.mark.xfail(strict=True, reason="block construction fails check_shelling on most graphs with diameter <= 2; see the decisions ledger")
def test_criterion_5_construction_without_fallback(verdict, graph_sweep):
    methods = [r.predicates["theorem3_method"] for r in graph_sweep.reports if "theorem3_method" in r.predicates]
    built = methods.count("construction")
    ok = built == len(methods)
    verdict(5, ok, f"block construction passes on {built} of {len(methods)} diameter <= 2 graphs without search")
    assert ok


def test_criterion_6_ordinary_square(verdict, graph_sweep):
    bad = []
    for r in graph_sweep.reports:
        P = r.predicates
        listed = P["shape"] in ("path-1", "path-2", "cycle-3", "cycle-4", "cycle-5")
        if P["clean_power_m2"] != listed or not r.verdicts["cor3.2"]:
            bad.append(r.instance)
    ok = not bad
    verdict(6, ok, f"{len(graph_sweep.reports)} graphs, {len(bad)} violations")
    assert ok, bad[:5]


# 7 -------------------------------------------------------------------------


def test_criterion_7_oracles(verdict):
    problems = []
    n = 4
    for m in (1, 2, 3):
        ctx = PolarContext.uniform(n, m)
        for size in (1, 2, 3):
            for face in itertools.combinations(range(1, n + 1), size):
                if intersect_primes(faridi_power_decomposition(face, m), ctx) != polarized_power(face, n, m, ctx):
                    problems.append(("decomposition", face, m))
    for delta in matroid_family():
        for m in (1, 2, 3):
            if theorem2_dual_generators(delta, m) != dual_of_polarized_symbolic_power(delta, m):
                problems.append(("dual generators", delta.render(), m))
    rng = random.Random(1729)
    for _ in range(200):
        k = rng.randint(1, 4)
        gens = lambda: [tuple(rng.randint(0, 3) for _ in range(k)) for _ in range(rng.randint(1, 4))]
        I, J = MonomialIdeal(k, gens()), MonomialIdeal(k, gens())
        K = intersect(I, J)
        # generators and their lcms have exponents <= 3, so membership on the
        # box [0, 3]^k decides equality of the ideals
        for u in itertools.product(range(4), repeat=k):
            member = lambda A: any(divides(g, u) for g in A.generators)
            if member(K) != (member(I) and member(J)):
                problems.append(("intersect", I.to_dsl(), J.to_dsl(), u))
                break
    ok = not problems
    verdict(7, ok, f"{len(problems)} mismatches")
    assert ok, problems[:5]


# 8 -------------------------------------------------------------------------


def test_criterion_8_homology(verdict, power_sweeps, graph_sweep):
    c3 = parse_complex("complex n=3 {1 2} {2 3} {1 3}")
    h = reduced_homology(c3)
    checks = {
        "C3": h.rank(1) == 1 and h.rank(0) == 0,
        "simplices": all(reduced_homology(SimplicialComplex.simplex(n), p).is_acyclic for n in range(1, 7) for p in (0, 2)),
        "two points": reduced_homology(parse_complex("complex n=2 {1} {2}")).rank(0) == 1,
    }
    sweeps = list(power_sweeps.values()) + [graph_sweep]
    disagree = [r.instance for s in sweeps for r in s.reports if not r.verdicts["fields-agree"]]
    checks["Q = F2 on sweeps"] = not disagree
    instances = sum(len(s.reports) for s in sweeps)
    ok = all(checks.values())
    verdict(8, ok, f"fields agree on {instances - len(disagree)} of {instances} swept instances")
    assert ok, checks


# 9 -------------------------------------------------------------------------


def test_criterion_9_determinism(verdict, power_sweeps, graph_sweep, linear_quotient_certificates):
    same = all(run_audit_sweep(5, d, 3, which).jsonl() == power_sweeps[(which, d)].jsonl() for (which, d) in power_sweeps)
    prefix = run_audit_sweep(5, 1, 3, "thm3.1")
    same = same and graph_sweep.jsonl().startswith(prefix.jsonl())
    same = same and prefix.summary_csv() == run_audit_sweep(5, 1, 3, "thm3.1").summary_csv()
    certs = list(linear_quotient_certificates)
    certs.append(clean_shelling(parse_ideal("ideal n=4: x1*x2, x2*x3, x3*x4")))
    for n in range(3, 7):
        for delta in enumerate_pure_complexes(n, 1, up_to_isomorphism=True):
            if diameter_at_most_two(delta):
                certs.append(theorem3_shelling(delta))
    revalidated = sum(roundtrip_revalidates(c) for c in certs)
    ok = same and revalidated == len(certs)
    verdict(9, ok, f"sweeps byte-identical: {same}; {revalidated} of {len(certs)} certificates revalidate from text")
    assert ok
