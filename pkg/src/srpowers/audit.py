"""Audits of the matroid, complete-intersection and graph characterizations.

Each audit evaluates the relevant predicates on one complex and checks the
equivalences between them. ``run_audit_sweep`` applies an audit to every
complex produced by ``enumerate_pure_complexes`` and writes JSON lines plus a
CSV summary in a fixed order, so repeated runs are byte-identical.
"""

from __future__ import annotations

import copy
import csv
import io
import json
import math
import os
from dataclasses import dataclass, field

from .complexes import (
    SimplicialComplex,
    canonical_form,
    dim1_shape,
    diameter,
    is_complete_intersection,
    is_matroid,
)
from .dim1 import listed_square_shape, theorem3_shelling
from .dsl import parse_ideal
from .enumeration import enumerate_pure_complexes
from .errors import BudgetExceeded, FullSimplex, NotDimensionOne, UnknownExample
from .homology import RATIONALS
from .ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    ideals_equal,
    is_matroidal,
    power,
    squarefree_dual,
    stanley_reisner_ideal,
    symbolic_power,
)
from .properties import is_clean, is_cohen_macaulay

FIELDS = (RATIONALS, 2)
FIELD_NAMES = {RATIONALS: "Q", 2: "F2"}
BUDGET_ENV = "SRPOWERS_SWEEP_BUDGET"
DEFAULT_BUDGETS = {"matroid": 5, "dim1": 6}
THEOREMS = ("cor2.4", "cor2.6", "thm3.1", "cor3.2", "cor3.3")


@dataclass
class AuditReport:
    """Predicate values and verdicts for one instance of one audit.

    ``verdicts`` maps a statement name to ``True`` (consistent) or
    ``False`` (violated). Every violation in ``violations`` carries the full
    predicate row that contradicts it.
    """

    theorem: str
    instance: str
    predicates: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations

    def record(self, name: str, holds: bool, detail: str = "") -> None:
        self.verdicts[name] = bool(holds)
        if not holds:
            self.violations.append({"statement": name, "detail": detail, "predicates": dict(self.predicates)})

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "predicates": self.predicates,
            "verdicts": self.verdicts,
            "consistent": self.consistent,
            "violations": self.violations,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def _all_equal(values) -> bool:
    return len(set(values)) <= 1


def _require_audit_input(delta: SimplicialComplex, m_max: int) -> None:
    if delta.is_full_simplex:
        raise FullSimplex("I_delta = 0 for the full simplex")
    if not delta.is_pure:
        raise ValueError("audits need a pure complex")
    if m_max < 3:
        raise ValueError("m = 3 is the decisive level, so m_max must be at least 3")


def _notes(delta: SimplicialComplex) -> list:
    if delta.facets == (frozenset(),):
        return ["<{}> is treated as pure of dimension -1"]
    return []


def _power_family(P: dict, ideals: dict, tag: str) -> None:
    for m, I in ideals.items():
        P[f"clean_{tag}{m}"] = is_clean(I)
        for p in FIELDS:
            P[f"cm_{tag}{m}_{FIELD_NAMES[p]}"] = is_cohen_macaulay(I, p)


def _shared(memo, kind: str, delta: SimplicialComplex, compute) -> dict:
    """Relabeling-invariant predicates, computed once per isomorphism class
    when a ``memo`` dict is supplied."""
    if memo is None:
        return compute()
    key = (kind, canonical_form(delta))
    if key not in memo:
        memo[key] = compute()
    return copy.deepcopy(memo[key])


def _equivalence_audit(report: AuditReport, base: str, tag: str, m_max: int) -> None:
    P = report.predicates
    a = P[base]
    b = all(P[f"clean_{tag}{m}"] for m in range(1, m_max + 1))
    c = P[f"clean_{tag}3"]
    d = P[f"cm_{tag}3_Q"]
    e = all(P[f"cm_{tag}{m}_Q"] for m in range(1, m_max + 1))
    report.record("equivalence", _all_equal((a, b, c, d, e)), f"a={a} b={b} c={c} d={d} e={e}")
    report.record(
        "fields-agree",
        all(P[f"cm_{tag}{m}_Q"] == P[f"cm_{tag}{m}_F2"] for m in range(1, m_max + 1)),
        "Cohen-Macaulay verdicts differ between Q and F2",
    )
    report.record(
        "clean-implies-cm",
        all(P[f"cm_{tag}{m}_Q"] for m in range(1, m_max + 1) if P[f"clean_{tag}{m}"]),
        "clean but not Cohen-Macaulay for an unmixed ideal",
    )


def _matroid_predicates(delta: SimplicialComplex, m_max: int) -> dict:
    P = {"matroid": is_matroid(delta)}
    _power_family(P, {m: symbolic_power(delta, m) for m in range(1, m_max + 1)}, "symbolic_m")
    return P


def audit_matroid_equivalences(delta: SimplicialComplex, m_max: int = 3, memo: dict | None = None) -> AuditReport:
    """Matroid vs cleanness and Cohen-Macaulayness of the symbolic powers."""
    _require_audit_input(delta, m_max)
    P = _shared(memo, f"cor2.4/{m_max}", delta, lambda: _matroid_predicates(delta, m_max))
    report = AuditReport("cor2.4", delta.render(), predicates=P, notes=_notes(delta))
    _equivalence_audit(report, "matroid", "symbolic_m", m_max)
    return report


def _ci_predicates(delta: SimplicialComplex, m_max: int) -> dict:
    I = stanley_reisner_ideal(delta)
    P = {
        "complete_intersection": is_complete_intersection(delta),
        "symbolic_equals_ordinary": {str(m): ideals_equal(symbolic_power(delta, m), power(I, m)) for m in range(1, m_max + 1)},
    }
    _power_family(P, {m: power(I, m) for m in range(1, m_max + 1)}, "power_m")
    return P


def audit_ci_equivalences(delta: SimplicialComplex, m_max: int = 3, memo: dict | None = None) -> AuditReport:
    """Complete intersection vs cleanness and Cohen-Macaulayness of ordinary powers."""
    _require_audit_input(delta, m_max)
    P = _shared(memo, f"cor2.6/{m_max}", delta, lambda: _ci_predicates(delta, m_max))
    report = AuditReport("cor2.6", delta.render(), predicates=P, notes=_notes(delta))
    _equivalence_audit(report, "complete_intersection", "power_m", m_max)
    if P["complete_intersection"]:
        report.record(
            "ci-torsionfree",
            all(P["symbolic_equals_ordinary"].values()),
            "complete intersection with I^(m) != I^m",
        )
    return report


def _dim1_predicates(delta: SimplicialComplex) -> dict:
    diam = diameter(delta)
    shape = dim1_shape(delta)
    I = stanley_reisner_ideal(delta)
    sym, sq = symbolic_power(delta, 2), power(I, 2)
    P = {
        "diameter": diam if diam != math.inf else "infinite",
        "shape": f"{shape[0]}-{shape[1]}" if shape else None,
        "symbolic_equals_ordinary_m2": ideals_equal(sym, sq),
    }
    _power_family(P, {2: sym}, "symbolic_m")
    _power_family(P, {2: sq}, "power_m")
    return P


def audit_dim1_second_power(delta: SimplicialComplex, memo: dict | None = None) -> AuditReport:
    """Diameter, path/cycle shape and the second powers of a graph complex.

    ``theorem3_method`` records whether the block construction produced the
    shelling of Gamma itself (``construction``) or search was needed.
    """
    if delta.dim != 1 or not delta.is_pure:
        raise NotDimensionOne(f"need a pure 1-dimensional complex, got {delta}")
    if delta.is_full_simplex:
        raise FullSimplex("<{1,2}> on [2] has I_delta = 0")
    P = _shared(memo, "dim1", delta, lambda: _dim1_predicates(delta))
    report = AuditReport("dim1", delta.render(), predicates=P)
    small = P["diameter"] != "infinite" and P["diameter"] <= 2
    if small:
        P["theorem3_method"] = theorem3_shelling(delta).method
    report.record(
        "thm3.1",
        _all_equal((P["clean_symbolic_m2"], P["cm_symbolic_m2_Q"], small)),
        f"clean={P['clean_symbolic_m2']} cm={P['cm_symbolic_m2_Q']} diam<=2={small}",
    )
    listed = listed_square_shape(delta)
    report.record(
        "cor3.2",
        _all_equal((P["clean_power_m2"], P["cm_power_m2_Q"], listed)),
        f"clean={P['clean_power_m2']} cm={P['cm_power_m2_Q']} listed={listed}",
    )
    report.record(
        "cor3.3",
        P["clean_symbolic_m2"] == P["cm_symbolic_m2_Q"] and P["clean_power_m2"] == P["cm_power_m2_Q"],
        "clean and Cohen-Macaulay disagree at m = 2",
    )
    report.record(
        "fields-agree",
        P["cm_symbolic_m2_Q"] == P["cm_symbolic_m2_F2"] and P["cm_power_m2_Q"] == P["cm_power_m2_F2"],
        "Cohen-Macaulay verdicts differ between Q and F2",
    )
    return report


# --- the worked example ----------------------------------------------------

EXAMPLE_IDEAL = "ideal n=4: x1*x2, x2*x3, x3*x4"
EXAMPLE_DUAL = "ideal n=4: x1*x3, x2*x3, x2*x4"


def reproduce_example(name: str = "2.5", ideal: MonomialIdeal | None = None) -> AuditReport:
    """Re-derive the facts about I = (x1x2, x2x3, x3x4).

    Passing another squarefree ``ideal`` runs the same six checks against the
    expected values, so a perturbed instance shows up as divergent.
    """
    if name != "2.5":
        raise UnknownExample(name)
    expected = parse_ideal(EXAMPLE_IDEAL)
    I = expected if ideal is None else ideal
    report = AuditReport("ex2.5", I.to_dsl())
    if I != expected:
        report.notes.append(f"instance differs from {expected.to_dsl()}")
    delta = complex_from_squarefree_ideal(I)
    dual = squarefree_dual(I)
    P = report.predicates
    P["clean_I"] = is_clean(I)
    P["dual"] = dual.render()
    P["dual_matroidal"] = is_matroidal(dual)
    P["symbolic_equals_ordinary"] = {str(m): ideals_equal(symbolic_power(delta, m), power(I, m)) for m in (1, 2, 3)}
    P["clean_power_m3"] = is_clean(power(I, 3))
    P["clean_symbolic_m3"] = is_clean(symbolic_power(delta, 3))
    report.record("clean(S/I)", P["clean_I"], "S/I should be clean")
    report.record("dual", dual == parse_ideal(EXAMPLE_DUAL), f"dual is {P['dual']}")
    report.record("dual not matroidal", not P["dual_matroidal"], "dual should not be matroidal")
    report.record("I^(m) = I^m, m <= 3", all(P["symbolic_equals_ordinary"].values()), "symbolic and ordinary powers differ")
    report.record("S/I^3 not clean", not P["clean_power_m3"], "S/I^3 should not be clean")
    report.record("S/I^(3) not clean", not P["clean_symbolic_m3"], "S/I^(3) should not be clean")
    return report


# --- sweeps ------------------------------------------------------------------

_AUDITS = {
    "cor2.4": ("matroid", audit_matroid_equivalences, None),
    "cor2.6": ("matroid", audit_ci_equivalences, None),
    "thm3.1": ("dim1", lambda delta, m_max, memo: audit_dim1_second_power(delta, memo), ("thm3.1", "fields-agree")),
    "cor3.2": ("dim1", lambda delta, m_max, memo: audit_dim1_second_power(delta, memo), ("cor3.2", "fields-agree")),
    "cor3.3": ("dim1", lambda delta, m_max, memo: audit_dim1_second_power(delta, memo), ("cor3.3", "fields-agree")),
}


def sweep_budget(which: str) -> int:
    kind = _AUDITS[which][0]
    override = os.environ.get(BUDGET_ENV)
    return int(override) if override else DEFAULT_BUDGETS[kind]


@dataclass
class SweepResult:
    theorem: str
    n_max: int
    d: int
    m_max: int
    reports: list
    skipped: list

    @property
    def violations(self) -> list:
        return [r for r in self.reports if r.violations]

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.reports)

    def summary_rows(self) -> list:
        rows = []
        for n in range(self.d + 1, self.n_max + 1):
            mine = [r for r in self.reports if r.instance.startswith(f"complex n={n} ")]
            rows.append({"n": n, "instances": len(mine), "violations": sum(1 for r in mine if r.violations)})
        rows.append({"n": "all", "instances": len(self.reports), "violations": len(self.violations)})
        return rows

    def summary_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["theorem", "d", "m_max", "n", "instances", "violations"], lineterminator="\n")
        writer.writeheader()
        for row in self.summary_rows():
            writer.writerow({"theorem": self.theorem, "d": self.d, "m_max": self.m_max, **row})
        return buf.getvalue()


def run_audit_sweep(
    n_max: int,
    d: int,
    m_max: int = 3,
    which: str = "cor2.4",
    override: bool = False,
    covering: bool = True,
    share_isomorphic: bool = True,
) -> SweepResult:
    """Audit every pure ``d``-dimensional complex on [n] for n <= ``n_max``.

    Full simplices (I = 0) are skipped and listed in ``skipped``. Sizes above
    the budget (5 for the power audits, 6 for the graph audits, or the value
    of ``SRPOWERS_SWEEP_BUDGET``) need ``override=True``. Every labeled
    complex gets its own report; with ``share_isomorphic`` the
    relabeling-invariant predicates are computed once per isomorphism class.
    """
    if which not in _AUDITS:
        raise ValueError(f"unknown theorem {which!r}; choose from {THEOREMS}")
    kind, audit, counted = _AUDITS[which]
    if kind == "dim1" and d != 1:
        raise NotDimensionOne(f"{which} is about 1-dimensional complexes")
    budget = sweep_budget(which)
    if n_max > budget and not override:
        raise BudgetExceeded(f"n_max={n_max} exceeds the budget {budget}; pass override or set {BUDGET_ENV}")
    reports, skipped = [], []
    memo = {} if share_isomorphic else None
    for n in range(d + 1, n_max + 1):
        for delta in enumerate_pure_complexes(n, d, covering=covering):
            if delta.is_full_simplex:
                skipped.append(delta.render())
                continue
            report = audit(delta, m_max, memo)
            report.theorem = which
            if counted is not None:
                report.violations = [v for v in report.violations if v["statement"] in counted]
            reports.append(report)
    return SweepResult(which, n_max, d, m_max, reports, skipped)
