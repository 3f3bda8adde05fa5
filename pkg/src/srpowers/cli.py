"""Command line entry point: ``srpowers <command> ...``.

Exit status is 0 on success (or when an audit finds no violations), 2 when an
audit finds violations or a checked predicate is false, and 1 for usage,
parse and precondition errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import audit as audit_mod
from .certificates import serialize
from .complexes import SimplicialComplex, diameter, is_complete_intersection, is_matroid
from .dsl import MinimalizationWarning, parse
from .errors import SRError
from .ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    power,
    squarefree_dual,
    stanley_reisner_ideal,
    symbolic_power,
)
from .polar import polarize_ideal
from .properties import clean_shelling, is_cohen_macaulay
from .shelling import find_shelling


class UsageError(Exception):
    pass


def _load(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MinimalizationWarning)
        obj = parse(text)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return obj


def _as_complex(obj) -> SimplicialComplex:
    return obj if isinstance(obj, SimplicialComplex) else complex_from_squarefree_ideal(obj)


def _as_ideal(obj) -> MonomialIdeal:
    return stanley_reisner_ideal(obj) if isinstance(obj, SimplicialComplex) else obj


def _print_bool(name: str, value: bool) -> int:
    print(f"{name}: {'true' if value else 'false'}")
    return 0 if value else 2


def cmd_check(args) -> int:
    obj = _load(args.file)
    pred = args.predicate
    if pred == "matroid":
        return _print_bool("matroid", is_matroid(_as_complex(obj)))
    if pred == "ci":
        return _print_bool("complete intersection", is_complete_intersection(_as_complex(obj)))
    if pred == "diam":
        d = diameter(_as_complex(obj))
        print(f"diameter: {'infinite' if d == float('inf') else d}")
        return 0
    I = _as_ideal(obj)
    if pred == "clean":
        cert = clean_shelling(I)
        code = _print_bool("clean", cert is not None)
        if cert is not None and args.certificate:
            print(serialize(cert), end="")
        return code
    fields = [int(p) for p in args.field]
    code = 0
    for p in fields:
        name = "Q" if p == 0 else f"F{p}"
        code = max(code, _print_bool(f"cohen-macaulay over {name}", is_cohen_macaulay(I, p)))
    return code


def cmd_power(args) -> int:
    obj = _load(args.file)
    if args.m < 1:
        raise UsageError("--m must be positive")
    if args.symbolic:
        result = symbolic_power(_as_complex(obj), args.m)
    else:
        result = power(_as_ideal(obj), args.m)
    print(result.to_dsl())
    return 0


def cmd_dual(args) -> int:
    obj = _load(args.file)
    print(squarefree_dual(_as_ideal(obj)).to_dsl())
    return 0


def cmd_polarize(args) -> int:
    J, ctx = polarize_ideal(_as_ideal(_load(args.file)))
    print(J.to_dsl())
    print("# " + " ".join(f"x{k}={name}" for k, name in enumerate(ctx.names, start=1)))
    return 0


def cmd_shelling(args) -> int:
    cert = find_shelling(_as_complex(_load(args.file)))
    if cert is None:
        print("not shellable")
        return 2
    print(serialize(cert), end="")
    return 0


def _emit(reports, out: str | None) -> None:
    text = "".join(r.to_json() + "\n" for r in reports)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_audit(args) -> int:
    if args.theorem == "ex2.5":
        report = audit_mod.reproduce_example("2.5")
        _emit([report], args.out)
        return 0 if report.consistent else 2
    d = 1 if args.theorem in ("thm3.1", "cor3.2", "cor3.3") else args.d
    return _sweep(args.theorem, args.n, d, args.m_max, args.out, args.summary, args.override, args.include_noncovering)


def cmd_sweep(args) -> int:
    return _sweep(args.theorem, args.n, args.d, args.m_max, args.out, args.summary, args.override, args.include_noncovering)


def _sweep(which, n, d, m_max, out, summary, override, noncovering) -> int:
    result = audit_mod.run_audit_sweep(n, d, m_max, which, override=override, covering=not noncovering)
    _emit(result.reports, out)
    text = result.summary_csv()
    if summary:
        Path(summary).write_text(text)
    else:
        sys.stderr.write(text)
    return 2 if result.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srpowers", description="Stanley-Reisner powers: cleanness, Cohen-Macaulayness and audits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate a predicate on a complex or ideal")
    p.add_argument("file", help="DSL file, or - for stdin")
    p.add_argument("--predicate", required=True, choices=["matroid", "ci", "clean", "cm", "diam"])
    p.add_argument("--field", action="append", default=None, help="0 for Q or a prime p (repeatable, cm only)")
    p.add_argument("--certificate", action="store_true", help="print the shelling certificate for clean")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("power", help="ordinary or symbolic power")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("dual", help="squarefree Alexander dual")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("polarize", help="polarization with the variable map")
    p.add_argument("file")
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("shelling", help="search for a shelling order")
    p.add_argument("file")
    p.set_defaults(func=cmd_shelling)

    for name, helptext in (("audit", "audit one theorem"), ("sweep", "exhaustive sweep")):
        p = sub.add_parser(name, help=helptext)
        choices = list(audit_mod.THEOREMS) + (["ex2.5"] if name == "audit" else [])
        p.add_argument("--theorem", required=True, choices=choices)
        p.add_argument("--n", type=int, default=4, help="largest vertex count")
        p.add_argument("--d", type=int, default=1, help="dimension of the complexes")
        p.add_argument("--m-max", type=int, default=3)
        p.add_argument("--out", help="write JSON lines here instead of stdout")
        p.add_argument("--summary", help="write the CSV summary here instead of stderr")
        p.add_argument("--override", action="store_true", help=f"ignore the size budget (or set {audit_mod.BUDGET_ENV})")
        p.add_argument("--include-noncovering", action="store_true", help="also sweep complexes with unused vertices")
        p.set_defaults(func=cmd_audit if name == "audit" else cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if getattr(args, "field", None) is None and args.command == "check":
        args.field = ["0"]
    try:
        return args.func(args)
    except (SRError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
