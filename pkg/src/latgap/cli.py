"""Command-line front end.

Exit status: 0 on success, 1 on any user error (bad arguments, files,
expressions, lattices), 2 when a verification run finds the closed-form
classifier disagreeing with the brute-force oracle.

The --lattice option accepts a path to a lattice file or one of the
builtin names chainN, cubeN, or NxM (a product of two chains); builtin
names take precedence over files.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .classify import (BooleanForm, Gap1, PseudoBooleanCase, TruncatedMedian,
                       classify_boolean_gap, classify_polynomial_gap,
                       classify_pseudo_boolean_gap, zhegalkin_from_table)
from .finfun import (FiniteFn, ess_bruteforce, enumerate_all_functions,
                     enumerate_monotone_maps, gap_bruteforce, parse_finite_fn,
                     reduce_table)
from .lattice import (Lattice, LatticeError, boolean_cube, chain,
                      parse_lattice, product)
from .polyfn import (PolyFn, canonicalize, essential_variables, restrict_to_01,
                     value_table)
from .terms import ParseError, format_dnf, parse_expr

_CHAIN = re.compile(r"chain([0-9]+)\Z")
_CUBE = re.compile(r"cube([0-9]+)\Z")
_GRID = re.compile(r"([0-9]+)x([0-9]+)\Z")


def load_lattice(spec: str) -> Lattice:
    if m := _CHAIN.match(spec):
        return chain(int(m.group(1)))
    if m := _CUBE.match(spec):
        return boolean_cube(int(m.group(1)))
    if m := _GRID.match(spec):
        return product(chain(int(m.group(1))), chain(int(m.group(2))))
    return parse_lattice(Path(spec).read_text())


def _classification_payload(verdict) -> dict | None:
    if verdict is None:
        return None
    if isinstance(verdict, Gap1):
        return {"tag": "gap1", "gap": 1}
    if isinstance(verdict, TruncatedMedian):
        return {"tag": "truncated-median", "gap": 2,
                "low": verdict.low.name, "high": verdict.high.name}
    if isinstance(verdict, BooleanForm):
        return {"tag": "boolean-form", "gap": 2, "form": verdict.form,
                "m": verdict.m, "c": verdict.c, "positions": list(verdict.positions)}
    if isinstance(verdict, PseudoBooleanCase):
        return {"tag": "pseudo-boolean", "gap": 2, "cases": list(verdict.cases),
                "inner": _classification_payload(verdict.inner),
                "unary_map": list(verdict.unary_map) if verdict.unary_map else None}
    raise TypeError(f"unknown verdict {verdict!r}")


def _classification_text(verdict) -> str:
    if verdict is None:
        return "undefined (fewer than 2 essential variables)"
    if isinstance(verdict, Gap1):
        return "gap1"
    if isinstance(verdict, TruncatedMedian):
        return f"truncated-median(low={verdict.low.name}, high={verdict.high.name})"
    if isinstance(verdict, BooleanForm):
        return (f"boolean-form({verdict.form}, m={verdict.m}, c={verdict.c}, "
                f"positions={list(verdict.positions)})")
    if isinstance(verdict, PseudoBooleanCase):
        inner = f", inner={_classification_text(verdict.inner)}" if verdict.inner else ""
        unary = f", g={list(verdict.unary_map)}" if verdict.unary_map else ""
        return f"pseudo-boolean(cases={list(verdict.cases)}{inner}{unary})"
    raise TypeError(f"unknown verdict {verdict!r}")


def _emit(ns, payload: dict, text_lines: list[str]) -> None:
    if getattr(ns, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_lattice_check(ns) -> int:
    try:
        lat = parse_lattice(Path(ns.path).read_text())
    except (LatticeError, OSError) as exc:
        if getattr(ns, "json", False):
            print(json.dumps({"valid": False, "error": str(exc)}, indent=2))
        else:
            print(f"invalid: {exc}")
        return 1
    payload = {"valid": True, "size": lat.size,
               "bottom": lat.bottom.name, "top": lat.top.name}
    _emit(ns, payload, [f"valid, |L|={lat.size}, bottom={lat.bottom.name}, top={lat.top.name}"])
    return 0


def cmd_analyze(ns) -> int:
    lat = load_lattice(ns.lattice)
    term = parse_expr(ns.expr, ns.arity, lat)
    f = canonicalize(term)
    ess = sorted(essential_variables(f))
    verdict = classify_polynomial_gap(f) if len(ess) >= 2 else None
    gap = verdict.gap if verdict is not None else None

    payload = {
        "lattice": {"elements": list(lat.names),
                    "bottom": lat.bottom.name, "top": lat.top.name},
        "expr": ns.expr,
        "arity": ns.arity,
        "dnf": format_dnf(f),
        "coefficients": [{"subset": list(subset), "value": name}
                         for subset, name in f.dump()],
        "essential": ess,
        "ess": len(ess),
        "gap": gap,
        "classification": _classification_payload(verdict),
        "oracle": None,
    }
    lines = [
        f"lattice: |L|={lat.size}, bottom={lat.bottom.name}, top={lat.top.name}",
        f"dnf: {payload['dnf']}",
        f"essential: {ess}",
        f"ess: {len(ess)}",
        f"gap: {gap if gap is not None else 'undefined'}",
        f"classification: {_classification_text(verdict)}",
    ]

    if ns.verify:
        full = value_table(f)
        oracle_ess = sorted(ess_bruteforce(full))
        oracle_gap = gap_bruteforce(full).gap if len(oracle_ess) >= 2 else None
        payload["oracle"] = {"essential": oracle_ess, "gap": oracle_gap}
        lines.append(f"oracle: essential={oracle_ess}, "
                     f"gap={oracle_gap if oracle_gap is not None else 'undefined'}")
        if oracle_ess != ess or oracle_gap != gap:
            payload["agreement"] = False
            lines.append("DISAGREEMENT between classifier and oracle")
            _emit(ns, payload, lines)
            return 2
        payload["agreement"] = True
        lines.append("agreement: ok")

    _emit(ns, payload, lines)
    return 0


def _bool_fn_from_args(ns) -> FiniteFn:
    if ns.table is not None:
        bits = ns.table
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError("the table must be a bitstring of 0s and 1s")
        n = (len(bits) - 1).bit_length()
        if len(bits) != 1 << n or len(bits) < 2:
            raise ValueError(f"table length {len(bits)} is not a power of two >= 2")
        return FiniteFn((2,) * n, 2, tuple(int(ch) for ch in bits))
    f = parse_finite_fn(Path(ns.file).read_text())
    if any(a != 2 for a in f.sizes) or f.codomain != 2:
        raise ValueError("the table file must hold a Boolean function (sizes 2 2)")
    return f


def cmd_bool_analyze(ns) -> int:
    f = _bool_fn_from_args(ns)
    poly = zhegalkin_from_table(f)
    ess = sorted(ess_bruteforce(f))
    verdict = classify_boolean_gap(f) if len(ess) >= 2 else None
    gap = verdict.gap if verdict is not None else None
    payload = {
        "arity": f.arity,
        "table": "".join(str(v) for v in f.table),
        "polynomial": str(poly),
        "essential": ess,
        "ess": len(ess),
        "gap": gap,
        "classification": _classification_payload(verdict),
        "oracle": None,
    }
    lines = [
        f"arity: {f.arity}",
        f"polynomial: {poly}",
        f"essential: {ess}",
        f"ess: {len(ess)}",
        f"gap: {gap if gap is not None else 'undefined'}",
        f"classification: {_classification_text(verdict)}",
    ]
    if ns.verify:
        oracle_gap = gap_bruteforce(f).gap if len(ess) >= 2 else None
        payload["oracle"] = {"gap": oracle_gap}
        lines.append(f"oracle: gap={oracle_gap if oracle_gap is not None else 'undefined'}")
        if oracle_gap != gap:
            payload["agreement"] = False
            lines.append("DISAGREEMENT between classifier and oracle")
            _emit(ns, payload, lines)
            return 2
        payload["agreement"] = True
        lines.append("agreement: ok")
    _emit(ns, payload, lines)
    return 0


def _sweep_summary(ns, kind: str, stats: dict, counterexample: dict | None) -> int:
    payload = {"sweep": kind, **stats,
               "disagreements": 0 if counterexample is None else 1,
               "ok": counterexample is None,
               "counterexample": counterexample}
    lines = [f"sweep: {kind}"]
    lines += [f"{key}: {value}" for key, value in stats.items()]
    if counterexample is None:
        lines += ["disagreements: 0", "result: ok"]
        _emit(ns, payload, lines)
        return 0
    lines += ["disagreements: 1",
              f"counterexample: {json.dumps(counterexample)}",
              "result: DISAGREEMENT"]
    _emit(ns, payload, lines)
    return 2


def cmd_verify_boolean(ns) -> int:
    scanned = analyzed = 0
    gap_counts = {1: 0, 2: 0}
    counterexample = None
    for f in enumerate_all_functions(ns.arity, 2, 2):
        scanned += 1
        if len(ess_bruteforce(f)) < 2:
            continue
        analyzed += 1
        claimed = classify_boolean_gap(f).gap
        actual = gap_bruteforce(f).gap
        if claimed != actual or actual > 2:
            counterexample = {"table": "".join(map(str, f.table)),
                              "classifier_gap": claimed, "oracle_gap": actual}
            break
        gap_counts[actual] += 1
    stats = {"arity": ns.arity, "scanned": scanned, "analyzed": analyzed,
             "skipped": scanned - analyzed,
             "gap_counts": {str(g): c for g, c in gap_counts.items()}}
    return _sweep_summary(ns, "boolean", stats, counterexample)


def cmd_verify_pseudo_boolean(ns) -> int:
    scanned = analyzed = 0
    gap_counts = {1: 0, 2: 0}
    counterexample = None
    for f in enumerate_all_functions(ns.arity, 2, ns.codomain):
        scanned += 1
        if len(ess_bruteforce(f)) < 2:
            continue
        analyzed += 1
        reduced, _ = reduce_table(f)
        claimed = classify_pseudo_boolean_gap(reduced).gap
        actual = gap_bruteforce(f).gap
        if claimed != actual or actual > 2:
            counterexample = {"table": list(f.table),
                              "classifier_gap": claimed, "oracle_gap": actual}
            break
        gap_counts[actual] += 1
    stats = {"arity": ns.arity, "codomain": ns.codomain, "scanned": scanned,
             "analyzed": analyzed, "skipped": scanned - analyzed,
             "gap_counts": {str(g): c for g, c in gap_counts.items()}}
    return _sweep_summary(ns, "pseudo-boolean", stats, counterexample)


def cmd_verify_gap_theorem(ns) -> int:
    lat = load_lattice(ns.lattice)
    scanned = analyzed = 0
    gap_counts = {1: 0, 2: 0}
    counterexample = None
    for coeffs in enumerate_monotone_maps(ns.arity, lat):
        scanned += 1
        f = PolyFn(lat, ns.arity, coeffs)
        ess = essential_variables(f)
        if len(ess) < 2:
            continue
        analyzed += 1
        claimed = classify_polynomial_gap(f).gap
        full = value_table(f)
        report = gap_bruteforce(full)
        ess01 = ess_bruteforce(restrict_to_01(f))
        if claimed != report.gap or report.gap not in (1, 2) \
                or report.essential != ess or ess01 != ess:
            counterexample = {"coefficients": [name for _, name in f.dump()],
                              "classifier_gap": claimed, "oracle_gap": report.gap,
                              "essential": sorted(ess),
                              "oracle_essential": sorted(report.essential),
                              "restricted_essential": sorted(ess01)}
            break
        gap_counts[report.gap] += 1
    stats = {"lattice": ns.lattice, "size": lat.size, "arity": ns.arity,
             "monotone_maps": scanned, "analyzed": analyzed,
             "skipped": scanned - analyzed,
             "gap_counts": {str(g): c for g, c in gap_counts.items()}}
    return _sweep_summary(ns, "gap-theorem", stats, counterexample)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latgap",
        description="Polynomial functions over finite bounded distributive "
                    "lattices: canonical DNF, essential variables, arity gap.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice-check", help="validate a lattice file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice_check)

    p = sub.add_parser("analyze", help="analyze a lattice term")
    p.add_argument("--lattice", required=True,
                   help="lattice file, or chainN / cubeN / NxM")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the brute-force oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bool", help="Boolean function commands")
    bool_sub = p.add_subparsers(dest="bool_command", required=True)
    p = bool_sub.add_parser("analyze", help="analyze a Boolean truth table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--table", help="little-endian bitstring of length 2**n")
    group.add_argument("--file", help="table file in the finite-function format")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bool_analyze)

    p = sub.add_parser("verify", help="exhaustive classifier-vs-oracle sweeps")
    verify_sub = p.add_subparsers(dest="verify_command", required=True)
    q = verify_sub.add_parser("boolean")
    q.add_argument("--arity", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify_boolean)
    q = verify_sub.add_parser("pseudo-boolean")
    q.add_argument("--arity", type=int, required=True)
    q.add_argument("--codomain", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify_pseudo_boolean)
    q = verify_sub.add_parser("gap-theorem")
    q.add_argument("--lattice", required=True,
                   help="lattice file, or chainN / cubeN / NxM")
    q.add_argument("--arity", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify_gap_theorem)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return ns.func(ns)
    except (LatticeError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
