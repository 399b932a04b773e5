"""Command-line front end.

Subcommands: check, alexander, switch, iso, count, orbits, enumerate.
Exit codes: 0 affirmative/success, 1 negative verdict, 2 input error,
3 internal inconsistency (the two isomorphism methods disagreeing, which
must never happen on valid input).  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import make_alexander, make_switch_biquandle
from .axioms import verify_biquandle
from .errors import BiquandleError
from .isomorphism import (brute_force_iso, enumerate_biquandles,
                          format_witness, structural_iso, witness_to_dict)
from .knot import build_diagram, count_homs, parse_gauss_code
from .modules import (FiniteModule, counting_element_order, kernel_one_minus_s,
                      make_module, make_scalar_module, one_minus_st_submodule,
                      s_orbit, transversal)
from .tables import parse_matrix, serialize_matrix

SCHEMA_PREFIX = "biquandles-cli"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


class _ModuleSpec(argparse.Action):
    """Collect --zn and --mod occurrences into one ordered list."""

    def __call__(self, parser, namespace, values, option_string=None):
        specs = getattr(namespace, "modules", None) or []
        if option_string == "--zn":
            specs.append(("zn", tuple(values)))
        else:
            specs.append(("file", values))
        namespace.modules = specs


def _add_module_args(sub, repeatable_help=""):
    sub.add_argument(
        "--zn", nargs=3, type=int, metavar=("M", "S", "T"),
        action=_ModuleSpec, dest="modules",
        help="scalar module Z_m with parameters s, t" + repeatable_help)
    sub.add_argument(
        "--mod", metavar="FILE", action=_ModuleSpec, dest="modules",
        help="module description file" + repeatable_help)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def parse_module_text(text: str) -> FiniteModule:
    """Module description: 'm k' line, k rows for s action, k rows for t."""
    rows = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((ln, line.split()))
    if not rows:
        raise BiquandleError("empty module description")
    head = rows[0][1]
    if len(head) != 2:
        raise BiquandleError("first line must be 'm k'")
    try:
        m, k = int(head[0]), int(head[1])
        body = [[int(tok) for tok in toks] for _, toks in rows[1:]]
    except ValueError as exc:
        raise BiquandleError(f"non-integer token: {exc}") from None
    if len(body) != 2 * k or any(len(r) != k for r in body):
        raise BiquandleError(f"expected {2 * k} rows of {k} entries")
    return make_module(m, k, body[:k], body[k:])


def _load_module(spec) -> FiniteModule:
    kind, value = spec
    if kind == "zn":
        m, s, t = value
        return make_scalar_module(m, s, t)
    return parse_module_text(_read_text(value))


def _module_table(module: FiniteModule):
    """CLI tables use the printed-matrix element order (zero last)."""
    return make_alexander(
        module, counting_element_order(module.m, module.k))


def _fmt_elem(e):
    return str(e[0]) if len(e) == 1 else "(" + ",".join(map(str, e)) + ")"


def _fmt_set(elems):
    return "{" + ", ".join(_fmt_elem(e) for e in elems) + "}"


def _emit_json(payload, command):
    payload = {"schema": f"{SCHEMA_PREFIX}/{command}/1", **payload}
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_check(args) -> int:
    table = parse_matrix(_read_text(args.matrix))
    report = verify_biquandle(table)
    if args.json:
        _emit_json({
            "order": table.n,
            "passed": report.passed,
            "violations": [[cid, list(wit)] for cid, wit in report.violations],
        }, "check")
    else:
        print(f"order {table.n}: " +
              ("biquandle" if report.passed else "not a biquandle"))
        for cid, wit in report.violations:
            print(f"violated axiom {cid} at {wit}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _single_module(args, command) -> FiniteModule:
    specs = getattr(args, "modules", None) or []
    if len(specs) != 1:
        raise BiquandleError(
            f"{command} needs exactly one module (--zn or --mod)")
    return _load_module(specs[0])


def cmd_alexander(args) -> int:
    table = _module_table(_single_module(args, "alexander"))
    if args.json:
        _emit_json({"order": table.n,
                    "matrix": serialize_matrix(table).rstrip("\n")},
                   "alexander")
    else:
        sys.stdout.write(serialize_matrix(table))
    return EXIT_OK


def _parse_small_matrix(text, k):
    rows = [r for r in text.replace(";", "\n").splitlines() if r.strip()]
    mat = [[int(tok) for tok in row.split()] for row in rows]
    if len(mat) != k or any(len(r) != k for r in mat):
        raise BiquandleError(f"expected a {k}x{k} matrix")
    return mat


def cmd_switch(args) -> int:
    a_mat = _parse_small_matrix(args.A, args.k)
    b_mat = _parse_small_matrix(args.B, args.k)
    shift = None
    if args.c is not None:
        shift = tuple(int(tok) for tok in args.c.replace(",", " ").split())
        if len(shift) != args.k:
            raise BiquandleError(f"shift needs {args.k} coordinates")
    report = make_switch_biquandle(
        args.m, args.k, a_mat, b_mat, shift,
        counting_element_order(args.m, args.k))
    if args.json:
        _emit_json({
            "order": report.table.n,
            "matrix": serialize_matrix(report.table).rstrip("\n"),
            "switch_condition_holds": report.switch_condition_holds,
            "axioms_passed": report.axioms.passed,
        }, "switch")
    else:
        sys.stdout.write(serialize_matrix(report.table))
        print("switch condition: " +
              ("holds" if report.switch_condition_holds else "fails"),
              file=sys.stderr)
        print("axioms: " + ("pass" if report.axioms.passed else "fail"),
              file=sys.stderr)
    return EXIT_OK if report.axioms.passed else EXIT_NEGATIVE


def cmd_iso(args) -> int:
    specs = getattr(args, "modules", None) or []
    if len(specs) != 2:
        raise BiquandleError("iso needs exactly two modules (--zn/--mod)")
    mod_a, mod_b = (_load_module(s) for s in specs)
    results = {}
    if args.method in ("brute", "both"):
        table_a, table_b = make_alexander(mod_a), make_alexander(mod_b)
        witness, stats = brute_force_iso(table_a, table_b)
        results["brute"] = (witness is not None, witness, stats)
    if args.method in ("structural", "both"):
        witness, stats = structural_iso(mod_a, mod_b)
        results["structural"] = (witness is not None, witness, stats)

    verdicts = {found for found, _, _ in results.values()}
    inconsistent = len(verdicts) > 1
    isomorphic = verdicts == {True}

    if args.json:
        payload = {"isomorphic": None if inconsistent else isomorphic,
                   "inconsistent": inconsistent, "methods": {}}
        for name, (found, witness, stats) in sorted(results.items()):
            entry = {"isomorphic": found,
                     "candidates": stats.candidates,
                     "prunes": dict(sorted(stats.prunes.items())),
                     "work": stats.work}
            if witness is not None:
                entry["witness"] = (list(witness) if name == "brute"
                                    else witness_to_dict(witness))
            payload["methods"][name] = entry
        _emit_json(payload, "iso")
    else:
        if inconsistent:
            print("INTERNAL INCONSISTENCY: methods disagree")
        else:
            print("isomorphic" if isomorphic else "non-isomorphic")
        for name, (found, witness, _) in sorted(results.items()):
            if witness is None:
                continue
            if name == "brute":
                print(f"{name} witness: " + " ".join(map(str, witness)))
            else:
                print(f"{name} witness:")
                print(format_witness(witness))
    if inconsistent:
        return EXIT_INCONSISTENT
    return EXIT_OK if isomorphic else EXIT_NEGATIVE


def _single_code_from_file(path):
    lines = [ln.split("#", 1)[0].strip()
             for ln in _read_text(path).splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise BiquandleError(
            "gauss file must hold exactly one code for counting")
    return lines[0]


def cmd_count(args) -> int:
    import os
    if args.gauss_file:
        text = _single_code_from_file(args.gauss_file)
    elif args.gauss is None:
        raise BiquandleError("pass --gauss CODE_OR_FILE or --gauss-file FILE")
    elif args.gauss and os.path.exists(args.gauss):
        text = _single_code_from_file(args.gauss)
    else:
        text = args.gauss
    diagram = build_diagram(parse_gauss_code(text))
    target = parse_matrix(_read_text(args.target))
    report = count_homs(diagram, target)
    if args.json:
        _emit_json({"count": report.count, "target_order": report.target_order,
                    "semi_arcs": diagram.semi_arcs}, "count")
    else:
        print(report.count)
    return EXIT_OK


def cmd_orbits(args) -> int:
    module = _single_module(args, "orbits")
    sub = one_minus_st_submodule(module)
    ker = kernel_one_minus_s(module)
    trans = transversal(module, sub)
    if args.json:
        _emit_json({
            "module": module.describe(),
            "one_minus_st_submodule": [list(e) for e in sub.elements],
            "kernel_one_minus_s": [list(e) for e in ker.elements],
            "transversal": [list(e) for e in trans.reps],
            "s_orbit_of_transversal": [list(e) for e in trans.orbit],
        }, "orbits")
    else:
        print(f"module: {module.describe()}")
        print(f"(1-st) submodule: {_fmt_set(sub.elements)}")
        print(f"Ker(1-s): {_fmt_set(ker.elements)}")
        print(f"transversal: {_fmt_set(trans.reps)}")
        print(f"s-orbit of transversal: {_fmt_set(trans.orbit)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    result = enumerate_biquandles(args.n, allow_order_4=args.allow_order_4)
    if args.json:
        _emit_json({
            "order": args.n,
            "count": len(result.tables),
            "isomorphism_classes": [list(c) for c in result.classes],
            "matrices": [serialize_matrix(t).rstrip("\n")
                         for t in result.tables],
        }, "enumerate")
    else:
        for table in result.tables:
            sys.stdout.write(serialize_matrix(table))
            print()
        print(f"biquandles of order {args.n}: {len(result.tables)}")
        print(f"isomorphism classes: {len(result.classes)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquandles",
        description="Finite biquandle toolkit: axiom checking, module "
                    "biquandle construction, isomorphism, and counting "
                    "invariants.")
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--json", action="store_true",
                         help="emit a schema-versioned JSON object")

    s = subs.add_parser("check", help="verify the biquandle axioms")
    s.add_argument("matrix", help="matrix file ('-' for stdin)")
    common(s)
    s.set_defaults(func=cmd_check)

    s = subs.add_parser("alexander",
                        help="print the module biquandle matrix")
    _add_module_args(s)
    common(s)
    s.set_defaults(func=cmd_alexander)

    s = subs.add_parser("switch",
                        help="build an affine switch biquandle")
    s.add_argument("m", type=int, help="modulus")
    s.add_argument("k", type=int, help="rank")
    s.add_argument("--A", required=True, metavar="MAT",
                   help="k x k matrix, rows ';'-separated, e.g. '0 1;1 1'")
    s.add_argument("--B", required=True, metavar="MAT")
    s.add_argument("--c", metavar="VEC", default=None,
                   help="constant shift, e.g. '1 1' (default zero)")
    common(s)
    s.set_defaults(func=cmd_switch)

    s = subs.add_parser("iso", help="decide biquandle isomorphism")
    _add_module_args(s, " (give two)")
    s.add_argument("--method", choices=("brute", "structural", "both"),
                   default="both")
    common(s)
    s.set_defaults(func=cmd_iso)

    s = subs.add_parser("count", help="counting invariant of a Gauss code")
    s.add_argument("--gauss", metavar="CODE_OR_FILE", default=None,
                   help="signed OU Gauss code (empty string = unknot), or "
                        "a path to a file holding one code")
    s.add_argument("--gauss-file", metavar="FILE", default=None,
                   help="file holding one Gauss code (never parsed as a "
                        "literal code)")
    s.add_argument("--target", required=True, metavar="FILE",
                   help="target biquandle matrix file")
    common(s)
    s.set_defaults(func=cmd_count)

    s = subs.add_parser("orbits",
                        help="submodule, kernel, transversal, and s-orbit")
    _add_module_args(s)
    common(s)
    s.set_defaults(func=cmd_orbits)

    s = subs.add_parser("enumerate", help="all biquandles of a small order")
    s.add_argument("n", type=int)
    s.add_argument("--allow-order-4", action="store_true",
                   help="permit the much larger order-4 search")
    common(s)
    s.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BiquandleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
