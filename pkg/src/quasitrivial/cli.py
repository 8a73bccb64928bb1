"""Command-line interface.

Subcommands: count, enumerate, check, classify, decompose, render, oracle,
verify.  Data goes to stdout, diagnostics to stderr; identical invocations
produce identical bytes.  Exit status 0 means no error and no failed check.
There are no configuration files or environment variables.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import counting, oracle, verify
from .enumeration import FAMILIES, FamilySpec, generate
from .errors import CapacityError, DecompositionError, ParseError
from .formats import (
    emit_cayley_line,
    emit_classification,
    emit_total_order,
    emit_weak_order,
    load_table,
    parse_total_order,
    parse_weak_order,
)
from .magmas import (
    annihilator_elements,
    degree_sequence,
    is_associative,
    is_commutative,
    is_idempotent,
    is_order_preserving,
    is_quasitrivial,
    neutral_elements,
)
from .orders import TotalOrder
from .render import FORMATS, render_contour, render_profile
from .structure import classify, decompose, monotonizing_orders

ORACLE_CHECKS = (
    "qt-associative-count",
    "neutral-implies-quasitrivial",
    "commutative-implies-associative",
    "monotonizable-count",
)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_order_flag(payload: str, n: int) -> TotalOrder:
    return parse_total_order(f"totalorder {n} : {payload}")


def _available_methods(name: str, n: int) -> dict[str, object]:
    methods: dict[str, object] = dict(counting.METHODS[name])
    if name in verify.SEQUENCE_SPECS:
        methods["enumerate"] = lambda m: verify.count_by_enumeration(name, m)
    if name == "q":
        methods["bruteforce"] = oracle.brute_count_quasitrivial_associative
    return methods


def _cmd_count(args) -> int:
    name, n = args.name, args.n
    if name not in counting.METHODS:
        print(f"unknown sequence {name!r}; choices: {', '.join(counting.SEQUENCE_NAMES)}",
              file=sys.stderr)
        return 2
    if args.all_methods:
        args.method = "all"
    methods = _available_methods(name, n)
    if args.method != "all":
        method = args.method or next(iter(methods))
        if method not in methods:
            print(f"sequence {name!r} has no method {method!r}", file=sys.stderr)
            return 2
        try:
            value = methods[method](n)
        except CapacityError as exc:
            print(f"capacity: {exc}", file=sys.stderr)
            return 2
        print(f"{name} {n} {value} {method}")
        return 0
    table = counting.SequenceTable(name)
    for method, fn in methods.items():
        try:
            value = fn(n)
        except CapacityError:
            continue
        try:
            table.record(n, value, method)
        except counting.ConsistencyError:
            print(f"{name} {n} {value} {method}")
            print(f"{name} {n} MISMATCH", file=sys.stderr)
            return 1
        print(f"{name} {n} {value} {method}")
    print(f"{name} {n} MATCH")
    return 0


def _cmd_enumerate(args) -> int:
    spec = FamilySpec(args.family, args.n, frozenset(args.filter))
    lines = []
    for obj in generate(spec, args.shard, args.shards):
        if args.family in ("total-orders", "single-peaked-total-orders"):
            lines.append(emit_total_order(obj))
        elif args.family in ("weak-orders", "weakly-single-peaked-weak-orders"):
            lines.append(emit_weak_order(obj))
        else:
            lines.append(emit_cayley_line(obj))
    _write_output("".join(line + "\n" for line in lines), args.output)
    return 0


def _reference_for(args, n: int) -> TotalOrder:
    if getattr(args, "reference", None):
        return _parse_order_flag(args.reference, n)
    return TotalOrder.natural(n)


def _cmd_check(args) -> int:
    f = load_table(_read_input(args.input))
    reference = _reference_for(args, f.n)
    lines = [
        f"n: {f.n}",
        f"associative: {'true' if is_associative(f) else 'false'}",
        f"quasitrivial: {'true' if is_quasitrivial(f) else 'false'}",
        f"commutative: {'true' if is_commutative(f) else 'false'}",
        f"idempotent: {'true' if is_idempotent(f) else 'false'}",
        "neutral: " + (" ".join(map(str, sorted(neutral_elements(f)))) or "-"),
        "annihilator: " + (" ".join(map(str, sorted(annihilator_elements(f)))) or "-"),
        "degree_sequence: " + " ".join(map(str, degree_sequence(f))),
        "order_preserving_for_reference: "
        + ("true" if is_order_preserving(f, reference) else "false"),
    ]
    if args.find_order:
        found = next(monotonizing_orders(f), None)
        if found is None:
            total = math.factorial(f.n)
            lines.append(
                f"no order-preserving total ordering exists ({total}/{total} rejected)"
            )
        else:
            lines.append("found: " + emit_total_order(found))
    print("\n".join(lines))
    return 0


def _cmd_classify(args) -> int:
    f = load_table(_read_input(args.input))
    report = classify(f, _reference_for(args, f.n))
    sys.stdout.write(emit_classification(report))
    return 0


def _cmd_decompose(args) -> int:
    f = load_table(_read_input(args.input))
    try:
        d = decompose(f)
    except DecompositionError as exc:
        print(f"cannot decompose: {exc.reason}", file=sys.stderr)
        return 1
    print(emit_weak_order(d.order))
    for rank, side in d.choices:
        print(f"choice {rank} : {side}")
    return 0


def _cmd_render(args) -> int:
    text = _read_input(args.input)
    if args.kind == "contour":
        f = load_table(text)
        axis = _parse_order_flag(args.axis, f.n) if args.axis else TotalOrder.natural(f.n)
        out = render_contour(f, axis, args.format)
    else:
        weak = total = None
        for line in text.splitlines():
            stripped = line.strip()
            if stripped.startswith("weakorder"):
                weak = parse_weak_order(stripped)
            elif stripped.startswith("totalorder"):
                total = parse_total_order(stripped)
        if weak is None:
            print("profile input needs a 'weakorder <n> : ...' line", file=sys.stderr)
            return 2
        if args.reference:
            total = _parse_order_flag(args.reference, weak.n)
        if total is None:
            total = TotalOrder.natural(weak.n)
        out = render_profile(total, weak, args.format)
    _write_output(out, args.output)
    return 0


def _cmd_oracle(args) -> int:
    name, n = args.check, args.n
    if name == "qt-associative-count":
        print(oracle.brute_count_quasitrivial_associative(n, args.shard, args.shards))
        return 0
    if name == "monotonizable-count":
        print(oracle.brute_count_monotonizable(n))
        return 0
    if name == "neutral-implies-quasitrivial":
        ok, witness = oracle.check_neutral_monotone_implies_quasitrivial(n)
    else:
        ok, witness = oracle.check_commutative_monotone_implies_associative(n)
    if ok:
        print("PASS")
        return 0
    print("FAIL")
    print(witness)
    return 1


def _cmd_verify(args) -> int:
    results = verify.run_checks(args.level)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "ok" if r.ok else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasitrivial",
        description="Construct, classify, enumerate, and count quasitrivial semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate a named integer sequence")
    p.add_argument("name")
    p.add_argument("n", type=int)
    p.add_argument("--method", default=None,
                   help="closed|recurrence|gf|egf|appendix|enumerate|bruteforce|all")
    p.add_argument("--all-methods", action="store_true",
                   help="same as --method all")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enumerate", help="stream every member of a family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", action="append", default=[])
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("check", help="basic property report for a Cayley table")
    p.add_argument("input", help="path to a cayley file, or - for stdin")
    p.add_argument("--reference", default=None,
                   help="reference ordering as elements smallest-first, e.g. '2 1 3'")
    p.add_argument("--find-order", action="store_true")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("input")
    p.add_argument("--reference", default=None)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("decompose", help="factor an associative quasitrivial table")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("render", help="draw a contour or profile plot")
    p.add_argument("kind", choices=("contour", "profile"))
    p.add_argument("input")
    p.add_argument("--format", choices=FORMATS, default="ascii")
    p.add_argument("--axis", default=None, help="drawing axis for contour plots")
    p.add_argument("--reference", default=None, help="reference ordering for profiles")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("oracle", help="raw brute-force searches")
    p.add_argument("check", choices=ORACLE_CHECKS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
