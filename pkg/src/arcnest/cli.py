"""Command line front end: ``arcnest stats|ptr|check|enum|render``.

Exit codes: 0 success, 1 usage or parse error, 2 inadmissible input,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .bijection import InadmissibleError, image_class, ptr, ptr_coloured
from .diagram import DiagramError, ObjectClass, parse, roles, serialize
from .enumeration import brute_force_count, objects, sequence
from .render import render_ascii, render_svg
from .stats import label_of, max_crossing, max_nesting
from .structure import DeflationError, default_enhanced, is_admissible

EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_INTERNAL = 0, 1, 2, 3


def _max_n_cap() -> int:
    return int(os.environ.get("ARCNEST_MAX_N", "10"))


def _inputs(arg: str):
    if arg == "-":
        for line in sys.stdin:
            if line.strip():
                yield line.strip()
    else:
        yield arg


def _enhanced_flag(args):
    # None lets permutations default to enhanced upper statistics
    return args.enhanced


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_stats(args) -> int:
    for text in _inputs(args.diagram):
        cls, d = parse(text)
        enh = _enhanced_flag(args)
        label = label_of(cls, d, enh)
        out = {"class": cls.name.lower(), "n": d.n, **label.to_json(),
               "cr": max_crossing(cls, d, enh), "ne": max_nesting(cls, d, enh)}
        layers = ("upper", "lower") if cls is ObjectClass.PERMUTATION else ("upper",)
        out["roles"] = {
            layer: {str(v): r.value for v, r in roles(d, layer, default_enhanced(cls, enh)).items()}
            for layer in layers
        }
        out["admissibility"] = is_admissible(cls, d, enh).to_json()
        print(_dumps(out))
    return EXIT_OK


def cmd_ptr(args) -> int:
    status = EXIT_OK
    for text in _inputs(args.diagram):
        cls, d = parse(text)
        enh = _enhanced_flag(args)
        try:
            if args.coloured_semantics:
                img = ptr_coloured(cls, d, enh, args.coloured_semantics, args.step4)
            else:
                img = ptr(cls, d, enh, args.step4)
        except InadmissibleError as exc:
            print(f"inadmissible: {exc.report.reason}", file=sys.stderr)
            status = max(status, EXIT_INADMISSIBLE)
            continue
        out_cls = image_class(cls, img)
        if args.verify:
            again = (ptr_coloured(out_cls, img, enh, args.coloured_semantics, args.step4)
                     if args.coloured_semantics else ptr(out_cls, img, enh, args.step4))
            if again != d:
                print(f"involution failed: {serialize(cls, again)}", file=sys.stderr)
                return EXIT_INTERNAL
        print(serialize(out_cls, img))
    return status


def _check_shard(cls_value: str, enhanced: bool | None, n: int) -> dict:
    cls = ObjectClass(cls_value)
    scanned = admissible = 0
    inv_fail, label_fail = [], []
    for d in objects(cls, n):
        scanned += 1
        if not is_admissible(cls, d, enhanced).admissible:
            continue
        admissible += 1
        img = ptr(cls, d, enhanced)
        back_cls = image_class(cls, img)
        if ptr(back_cls, img, enhanced) != d:
            inv_fail.append(serialize(cls, d))
        if label_of(cls, d, enhanced).swapped() != label_of(back_cls, img, enhanced):
            label_fail.append(serialize(cls, d))
    return {"n": n, "scanned": scanned, "admissible": admissible,
            "involution_failures": inv_fail, "label_swap_failures": label_fail}


def cmd_check(args) -> int:
    cls = ObjectClass.from_name(args.cls)
    cap = _max_n_cap()
    if args.max_n > cap:
        print(f"--max-n {args.max_n} exceeds ARCNEST_MAX_N={cap}", file=sys.stderr)
        return EXIT_USAGE
    enh = _enhanced_flag(args)
    start = time.perf_counter()
    sizes = range(args.min_n, args.max_n + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            shards = list(pool.map(_check_shard, [cls.value] * len(sizes), [enh] * len(sizes), sizes))
    else:
        shards = [_check_shard(cls.value, enh, n) for n in sizes]
    report = {
        "class": cls.name.lower(),
        "enhanced": default_enhanced(cls, enh),
        "sizes": [args.min_n, args.max_n],
        "scanned": sum(s["scanned"] for s in shards),
        "admissible": sum(s["admissible"] for s in shards),
        "involution_failures": [f for s in shards for f in s["involution_failures"]],
        "label_swap_failures": [f for s in shards for f in s["label_swap_failures"]],
        "per_size": [{k: s[k] for k in ("n", "scanned", "admissible")} for s in shards],
    }
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    print(json.dumps(report, indent=2))
    failed = report["involution_failures"] or report["label_swap_failures"]
    return EXIT_INTERNAL if failed else EXIT_OK


def cmd_enum(args) -> int:
    cls = ObjectClass.from_name(args.cls)
    try:
        seq = list(sequence(cls, bool(args.enhanced), args.terms).terms)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.oracle_check_up_to is not None:
        top = min(args.oracle_check_up_to, len(seq) - 1)
        if top > _max_n_cap():
            print(f"--oracle-check-up-to {top} exceeds ARCNEST_MAX_N={_max_n_cap()}", file=sys.stderr)
            return EXIT_USAGE
        for n in range(top + 1):
            brute = brute_force_count(cls, bool(args.enhanced), n)
            if brute != seq[n]:
                print(f"oracle mismatch at n={n}: series {seq[n]} != brute force {brute}", file=sys.stderr)
                return EXIT_INTERNAL
    if args.json:
        print(json.dumps(seq))
    elif args.oeis:
        for i, v in enumerate(seq):
            print(f"{i} {v}")
    else:
        for v in seq:
            print(v)
    return EXIT_OK


def cmd_render(args) -> int:
    for text in _inputs(args.diagram):
        _, d = parse(text)
        sys.stdout.write(render_svg(d) if args.format == "svg" else render_ascii(d))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcnest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="label, cr/ne, roles and interval types of a diagram")
    p.add_argument("diagram", help="diagram text, or - to read one diagram per line from stdin")
    p.add_argument("--enhanced", action=argparse.BooleanOptionalAction, default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("ptr", help="apply the reverse-labelling involution")
    p.add_argument("diagram")
    p.add_argument("--enhanced", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--coloured-semantics", choices=("def1", "def2"))
    p.add_argument("--step4", choices=("closers", "openers"), default="closers",
                   help="endpoints reversed in the last OCOC step (openers is experimental)")
    p.add_argument("--verify", action="store_true", help="re-apply and check the involution")
    p.set_defaults(func=cmd_ptr)

    p = sub.add_parser("check", help="exhaustive involution and label-swap sweep")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--enhanced", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds (non-deterministic)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enum", help="counts of admissible objects from the generating functions")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--enhanced", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--oracle-check-up-to", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--oeis", action="store_true", help="b-file format: index value")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("render", help="draw a diagram")
    p.add_argument("diagram")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DeflationError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
