"""Command-line front end.

    liecascade roots   --type G2
    liecascade cascade --type F4 --format json
    liecascade index   --type E6 --algebra borel
    liecascade index   --type A2 --algebra d_m --parabolic 1
    liecascade structure --type A2
    liecascade table   --max-rank 8
    liecascade verify  --suite gamma-partition --type E7

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .cascade import build_cascade, format_word
from .chevalley import (
    borel,
    build_algebra,
    build_d_m,
    nilradical_n,
    parabolic,
    parabolic_nilradical,
    parabolic_q_plus,
)
from .index import DEFAULT_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED, SamplingConfig, index_estimate
from .roots import SimpleType, parse_type, root_system

ALGEBRAS = ("borel", "nilradical", "parabolic", "d_m")

VERIFY_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5",
                "D4", "D5", "G2", "F4", "E6"]


def table_types(max_rank: int) -> list[SimpleType]:
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        out += [SimpleType(fam, r) for r in range(lo, max_rank + 1)]
    out += [SimpleType("E", r) for r in (6, 7, 8) if r <= max_rank]
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    if max_rank >= 2:
        out.append(SimpleType("G", 2))
    return out


def _fmt_root(a) -> str:
    return "[" + ",".join(map(str, a)) + "]"


def _emit(fmt: str, data, tsv_rows: list[list], pretty: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    elif fmt == "tsv":
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        for line in pretty:
            print(line)


def cmd_roots(args) -> int:
    rs = root_system(args.type)
    pos = rs.positive_roots
    data = {
        "type": str(rs.type),
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "count": len(pos),
        "highest_root": list(pos[-1]),
        "positive_roots": [list(a) for a in pos],
    }
    rows = [["height", "root"]] + [[sum(a), _fmt_root(a)] for a in pos]
    pretty = [f"{rs.type}: {len(pos)} positive roots, highest root {_fmt_root(pos[-1])}"]
    pretty += [f"  {sum(a):>3}  {_fmt_root(a)}" for a in pos]
    _emit(args.format, data, rows, pretty)
    return 0


def cmd_cascade(args) -> int:
    rs = root_system(args.type)
    c = build_cascade(rs)
    data = {"type": str(rs.type), "size": len(c), "tree": c.to_json()}
    rows = [["word", "beta", "subsystem"]] + [[format_word(n.word), _fmt_root(n.beta), n.type_label] for n in c]
    pretty = [f"{rs.type}: {len(c)} strongly orthogonal roots"]
    pretty += [f"  {'  ' * (n.depth - 1)}{format_word(n.word):<10} {_fmt_root(n.beta):<28} {n.type_label}"
               for n in c]
    _emit(args.format, data, rows, pretty)
    return 0


def _subalgebra(args):
    rs = root_system(args.type)
    alg = build_algebra(rs)
    ex = args.parabolic
    if args.algebra == "borel":
        return borel(alg)
    if args.algebra == "nilradical":
        return nilradical_n(alg) if ex is None else parabolic_nilradical(alg, ex)
    if ex is None:
        ex = list(range(1, rs.rank + 1))
    if args.algebra == "parabolic":
        return parabolic(alg, ex)
    return build_d_m(alg, build_cascade(rs), parabolic_q_plus(rs, ex))


def _sampling(args) -> SamplingConfig:
    return SamplingConfig(num_samples=args.samples, seed=args.seed, coeff_bound=args.bound)


def cmd_index(args) -> int:
    sub = _subalgebra(args)
    rep = index_estimate(sub, **_sampling(args).kwargs())
    data = rep.to_json()
    data["type"] = str(args.type)
    keys = ["type", "algebra", "dim", "index", "rank", "samples", "seed", "cascade_form_index"]
    rows = [keys, [data[k] for k in keys]]
    extra = f", cascade form index {rep.cascade_form_index}" if rep.cascade_form_rank is not None else ""
    pretty = [f"{args.type} {rep.algebra_name}: dim {rep.dimension}, index {rep.index} "
              f"(rank {rep.best_rank}){extra}; {rep.samples_used} samples, seed {rep.seed}"]
    _emit(args.format, data, rows, pretty)
    return 0


def cmd_structure(args) -> int:
    sub = _subalgebra(args) if args.algebra else None
    table = sub.table if sub is not None else build_algebra(root_system(args.type))
    data = {"type": str(args.type), "algebra": sub.name if sub else "g", **table.to_json()}
    rows = [["i", "j", "bracket"]]
    pretty = [f"{args.type} {data['algebra']}: dim {table.dim}"]
    lab = table.labels
    for i, j, terms in data["brackets"]:
        rhs = " + ".join(f"{c}*{lab[k]}" for k, c in terms)
        rows.append([lab[i], lab[j], rhs])
        pretty.append(f"  [{lab[i]}, {lab[j]}] = {rhs}")
    _emit(args.format, data, rows, pretty)
    return 0


def cmd_table(args) -> int:
    rows_out = []
    for t in table_types(args.max_rank):
        rs = root_system(t)
        b = borel(build_algebra(rs))
        rep = index_estimate(b, **_sampling(args).kwargs())
        size = len(build_cascade(rs))
        want = checks.expected_borel_index(t)
        rows_out.append({
            "type": str(t), "rank": t.rank, "dim": rep.dimension, "cascade": size,
            "index": rep.index, "cascade_form_index": rep.cascade_form_index,
            "expected": want, "rank_minus_cascade": t.rank - size,
            "ok": rep.index == want == t.rank - size == rep.cascade_form_index,
        })
    keys = list(rows_out[0]) if rows_out else []
    rows = [keys] + [[r[k] for k in keys] for r in rows_out]
    pretty = [f"{'type':<5}{'dim':>5}{'|I|':>5}{'index':>7}{'expected':>10}  ok"]
    pretty += [f"{r['type']:<5}{r['dim']:>5}{r['cascade']:>5}{r['index']:>7}{r['expected']:>10}  "
               f"{'yes' if r['ok'] else 'NO'}" for r in rows_out]
    _emit(args.format, {"max_rank": args.max_rank, "rows": rows_out}, rows, pretty)
    return 0 if all(r["ok"] for r in rows_out) else 1


def cmd_verify(args) -> int:
    suites = args.suite or list(checks.SUITES)
    types = args.type or [parse_type(t) for t in VERIFY_TYPES]
    results = []
    for t in types:
        ctx = checks.TypeContext(t, fault=args.inject_fault, seed=args.seed)
        for name in suites:
            fails = checks.run_suite(name, ctx)
            results.append({"suite": name, "type": str(t), "passed": not fails, "failures": fails})
    ok = all(r["passed"] for r in results)
    rows = [["suite", "type", "passed", "failures"]] + \
        [[r["suite"], r["type"], r["passed"], "; ".join(r["failures"])] for r in results]
    pretty = []
    for r in results:
        pretty.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['suite']:<22} {r['type']}")
        pretty += [f"      {m}" for m in r["failures"]]
    pretty.append(f"{sum(r['passed'] for r in results)}/{len(results)} suites passed")
    _emit(args.format, {"passed": ok, "results": results}, rows, pretty)
    return 0 if ok else 1


def _type_arg(s: str) -> SimpleType:
    try:
        return parse_type(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _type_list(s: str) -> list[SimpleType]:
    return [_type_arg(x) for x in s.split(",") if x]


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _suite_list(s: str) -> list[str]:
    names = [x for x in s.split(",") if x]
    for n in names:
        if n not in checks.SUITES:
            raise argparse.ArgumentTypeError(f"unknown suite {n!r}")
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sampling.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sampling.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                          help="random form coefficients lie in [-bound, bound]")
    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--type", type=_type_arg, required=True, help="e.g. A3, B5, E6")
    algebra.add_argument("--parabolic", type=_int_list, default=None,
                         help="excluded simple roots (1-based), e.g. 1,3")

    p = argparse.ArgumentParser(prog="liecascade", description=__doc__.split("\n")[0])
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("roots", parents=[common], help="positive roots and highest root")
    s.add_argument("--type", type=_type_arg, required=True)
    s.set_defaults(func=cmd_roots)

    s = subs.add_parser("cascade", parents=[common], help="maximal strongly orthogonal set")
    s.add_argument("--type", type=_type_arg, required=True)
    s.set_defaults(func=cmd_cascade)

    s = subs.add_parser("index", parents=[common, sampling, algebra], help="index of a subalgebra")
    s.add_argument("--algebra", choices=ALGEBRAS, default="borel")
    s.set_defaults(func=cmd_index)

    s = subs.add_parser("structure", parents=[common, algebra], help="structure constants")
    s.add_argument("--algebra", choices=ALGEBRAS, default=None)
    s.set_defaults(func=cmd_structure)

    s = subs.add_parser("table", parents=[common, sampling], help="Borel index table")
    s.add_argument("--max-rank", type=int, default=8)
    s.set_defaults(func=cmd_table)

    s = subs.add_parser("verify", parents=[common], help="run property suites")
    s.add_argument("--suite", type=_suite_list, default=None,
                   help=f"comma-separated subset of: {', '.join(checks.SUITES)}")
    s.add_argument("--type", type=_type_list, default=None)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--inject-fault", action="store_true",
                   help="flip one structure constant to exercise the Jacobi suite")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "parabolic", None) is not None:
        rank = args.type.rank
        if any(not 1 <= i <= rank for i in args.parabolic):
            parser.error(f"--parabolic indices must lie in 1..{rank}")
    for name in ("samples", "bound"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name} must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
