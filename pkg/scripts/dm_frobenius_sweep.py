"""Sweep d_m over parabolic subalgebras and report any with nonzero index.

By default every subset of simple roots is tried for each type of rank at
most 5, plus G2 and F4.  ``--exhaustive-up-to 8`` extends the full sweep to
the larger types (E8 alone has 256 parabolics).

    python3 scripts/dm_frobenius_sweep.py
    python3 scripts/dm_frobenius_sweep.py --types E6,E7 --exhaustive-up-to 7
"""
import argparse
import time

from liecascade import SamplingConfig, build_algebra, build_cascade, build_d_m, index_estimate, parabolic_q_plus
from liecascade.checks import parabolic_choices
from liecascade.roots import parse_type, root_system

DEFAULT_TYPES = ("A1,A2,A3,A4,A5,B2,B3,B4,B5,C2,C3,C4,C5,D4,D5,G2,F4")


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--types", default=DEFAULT_TYPES)
    ap.add_argument("--exhaustive-up-to", type=int, default=5)
    ap.add_argument("--seed", type=int, default=SamplingConfig().seed)
    args = ap.parse_args()
    cfg = SamplingConfig(seed=args.seed)

    failures = 0
    for name in args.types.split(","):
        t = parse_type(name)
        start = time.perf_counter()
        rs = root_system(t)
        g, c = build_algebra(rs), build_cascade(rs)
        subsets = parabolic_choices(rs.rank, exhaustive_up_to=args.exhaustive_up_to)
        dims = []
        for ex in subsets:
            d = build_d_m(g, c, parabolic_q_plus(rs, ex))
            rep = index_estimate(d, **cfg.kwargs())
            dims.append(d.dim)
            if rep.index:
                failures += 1
                print(f"  {t} excluded={list(ex)}: dim {d.dim}, index {rep.index}")
        print(f"{str(t):<4} {len(subsets):>4} parabolics  max dim {max(dims):>4}  "
              f"{time.perf_counter() - start:6.2f}s")
    print("all Frobenius" if not failures else f"{failures} non-Frobenius cases")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
