"""Borel index table for every simple type up to a given rank.

For each type this reports the sampled index (random forms only), the kernel
of the cascade form, the cascade size, and the closed-form prediction, and
writes a JSON record next to the printed table.

    python3 scripts/reproduce_index_table.py --max-rank 8 --out results/index_table.json
"""
import argparse
import json
import time
from pathlib import Path

from liecascade import SamplingConfig, borel, build_algebra, build_cascade, index_estimate, root_system
from liecascade.checks import expected_borel_index
from liecascade.cli import table_types
from liecascade.index import DEFAULT_SEED, cascade_form, index_of_form


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max-rank", type=int, default=8)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--samples", type=int, default=32)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()
    cfg = SamplingConfig(num_samples=args.samples, seed=args.seed, use_cascade=False)

    rows = []
    print(f"{'type':<5}{'dim':>5}{'|I|':>5}{'sampled':>9}{'cascade':>9}{'predicted':>11}{'sec':>7}")
    for t in table_types(args.max_rank):
        start = time.perf_counter()
        rs = root_system(t)
        b = borel(build_algebra(rs))
        rep = index_estimate(b, **cfg.kwargs())
        cf = index_of_form(b, cascade_form(b))
        row = {
            "type": str(t), "dim": b.dim, "cascade_size": len(build_cascade(rs)),
            "sampled_index": rep.index, "cascade_form_index": cf,
            "predicted": expected_borel_index(t), "samples_used": rep.samples_used,
            "seconds": round(time.perf_counter() - start, 3),
        }
        rows.append(row)
        print(f"{row['type']:<5}{row['dim']:>5}{row['cascade_size']:>5}{row['sampled_index']:>9}"
              f"{row['cascade_form_index']:>9}{row['predicted']:>11}{row['seconds']:>7.2f}")

    agree = all(r["sampled_index"] == r["cascade_form_index"] == r["predicted"] for r in rows)
    print("all rows agree" if agree else "MISMATCH")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps({"config": cfg.kwargs(), "rows": rows}, indent=2) + "\n")
    return 0 if agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
