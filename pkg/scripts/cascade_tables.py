"""Print the cascade of each simple type with its Gamma-set sizes.

    python3 scripts/cascade_tables.py B6 E8
    python3 scripts/cascade_tables.py --all
"""
import argparse

from liecascade import build_cascade, gamma_set, root_system
from liecascade.cascade import format_word
from liecascade.cli import table_types


def show(name: str) -> None:
    rs = root_system(name)
    c = build_cascade(rs)
    total = 0
    print(f"{rs.type}  |Delta+| = {len(rs.positive_roots)}  |cascade| = {len(c)}")
    for node in c:
        g = len(gamma_set(c, node.word).roots)
        total += g
        beta = " ".join(map(str, node.beta))
        print(f"  {'  ' * (node.depth - 1)}{format_word(node.word):<8} [{beta}]  {node.type_label:<4} |Gamma| = {g}")
    print(f"  sum |Gamma| = {total}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("types", nargs="*")
    ap.add_argument("--all", action="store_true", help="every type up to rank 8")
    args = ap.parse_args()
    names = [str(t) for t in table_types(8)] if args.all else (args.types or ["G2", "F4", "E6"])
    for n in names:
        show(n)


if __name__ == "__main__":
    main()
