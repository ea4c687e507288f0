"""Regenerate the cubic catalog strings and compare them with the embedded ones."""

import argparse

from faircoal.catalog import cubic_catalog
from faircoal.enumeration import cubic_graphs
from faircoal.graph import to_graph6


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+", default=[4, 6, 8, 10])
    args = parser.parse_args()
    for order in args.orders:
        fresh = [to_graph6(g) for g in cubic_graphs(order)]
        stored = [e.graph6 for e in cubic_catalog(order)]
        status = "matches" if fresh == stored else "DIFFERS from"
        print(f"order {order}: {len(fresh)} graphs, {status} the embedded catalog")
        print("    " + repr(fresh))


if __name__ == "__main__":
    main()
