"""Exhaustive search over all-3 sequences of length 3..N, written as CSV."""

import argparse
import sys

from trimulti.oracle import CENSUS_MAX_N, proposition_census


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=CENSUS_MAX_N)
    p.add_argument("--deadline", type=float, default=None)
    args = p.parse_args()
    rows = proposition_census(args.n_max, deadline=args.deadline)
    out = sys.stdout
    out.write("n,exists,nodes_explored,four_divides_n\n")
    for r in rows:
        out.write(f"{r.n},{str(r.exists).lower()},{r.nodes_explored},{str(r.n % 4 == 0).lower()}\n")


if __name__ == "__main__":
    main()
