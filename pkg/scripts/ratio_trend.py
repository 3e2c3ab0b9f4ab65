"""Print the exact census ratios of GL_n(q) / GU_n(q) for a range of q.

    python3 scripts/ratio_trend.py --family gl --n 2 --q 2 3 4 5 7 8 9 11 13
"""
import argparse
import csv
import sys

from liecensus.census import theorem_ratios
from liecensus.gf import FieldError, prime_power
from liecensus.polyspace import signed_q

COLUMNS = ("q", "classes", "irr_r", "center_qrank", "semisimple", "regular_semisimple",
           "srs0", "rA", "rB_ss", "rB_rs", "r_srs0", "rC")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=("gl", "gu"), default="gl")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5, 7, 8, 9, 11, 13])
    ap.add_argument("--float", action="store_true", help="also print rounded decimals")
    args = ap.parse_args(argv)

    eps = 1 if args.family == "gl" else -1
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(COLUMNS)
    for q in args.q:
        try:
            prime_power(q)
        except FieldError:
            print(f"skipping q={q}: not a prime power", file=sys.stderr)
            continue
        row = theorem_ratios(args.n, signed_q(q, eps)).as_dict()
        if args.float:
            for name in ("rA", "rB_ss", "rB_rs", "r_srs0", "rC"):
                if row[name] is not None:
                    num, _, den = row[name].partition("/")
                    row[name] = f"{row[name]} ({int(num) / int(den or 1):.4f})"
        writer.writerow([row[c] for c in COLUMNS])


if __name__ == "__main__":
    main()
