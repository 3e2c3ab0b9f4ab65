"""Compare the label census with brute-force class tables on every small group.

Groups up to ``--max-order`` elements are built explicitly; for each one the
class count, semisimple / regular semisimple / srs0 counts and the number of
classes fixed by each z_k are checked against the census.  Exits 1 on any
mismatch.
"""
import argparse
import sys
import time

from liecensus.census import c_n, c_n_k, count_regular_semisimple, count_semisimple, count_srs0
from liecensus.matgroup import GroupSpec, build_group, central_fixed_classes, conjugacy_classes

GROUPS = [("GL", 1, 7), ("GL", 2, 2), ("GL", 2, 3), ("GL", 2, 4), ("GL", 2, 5), ("GL", 2, 7),
          ("GL", 3, 2), ("GL", 3, 3), ("GL", 4, 2), ("GU", 1, 5), ("GU", 2, 2), ("GU", 2, 3),
          ("GU", 2, 4), ("GU", 2, 5), ("GU", 3, 2)]


def sweep(max_order):
    bad = 0
    for family, n, q in GROUPS:
        spec = GroupSpec(family, n, q)
        if spec.order_formula() > max_order:
            print(f"{spec}: skipped, order {spec.order_formula()}")
            continue
        t0 = time.perf_counter()
        table = conjugacy_classes(build_group(spec, max_order))
        sq = spec.sq
        got = (len(table), table.count("semisimple"), table.count("regular_semisimple"), table.count("srs0"))
        want = (c_n(n, sq.eps)(q), count_semisimple(n, sq)[0],
                count_regular_semisimple(n, sq), count_srs0(n, sq))
        ks = [k for k in range(1, sq.center_order + 1) if sq.center_order % k == 0]
        fixed = [central_fixed_classes(table, k) for k in ks]
        fixed_want = [c_n_k(n, k, sq.eps)(q) for k in ks]
        ok = got == want and fixed == fixed_want
        bad += not ok
        print(f"{spec}: |G|={len(table.group)} classes/ss/rs/srs0={got} fixed={fixed} "
              f"{'ok' if ok else f'MISMATCH want {want} {fixed_want}'} ({time.perf_counter() - t0:.1f}s)")
    return bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=20_000)
    args = ap.parse_args(argv)
    sys.exit(1 if sweep(args.max_order) else 0)


if __name__ == "__main__":
    main()
