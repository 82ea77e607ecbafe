"""Compiled vs pure-Python GF(2) rank.

    python benchmarks/bench_gf2.py [--repeat 5]

Times both backends on random sparse matrices and on boundary matrices of
real surgery cones, checks they agree, and prints a table.  The last
column is :func:`dualknot.gf2.rank`, which picks a backend by row density.
"""

import argparse
import random
import time

from dualknot import gf2
from dualknot.cfk import builtin
from dualknot.domains import TestDomain
from dualknot.fcomplex import _boundary_rows
from dualknot.surgery import ConeSpec, build_cone


def random_rows(n, density, seed):
    rng = random.Random(seed)
    return [sum(1 << c for c in range(n) if rng.random() < density) for _ in range(n)], n


def cone_rows(name, p, q, sbar, domain, bound):
    c = build_cone(ConeSpec(builtin(name), p, q, sbar, domain).with_bound(bound), check=False)
    return _boundary_rows(c, list(c.basis))


def best_of(fn, rows, ncols, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        r = fn(list(rows), ncols)
        times.append(time.perf_counter() - t0)
    return r, min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if gf2._gf2ext is None:
        raise SystemExit("compiled kernel not built; run: pip install --no-build-isolation -e .")

    cases = [
        ("random 200 x 200, 5%", random_rows(200, 0.05, 1)),
        ("random 800 x 800, 1%", random_rows(800, 0.01, 2)),
        ("random 2000 x 2000, 0.5%", random_rows(2000, 0.005, 3)),
        ("t25 3/2 box(-4,4,-4,4) B=40", cone_rows("t25", 3, 2, 0, TestDomain.box(-4, 4, -4, 4), 40)),
        ("figure8 5/3 line_i(0) B=200", cone_rows("figure8", 5, 3, 1, TestDomain.line_i(0), 200)),
    ]
    print(f"{'case':34} {'n':>6} {'rank':>6} {'python ms':>10} {'cython ms':>10} {'speedup':>8} {'dispatch ms':>12}")
    for label, (rows, ncols) in cases:
        r_py, t_py = best_of(gf2.rank_python, rows, ncols, args.repeat)
        r_cy, t_cy = best_of(gf2.rank_cython, rows, ncols, args.repeat)
        r_auto, t_auto = best_of(gf2.rank, rows, ncols, args.repeat)
        assert r_py == r_cy == r_auto, label
        print(f"{label:34} {len(rows):6d} {r_py:6d} {1e3 * t_py:10.2f} {1e3 * t_cy:10.2f} "
              f"{t_py / t_cy:8.1f}x {1e3 * t_auto:12.2f}")


if __name__ == "__main__":
    main()
