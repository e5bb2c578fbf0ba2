"""Compiled vs pure-Python float kernels.

    python3 benchmarks/bench_kernels.py [--k 20000] [--points 5] [--repeat 3]

Times best-first enumeration of the ``k`` shortest curves and the descent to
the minimal triple at a few random float points of each surface, checks that
both backends return identical lists, and prints a table.
"""

import argparse
import random
import time

from systoles import kernels, make_point
from systoles.curvetree import FLOAT_SLACK, root_triple


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=20000)
    ap.add_argument("--points", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if "compiled" not in kernels.AVAILABLE:
        print("compiled extension not built; only the Python backend is available")
    rng = random.Random(args.seed)
    rows = []
    for surface in ("s11", "s04"):
        for _ in range(args.points):
            # far from the fundamental region so descent has work to do
            p = make_point(surface, rng.uniform(0.01, 0.1), rng.uniform(5.0, 50.0))
            t = root_triple(p)
            vals, slopes, shift = t.values, t.slopes(), p.surface.markoff_shift
            res, times = {}, {}
            for name in kernels.AVAILABLE:
                with kernels.backend(name):
                    res[name] = kernels.enumerate_float(vals, slopes, shift, args.k, FLOAT_SLACK)
                    times[name] = (
                        _best(lambda: kernels.enumerate_float(vals, slopes, shift, args.k, FLOAT_SLACK),
                              args.repeat),
                        _best(lambda: kernels.descend_float(vals, slopes, shift, FLOAT_SLACK),
                              args.repeat),
                    )
            if len(res) == 2:
                assert res["compiled"] == res["python"], "backends disagree"
            rows.append((surface, p.alpha, p.beta, times))

    print(f"{'surface':8}{'alpha':>10}{'beta':>10}{'backend':>10}{'enum [s]':>12}{'descend [s]':>14}")
    totals = {}
    for surface, a, b, times in rows:
        for name, (te, td) in times.items():
            totals.setdefault(name, [0.0, 0.0])
            totals[name][0] += te
            totals[name][1] += td
            print(f"{surface:8}{a:10.4f}{b:10.4f}{name:>10}{te:12.5f}{td:14.6f}")
    if len(totals) == 2:
        sp = totals["python"][0] / totals["compiled"][0]
        sd = totals["python"][1] / totals["compiled"][1]
        print(f"speedup (python / compiled): enumerate {sp:.1f}x, descend {sd:.1f}x, k={args.k}")


if __name__ == "__main__":
    main()
