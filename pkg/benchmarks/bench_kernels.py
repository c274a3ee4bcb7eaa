"""Compare the compiled and pure-Python integer kernels.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is checked for equal output on both backends before it is
timed.  The compiled backend must have been built; otherwise the script says
so and exits with status 1.  Workloads are sized so the compiled kernels stay
inside int64; larger inputs fall back to pure Python in normal use.
"""
from __future__ import annotations

import argparse
import sys
import timeit
from fractions import Fraction

from affine_current_kit.kernels import backend_module
from affine_current_kit.lattice import _schur_levels

# E8 root lattice in the Kac numbering (chain 1-7, node 8 attached to node 5).
E8 = [[Fraction(0)] * 8 for _ in range(8)]
for i in range(8):
    E8[i][i] = Fraction(2)
for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]:
    E8[a][b] = E8[b][a] = Fraction(-1)

D4 = [[Fraction(x) for x in row] for row in ([2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2])]


def workloads():
    series = [(-1) ** i * (i % 7 + 1) for i in range(600)]
    # Plain root lattices: step 1, no shift, so vmax bounds y^T G y directly.
    e8 = _schur_levels(E8)
    d4 = _schur_levels(D4)
    return [
        ("convolve n=600", "convolve", (series, series, 599)),
        ("euler_inverse_power dim=8 n=40", "euler_inverse_power", (8, 40)),
        ("euler_inverse_power dim=1 n=300", "euler_inverse_power", (1, 300)),
        ("theta_counts E8 norm<=8", "theta_counts", (e8, [0] * 8, 1, 8)),
        ("theta_counts D4 norm<=24", "theta_counts", (d4, [0] * 4, 1, 24)),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timed runs per workload (best is reported)")
    args = ap.parse_args(argv)
    pure = backend_module("pure")
    try:
        native = backend_module("native")
    except ImportError:
        print("compiled kernels are not built; reinstall with Cython and a C compiler", file=sys.stderr)
        return 1

    print(f"{'workload':36s} {'pure (ms)':>11s} {'native (ms)':>12s} {'speedup':>9s}")
    for label, fname, call_args in workloads():
        fp, fn = getattr(pure, fname), getattr(native, fname)
        if fp(*call_args) != fn(*call_args):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: fp(*call_args), number=1, repeat=args.repeat))
        tn = min(timeit.repeat(lambda: fn(*call_args), number=1, repeat=args.repeat))
        print(f"{label:36s} {tp * 1e3:11.2f} {tn * 1e3:12.2f} {tp / tn:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
