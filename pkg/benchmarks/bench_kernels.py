#!/usr/bin/env python3
"""Time the compiled enumeration kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends; results are checked for equality
before the timing is reported.
"""

import argparse
import time

from strandtrace import _kernels_py

try:
    from strandtrace import _kernels
except ImportError:
    _kernels = None

WORKLOADS = [
    (
        "colored_census 9 strands, [1,6]+[4,9]",
        "colored_census",
        (9, [(1, 6), (4, 9)]),
    ),
    (
        "colored_census (2,1) diagram x3 stack",
        "colored_census",
        (6, [(1, 4), (3, 5), (4, 6)]),
    ),
    (
        "restricted_census S_9, empty shape",
        "restricted_census",
        (9, [0] * 9),
    ),
    (
        "restricted_census S_9, staircase-ish bounds",
        "restricted_census",
        (9, [0, 0, 1, 2, 3, 4, 5, 6, 7]),
    ),
    (
        "count_colorings path-20, 3 colors",
        "count_colorings",
        (20, [(i, i + 1) for i in range(1, 20)], 3),
    ),
    (
        "count_colorings cycle-14, 4 colors",
        "count_colorings",
        (14, [(i, i + 1) for i in range(1, 14)] + [(1, 14)], 4),
    ),
]


def run(backend, name, args, repeat):
    fn = getattr(backend, name)
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args()

    print("%-45s %12s %12s %9s" % ("workload", "python (s)", "compiled (s)", "speedup"))
    for label, fn_name, args in WORKLOADS:
        py_time, py_result = run(_kernels_py, fn_name, args, opts.repeat)
        if _kernels is None:
            print("%-45s %12.4f %12s %9s" % (label, py_time, "n/a", "n/a"))
            continue
        c_time, c_result = run(_kernels, fn_name, args, opts.repeat)
        assert py_result == c_result, "backend results differ on %s" % label
        print(
            "%-45s %12.4f %12.4f %8.1fx"
            % (label, py_time, c_time, py_time / c_time if c_time else float("inf"))
        )
    if _kernels is None:
        print("\ncompiled extension not built; showing fallback timings only")


if __name__ == "__main__":
    main()
