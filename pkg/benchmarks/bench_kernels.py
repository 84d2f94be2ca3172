"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-n 16]
"""

import argparse
import timeit

from extquot._backend import available_backends


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=16, help="largest n for the subset scan")
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    if "cython" not in backends:
        print("compiled kernels not built; showing the pure-Python fallback only")

    cases = [(f"wedge_trace_sums({n})", "wedge_trace_sums", (n,)) for n in range(10, args.max_n + 1, 2)]
    cases += [
        (f"lattice_orbit_data({n}, {M})", "lattice_orbit_data", (n, M))
        for n, M in [(4, 20), (5, 12), (6, 8), (7, 6)]
    ]

    header = f"{'kernel':<28}" + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, attr, fargs in cases:
        times = {}
        results = {}
        for name in names:
            fn = getattr(backends[name], attr)
            results[name] = fn(*fargs)
            times[name] = bench(lambda: fn(*fargs), args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<28}" + "".join(f"{times[name] * 1e3:>10.2f}ms" for name in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:>9.0f}x"
        print(row)


if __name__ == "__main__":
    main()
