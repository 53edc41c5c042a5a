"""Time the compiled and pure-Python summation kernels side by side.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is run at the sizes the library uses by default (5000 terms for
the phase and identity sums near t = 14, 24000 at t = 120). The last column
is the largest disagreement between the two backends.
"""

import argparse
import timeit

from zetaphase import kernels, phase_series

CASES = [
    ("phase_sum", (14.134725, 5000)),
    ("phase_sum", (120.0, 24000)),
    ("identity_sum", (21.022, 5000)),
    ("identity_sum", (120.0, 24000)),
    ("weierstrass_sum", (0.5, 50.0, 4096)),
    ("eta_sum", (0.5, 100.0, 120)),
]


def best_time(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    opts = parser.parse_args()

    names = kernels.available_backends()
    if "cython" not in names:
        print("compiled extension not built; only the Python backend is available")
    header = f"{'kernel':<16}{'args':<24}" + "".join(f"{n + ' ms':>14}" for n in names)
    print(header + (f"{'speedup':>10}{'max diff':>12}" if len(names) > 1 else ""))
    for fname, args in CASES:
        times, outputs = [], []
        for name in names:
            fn = getattr(kernels.get_backend(name), fname)
            times.append(best_time(fn, args, opts.repeat))
            outputs.append(fn(*args))
        line = f"{fname:<16}{str(args):<24}" + "".join(f"{1e3 * t:>14.3f}" for t in times)
        if len(names) > 1:
            diff = max(abs(a - b) for a, b in zip(outputs[0][:-1], outputs[1][:-1]))
            line += f"{times[0] / times[1]:>10.1f}{diff:>12.1e}"
        print(line)

    print()
    for name in names:
        with kernels.using_backend(name):
            t = best_time(phase_series, (77.7,), opts.repeat)
        print(f"phase_series(77.7) with {name:<7} backend: {1e3 * t:8.2f} ms")


if __name__ == "__main__":
    main()
