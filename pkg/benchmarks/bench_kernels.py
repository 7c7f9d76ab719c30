"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Outputs of both backends are checked for equality on every case.
"""

import argparse
import timeit

from subpacket import _pycore

try:
    from subpacket import _core
except ImportError:
    _core = None

CASES = [
    ("window_power", (3, 50)),
    ("window_power", (5, 196)),
    ("window_power", (12, 120)),
    ("backward_recursion", (3, 100, 5)),
    ("backward_recursion", (15, 300, 8)),
    ("backward_recursion", (1, 400, 20)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if _core is None:
        print("compiled extension not built; only the fallback is available")

    print(f"{'kernel':<20}{'args':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fargs in CASES:
        py_fn = getattr(_pycore, name)
        t_py = min(timeit.repeat(lambda: py_fn(*fargs), number=1, repeat=args.repeat))
        if _core is None:
            print(f"{name:<20}{str(fargs):<16}{t_py * 1e3:12.3f}{'-':>12}{'-':>10}")
            continue
        cy_fn = getattr(_core, name)
        if cy_fn(*fargs) != py_fn(*fargs):
            raise SystemExit(f"backend mismatch for {name}{fargs}")
        t_cy = min(timeit.repeat(lambda: cy_fn(*fargs), number=1, repeat=args.repeat))
        print(f"{name:<20}{str(fargs):<16}{t_py * 1e3:12.3f}{t_cy * 1e3:12.3f}{t_py / t_cy:9.2f}x")


if __name__ == "__main__":
    main()
