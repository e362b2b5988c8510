"""Compare the compiled and pure-Python ideal-counting kernels.

    python3 benchmarks/bench_oracle.py [--repeat 3]
"""
import argparse
import timeit

from whitney import crown, fap, fence, whitney_oracle
from whitney import poset as poset_mod

CASES = [
    ("fence(20)", lambda: fence(20)),
    ("fence(25)", lambda: fence(25)),
    ("fence(28)", lambda: fence(28)),
    ("crown(12)", lambda: crown(12)),
    ("fap(7,10,6,7)", lambda: fap(7, 10, 6, 7)),
]


def bench(P, kernel, repeat):
    bounds = {"max_elements": len(P)}
    return min(timeit.repeat(lambda: whitney_oracle(P, kernel=kernel, **bounds), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    have_ext = poset_mod._oracle_ext is not None
    if not have_ext:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'poset':<16}{'ideals':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, make in CASES:
        P = make()
        ideals = whitney_oracle(P, max_elements=len(P)).total
        py = bench(P, "python", args.repeat)
        if have_ext:
            cy = bench(P, "cython", args.repeat)
            assert whitney_oracle(P, kernel="cython", max_elements=len(P)) == \
                whitney_oracle(P, kernel="python", max_elements=len(P))
            print(f"{name:<16}{ideals:>10}{py:>12.4f}{cy:>12.4f}{py / cy:>9.0f}x")
        else:
            print(f"{name:<16}{ideals:>10}{py:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
