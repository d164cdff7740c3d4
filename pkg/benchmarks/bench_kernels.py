"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from supertask import kernels


def workloads():
    rng = random.Random(0)
    n = 5000
    succ = [rng.randrange(n) for _ in range(n)]
    parity = [1 - d % 2 for d in kernels.backends()["python"].spigot_digits(1011)][:1000]
    return {
        "spigot_digits(1011)": lambda k: k.spigot_digits(1011),
        "period_scan(1000, 500, 50)": lambda k: k.period_scan(parity, 500, 50),
        "rho x100 (5000 states)": lambda k: [k.rho(succ, s) for s in range(100)],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
    print(f"{'workload':<30}" + "".join(f"{name:>12}" for name in sorted(backends)) + "   speedup")
    for label, fn in workloads().items():
        times = {}
        for name, mod in sorted(backends.items()):
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:<30}" + "".join(f"{times[n]:>11.4f}s" for n in sorted(times))
        if "compiled" in times:
            row += f"   {times['python'] / times['compiled']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
