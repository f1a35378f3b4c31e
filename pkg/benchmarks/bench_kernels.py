"""Compare the compiled kernels with the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from pa_interference import _purepy

try:
    from pa_interference import _kernels
except ImportError:
    _kernels = None

OMEGA, DELTA, EPS = 5.4, 0.5, 0.65


def cases(mod):
    qs = np.linspace(-3, 3, 2001)
    return {
        "lowest_energies (2001 q)": lambda: mod.lowest_energies(OMEGA, DELTA, EPS, qs),
        "lowest_energy x 200 (scalar)": lambda: [mod.lowest_energy(OMEGA, DELTA, EPS, q) for q in qs[:200]],
        "dense_scan_min (step 1e-5)": lambda: mod.dense_scan_min(OMEGA, DELTA, EPS, 1e-5, 3.0),
    }


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = {"python": _purepy}
    if _kernels is not None:
        mods["compiled"] = _kernels
    else:
        print("compiled extension not built; timing the fallback only")
    results = {name: {k: best(f, args.repeat) for k, f in cases(m).items()} for name, m in mods.items()}
    print(f"{'kernel':<32}" + "".join(f"{n:>12}" for n in mods) + ("     speedup" if len(mods) == 2 else ""))
    for k in results["python"]:
        row = f"{k:<32}" + "".join(f"{results[n][k] * 1e3:>10.2f}ms" for n in mods)
        if len(mods) == 2:
            row += f"{results['python'][k] / results['compiled'][k]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
