"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from lerchkit._kernels import _pykernels as py
from lerchkit.special._bernoulli import EM_WEIGHTS

try:
    from lerchkit._kernels import _ckernels as cy
except ImportError:
    cy = None


def inputs(n=200, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        z = complex(rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55))
        s = complex(rng.uniform(0.5, 3), rng.uniform(-1, 1))
        v = complex(rng.uniform(0.5, 3), rng.uniform(-1, 1))
        out.append((z, s, v))
    return out


def workloads(mod, data):
    w = EM_WEIGHTS[:8]
    return {
        "lerch_series": lambda: [mod.lerch_series(z, s, v, 2.0 ** -55, 10 ** 6) for z, s, v in data],
        "hurwitz_em": lambda: [mod.hurwitz_em(s, v, 14, w) for _, s, v in data],
        "lerch_negint": lambda: [mod.lerch_negint(1 / z, 4, v) for z, _, v in data],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    data = inputs()
    backends = {"python": py}
    if cy is not None:
        backends["cython"] = cy
    else:
        print("compiled kernels not built; timing Python only")
    results = {}
    for name, mod in backends.items():
        for job, fn in workloads(mod, data).items():
            best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            results[job, name] = best
    print(f"{'kernel':<14}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for job in ("lerch_series", "hurwitz_em", "lerch_negint"):
        p = results[job, "python"] * 1e3
        line = f"{job:<14}{p:>12.2f}"
        if (job, "cython") in results:
            c = results[job, "cython"] * 1e3
            line += f"{c:>12.2f}{p / c:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
