"""Time the compiled and numpy kernels on the same parameter stacks.

    python benchmarks/bench_kernels.py [--sizes 1 100 10000] [--repeat 5]

Prints one row per (kernel, batch size) with the best wall time of each
backend, the speedup and the largest disagreement between them.
``from_matrix`` is plain indexing and both backends share the numpy version.
"""

import argparse
import time

import numpy as np

from dirac4 import params
from dirac4.kernels import available_backends


def _best(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1, 100, 10000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the numpy backend is available")
    py = backends["python"]
    cy = backends.get("cython")
    rng = np.random.default_rng(args.seed)

    print(f"{'kernel':<12}{'batch':>8}{'python [s]':>14}{'cython [s]':>14}{'speedup':>10}{'max diff':>12}")
    for n in args.sizes:
        P1, P2 = params.random_params(rng, n), params.random_params(rng, n)
        G = py.to_matrix(P1)
        cases = {
            "compose": lambda b: b.compose(P1, P2),
            "adjugate": lambda b: b.adjugate(P1),
            "det_exp": lambda b: b.det_expanded(P1),
            "det_compact": lambda b: b.det_compact(P1),
            "to_matrix": lambda b: b.to_matrix(P1),
            "from_matrix": lambda b: b.from_matrix(G),
        }
        for name, call in cases.items():
            t_py = _best(lambda: call(py), args.repeat)
            if cy is None:
                print(f"{name:<12}{n:>8}{t_py:>14.3e}{'-':>14}{'-':>10}{'-':>12}")
                continue
            t_cy = _best(lambda: call(cy), args.repeat)
            diff = float(np.max(np.abs(np.asarray(call(py)) - np.asarray(call(cy)))))
            print(f"{name:<12}{n:>8}{t_py:>14.3e}{t_cy:>14.3e}{t_py / t_cy:>10.1f}{diff:>12.1e}")


if __name__ == "__main__":
    main()
