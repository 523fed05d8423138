"""Time the bitmask kernels under numba and under plain numpy.

    python3 benchmarks/bench_kernels.py [--sizes 40 120 300] [--repeat 5]

Both backends are imported directly, so the environment flag is not needed.
Outputs are compared before timing.
"""

import argparse
import random
import time

import numpy as np

from ordchoquet import _kernels_numba as nb_k
from ordchoquet import _kernels_numpy as np_k
from ordchoquet import generators as gen


def instance(m: int, n: int, seed: int):
    rng = random.Random(seed)
    fam = sorted(gen._covered_family(rng, n, m, m))
    rng.shuffle(fam)
    pairs = [(i, j) for i in range(len(fam)) for j in range(i + 1, len(fam)) if rng.random() < 0.05]
    sys = gen._from_masks_explicit(n, fam, pairs)
    return sys.mask_array, np.ascontiguousarray(sys.leq)


def calls(k, masks, leq):
    rel = leq & ~np.eye(len(masks), dtype=bool)
    z = leq.astype(np.int64)
    full = int(np.bitwise_or.reduce(masks))
    return {
        "closure": lambda: k.closure(rel),
        "unit_lower_inverse": lambda: k.unit_lower_inverse(z),
        "containment_matrix": lambda: k.containment_matrix(masks),
        "maximal_in": lambda: k.maximal_in(masks, full),
        "union_witness": lambda: k.union_witness(masks, True),
        "consecutive_witness": lambda: k.consecutive_witness(masks, leq),
        "is1_witness": lambda: k.is1_witness(masks, leq),
        "co_intersecting": lambda: k.co_intersecting(masks),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 120, 300])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':<22}{'m':>5}{'numba ms':>12}{'numpy ms':>12}{'ratio':>8}")
    for m in args.sizes:
        masks, leq = instance(m, args.n, seed=m)
        fast, slow = calls(nb_k, masks, leq), calls(np_k, masks, leq)
        for name in fast:
            a, b = fast[name](), slow[name]()  # warm-up compiles the numba version
            assert np.array_equal(np.asarray(a), np.asarray(b)), name
            tn = best_of(fast[name], args.repeat) * 1e3
            tp = best_of(slow[name], args.repeat) * 1e3
            print(f"{name:<22}{len(masks):>5}{tn:>12.3f}{tp:>12.3f}{tp / max(tn, 1e-9):>8.1f}")


if __name__ == "__main__":
    main()
