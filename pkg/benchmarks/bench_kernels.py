"""Time the compiled bitset kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 7]
"""

from __future__ import annotations

import argparse
import timeit

from twoclub import _purekernels, kernels
from twoclub.generators import gnp


def _cases(seed: int):
    return [
        ("gnp n=40 p=0.3", gnp(40, 0.3, seed=seed)),
        ("gnp n=120 p=0.1", gnp(120, 0.1, seed=seed)),
        ("gnp n=20 p=0.25", gnp(20, 0.25, seed=seed)),
    ]


def _workloads(mod, g):
    adj = mod.prepare(g.masks)
    full = g.all_mask
    return {
        "ball_mask(all v, t=2)": lambda: [mod.ball_mask(adj, full, v, 2) for v in range(g.n)],
        "is_s_club(all)": lambda: mod.is_s_club(adj, full, 2),
        "dual_levels": lambda: mod.dual_levels(adj, full, 2, 1, 1),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    fast = kernels.compiled()
    if fast is None:
        print("compiled extension not built; run `python setup.py build_ext --inplace` first")
        return 1
    print(f"{'case':<18} {'kernel':<24} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, g in _cases(args.seed):
        pure_w, fast_w = _workloads(_purekernels, g), _workloads(fast, g)
        for kernel in pure_w:
            if kernel == "dual_levels" and g.n > 24:
                continue
            tp = min(timeit.repeat(pure_w[kernel], number=1, repeat=args.repeat)) * 1e3
            tc = min(timeit.repeat(fast_w[kernel], number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<18} {kernel:<24} {tp:>10.3f} {tc:>12.3f} {tp / max(tc, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
