"""Time the compiled and pure-Python kernels on the same batch.

    python benchmarks/bench_kernels.py --batch 5000 --repeat 5
"""
import argparse
import timeit

import numpy as np

from qlra import basis_family as bf
from qlra import kernels
from qlra.scalars import Field


def make_batch(n, field, seed):
    instances = [bf.random_instance(bf.instance_seed(seed, k), field=field) for k in range(n)]
    bases = np.stack([bf.build_basis(ri.basis) for ri in instances])
    states = np.stack([bf.build_state(ri.state, field) for ri in instances])
    return bases, states


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--batch", type=int, default=5000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    print(f"available backends: {', '.join(sorted(kernels.BACKENDS))} (default {kernels.BACKEND})")
    for field in Field:
        bases, states = make_batch(args.batch, field, args.seed)
        results = {}
        for name, mod in sorted(kernels.BACKENDS.items()):
            born = min(timeit.repeat(lambda: mod.born_tables(bases, states, field.sigma),
                                     number=1, repeat=args.repeat))
            gram = min(timeit.repeat(lambda: mod.gram_residual(bases, field.sigma), number=1, repeat=args.repeat))
            results[name] = (born, gram, mod.born_tables(bases, states, field.sigma))
            print(f"{field.value:<10} {name:<9} born_tables {born * 1e3:8.2f} ms   gram_residual {gram * 1e3:8.2f} ms")
        if len(results) == 2:
            py, cc = results["python"], results["compiled"]
            diff = max(float(np.abs(a - b).max()) for a, b in zip(py[2], cc[2]))
            print(f"{field.value:<10} speedup   born_tables {py[0] / cc[0]:8.2f}x     gram_residual {py[1] / cc[1]:8.2f}x"
                  f"   max |diff| {diff:.1e}")


if __name__ == "__main__":
    main()
