"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--heavy] [--json]

``--heavy`` adds the t = 8 strict certificate, which takes about a minute
on the pure-Python kernel.
"""

import argparse
import json
import random
import time

from grassgb import cohomology as coh
from grassgb import kernel
from grassgb.groebner import is_groebner, normal_form
from grassgb.oracle import quotient_dims_bruteforce
from grassgb.selftest import random_poly


def strict_certificate(t):
    rng = random.Random(t)
    G = coh.build_ideal_I(t, *coh.random_admissible_PQ(t, rng)).gens
    return lambda: is_groebner(G, strict=True)


def normal_forms(t, count=300):
    G = coh.build_ideal_I(t).gens
    rng = random.Random(1)
    polys = [random_poly(rng, G.spec, max_terms=8, max_exp=2 ** (t - 1)) for _ in range(count)]
    return lambda: [normal_form(p, G) for p in polys]


def oracle(t, top):
    G = coh.build_ideal_I(t).gens
    return lambda: quotient_dims_bruteforce(G, top)


def random_rank(n, width):
    rng = random.Random(n)
    rows = [rng.getrandbits(width) for _ in range(n)]
    return lambda: kernel.gf2_rank(rows)


WORKLOADS = {
    "strict-certificate-t7": strict_certificate(7),
    "normal-forms-t6": normal_forms(6),
    "oracle-t5-full": oracle(5, coh.manifold_dim(5)),
    "rank-1500x1500": random_rank(1500, 1500),
    "rank-4000x4000": random_rank(4000, 4000),
}
HEAVY = {"strict-certificate-t8": strict_certificate(8)}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--heavy", action="store_true")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    workloads = {**WORKLOADS, **(HEAVY if args.heavy else {})}

    mods = kernel.backends()
    original = kernel._impl
    results = {}
    try:
        for name, fn in workloads.items():
            results[name] = {}
            for backend, mod in mods.items():
                kernel._impl = mod
                results[name][backend] = best_of(fn, args.repeat)
    finally:
        kernel._impl = original

    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return
    names = sorted(mods)
    print(f"{'workload':24s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if "cython" in mods else ""))
    for name, row in results.items():
        line = f"{name:24s}" + "".join(f"{row[n]:11.4f}s" for n in names)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
