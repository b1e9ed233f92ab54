"""Time the coloring of one fixed type-graph shape as its total weight grows.

Prints a table of n, chi, ILP certificate, ILP seconds (best of --repeats)
and end-to-end seconds through the implicit blow-up.
"""
import argparse
import time

from ndcolor.ilp import build_coloring_ilp, solve_covering_ilp
from ndcolor.mis import enumerate_mis
from ndcolor.pipeline import color_type_graph
from ndcolor.testkit import GeneratorSpec, generate


def spread(total: int, k: int) -> tuple[int, ...]:
    return tuple(total // k + (1 if i < total % k else 0) for i in range(k))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=13)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--loop-prob", type=float, default=1.0)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10**3, 10**4, 10**5, 10**6, 10**7])
    args = ap.parse_args()
    shape = generate(GeneratorSpec("blow_up_random", seed=args.seed, k_min=args.k, k_max=args.k,
                                   w_min=1, w_max=1, loop_prob=args.loop_prob)).type_graph
    fam = enumerate_mis(shape)
    print(f"shape: k={shape.k} edges={len(shape.edges)} mis={len(fam)}")
    print(f"{'n':>10} {'chi':>9} {'cert':>7} {'ilp_s':>8} {'total_s':>8}")
    for n in args.sizes:
        t = shape.with_weights(spread(n, args.k))
        p = build_coloring_ilp(t, fam)
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            sol = solve_covering_ilp(p)
            best = min(best, time.perf_counter() - t0)
        t0 = time.perf_counter()
        res = color_type_graph(t)
        total = time.perf_counter() - t0
        print(f"{n:>10} {res.chi:>9} {sol.certificate:>7} {best:>8.4f} {total:>8.3f}")


if __name__ == "__main__":
    main()
