"""Search for twin-free (4K1, C4, C6)-free shapes containing a C7.

Grows shapes vertex by vertex from C7 with random neighbourhoods and reports
the largest order reached.  Every in-class graph collapses to such a shape, so
a shape with more than 13 vertices would contradict the nd <= 13 bound.
"""
import argparse
from collections import Counter

import numpy as np

from ndcolor.testkit import grow_class_shape


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--target", type=int, default=16)
    ap.add_argument("--edge-prob", type=float, default=0.5)
    ap.add_argument("--attempts", type=int, default=2000)
    args = ap.parse_args()
    orders = Counter()
    for seed in range(args.trials):
        edges = grow_class_shape(np.random.Generator(np.random.PCG64(seed)), args.target, args.edge_prob, args.attempts)
        orders[1 + max(max(e) for e in edges)] += 1
    for k in sorted(orders):
        print(f"k={k:>2} shapes={orders[k]}")
    print(f"largest: {max(orders)}")


if __name__ == "__main__":
    main()
