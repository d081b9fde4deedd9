#!/usr/bin/env python3
"""Check attractor preservation on random networks built with a preserving shape."""

import argparse
import itertools

from bnreduce.igraph import global_interaction_graph
from bnreduce.verify import Shaped, attractors_preserved, matches_shape, random_network


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=10_000)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    shapes = [Shaped(a, b, c) for a, b, c in itertools.product(range(4), repeat=3)
              if 2 <= a + b + c + 1 <= args.max_n]
    bad = 0
    for k in range(args.count):
        shape = shapes[k % len(shapes)]
        net = random_network(shape.n, args.seed + k, shape)
        certified = matches_shape(global_interaction_graph(net), shape.partition())
        ok, rep = attractors_preserved(net, shape.v)
        if not (certified and ok):
            bad += 1
            print(f"{shape} seed {args.seed + k}: certified={certified} witness={rep.witness}")
    print(f"{args.count} networks over {len(shapes)} shapes, {bad} not preserved")


if __name__ == "__main__":
    main()
