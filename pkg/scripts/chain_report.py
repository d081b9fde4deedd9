#!/usr/bin/env python3
"""Attractor counts of the chain construction before and after each elimination."""

import argparse
import json

from bnreduce.verify import chain_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sizes", nargs="*", type=int, default=[1, 2])
    args = ap.parse_args()
    print(json.dumps([chain_report(n) for n in args.sizes], indent=2))


if __name__ == "__main__":
    main()
