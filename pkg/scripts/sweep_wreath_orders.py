#!/usr/bin/env python3
"""Exhaustive wreath-order experiment over small factor pairs.

For every unlabelled pair within the bounds, checks that the product's
automorphism count equals the wreath order exactly when both connectivity
and twin conditions hold, and strictly exceeds it otherwise.  Prints the
verification summary as JSON; a counterexample aborts with a reproducer.
"""

import argparse
import json
import sys
from dataclasses import dataclass

sys.path.insert(0, "src")

from lexsym.sweeps import sabidussi_sweep


@dataclass(frozen=True)
class SweepConfig:
    max_nx: int = 4
    max_ny: int = 3
    max_degree: int = 14


def parse_config(argv) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nx", type=int, default=SweepConfig.max_nx,
                        help="largest left-factor vertex count")
    parser.add_argument("--max-ny", type=int, default=SweepConfig.max_ny,
                        help="largest right-factor vertex count")
    parser.add_argument("--max-degree", type=int, default=SweepConfig.max_degree,
                        help="product size bound for the symmetry oracle")
    args = parser.parse_args(argv)
    return SweepConfig(args.max_nx, args.max_ny, args.max_degree)


def main(argv=None) -> int:
    config = parse_config(argv)
    summary = sabidussi_sweep(config.max_nx, config.max_ny, config.max_degree)
    print(json.dumps(summary, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
