#!/usr/bin/env python3
"""Verdict survey across all small factor pairs.

Analyses every unlabelled pair within the bounds and tabulates the
resulting verdicts (wreath / decomposed / indeterminate), plus how often
the stable colouring separates inner from outer (non-)edges when the
wreath conditions fail.  Useful for eyeballing how far the certified
pathways reach before the symbolic machinery gives up.
"""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

sys.path.insert(0, "src")

from lexsym import analyze_product, sabidussi_conditions, verify_wl_separation
from lexsym.census import unlabelled_graphs_upto


@dataclass(frozen=True)
class SurveyConfig:
    max_nx: int = 4
    max_ny: int = 3
    max_product: int = 14
    check_separation: bool = False


def parse_config(argv) -> SurveyConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nx", type=int, default=SurveyConfig.max_nx)
    parser.add_argument("--max-ny", type=int, default=SurveyConfig.max_ny)
    parser.add_argument("--max-product", type=int, default=SurveyConfig.max_product,
                        help="skip pairs whose product has more vertices")
    parser.add_argument("--check-separation", action="store_true",
                        help="also tally separation on failing-condition pairs")
    args = parser.parse_args(argv)
    return SurveyConfig(args.max_nx, args.max_ny, args.max_product,
                        args.check_separation)


def main(argv=None) -> int:
    config = parse_config(argv)
    verdicts: Counter[str] = Counter()
    separation: Counter[str] = Counter()
    for x in unlabelled_graphs_upto(config.max_nx):
        for y in unlabelled_graphs_upto(config.max_ny):
            if x.n * y.n > config.max_product:
                verdicts["skipped(bound)"] += 1
                continue
            report = analyze_product(x, y)
            verdicts[report.verdict] += 1
            if config.check_separation and not sabidussi_conditions(x, y).wreath_holds:
                sep = verify_wl_separation(x, y)
                both = (sep.inner_outer_edges_separated
                        and sep.inner_outer_nonedges_separated)
                separation["separated" if both else "mixed"] += 1
    print("verdicts:")
    for key, count in sorted(verdicts.items()):
        print(f"  {key:20s} {count}")
    if config.check_separation:
        print("separation when conditions fail:")
        for key, count in sorted(separation.items()):
            print(f"  {key:20s} {count}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
