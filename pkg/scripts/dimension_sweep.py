#!/usr/bin/env python3
"""Sweep fusion modules by dimension bound and time the closures.

Builds every module with weakly increasing weights, entries >= 2 and
product below the bound, checks the product formula on each, and prints
aggregate timing per dimension decade.  Useful for sizing the caps used
in the test suite.
"""

import argparse
import math
import sys
import time
from collections import defaultdict
from dataclasses import dataclass

from schubert_fusion.acceptance import weight_corpus
from schubert_fusion.fusion import build_module, character_recursive


@dataclass
class SweepConfig:
    bound: int = 256
    max_len: int | None = None
    check_characters: bool = False


def run_sweep(config: SweepConfig) -> int:
    corpus = weight_corpus(config.bound, config.max_len)
    by_decade = defaultdict(list)
    failures = 0
    start = time.time()
    for weights in corpus:
        t0 = time.time()
        module = build_module(weights)
        elapsed = time.time() - t0
        expected = math.prod(weights)
        if module.dimension != expected:
            failures += 1
            print(f"MISMATCH {weights}: {module.dimension} != {expected}")
        if config.check_characters:
            if dict(module.character) != character_recursive(weights):
                failures += 1
                print(f"CHARACTER MISMATCH {weights}")
        decade = len(str(expected))
        by_decade[decade].append(elapsed)
    total = time.time() - start

    print(f"{len(corpus)} modules, product <= {config.bound}, "
          f"{total:.1f}s total")
    for decade in sorted(by_decade):
        times = by_decade[decade]
        print(f"  dim < 10^{decade}: {len(times):4d} modules, "
              f"max {max(times) * 1000:7.1f} ms, "
              f"mean {sum(times) / len(times) * 1000:7.1f} ms")
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=256,
                        help="largest module dimension to build")
    parser.add_argument("--max-len", type=int, default=None,
                        help="cap the number of weight entries")
    parser.add_argument("--check-characters", action="store_true",
                        help="also compare each character with the recursion")
    args = parser.parse_args()
    config = SweepConfig(bound=args.bound, max_len=args.max_len,
                         check_characters=args.check_characters)
    return run_sweep(config)


if __name__ == "__main__":
    sys.exit(main())
