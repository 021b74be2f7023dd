"""Pair rewriting on three-row monomials: how often does a move add crossings?

For every crossing degree-``d`` monomial in G(3, n) the rewriting log is
scanned for moves after which some resulting monomial has more crossing
pairs than before.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from nca import grass


@dataclass
class Config:
    n: int = 3
    d: int = 3
    max_steps: int = 200


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--d", type=int, default=Config.d)
    ap.add_argument("--max-steps", type=int, default=Config.max_steps)
    cfg = Config(**vars(ap.parse_args()))
    stats = Counter()
    for mono in grass.monomials(3, cfg.n, cfg.d):
        if grass.is_noncrossing_monomial(mono):
            continue
        log = grass.rewrite_pairs(mono, 3, cfg.n, cfg.max_steps)
        stats["crossing monomials"] += 1
        stats["finished"] += log.finished
        stats["moves"] += len(log.steps)
        worse = [s for s in log.steps if max(s["crossings_after"], default=0) > s["crossings_before"]]
        stats["runs with a move that adds crossings"] += bool(worse)
        if grass.realize(log.element, 3, cfg.n) != grass.realize_monomial(mono, 3, cfg.n):
            stats["inexact"] += 1
    for k, v in stats.items():
        print(f"{k:>40}: {v}")


if __name__ == "__main__":
    main()
