"""Compare literal completion by a filling with the free Specht module.

For each shape, prints the rank of ``{P_(T u F)}`` over all tableaux and
orderings, the free rank, and whether the row-major filling admits any NCT.
"""

import argparse
from dataclasses import dataclass

from nca.combinat import canonical_filling, enumerate_nct, is_noncrossing_filling, partitions
from nca.specht import module_rank


@dataclass
class Config:
    max_n: int = 5


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'shape':<12}{'f':>4}{'free':>6}{'literal':>9}  row-major F")
    for n in range(1, cfg.max_n + 1):
        for lam in partitions(n):
            row = canonical_filling(lam, order="row")
            nct = len(enumerate_nct(lam, row)) if is_noncrossing_filling(row) else 0
            print(f"{str(lam.parts):<12}{lam.hook_length_count():>4}{module_rank(lam):>6}"
                  f"{module_rank(lam, complete=True):>9}  {nct} NCT")


if __name__ == "__main__":
    main()
