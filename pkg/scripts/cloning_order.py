"""Cloning check: decomposing on the clone and specializing back equals the direct solve."""

import argparse
import itertools
from dataclasses import dataclass

from nca import bidet


@dataclass
class Config:
    max_size: int = 4
    max_entry: int = 3


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=Config.max_size)
    ap.add_argument("--max-entry", type=int, default=Config.max_entry)
    cfg = Config(**vars(ap.parse_args()))
    checked = bad = 0
    for size in range(1, cfg.max_size + 1):
        contents = list(itertools.combinations_with_replacement(range(1, cfg.max_entry + 1), size))
        for alpha in contents:
            for beta in contents:
                for b in bidet.content_family(alpha, beta, "standard"):
                    checked += 1
                    if bidet.decompose_via_clone(b).terms != bidet.decompose_bideterminant(b).terms:
                        bad += 1
                        print("mismatch", b.to_json())
    print(f"{checked} bitableaux, {bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
