"""Print the smoothings of a wiring-diagram matching and the resulting coefficients."""

import argparse
from dataclasses import dataclass

from nca import tlalg


@dataclass
class Config:
    perm: tuple = (3, 2, 1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--perm", default="3,2,1", help="one-line permutation, e.g. 3,1,2")
    cfg = Config(tuple(int(v) for v in ap.parse_args().perm.split(",")))
    arcs = tlalg.wiring_matching(cfg.perm)
    print("matching", arcs, "crossings", len(tlalg.crossing_pairs(arcs)))
    for choices, matching, cycles in tlalg.smoothings(arcs):
        print(" ", choices, matching, f"cycles={cycles}", f"weight={(-2) ** cycles}")
    resolved = tlalg.resolve_crossings(arcs)
    theta = tlalg.theta(cfg.perm).terms
    for d in sorted(resolved):
        print(f"{d}: resolution {resolved[d]}, theta {theta.get(d, 0)}")
    print("agree:", resolved == theta)


if __name__ == "__main__":
    main()
