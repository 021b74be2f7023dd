"""Run every verification suite and print one line per suite.

    python scripts/run_acceptance.py --max-n 6 --json report.json
"""

import argparse
import json
from dataclasses import asdict, dataclass

from nca.verify import run_suite


@dataclass
class Config:
    max_n: int = 6
    suite: str = "all"
    json_path: str = ""


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--suite", default=Config.suite)
    ap.add_argument("--json", dest="json_path", default=Config.json_path)
    cfg = Config(**vars(ap.parse_args()))
    reports = run_suite(cfg.suite, cfg.max_n)
    for r in reports:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.suite:<13} {r.checked:>6} checks  {r.elapsed_ms / 1000:6.2f}s")
        for f in r.failures:
            print("      ", f)
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "reports": [r.to_json() for r in reports]}, fh, indent=2)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
