#!/usr/bin/env python3
"""Run every verification suite and print the per-claim summary.

Equivalent to `heiscert verify`; kept as a script so the whole pipeline
can be driven without installing the entry point.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from heiscert.suites import RunConfig, run_suite  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path, default=Path("certificates"))
    args = parser.parse_args()

    report = run_suite(RunConfig(seed=args.seed, output_dir=args.out))
    for row in report["claims"]:
        print(f"{row['verdict']:4}  {row['claim']}")
    print(f"overall: {report['overall']} -> {args.out}/report.md")
    return 0 if report["overall"] == "PASS" else 1


if __name__ == "__main__":
    sys.exit(main())
