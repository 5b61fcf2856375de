#!/usr/bin/env python3
"""Run the full verification suite from the repository checkout.

Equivalent to `locint verify`; convenient while hacking on the library:

    python3 scripts/run_verify.py --seed 0
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from locint import verify  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    results = verify.run_all(seed=args.seed)
    for line in verify.format_lines(results):
        print(line)
    for r in results:
        print(f"[{r.number}] {r.seconds:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
