#!/usr/bin/env python3
"""Run the built-in corpus and every shipped sample script, printing text reports."""

import argparse
import sys
from importlib import resources

from jordansplit.frontend import cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args()
    codes = {"corpus": cli.main(["corpus", "--seed", str(args.seed), "--format", args.format])}
    scripts = resources.files("jordansplit.frontend") / "scripts"
    for p in sorted(scripts.iterdir(), key=lambda p: p.name):
        if p.name.endswith(".jsa"):
            codes[p.name] = cli.main(["report", str(p), "--seed", str(args.seed), "--format", args.format])
    for name, code in codes.items():
        print(f"{name}: exit {code}", file=sys.stderr)
    return 0 if codes["corpus"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
