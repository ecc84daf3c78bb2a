#!/usr/bin/env python3
"""Run the verification suites and write a JSON report next to the text lines.

    python scripts/run_verification.py --jobs 4 --out results/verify.json
"""
import argparse
import json
import platform
import sys
import time
from pathlib import Path

from bicyclic import verify
from bicyclic.core import int_mode


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    p.add_argument("--window", type=int, help="override every suite's half-width")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    args = p.parse_args(argv)

    t0 = time.perf_counter()
    results = verify.run_all(args.suite, args.window, args.jobs)
    wall = time.perf_counter() - t0
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print(f"{'all passed' if ok else 'FAILURES'} in {wall:.1f}s wall")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        report = {
            "python": platform.python_version(),
            "int_mode": int_mode(),
            "jobs": args.jobs,
            "window_override": args.window,
            "wall_seconds": round(wall, 3),
            "suites": [
                {"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3), "detail": r.detail}
                for r in results
            ],
        }
        args.out.write_text(json.dumps(report, indent=2, default=str) + "\n")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
