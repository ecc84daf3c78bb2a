#!/usr/bin/env python3
"""Write egg-box DOT files for a handful of variants, optionally rendering them.

Rendering needs the graphviz ``dot`` binary on PATH; without it only the
``.dot`` sources are written.
"""
import argparse
import shutil
import subprocess
from pathlib import Path

from bicyclic.core import Window
from bicyclic.eggbox import eggbox, eggbox_dot

VARIANTS = [(0, 0), (2, -1), (-1, 2), (-3, -3)]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--half-width", type=int, default=2)
    p.add_argument("--outdir", type=Path, default=Path("eggbox"))
    p.add_argument("--render", choices=("svg", "png"))
    args = p.parse_args(argv)

    w = Window.symmetric(args.half_width)
    args.outdir.mkdir(parents=True, exist_ok=True)
    dot = shutil.which("dot")
    for m, n in VARIANTS:
        stem = f"eggbox_{m}_{n}".replace("-", "m")
        path = args.outdir / f"{stem}.dot"
        path.write_text(eggbox_dot((m, n), w))
        grids = eggbox((m, n), w)
        shapes = sorted((len(g), len(g[0])) for g in grids)
        print(f"({m},{n}): D-classes={len(grids)} largest grids={shapes[-3:]} -> {path}")
        if args.render and dot:
            subprocess.run([dot, f"-T{args.render}", str(path), "-o", str(path.with_suffix('.' + args.render))], check=True)
    if args.render and not dot:
        print("graphviz not found; wrote .dot sources only")


if __name__ == "__main__":
    main()
