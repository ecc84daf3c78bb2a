#!/usr/bin/env python3
"""Print non-finite-generation witnesses for random generator sets.

Each row shows the generators, the witness, and whether a closure run inside
the default guard reached it (it never should).
"""
import argparse
import random

from bicyclic.generation import GenSet, closure, default_guard, witness_cz, witness_variant


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", type=lambda s: tuple(int(t) for t in s.split(",")))
    args = p.parse_args(argv)

    rng = random.Random(args.seed)
    for _ in range(args.count):
        gens = {(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(rng.randint(1, 5))}
        g = GenSet.of(gens, args.variant)
        if args.variant is None:
            w, extra = witness_cz(g), ""
        else:
            w, floors = witness_variant(g)
            extra = f" floors={floors}"
        res = closure(g, default_guard(g))
        gen_txt = " ".join(str(x) for x in g.sorted())
        print(f"{gen_txt:<40} witness={w}{extra} reached={w in res} saturated={res.saturated}")


if __name__ == "__main__":
    main()
