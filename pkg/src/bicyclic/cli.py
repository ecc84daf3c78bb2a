"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON error object on stdout),
2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import core, generation, morphisms, oracle, topology, variants, verify
from .core import Element, Variant, Window
from .eggbox import eggbox, eggbox_dot

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

_PAIR = re.compile(r"^\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*$")


# -- wire formats ------------------------------------------------------------


def parse_pair(text: str) -> tuple[int, int]:
    mt = _PAIR.match(text)
    if not mt:
        raise argparse.ArgumentTypeError(f"expected 'a,b' with integers, got {text!r}")
    return int(mt.group(1)), int(mt.group(2))


def parse_element(text: str) -> Element:
    return Element(*parse_pair(text))


def parse_variant(text: str) -> Variant:
    return Variant(*parse_pair(text))


def parse_window(text: str) -> Window:
    lo, hi = parse_pair(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window bounds must satisfy lo <= hi, got {text!r}")
    return Window(lo, hi)


def parse_gens(text: str) -> list[Element]:
    """Semicolon-separated parenthesised pairs, e.g. ``(-1,-2);(0,-3)``."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("generator list is empty")
    return [parse_element(p) for p in parts]


def to_json(obj: Any) -> Any:
    if isinstance(obj, Element):
        return {"a": obj.a, "b": obj.b}
    if isinstance(obj, Variant):
        return {"m": obj.m, "n": obj.n}
    if isinstance(obj, Window):
        return {"lo": obj.lo, "hi": obj.hi}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, topology.Isolated):
        return {"kind": "isolated", "point": to_json(obj.point)}
    if isinstance(obj, topology.RayPoint):
        return {"kind": "ray", "base": to_json(obj.base), "index": obj.index}
    if isinstance(obj, topology.Singleton):
        return {"kind": "singleton", "e": to_json(obj.e)}
    if isinstance(obj, topology.RayInterval):
        return {
            "kind": "ray_interval",
            "base": to_json(obj.base),
            "lo": None if obj.lo is None else str(obj.lo),
            "hi": None if obj.hi is None else str(obj.hi),
            "labels": obj.labels,
        }
    if isinstance(obj, topology.Violation):
        return {"point": to_json(obj.point), "reason": obj.reason}
    if isinstance(obj, morphisms.IsoMap):
        return {"src": to_json(obj.src), "dst": to_json(obj.dst), "shift_a": obj.shift_a, "shift_b": obj.shift_b}
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_json(v) for v in obj]
    return obj


def element_from_json(d: dict) -> Element:
    return Element(int(d["a"]), int(d["b"]))


def variant_from_json(d: dict) -> Variant:
    return Variant(int(d["m"]), int(d["n"]))


def point_class_from_json(d: dict) -> topology.PointClass:
    if d["kind"] == "isolated":
        return topology.Isolated(element_from_json(d["point"]))
    return topology.RayPoint(element_from_json(d["base"]), int(d["index"]))


def basic_open_from_json(d: dict) -> topology.BasicOpen:
    if d["kind"] == "singleton":
        return topology.Singleton(element_from_json(d["e"]))
    frac = lambda s: None if s is None else Fraction(s)
    return topology.RayInterval(element_from_json(d["base"]), frac(d["lo"]), frac(d["hi"]), d["labels"])


def iso_from_json(d: dict) -> morphisms.IsoMap:
    return morphisms.IsoMap(variant_from_json(d["src"]), variant_from_json(d["dst"]), int(d["shift_a"]), int(d["shift_b"]))


# -- commands ----------------------------------------------------------------


def _cmd_mul(args):
    return core.mul(args.lhs, args.rhs)


def _cmd_smul(args):
    return variants.smul(args.variant, args.lhs, args.rhs)


def _cmd_inv(args):
    return core.inverse(args.elem)


def _cmd_idem(args):
    es = variants.idempotents(args.variant, args.count)
    return {"variant": args.variant, "idempotents": [{"index": e.index, "element": e.element} for e in es]}


def _cmd_order(args):
    if args.variant is None:
        op = core.mul
    else:
        op = lambda x, y: variants.smul(args.variant, x, y)
    return {"leq": core.natural_leq(op, args.e, args.f)}


def _cmd_green(args):
    if args.brute:
        w = args.window or Window(min(*args.lhs, *args.rhs), max(*args.lhs, *args.rhs))
        holds = oracle.brute_green(args.rel, args.variant, args.lhs, args.rhs, w)
    elif args.variant is None:
        holds = core.green_cz(args.rel, args.lhs, args.rhs)
    else:
        holds = variants.green_v(args.rel, args.variant, args.lhs, args.rhs)
    return {"rel": args.rel, "holds": holds}


def _cmd_aut(args):
    h = morphisms.Automorphism(args.k)
    if args.compose is not None:
        h = morphisms.aut_compose(h, morphisms.Automorphism(args.compose))
    if args.invert:
        h = morphisms.aut_invert(h)
    out: dict[str, Any] = {"k": h.k}
    if args.apply is not None:
        out["image"] = morphisms.aut_apply(h, args.apply)
    return out


def _cmd_iso(args):
    iso = morphisms.canonical_iso(*args.variant)
    out = to_json(iso)
    if args.apply is not None:
        out["image"] = iso.forward(args.apply)
    return out


def _cmd_embed(args):
    u = morphisms.BicyclicElement.make(*args.elem)
    return morphisms.embed_bicyclic(args.k, u)


def _cmd_closure(args):
    g = generation.GenSet.of(args.gens, args.variant)
    res = generation.closure(g, args.guard, cap=args.cap)
    return {
        "found": sorted(res.found),
        "saturated": res.saturated,
        "guard": res.guard,
        "frontier_size": len(res.frontier),
    }


def _cmd_witness(args):
    g = generation.GenSet.of(args.gens, args.variant)
    if args.variant is None:
        return {"witness": generation.witness_cz(g), "min_corner": generation.min_corner(g)}
    w, (xs, ys) = generation.witness_variant(g)
    return {"witness": w, "floors": {"xstar": xs, "ystar": ys}}


_CLASSIFIERS = {
    "tau-star": topology.tau_star_classifier,
    "discrete": topology.discrete_classifier,
    # non-isolated wherever ab <= 0 and a + b <= 0, which includes points like (-2,1)
    "sign-pattern": lambda x: "non-isolated" if x.a * x.b <= 0 and x.a + x.b <= 0 else "isolated",
}


def _cmd_topo(args):
    if args.topo_cmd == "classify":
        return topology.classify(args.point)
    if args.topo_cmd == "nbhds":
        return topology.basic_nbhds(args.point, args.resolution, args.labels)
    if args.topo_cmd == "lint":
        if args.non_isolated is not None:
            marked = set(args.non_isolated)
            classifier = lambda x: "non-isolated" if x in marked else "isolated"
        else:
            classifier = _CLASSIFIERS[args.classifier]
        return {"violations": topology.lint_shift_constraints(classifier, args.window)}
    if args.topo_cmd == "certify":
        z = variants.smul((0, 0), args.x, args.y)
        target = topology.basic_nbhds(z, args.resolution, args.labels)[-1]
        u, v = topology.continuity_certificate(args.x, args.y, target, bound=args.bound)
        return {"product": z, "target": target, "U": u, "V": v}
    raise AssertionError(args.topo_cmd)


def _cmd_eggbox(args):
    if args.format == "dot":
        return eggbox_dot(args.variant, args.window)
    return {"variant": args.variant, "window": args.window, "d_classes": eggbox(args.variant, args.window)}


def _cmd_verify(args):
    names = None if args.all or not args.suite else args.suite
    results = verify.run_all(names, args.window, args.jobs)
    args._failed = not all(r.passed for r in results)
    if args.format == "text":
        return "\n".join(r.line() for r in results) + "\n"
    return {
        "passed": not args._failed,
        "suites": [{"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3), "detail": r.detail} for r in results],
    }


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicyclic", description="Extended bicyclic semigroup and its variants.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("mul", _cmd_mul, help="plain product")
    sp.add_argument("--lhs", type=parse_element, required=True)
    sp.add_argument("--rhs", type=parse_element, required=True)

    sp = add("smul", _cmd_smul, help="sandwich product")
    sp.add_argument("--variant", type=parse_variant, required=True)
    sp.add_argument("--lhs", type=parse_element, required=True)
    sp.add_argument("--rhs", type=parse_element, required=True)

    sp = add("inv", _cmd_inv, help="inverse")
    sp.add_argument("--elem", type=parse_element, required=True)

    sp = add("idem", _cmd_idem, help="idempotents e_0..e_{N-1} of a variant")
    sp.add_argument("--variant", type=parse_variant, default=Variant(0, 0))
    sp.add_argument("--count", type=int, required=True)

    sp = add("order", _cmd_order, help="natural order on idempotents")
    sp.add_argument("--e", type=parse_element, required=True)
    sp.add_argument("--f", type=parse_element, required=True)
    sp.add_argument("--variant", type=parse_variant)

    sp = add("green", _cmd_green, help="Green's relations")
    sp.add_argument("--rel", choices=core.GREEN_RELATIONS, required=True)
    sp.add_argument("--lhs", type=parse_element, required=True)
    sp.add_argument("--rhs", type=parse_element, required=True)
    sp.add_argument("--variant", type=parse_variant)
    sp.add_argument("--brute", action="store_true", help="decide by ideal enumeration")
    sp.add_argument("--window", type=parse_window, help="enumeration window for --brute")

    sp = add("aut", _cmd_aut, help="automorphism h_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--compose", type=int, help="compose with h_K2")
    sp.add_argument("--invert", action="store_true")
    sp.add_argument("--apply", type=parse_element)

    sp = add("iso", _cmd_iso, help="canonical isomorphism from the (0,0) variant")
    sp.add_argument("--variant", type=parse_variant, required=True)
    sp.add_argument("--apply", type=parse_element)

    sp = add("embed", _cmd_embed, help="embed q^i p^j at corner k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--elem", type=parse_pair, required=True)

    sp = add("closure", _cmd_closure, help="subsemigroup closure inside a guard window")
    sp.add_argument("--gens", type=parse_gens, required=True)
    sp.add_argument("--variant", type=parse_variant)
    sp.add_argument("--guard", type=parse_window, required=True)
    sp.add_argument("--cap", type=int, default=generation.DEFAULT_CAP)

    sp = add("witness", _cmd_witness, help="element outside the generated subsemigroup")
    sp.add_argument("--gens", type=parse_gens, required=True)
    sp.add_argument("--variant", type=parse_variant)

    sp = add("topo", _cmd_topo, help="the topology tau* on the (0,0) variant")
    tsub = sp.add_subparsers(dest="topo_cmd", required=True)
    tp = tsub.add_parser("classify")
    tp.add_argument("--point", type=parse_element, required=True)
    tp = tsub.add_parser("nbhds")
    tp.add_argument("--point", type=parse_element, required=True)
    tp.add_argument("--resolution", type=int, default=3)
    tp.add_argument("--labels", choices=topology.RAY_TOPOLOGIES, default="farey")
    tp = tsub.add_parser("lint")
    tp.add_argument("--window", type=parse_window, required=True)
    tp.add_argument("--classifier", choices=sorted(_CLASSIFIERS), default="tau-star")
    tp.add_argument("--non-isolated", type=parse_gens, help="explicit non-isolated points; all others isolated")
    tp = tsub.add_parser("certify")
    tp.add_argument("--x", type=parse_element, required=True)
    tp.add_argument("--y", type=parse_element, required=True)
    tp.add_argument("--resolution", type=int, default=1, help="target = radius-1/N basic open at the product")
    tp.add_argument("--labels", choices=topology.LABELLINGS, default="farey")
    tp.add_argument("--bound", type=int, default=32)

    sp = add("eggbox", _cmd_eggbox, help="egg-box diagram of a variant on a window")
    sp.add_argument("--variant", type=parse_variant, default=Variant(0, 0))
    sp.add_argument("--window", type=parse_window, required=True)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")

    sp = add("verify", _cmd_verify, help="run acceptance suites")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--all", action="store_true")
    grp.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    sp.add_argument("--window", type=int, help="override window half-width for every suite")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    return p


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--flag -2,5`` into ``--flag=-2,5`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and re.match(r"^-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


DOMAIN_ERRORS = (
    ValueError,
    OverflowError,
    oracle.WindowTooSmall,
    generation.BudgetExceeded,
)


def cli_run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = args.fn(args)
    except DOMAIN_ERRORS as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        out.write(json.dumps(err) + "\n")
        return EXIT_DOMAIN
    if isinstance(result, str):
        out.write(result)
    elif args.format == "text":
        out.write(_text(result) + "\n")
    else:
        out.write(json.dumps(to_json(result), sort_keys=True) + "\n")
    if getattr(args, "_failed", False):
        return EXIT_VERIFY
    return EXIT_OK


def _text(result: Any) -> str:
    if isinstance(result, (Element, Variant)):
        return str(result)
    return json.dumps(to_json(result), sort_keys=True, indent=2)


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
