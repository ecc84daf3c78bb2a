"""Egg-box diagrams of a variant restricted to a window."""
from __future__ import annotations

from typing import Optional

from .core import Element, Window
from .variants import green_v


def _classes(rel: str, v, elements: list[Element]) -> list[list[Element]]:
    """Partition ``elements`` (already sorted) into classes of an equivalence."""
    classes: list[list[Element]] = []
    for x in elements:
        for cls in classes:
            if green_v(rel, v, cls[0], x):
                cls.append(x)
                break
        else:
            classes.append([x])
    return classes


def eggbox(v: tuple[int, int], w: Window) -> list[list[list[Optional[Element]]]]:
    """One grid per D-class: rows are R-classes, columns L-classes.

    A cell holds the (single-element) H-class, or ``None`` when that
    intersection falls outside the window.
    """
    grids = []
    for dcls in _classes("D", v, sorted(w)):
        rows = _classes("R", v, dcls)
        cols = _classes("L", v, dcls)
        members = set(dcls)
        grid = []
        for r in rows:
            line = []
            for c in cols:
                cell = Element(r[0].a, c[0].b)
                line.append(cell if cell in members and green_v("R", v, cell, r[0]) and green_v("L", v, cell, c[0]) else None)
            grid.append(line)
        grids.append(grid)
    return grids


def _node(x: Element) -> str:
    return f'"{x.a},{x.b}"'


def eggbox_dot(v: tuple[int, int], w: Window) -> str:
    m, n = v
    out = [f'digraph eggbox_{m}_{n} {{'.replace("-", "m"), "  node [shape=box, fontname=monospace];", "  newrank=true;"]
    for k, grid in enumerate(eggbox(v, w)):
        out.append(f"  subgraph cluster_D{k} {{")
        out.append(f'    label="D{k}";')
        for row in grid:
            for x in row:
                if x is not None:
                    out.append(f'    {_node(x)} [label="({x.a},{x.b})"];')
        for row in grid:
            cells = [_node(x) for x in row if x is not None]
            if len(cells) > 1:
                out.append("    { rank=same; " + " ".join(cells) + " }")
        # invisible edges keep each L-class stacked as a column
        for j in range(len(grid[0]) if grid else 0):
            col = [grid[i][j] for i in range(len(grid)) if grid[i][j] is not None]
            for p, q in zip(col, col[1:]):
                out.append(f"    {_node(p)} -> {_node(q)} [style=invis];")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"
