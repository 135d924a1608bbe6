"""DOT text for a window lattice, optionally with the arrows of one operation.

Edges are the covering pairs of the containment order (computed from
``contains``, nothing hard-coded), drawn from the larger ideal down. With an
operation, every ideal that moves gets a dashed arrow to its image and the fixed
ideals below the unit get a self-loop.
"""

from __future__ import annotations

from .axioms import lattice, to_raw
from .ideals import Window


def covering_pairs(w: Window) -> list:
    """(upper, lower) index pairs with nothing strictly between them."""
    lat = lattice(w)
    n = len(lat)
    sub = lat.sub
    out = []
    for hi in range(n):
        for lo in range(n):
            if hi == lo or not sub[lo][hi]:
                continue
            if not any(k not in (hi, lo) and sub[lo][k] and sub[k][hi] for k in range(n)):
                out.append((hi, lo))
    return out


def _node(k):
    return f"n{k}"


def emit_diagram(w: Window, op=None) -> str:
    lat = lattice(w)
    name = f"{w}" if op is None else f"{w} {op}"
    lines = [f'digraph "{name}" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for k, I in enumerate(lat.ideals):
        lines.append(f'  {_node(k)} [label="{I}"];')
    for hi, lo in covering_pairs(w):
        lines.append(f"  {_node(hi)} -> {_node(lo)} [dir=none];")
    if op is not None:
        img = to_raw(op, w).indices()
        for k, j in enumerate(img):
            if j != k:
                lines.append(f"  {_node(k)} -> {_node(j)} [style=dashed, color=blue, constraint=false];")
            elif k != lat.unit:
                lines.append(f"  {_node(k)} -> {_node(k)} [style=dotted, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"
