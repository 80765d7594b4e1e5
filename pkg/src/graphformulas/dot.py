"""Graphviz export of evaluation graphs."""

from __future__ import annotations

from typing import Optional

from .evaluation import Assignment, EvaluationGraph, solve

FILL = {True: "palegreen", False: "lightcoral", None: "lightgray"}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def to_dot(e: EvaluationGraph, a: Optional[Assignment] = None, name: str = "evaluation") -> str:
    """DOT digraph for *e*: universal nodes are boxes, existential ones
    ellipses, filled by their truth value under *a* (default: the least
    fixed point).  The root gets a double outline."""
    if a is None:
        a = solve(e)
    lines = [f"digraph {_quote(name)} {{", '  node [style=filled, fontname="monospace"];']
    for c in e.nodes:
        shape = "box" if e.universal[c] else "ellipse"
        label = str(e.payload[c]) if c < len(e.payload) else str(c)
        value = a.get(c)
        attrs = [f"shape={shape}", f"fillcolor={FILL[value]}",
                 f"label={_quote(label)}", f"tooltip={_quote(str(value).lower() if value is not None else 'undefined')}"]
        if c == e.root:
            attrs.append("peripheries=2")
        lines.append(f"  n{c} [{', '.join(attrs)}];")
    for c, d in e.edges():
        lines.append(f"  n{c} -> n{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"
