"""Evaluation graphs and their least fixed-point truth assignment.

An evaluation graph is a digraph whose nodes are universal or existential.
Truth values start at the leaves (childless universal nodes are true,
childless existential ones false) and propagate upwards; on cycles they may
stay undefined.  Truth assignments are plain ``dict``s from node to ``bool``;
a missing key means undefined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

Assignment = Dict[int, bool]


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    INDETERMINATE = "indeterminate"

    def __str__(self):
        return self.value

    @property
    def exit_code(self) -> int:
        return {"accepted": 0, "rejected": 1, "indeterminate": 2}[self.value]

    def negated(self) -> "Verdict":
        if self is Verdict.ACCEPTED:
            return Verdict.REJECTED
        if self is Verdict.REJECTED:
            return Verdict.ACCEPTED
        return self


@dataclass(frozen=True)
class EvaluationGraph:
    """Nodes are ``0 .. n-1``; ``successors[c]`` lists the (distinct) targets
    of the edges leaving ``c``.  ``payload`` holds one reporting label per
    node (configurations, for graphs built by this package)."""

    universal: Tuple[bool, ...]
    successors: Tuple[Tuple[int, ...], ...]
    payload: Tuple[Any, ...] = ()
    root: int = 0

    def __post_init__(self):
        if len(self.universal) != len(self.successors):
            raise ValueError("classification and successor lists differ in length")
        n = len(self.universal)
        for c, succ in enumerate(self.successors):
            for d in succ:
                if not 0 <= d < n:
                    raise ValueError(f"edge {c} -> {d} leaves the node set")

    @classmethod
    def build(cls, universal: Sequence[bool], edges: Iterable[Tuple[int, int]],
              payload: Sequence[Any] = (), root: int = 0) -> "EvaluationGraph":
        succ: List[List[int]] = [[] for _ in universal]
        for a, b in edges:
            if b not in succ[a]:
                succ[a].append(b)
        return cls(tuple(universal), tuple(map(tuple, succ)), tuple(payload), root)

    def __len__(self) -> int:
        return len(self.universal)

    @property
    def nodes(self) -> range:
        return range(len(self.universal))

    def edges(self) -> List[Tuple[int, int]]:
        return [(c, d) for c, succ in enumerate(self.successors) for d in succ]

    def is_acyclic(self) -> bool:
        indeg = [0] * len(self)
        for succ in self.successors:
            for d in succ:
                indeg[d] += 1
        stack = [c for c in self.nodes if indeg[c] == 0]
        seen = 0
        while stack:
            c = stack.pop()
            seen += 1
            for d in self.successors[c]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    stack.append(d)
        return seen == len(self)


def evolve(e: EvaluationGraph, a: Assignment) -> Assignment:
    """One simultaneous update step of every node, reading only *a*."""
    out: Assignment = {}
    for c, succ in enumerate(e.successors):
        vals = [a.get(d) for d in succ]
        if e.universal[c]:
            if all(v is True for v in vals):
                out[c] = True
            elif any(v is False for v in vals):
                out[c] = False
        else:
            if all(v is False for v in vals):
                out[c] = False
            elif any(v is True for v in vals):
                out[c] = True
        if c not in out and c in a:
            out[c] = a[c]
    return out


def below(a: Assignment, b: Assignment) -> bool:
    """``a ⊑ b``: b agrees with a wherever a is defined."""
    return all(b.get(c) == v for c, v in a.items())


def evolution_chain(e: EvaluationGraph, limit: Optional[int] = None) -> List[Assignment]:
    """``Evo^0(⊥), Evo^1(⊥), ...`` up to and including the first repeat."""
    chain: List[Assignment] = [{}]
    while limit is None or len(chain) <= limit:
        nxt = evolve(e, chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def least_fixed_point(e: EvaluationGraph) -> Assignment:
    """Reference implementation: iterate :func:`evolve` from the empty
    assignment until it stabilizes."""
    return evolution_chain(e)[-1]


def solve(e: EvaluationGraph) -> Assignment:
    """Same result as :func:`least_fixed_point`, by counter-based propagation
    along reversed edges (linear in the size of *e*)."""
    n = len(e.universal)
    preds: List[List[int]] = [[] for _ in range(n)]
    pending = [len(s) for s in e.successors]
    for c, succ in enumerate(e.successors):
        for d in succ:
            preds[d].append(c)
    value: Assignment = {}
    universal = e.universal
    stack = []
    for c in range(n):
        if pending[c] == 0:
            value[c] = universal[c]
            stack.append(c)
    while stack:
        d = stack.pop()
        v = value[d]
        for c in preds[d]:
            if c in value:
                continue
            if v is not universal[c]:
                # false under a universal node / true under an existential one decides it
                value[c] = v
                stack.append(c)
            else:
                pending[c] -= 1
                if pending[c] == 0:
                    value[c] = v
                    stack.append(c)
    return value


def verdict_at(e: EvaluationGraph, root: Optional[int] = None,
               assignment: Optional[Assignment] = None) -> Verdict:
    root = e.root if root is None else root
    if not 0 <= root < len(e):
        raise LookupError(f"no node {root!r} in evaluation graph")
    a = solve(e) if assignment is None else assignment
    v = a.get(root)
    if v is True:
        return Verdict.ACCEPTED
    if v is False:
        return Verdict.REJECTED
    return Verdict.INDETERMINATE
