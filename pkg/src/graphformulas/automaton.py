"""Alternating graph automata.

A transition ``(q, Γ, q')`` may fire in configuration ``(q, G)`` whenever an
isomorphic copy of ``Γ`` is a frontal subgraph of ``G``; the successor is
``(q', G ⊘ Γ)``.  The configuration graph collects everything reachable from
the initial configuration and is evaluated as an :class:`EvaluationGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import ContractError, GraphTypeError
from .evaluation import EvaluationGraph, Verdict, verdict_at
from .graph import Graph, RankedAlphabet, cut_off, embeddings, infer_alphabet


@dataclass(frozen=True)
class Transition:
    source: str
    graph: Graph
    target: str
    name: Optional[str] = field(default=None, compare=False)


class Configuration(NamedTuple):
    state: str
    remainder: Graph

    def __str__(self):
        return f"({self.state}, {self.remainder!r})"


@dataclass
class Automaton:
    states: Dict[str, int]
    transitions: List[Transition]
    initial: str
    universal: FrozenSet[str] = frozenset()
    alphabet: Optional[RankedAlphabet] = None

    def __post_init__(self):
        self.states = dict(self.states)
        self.transitions = [t if isinstance(t, Transition) else Transition(*t) for t in self.transitions]
        self.universal = frozenset(self.universal)
        if self.alphabet is None:
            self.alphabet = infer_alphabet(t.graph for t in self.transitions)
        self._out: Optional[Dict[str, List[Transition]]] = None

    @property
    def existential(self) -> FrozenSet[str]:
        return frozenset(self.states) - self.universal

    def outgoing(self, q: str) -> List[Transition]:
        if self._out is None:
            out: Dict[str, List[Transition]] = {s: [] for s in self.states}
            for t in self.transitions:
                out.setdefault(t.source, []).append(t)
            self._out = out
        return self._out.get(q, [])

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (self.states == other.states and self.transitions == other.transitions
                and self.initial == other.initial and self.universal == other.universal)


def validate(a: Automaton) -> List[str]:
    """List every violated well-formedness condition (empty when fine)."""
    errors = []
    for q, r in a.states.items():
        if not isinstance(r, int) or r < 0:
            errors.append(f"state {q}: rank must be a non-negative int, got {r!r}")
    if a.initial not in a.states:
        errors.append(f"initial state {a.initial} is not a state")
    for q in sorted(a.universal - set(a.states)):
        errors.append(f"universal state {q} is not a state")
    for k, t in enumerate(a.transitions):
        where = f"transition {k} ({t.source} -{t.name or 'graph'}-> {t.target})"
        for end in (t.source, t.target):
            if end not in a.states:
                errors.append(f"{where}: unknown state {end}")
        i, j = t.graph.type
        if t.source in a.states and i != a.states[t.source]:
            errors.append(f"{where}: front length {i} ≠ rank {a.states[t.source]}")
        if t.target in a.states and j != a.states[t.target]:
            errors.append(f"{where}: rear length {j} ≠ rank {a.states[t.target]}")
        if a.alphabet is not None:
            errors.extend(f"{where}: {p}" for p in a.alphabet.check(t.graph))
    return errors


def steps(a: Automaton, c: Configuration) -> List[Tuple[Configuration, Transition]]:
    """Every transition step out of *c*, one per (transition, frontal copy)."""
    out = []
    for t in a.outgoing(c.state):
        for p in embeddings(t.graph, c.remainder):
            out.append((Configuration(t.target, cut_off(p)), t))
    return out


def configuration_graph(a: Automaton, g0: Graph) -> EvaluationGraph:
    """Configuration graph from ``(initial, g0)``; node 0 is the initial
    configuration, the rest are numbered in breadth-first order."""
    rank = a.states.get(a.initial)
    if rank is None:
        raise ContractError(f"initial state {a.initial} is not a state")
    if len(g0.front) != rank:
        raise GraphTypeError(f"input front length {len(g0.front)} != rank {rank} of {a.initial}")
    universal_states = a.universal
    index: Dict[tuple, int] = {(a.initial, g0.shape): 0}
    configs: List[Configuration] = [Configuration(a.initial, g0)]
    successors: List[Tuple[int, ...]] = []
    k = 0
    while k < len(configs):
        c = configs[k]
        succ: Dict[int, None] = {}
        for t in a.outgoing(c.state):
            for p in embeddings(t.graph, c.remainder):
                r = cut_off(p)
                key = (t.target, r.shape)
                n = index.get(key)
                if n is None:
                    n = index[key] = len(configs)
                    configs.append(Configuration(t.target, r))
                succ[n] = None
        successors.append(tuple(succ))
        k += 1
    universal = tuple(c.state in universal_states for c in configs)
    return EvaluationGraph(universal, tuple(successors), tuple(configs), 0)


def classify(a: Automaton, g0: Graph) -> Verdict:
    """Accepted iff ``g0`` is in the lower language; not rejected iff it is in
    the upper language."""
    return verdict_at(configuration_graph(a, g0))


def permutation_digraph(a: Automaton) -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {q: [] for q in a.states}
    for t in a.transitions:
        if t.graph.is_permutation() and t.target not in out.setdefault(t.source, []):
            out[t.source].append(t.target)
    return out


def has_permutation_cycle(a: Automaton) -> bool:
    """True iff some cycle of transitions is labelled only by permutation graphs."""
    succ = permutation_digraph(a)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {q: WHITE for q in succ}
    for root in succ:
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(succ[root]))]
        while stack:
            q, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[q] = BLACK
                stack.pop()
            elif colour.get(nxt, WHITE) == GREY:
                return True
            elif colour.get(nxt, WHITE) == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(succ.get(nxt, []))))
    return False
