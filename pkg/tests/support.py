"""Random generators and brute-force oracles shared by the tests.

The oracles here deliberately avoid the package's own search code: they try
every node map outright.
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, List, Optional, Sequence, Set, Tuple

from graphformulas.automaton import Automaton, Transition
from graphformulas.evaluation import EvaluationGraph
from graphformulas.expressions import Atom, Concat, Empty, Star, Union, expr_type
from graphformulas.formulas import FALSE, TRUE, And, Exists, Forall, FormulaSystem, Not, Or, Var
from graphformulas.graph import FrontalHandle, Graph, concatenate, identity_graph, permutation_graph

# -- brute-force oracles ------------------------------------------------------


def _edge_maps(pattern: Graph, host: Graph, nmap: dict):
    """All injective edge maps compatible with the node map *nmap*."""
    pedges = sorted(pattern.att, key=repr)
    cands = []
    for e in pedges:
        want = tuple(nmap[v] for v in pattern.att[e])
        cands.append([h for h in host.att if host.lab[h] == pattern.lab[e] and host.att[h] == want])
    for choice in itertools.product(*cands):
        if len(set(choice)) == len(choice):
            yield dict(zip(pedges, choice))


def brute_embeddings(pattern: Graph, host: Graph) -> Set[tuple]:
    """Triples (nodes, edges, rear) of all frontal copies of *pattern* in *host*."""
    pn = sorted(pattern.nodes, key=repr)
    out = set()
    for image in itertools.permutations(sorted(host.nodes, key=repr), len(pn)):
        nmap = dict(zip(pn, image))
        if tuple(nmap[v] for v in pattern.front) != host.front:
            continue
        sub_nodes = frozenset(image)
        sub_rear = tuple(nmap[v] for v in pattern.rear)
        if any(v in sub_nodes and v not in sub_rear for v in host.rear):
            continue
        for emap in _edge_maps(pattern, host, nmap):
            out.add((sub_nodes, frozenset(emap.values()), sub_rear))
    return out


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g.nodes) != len(h.nodes) or len(g.att) != len(h.att) or g.type != h.type:
        return False
    gn = sorted(g.nodes, key=repr)
    for image in itertools.permutations(sorted(h.nodes, key=repr)):
        nmap = dict(zip(gn, image))
        if tuple(nmap[v] for v in g.front) != h.front or tuple(nmap[v] for v in g.rear) != h.rear:
            continue
        for _ in _edge_maps(g, h, nmap):
            return True
    return False


def fixed_points(e: EvaluationGraph, evolve) -> List[dict]:
    """Every partial assignment α with evolve(e, α) = α."""
    out = []
    for values in itertools.product((None, True, False), repeat=len(e)):
        a = {c: v for c, v in enumerate(values) if v is not None}
        if evolve(e, a) == a:
            out.append(a)
    return out


def recursive_value(e: EvaluationGraph, c: int, memo=None) -> bool:
    """Bottom-up evaluation of an acyclic evaluation graph."""
    memo = {} if memo is None else memo
    if c not in memo:
        vals = [recursive_value(e, d, memo) for d in e.successors[c]]
        memo[c] = all(vals) if e.universal[c] else any(vals)
    return memo[c]


# -- random objects -------------------------------------------------------------


def random_graph(rng: random.Random, n_nodes: int, front: int = 0, rear: int = 0,
                 edges: Optional[int] = None, unary: bool = False, loops: bool = True) -> Graph:
    nodes = list(range(n_nodes))
    fr = tuple(rng.sample(nodes, front))
    re = tuple(rng.sample(nodes, rear))
    if edges is None:
        edges = rng.randint(0, n_nodes + 1) if n_nodes else 0
    att, lab = {}, {}
    if n_nodes:
        for k in range(edges):
            if unary and rng.random() < 0.25:
                att[k], lab[k] = (rng.choice(nodes),), "a"
            else:
                a, b = rng.choice(nodes), rng.choice(nodes)
                if a == b and not loops:
                    continue
                att[k], lab[k] = (a, b), "_"
    return Graph(nodes, att, lab, fr, re)


def random_typed_graph(rng: random.Random, i: int, j: int, max_nodes: int = 3, unary: bool = False) -> Graph:
    n = rng.randint(max(i, j, 1 if i == j == 0 else 0), max(max_nodes, i, j))
    g = random_graph(rng, n, i, j, edges=rng.randint(0, 2), unary=unary)
    return g


def random_permutation_atom(rng: random.Random, n: int) -> Atom:
    p = list(range(n))
    if rng.random() < 0.5:
        rng.shuffle(p)
    return Atom(permutation_graph(p) if p != list(range(n)) else identity_graph(n))


def random_expression(rng: random.Random, i: int, j: int, depth: int, unary: bool = False,
                      max_nodes: int = 3):
    """Well-typed expression of type (i, j) and AST depth <= *depth*."""
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        if roll < 0.03:
            return Empty(i, j)
        if i == j and rng.random() < 0.2:
            return random_permutation_atom(rng, i)
        return Atom(random_typed_graph(rng, i, j, max_nodes, unary))
    kind = rng.choice(["union", "concat", "star"] if i == j else ["union", "concat"])
    if kind == "union":
        return Union(random_expression(rng, i, j, depth - 1, unary, max_nodes),
                     random_expression(rng, i, j, depth - 1, unary, max_nodes))
    if kind == "concat":
        k = rng.randint(0, 2)
        return Concat(random_expression(rng, i, k, depth - 1, unary, max_nodes),
                      random_expression(rng, k, j, depth - 1, unary, max_nodes))
    return Star(random_expression(rng, i, i, depth - 1, unary, max_nodes))


def sample_member(rng: random.Random, ex, repeats: int = 2) -> Optional[Graph]:
    """Some graph of ``L(ex)``, or None if the draw hit an empty language."""
    if isinstance(ex, Empty):
        return None
    if isinstance(ex, Atom):
        return ex.graph
    if isinstance(ex, Union):
        first, second = (ex.left, ex.right) if rng.random() < 0.5 else (ex.right, ex.left)
        g = sample_member(rng, first, repeats)
        return g if g is not None else sample_member(rng, second, repeats)
    if isinstance(ex, Concat):
        left = sample_member(rng, ex.left, repeats)
        right = sample_member(rng, ex.right, repeats) if left is not None else None
        return concatenate(left, right) if right is not None else None
    if isinstance(ex, Star):
        g = identity_graph(expr_type(ex)[0])
        for _ in range(rng.randint(0, repeats)):
            step = sample_member(rng, ex.inner, repeats)
            if step is None:
                break
            g = concatenate(g, step)
        return g
    raise TypeError(ex)


def random_handle(rng: random.Random, g: Graph, rear_len: Optional[int] = None) -> Optional[FrontalHandle]:
    """A random frontal subgraph of *g*, or None if the draw is impossible."""
    front = set(g.front)
    others = [v for v in sorted(g.nodes) if v not in front]
    nodes = front | {v for v in others if rng.random() < 0.5}
    induced = [e for e in sorted(g.att) if all(v in nodes for v in g.att[e])]
    edges = {e for e in induced if rng.random() < 0.6}
    must = [v for v in g.rear if v in nodes]
    if rear_len is None:
        rear_len = rng.randint(len(must), len(nodes))
    if rear_len < len(must) or rear_len > len(nodes):
        return None
    extra = rng.sample(sorted(nodes - set(must)), rear_len - len(must))
    rear = must + extra
    rng.shuffle(rear)
    return FrontalHandle(g, nodes, edges, rear)


def random_automaton(rng: random.Random, n_states: Optional[int] = None, perm_prob: float = 0.15) -> Automaton:
    """Up to four states, transition graphs with at most three nodes; the
    initial state has rank 0 so the automaton reads interface-free graphs."""
    n_states = n_states or rng.randint(1, 4)
    names = [f"q{k}" for k in range(n_states)]
    ranks = {q: (0 if k == 0 else rng.randint(0, 2)) for k, q in enumerate(names)}
    transitions = []
    for _ in range(rng.randint(1, 2 * n_states + 1)):
        s, t = rng.choice(names), rng.choice(names)
        i, j = ranks[s], ranks[t]
        if i == j and rng.random() < perm_prob:
            g = random_permutation_atom(rng, i).graph
        else:
            g = random_typed_graph(rng, i, j, 3)
        transitions.append(Transition(s, g, t))
    universal = {q for q in names if rng.random() < 0.4}
    return Automaton(ranks, transitions, "q0", universal)


def random_acyclic_system(rng: random.Random, n_vars: Optional[int] = None, depth: int = 3) -> FormulaSystem:
    """Variables ``x0 .. xk``; ``F(xi)`` only mentions ``xj`` with ``j > i``.
    ``x0`` has rank 0."""
    n_vars = n_vars or rng.randint(1, 4)
    names = [f"x{k}" for k in range(n_vars)]
    ranks = {x: (0 if k == 0 else rng.randint(0, 2)) for k, x in enumerate(names)}

    def formula(m: int, later: List[str], d: int):
        usable = [y for y in later if ranks[y] == m]
        roll = rng.random()
        if d == 0 or roll < 0.2:
            if usable and rng.random() < 0.6:
                return Var(rng.choice(usable))
            return TRUE if rng.random() < 0.5 else FALSE
        kind = rng.choice(["not", "and", "or", "exists", "forall"])
        if kind == "not":
            return Not(formula(m, later, d - 1))
        if kind in ("and", "or"):
            op = And if kind == "and" else Or
            return op(formula(m, later, d - 1), formula(m, later, d - 1))
        j = rng.randint(0, 2)
        ex = random_expression(rng, m, j, rng.randint(0, 1), max_nodes=2)
        q = Exists if kind == "exists" else Forall
        return q(ex, formula(j, later, d - 1))

    defs = {x: formula(ranks[x], names[k + 1:], depth) for k, x in enumerate(names)}
    return FormulaSystem(ranks, defs)


def random_evaluation_graph(rng: random.Random, max_nodes: int = 6, acyclic: bool = False) -> EvaluationGraph:
    n = rng.randint(1, max_nodes)
    universal = [rng.random() < 0.5 for _ in range(n)]
    p = rng.uniform(0.1, 0.5)
    edges = [(a, b) for a in range(n) for b in range(n)
             if rng.random() < p and (not acyclic or a < b)]
    return EvaluationGraph.build(universal, edges)


def interface_free(graphs: Sequence[Graph]) -> List[Graph]:
    return [g for g in graphs if not g.front and not g.rear]
