"""Hypergraphs with front and rear interfaces.

A :class:`Graph` is an edge-labelled hypergraph whose edges attach to node
sequences, together with two repetition-free node sequences, the *front* and
the *rear* interface.  Everything else in the package is expressed with two
structural operations on such graphs:

* :func:`concatenate` glues the rear of one graph onto the front of another;
* :func:`cut_off` removes a frontal subgraph (described by a
  :class:`FrontalHandle`) and makes its rear the new front.

Node and edge ids are opaque hashable tokens (in practice ``int`` or ``str``).
They live in separate namespaces.  Graphs are immutable after construction.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphTypeError

Node = Hashable
Edge = Hashable
Label = str

INVISIBLE = "_"


def id_order(v):
    """Sort key that orders mixed int/str ids deterministically."""
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def _sorted(ids: Iterable) -> List:
    return sorted(ids, key=id_order)


class RankedAlphabet(Mapping[str, int]):
    """Finite map from edge label to rank."""

    def __init__(self, symbols: Optional[Mapping[str, int]] = None, **kw: int):
        ranks = dict(symbols or {}, **kw)
        for sym, rank in ranks.items():
            if not isinstance(rank, int) or rank < 0:
                raise ValueError(f"rank of {sym!r} must be a non-negative int, got {rank!r}")
        self._ranks = ranks

    def __getitem__(self, sym: str) -> int:
        return self._ranks[sym]

    def __iter__(self):
        return iter(self._ranks)

    def __len__(self) -> int:
        return len(self._ranks)

    def __eq__(self, other):
        if isinstance(other, RankedAlphabet):
            return self._ranks == other._ranks
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._ranks.items()))

    def __repr__(self):
        return f"RankedAlphabet({self._ranks!r})"

    def union(self, other: Mapping[str, int]) -> "RankedAlphabet":
        merged = dict(self._ranks)
        for sym, rank in other.items():
            if merged.setdefault(sym, rank) != rank:
                raise GraphTypeError(f"label {sym!r} used with ranks {merged[sym]} and {rank}")
        return RankedAlphabet(merged)

    def check(self, g: "Graph") -> List[str]:
        """Return a list of problems with *g* relative to this alphabet."""
        problems = []
        for e in _sorted(g.edges):
            lab = g.lab[e]
            if lab not in self._ranks:
                problems.append(f"edge {e!r}: label {lab!r} not in alphabet")
            elif self._ranks[lab] != len(g.att[e]):
                problems.append(
                    f"edge {e!r}: label {lab!r} has rank {self._ranks[lab]} "
                    f"but {len(g.att[e])} attached nodes"
                )
        return problems


UNLABELED = RankedAlphabet({INVISIBLE: 2})


def infer_alphabet(graphs: Iterable["Graph"]) -> RankedAlphabet:
    """Alphabet of the labels used by *graphs*, plus the invisible label."""
    ranks: Dict[str, int] = {}
    for g in graphs:
        for e, lab in g.lab.items():
            if ranks.setdefault(lab, len(g.att[e])) != len(g.att[e]):
                raise GraphTypeError(f"label {lab!r} used with ranks {ranks[lab]} and {len(g.att[e])}")
    if ranks.get(INVISIBLE, 2) == 2:
        ranks[INVISIBLE] = 2
    return RankedAlphabet(dict(sorted(ranks.items())))


class Graph:
    """An interfaced hypergraph.

    ``att`` maps each edge to its attachment sequence and ``lab`` maps it to a
    label; the edge set is the key set of ``att``.
    """

    __slots__ = ("nodes", "edges", "att", "lab", "front", "rear",
                 "_shape", "_key", "_hash", "_index", "_plans")

    def __init__(
        self,
        nodes: Iterable[Node],
        att: Optional[Mapping[Edge, Sequence[Node]]] = None,
        lab: Optional[Mapping[Edge, Label]] = None,
        front: Sequence[Node] = (),
        rear: Sequence[Node] = (),
    ):
        self.nodes: FrozenSet[Node] = frozenset(nodes)
        self.att: Dict[Edge, Tuple[Node, ...]] = {e: tuple(vs) for e, vs in (att or {}).items()}
        if lab is None:
            lab = {e: INVISIBLE for e in self.att}
        self.lab: Dict[Edge, Label] = dict(lab)
        self.front: Tuple[Node, ...] = tuple(front)
        self.rear: Tuple[Node, ...] = tuple(rear)
        self.edges: FrozenSet[Edge] = frozenset(self.att)
        self._validate()
        self._shape = self._key = self._hash = self._index = None
        self._plans = None

    @classmethod
    def _trusted(cls, nodes, att, lab, front, rear, edges=None) -> "Graph":
        # internal constructor: arguments already well formed
        g = cls.__new__(cls)
        g.nodes = nodes
        g.att = att
        g.lab = lab
        g.front = front
        g.rear = rear
        g.edges = frozenset(att) if edges is None else edges
        g._shape = g._key = g._hash = g._index = None
        g._plans = None
        return g

    def _validate(self) -> None:
        if set(self.lab) != set(self.att):
            raise ValueError("lab and att must be defined on the same edges")
        for e, vs in self.att.items():
            for v in vs:
                if v not in self.nodes:
                    raise ValueError(f"edge {e!r} attached to unknown node {v!r}")
        for name, seq in (("front", self.front), ("rear", self.rear)):
            if len(set(seq)) != len(seq):
                raise ValueError(f"{name} not repetition-free: {seq!r}")
            for v in seq:
                if v not in self.nodes:
                    raise ValueError(f"{name} node {v!r} is not a node of the graph")

    # -- basic properties -------------------------------------------------

    @property
    def type(self) -> Tuple[int, int]:
        return (len(self.front), len(self.rear))

    def is_permutation(self) -> bool:
        return not self.att and self.nodes == set(self.front) == set(self.rear)

    def is_identity(self) -> bool:
        return self.is_permutation() and self.front == self.rear

    def labels(self) -> Counter:
        return Counter(self.lab.values())

    @property
    def shape(self):
        """Cheap identity valid among graphs that share one id universe."""
        if self._shape is None:
            self._shape = (self.nodes, self.edges, self.front, self.rear)
        return self._shape

    def key(self) -> tuple:
        """Deterministic serialization; equal keys iff equal graphs."""
        if self._key is None:
            edges = tuple((e, self.lab[e], self.att[e]) for e in _sorted(self.att))
            self._key = (tuple(_sorted(self.nodes)), edges, self.front, self.rear)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if self is other:
            return True
        return (self.nodes == other.nodes and self.front == other.front
                and self.rear == other.rear and self.att == other.att
                and self.lab == other.lab)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.shape)
        return self._hash

    def __repr__(self):
        edges = ", ".join(
            f"{e}:{self.lab[e]}({','.join(map(str, self.att[e]))})" for e in _sorted(self.att)
        )
        nodes = " ".join(map(str, _sorted(self.nodes)))
        return (f"Graph<{nodes} | {edges} | front=({' '.join(map(str, self.front))}) "
                f"rear=({' '.join(map(str, self.rear))})>")

    # -- derived graphs ---------------------------------------------------

    def relabel(self, node_map: Mapping[Node, Node], edge_map: Optional[Mapping[Edge, Edge]] = None) -> "Graph":
        """Rename nodes (and optionally edges); ids missing from the maps are kept."""
        nm = lambda v: node_map.get(v, v)  # noqa: E731
        em = (lambda e: edge_map.get(e, e)) if edge_map else (lambda e: e)
        return Graph(
            (nm(v) for v in self.nodes),
            {em(e): tuple(nm(v) for v in vs) for e, vs in self.att.items()},
            {em(e): lab for e, lab in self.lab.items()},
            tuple(nm(v) for v in self.front),
            tuple(nm(v) for v in self.rear),
        )

    def with_interfaces(self, front: Sequence[Node], rear: Sequence[Node]) -> "Graph":
        return Graph(self.nodes, self.att, self.lab, front, rear)

    def edges_at(self, label: Label, position: int = -1, node: Node = None) -> List[Edge]:
        """Edges with *label* whose attachment has *node* at *position*
        (any edge with the label when *position* is -1).  Memoized."""
        idx = self._index
        if idx is None:
            idx = self._index = {}
        key = (label, position, node)
        hit = idx.get(key)
        if hit is None:
            lab = self.lab
            if position < 0:
                hit = [e for e in self.att if lab[e] == label]
            else:
                hit = [e for e, vs in self.att.items()
                       if len(vs) > position and vs[position] == node and lab[e] == label]
            idx[key] = hit
        return hit

    def sorted_nodes(self) -> List[Node]:
        return _sorted(self.nodes)


def identity_graph(n: int) -> Graph:
    """``Id_n``: n nodes, no edges, front = rear = (0, ..., n-1)."""
    seq = tuple(range(n))
    return Graph._trusted(frozenset(seq), {}, {}, seq, seq)


def permutation_graph(perm: Sequence[int]) -> Graph:
    """Permutation graph whose rear position k holds front node ``perm[k]``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {perm!r}")
    return Graph._trusted(frozenset(range(n)), {}, {}, tuple(range(n)), tuple(perm))


def digraph(nodes: Iterable[Node], arcs: Iterable[Tuple[Node, Node]], front=(), rear=(),
            label: Label = INVISIBLE) -> Graph:
    """Graph with one binary edge per arc; edge ids are 0, 1, ... in arc order."""
    arcs = list(arcs)
    return Graph(nodes, {i: a for i, a in enumerate(arcs)}, {i: label for i in range(len(arcs))},
                 front, rear)


def is_permutation(g: Graph) -> bool:
    return g.is_permutation()


# -- concatenation ---------------------------------------------------------


def _fresh(v, taken: set):
    if isinstance(v, int) and not isinstance(v, bool):
        c = max((t for t in taken if isinstance(t, int)), default=-1) + 1
    elif isinstance(v, str):
        c = v + "'"
        while c in taken:
            c += "'"
    else:
        n = 0
        c = ("fresh", n)
        while c in taken:
            n += 1
            c = ("fresh", n)
    taken.add(c)
    return c


def concatenate(g: Graph, h: Graph) -> Graph:
    """Typed concatenation ``g · h``.

    *h* is copied so that its front is identified position-wise with the rear
    of *g*; other ids of *h* are kept unless they clash with ids of *g*, in
    which case they are replaced by fresh ones (deterministically).
    """
    if len(g.rear) != len(h.front):
        raise GraphTypeError(f"cannot concatenate type {g.type} with type {h.type}: "
                             f"{len(g.rear)} != {len(h.front)}")
    node_map = dict(zip(h.front, g.rear))
    taken = set(g.nodes) | set(h.nodes)
    for v in _sorted(h.nodes):
        if v in node_map:
            continue
        node_map[v] = v if v not in g.nodes else _fresh(v, taken)
    edge_map = {}
    taken_e = set(g.edges) | set(h.edges)
    for e in _sorted(h.edges):
        edge_map[e] = e if e not in g.edges else _fresh(e, taken_e)
    att = dict(g.att)
    lab = dict(g.lab)
    for e, vs in h.att.items():
        att[edge_map[e]] = tuple(node_map[v] for v in vs)
        lab[edge_map[e]] = h.lab[e]
    nodes = g.nodes | frozenset(node_map.values())
    return Graph(nodes, att, lab, g.front, tuple(node_map[v] for v in h.rear))


# -- frontal subgraphs -----------------------------------------------------


class FrontalHandle:
    """A frontal subgraph of ``host``, given by its nodes, edges and rear.

    The subgraph's front is always the host's front.  Handles compare equal
    when they select the same nodes, edges and rear sequence.
    """

    __slots__ = ("host", "sub_nodes", "sub_edges", "sub_rear", "_hash")

    def __init__(self, host: Graph, sub_nodes: Iterable[Node], sub_edges: Iterable[Edge],
                 sub_rear: Sequence[Node]):
        self.host = host
        self.sub_nodes = frozenset(sub_nodes)
        self.sub_edges = frozenset(sub_edges)
        self.sub_rear = tuple(sub_rear)
        self._hash = None
        self._validate()

    @classmethod
    def _trusted(cls, host, sub_nodes, sub_edges, sub_rear) -> "FrontalHandle":
        p = cls.__new__(cls)
        p.host = host
        p.sub_nodes = sub_nodes
        p.sub_edges = sub_edges
        p.sub_rear = sub_rear
        p._hash = None
        return p

    def _validate(self) -> None:
        host = self.host
        if not self.sub_nodes <= host.nodes:
            raise ValueError("handle nodes must be host nodes")
        if not self.sub_edges <= host.edges:
            raise ValueError("handle edges must be host edges")
        for v in host.front:
            if v not in self.sub_nodes:
                raise ValueError(f"host front node {v!r} missing from handle")
        for e in self.sub_edges:
            for v in host.att[e]:
                if v not in self.sub_nodes:
                    raise ValueError(f"edge {e!r} attached outside the handle")
        if len(set(self.sub_rear)) != len(self.sub_rear):
            raise ValueError("handle rear not repetition-free")
        rear = set(self.sub_rear)
        if not rear <= self.sub_nodes:
            raise ValueError("handle rear must consist of handle nodes")
        for v in host.rear:
            if v in self.sub_nodes and v not in rear:
                raise ValueError(f"host rear node {v!r} must be in the handle rear")

    @classmethod
    def identity(cls, host: Graph) -> "FrontalHandle":
        """The handle selecting just the front nodes, with rear = front."""
        return cls._trusted(host, frozenset(host.front), frozenset(), host.front)

    @property
    def triple(self):
        return (self.sub_nodes, self.sub_edges, self.sub_rear)

    @property
    def type(self) -> Tuple[int, int]:
        return (len(self.host.front), len(self.sub_rear))

    def __eq__(self, other):
        if not isinstance(other, FrontalHandle):
            return NotImplemented
        return (self.sub_nodes == other.sub_nodes and self.sub_edges == other.sub_edges
                and self.sub_rear == other.sub_rear
                and (self.host is other.host or self.host == other.host))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sub_nodes, self.sub_edges, self.sub_rear))
        return self._hash

    def __repr__(self):
        return (f"FrontalHandle(nodes={_sorted(self.sub_nodes)}, edges={_sorted(self.sub_edges)}, "
                f"rear={self.sub_rear})")

    def sort_key(self):
        return (tuple(map(id_order, _sorted(self.sub_nodes))),
                tuple(map(id_order, _sorted(self.sub_edges))),
                tuple(map(id_order, self.sub_rear)))


def extract(handle: FrontalHandle) -> Graph:
    """The subgraph a handle denotes, as a standalone graph."""
    host = handle.host
    att = {e: host.att[e] for e in handle.sub_edges}
    lab = {e: host.lab[e] for e in handle.sub_edges}
    return Graph._trusted(handle.sub_nodes, att, lab, host.front, handle.sub_rear)


def cut_off(handle: FrontalHandle) -> Graph:
    """``host ⊘ P``: drop the interior nodes, the selected edges and every
    edge left dangling; the handle's rear becomes the new front."""
    host = handle.host
    interior = handle.sub_nodes.difference(handle.sub_rear)
    sub_edges = handle.sub_edges
    if not interior and not sub_edges:
        # nothing removed: same graph, new front (shares the edge index)
        g = Graph._trusted(host.nodes, host.att, host.lab, handle.sub_rear, host.rear, host.edges)
        if host._index is None:
            host._index = {}
        g._index = host._index
        return g
    att = {}
    lab = {}
    hatt = host.att
    if interior:
        for e, vs in hatt.items():
            if e in sub_edges:
                continue
            for v in vs:
                if v in interior:
                    break
            else:
                att[e] = vs
                lab[e] = host.lab[e]
        nodes = host.nodes - interior
    else:
        for e, vs in hatt.items():
            if e not in sub_edges:
                att[e] = vs
                lab[e] = host.lab[e]
        nodes = host.nodes
    return Graph._trusted(nodes, att, lab, handle.sub_rear, host.rear)


def compose(first: FrontalHandle, second: FrontalHandle) -> FrontalHandle:
    """Handle on ``first.host`` for ``extract(first) · extract(second)``, where
    *second* is a handle on ``cut_off(first)``."""
    return FrontalHandle._trusted(first.host, first.sub_nodes | second.sub_nodes,
                                  first.sub_edges | second.sub_edges, second.sub_rear)


# -- matching --------------------------------------------------------------


def _plan(pattern: Graph, bound: FrozenSet[Node]):
    """Order pattern edges so that each one touches already-bound nodes early.

    Returns ``(steps, free_nodes)`` where each step is
    ``(edge, label, att, anchor)``; ``anchor`` is a position of ``att`` whose
    node is bound when the step runs, or -1.
    """
    if pattern._plans is None:
        pattern._plans = {}
    cached = pattern._plans.get(bound)
    if cached is not None:
        return cached
    known = set(bound)
    remaining = _sorted(pattern.att)
    steps = []
    while remaining:
        best = max(remaining, key=lambda e: (sum(v in known for v in pattern.att[e]),
                                             len(pattern.att[e])))
        remaining.remove(best)
        att = pattern.att[best]
        anchor = next((k for k, v in enumerate(att) if v in known), -1)
        steps.append((best, pattern.lab[best], att, anchor))
        known.update(att)
    free = [v for v in _sorted(pattern.nodes) if v not in known]
    plan = (steps, free)
    pattern._plans[bound] = plan
    return plan


def _maps(pattern: Graph, host: Graph, fixed: Dict[Node, Node], first_only: bool = False) -> List[Tuple[dict, dict]]:
    """Every injective label/attachment preserving map extending *fixed*.

    *fixed* must already be injective.  Returns ``(node_map, edge_map)``
    pairs; with *first_only* the search stops after the first one.
    """
    steps, free = _plan(pattern, frozenset(fixed))
    edges_at = host.edges_at
    hatt = host.att
    nmap = dict(fixed)
    used = set(fixed.values())
    emap: dict = {}
    used_e: set = set()
    nsteps = len(steps)
    out: List[Tuple[dict, dict]] = []

    def rec(k):
        if k == nsteps:
            if not free:
                out.append((dict(nmap), dict(emap)))
                return first_only
            avail = [v for v in host.sorted_nodes() if v not in used]
            for image in permutations(avail, len(free)):
                m = dict(nmap)
                m.update(zip(free, image))
                out.append((m, dict(emap)))
                if first_only:
                    return True
            return False
        pe, lab, att, anchor = steps[k]
        if anchor >= 0:
            cands = edges_at(lab, anchor, nmap[att[anchor]])
        else:
            cands = edges_at(lab)
        for he in cands:
            if he in used_e:
                continue
            newly = []
            ok = True
            for pv, hv in zip(att, hatt[he]):
                b = nmap.get(pv)
                if b is None:
                    if hv in used:
                        ok = False
                        break
                    nmap[pv] = hv
                    used.add(hv)
                    newly.append(pv)
                elif b != hv:
                    ok = False
                    break
            if ok:
                emap[pe] = he
                used_e.add(he)
                done = rec(k + 1)
                used_e.discard(he)
                del emap[pe]
            else:
                done = False
            for pv in newly:
                used.discard(nmap.pop(pv))
            if done:
                return True
        return False

    rec(0)
    return out


def embeddings(pattern: Graph, host: Graph) -> List[FrontalHandle]:
    """All frontal subgraphs of *host* that are isomorphic copies of *pattern*.

    The pattern's front is mapped position-wise onto the host's front.  The
    result is duplicate-free and in a deterministic order.
    """
    pfront = pattern.front
    hfront = host.front
    if len(pfront) != len(hfront):
        raise GraphTypeError(f"pattern front length {len(pfront)} != host front length {len(hfront)}")
    if len(pattern.nodes) > len(host.nodes) or len(pattern.att) > len(host.att):
        return []
    plans = pattern._plans
    plan = plans.get(None) if plans is not None else None
    if plan is None:
        plan = _plan(pattern, frozenset(pfront))
        pattern._plans[None] = plan  # plan for the pattern's own front
    steps, free = plan
    prear = pattern.rear
    host_rear = host.rear
    trusted = FrontalHandle._trusted
    nmap = dict(zip(pfront, hfront))

    if len(steps) == 1 and not free:
        # single edge, every node on it or in the front: no search needed
        out = []
        _, lab, att, anchor = steps[0]
        hatt = host.att
        for he in host.edges_at(lab, anchor, nmap[att[anchor]]) if anchor >= 0 else host.edges_at(lab):
            m = nmap.copy()
            for pv, hv in zip(att, hatt[he]):
                b = m.get(pv)
                if b is None:
                    m[pv] = hv
                elif b != hv:
                    break
            else:
                sub_nodes = frozenset(m.values())
                if len(sub_nodes) != len(m):
                    continue  # not injective
                sub_rear = tuple([m[v] for v in prear])
                if host_rear and any(v in sub_nodes and v not in sub_rear for v in host_rear):
                    continue
                out.append(trusted(host, sub_nodes, frozenset((he,)), sub_rear))
        return out

    if not steps and not free:
        # only front nodes: permutation-like patterns
        sub_rear = tuple([nmap[v] for v in prear])
        sub_nodes = frozenset(hfront)
        if host_rear and any(v in sub_nodes and v not in sub_rear for v in host_rear):
            return []
        return [trusted(host, sub_nodes, frozenset(), sub_rear)]

    found: Dict[tuple, FrontalHandle] = {}

    def emit(edges):
        sub_rear = tuple([nmap[v] for v in prear])
        sub_nodes = frozenset(nmap.values())
        if host_rear:
            rs = set(sub_rear)
            for v in host_rear:
                if v in sub_nodes and v not in rs:
                    return
        t = (sub_nodes, edges, sub_rear)
        if t not in found:
            found[t] = trusted(host, sub_nodes, edges, sub_rear)

    edges_at = host.edges_at
    hatt = host.att
    used = set(nmap.values())

    chosen: List[Edge] = []
    nsteps = len(steps)

    def leaf():
        edges = frozenset(chosen)
        if not free:
            emit(edges)
            return
        avail = [v for v in host.sorted_nodes() if v not in used]
        for image in permutations(avail, len(free)):
            nmap.update(zip(free, image))
            emit(edges)
        for v in free:
            del nmap[v]

    def rec(k):
        if k == nsteps:
            leaf()
            return
        _, lab, att, anchor = steps[k]
        cands = edges_at(lab, anchor, nmap[att[anchor]]) if anchor >= 0 else edges_at(lab)
        for he in cands:
            if he in chosen:
                continue
            newly = []
            ok = True
            for pv, hv in zip(att, hatt[he]):
                b = nmap.get(pv)
                if b is None:
                    if hv in used:
                        ok = False
                        break
                    nmap[pv] = hv
                    used.add(hv)
                    newly.append(pv)
                elif b != hv:
                    ok = False
                    break
            if ok:
                chosen.append(he)
                rec(k + 1)
                chosen.pop()
            for pv in newly:
                used.discard(nmap.pop(pv))

    rec(0)
    return list(found.values())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism respecting labels, attachments and both interfaces."""
    if (g.type != h.type or len(g.nodes) != len(h.nodes) or len(g.att) != len(h.att)
            or g.labels() != h.labels()):
        return False
    fixed: Dict[Node, Node] = {}
    for a, b in list(zip(g.front, h.front)) + list(zip(g.rear, h.rear)):
        if fixed.setdefault(a, b) != b:
            return False
    if len(set(fixed.values())) != len(fixed):
        return False
    return bool(_maps(g, h, fixed, first_only=True))


def frontal_subgraphs(host: Graph, rear_len: int) -> List[FrontalHandle]:
    """Every handle on *host* whose rear has length *rear_len* (brute force).

    Exponential in the size of the host; meant for small test hosts.
    """
    front = frozenset(host.front)
    others = [v for v in _sorted(host.nodes) if v not in front]
    host_rear = set(host.rear)
    edges = _sorted(host.att)
    out = []
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            nodes = front | frozenset(extra)
            induced = [e for e in edges if all(v in nodes for v in host.att[e])]
            must = nodes & host_rear
            rears = [seq for seq in permutations(_sorted(nodes), rear_len) if must <= set(seq)]
            if not rears:
                continue
            for k in range(len(induced) + 1):
                for es in combinations(induced, k):
                    es = frozenset(es)
                    for seq in rears:
                        out.append(FrontalHandle._trusted(host, nodes, es, seq))
    return out
