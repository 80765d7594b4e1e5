"""Graph expressions: regular-expression-like terms denoting graph languages.

An expression is built from ``Empty``, graph atoms, ``Union`` (⊕),
``Concat`` (⊙) and ``Star`` (⊛).  This module decides membership of a whole
graph (:func:`member`, a brute-force decomposition oracle) and enumerates the
frontal subgraphs of a host that belong to an expression's language
(:func:`match_expression`, the compositional matcher used by formulas).
Both work up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .errors import GraphTypeError
from .graph import (FrontalHandle, Graph, compose, cut_off, embeddings, extract,
                    frontal_subgraphs, is_isomorphic, permutation_graph)

Perm = Tuple[int, ...]


class GraphExpression:
    """Base class of expression nodes."""

    __slots__ = ()

    def __add__(self, other: "GraphExpression") -> "Union":
        return Union(self, other)

    def __matmul__(self, other: "GraphExpression") -> "Concat":
        return Concat(self, other)

    def star(self) -> "Star":
        return Star(self)


@dataclass(frozen=True)
class Empty(GraphExpression):
    i: int
    j: int


@dataclass(frozen=True)
class Atom(GraphExpression):
    graph: Graph
    name: Optional[str] = field(default=None, compare=False)


@dataclass(frozen=True)
class Union(GraphExpression):
    left: GraphExpression
    right: GraphExpression


@dataclass(frozen=True)
class Concat(GraphExpression):
    left: GraphExpression
    right: GraphExpression


@dataclass(frozen=True)
class Star(GraphExpression):
    inner: GraphExpression


def expr_type(ex: GraphExpression) -> Tuple[int, int]:
    """Type ``(i, j)`` of *ex*; raises :class:`GraphTypeError` if ill-typed."""
    if isinstance(ex, Empty):
        return (ex.i, ex.j)
    if isinstance(ex, Atom):
        return ex.graph.type
    if isinstance(ex, Union):
        a, b = expr_type(ex.left), expr_type(ex.right)
        if a != b:
            raise GraphTypeError(f"union of type {a} with type {b} in {ex!r}")
        return a
    if isinstance(ex, Concat):
        a, b = expr_type(ex.left), expr_type(ex.right)
        if a[1] != b[0]:
            raise GraphTypeError(f"concatenation of type {a} with type {b}: {a[1]} != {b[0]} in {ex!r}")
        return (a[0], b[1])
    if isinstance(ex, Star):
        a = expr_type(ex.inner)
        if a[0] != a[1]:
            raise GraphTypeError(f"star of type {a} (must be (i,i)) in {ex!r}")
        return a
    raise TypeError(f"not a graph expression: {ex!r}")


def atoms(ex: GraphExpression) -> Iterable[Atom]:
    """Atoms of *ex*, left to right."""
    if isinstance(ex, Atom):
        yield ex
    elif isinstance(ex, (Union, Concat)):
        yield from atoms(ex.left)
        yield from atoms(ex.right)
    elif isinstance(ex, Star):
        yield from atoms(ex.inner)


# -- permutation graphs ----------------------------------------------------


def _as_perm(g: Graph) -> Perm:
    pos = {v: k for k, v in enumerate(g.front)}
    return tuple(pos[v] for v in g.rear)


def _then(p: Perm, q: Perm) -> Perm:
    # permutation of graph(p) · graph(q)
    return tuple(p[k] for k in q)


def _perms(ex: GraphExpression, memo: Dict[int, FrozenSet[Perm]]) -> FrozenSet[Perm]:
    hit = memo.get(id(ex))
    if hit is not None:
        return hit
    if isinstance(ex, Empty):
        out = frozenset()
    elif isinstance(ex, Atom):
        out = frozenset([_as_perm(ex.graph)]) if ex.graph.is_permutation() else frozenset()
    elif isinstance(ex, Union):
        out = _perms(ex.left, memo) | _perms(ex.right, memo)
    elif isinstance(ex, Concat):
        left, right = _perms(ex.left, memo), _perms(ex.right, memo)
        out = frozenset(_then(p, q) for p in left for q in right)
    elif isinstance(ex, Star):
        n = expr_type(ex)[0]
        gens = _perms(ex.inner, memo)
        out = {tuple(range(n))}
        frontier = list(out)
        while frontier:
            p = frontier.pop()
            for g in gens:
                r = _then(g, p)
                if r not in out:
                    out.add(r)
                    frontier.append(r)
        out = frozenset(out)
    else:
        raise TypeError(f"not a graph expression: {ex!r}")
    memo[id(ex)] = out
    return out


def permutation_set(ex: GraphExpression) -> Set[Graph]:
    """The permutation graphs in ``L(ex)``, one representative per
    isomorphism class (nodes ``0..n-1``, front in order)."""
    return {permutation_graph(p) for p in _perms(ex, {})}


def _perm_atom(p: Perm) -> Atom:
    if p == tuple(range(len(p))):
        name = f"Id{len(p)}"
    else:
        name = "Perm" + "_".join(map(str, p))
    return Atom(permutation_graph(p), name)


# -- non-permuting normal form ---------------------------------------------


def _union(a: GraphExpression, b: GraphExpression) -> GraphExpression:
    if isinstance(a, Empty):
        return b
    if isinstance(b, Empty):
        return a
    return Union(a, b)


def _concat(a: GraphExpression, b: GraphExpression) -> GraphExpression:
    if isinstance(a, Empty) or isinstance(b, Empty):
        return Empty(expr_type(a)[0], expr_type(b)[1])
    return Concat(a, b)


def _sum(items: List[GraphExpression], i: int, j: int) -> GraphExpression:
    out: GraphExpression = Empty(i, j)
    for it in items:
        out = _union(out, it)
    return out


class _NonPermuting:
    def __init__(self):
        self.perm_memo: Dict[int, FrozenSet[Perm]] = {}
        self.strip_memo: Dict[int, GraphExpression] = {}
        self.full_memo: Dict[int, GraphExpression] = {}
        self.keep: List[GraphExpression] = []  # ids stay valid while memoized

    def perms(self, ex):
        return _perms(ex, self.perm_memo)

    def is_non_permuting(self, ex) -> bool:
        if isinstance(ex, Star):
            return not self.perms(ex.inner) and self.is_non_permuting(ex.inner)
        if isinstance(ex, (Union, Concat)):
            return self.is_non_permuting(ex.left) and self.is_non_permuting(ex.right)
        return True

    def pi(self, ex) -> GraphExpression:
        i, j = expr_type(ex)
        return _sum([_perm_atom(p) for p in sorted(self.perms(ex))], i, j)

    def full(self, ex: GraphExpression) -> GraphExpression:
        hit = self.full_memo.get(id(ex))
        if hit is None:
            # already fine: keep it as written
            hit = ex if self.is_non_permuting(ex) else _union(self.strip(ex), self.pi(ex))
            self.full_memo[id(ex)] = hit
            self.keep.append(ex)
        return hit

    def strip(self, ex: GraphExpression) -> GraphExpression:
        """Non-permuting expression for ``L(ex)`` minus its permutation graphs."""
        hit = self.strip_memo.get(id(ex))
        if hit is not None:
            return hit
        if isinstance(ex, Empty):
            out = ex
        elif isinstance(ex, Atom):
            out = Empty(*ex.graph.type) if ex.graph.is_permutation() else ex
        elif isinstance(ex, Union):
            out = _union(self.strip(ex.left), self.strip(ex.right))
        elif isinstance(ex, Concat):
            out = _union(_concat(self.strip(ex.left), self.full(ex.right)),
                         _concat(self.full(ex.left), self.strip(ex.right)))
        elif isinstance(ex, Star):
            n = expr_type(ex)[0]
            body = self.strip(ex.inner)
            perms = self.perms(ex)
            if isinstance(body, Empty):
                out = Empty(n, n)
            elif perms == {tuple(range(n))}:
                out = Concat(body, Star(body))
            else:
                pi = self.pi(ex)
                step = _concat(pi, body)
                out = _concat(_concat(step, Star(step)), pi)
        else:
            raise TypeError(f"not a graph expression: {ex!r}")
        self.strip_memo[id(ex)] = out
        self.keep.append(ex)
        return out


def non_permuting(ex: GraphExpression) -> GraphExpression:
    """Language-equivalent expression in which no starred subexpression's
    language contains a permutation graph."""
    expr_type(ex)
    return _NonPermuting().full(ex)


def is_non_permuting(ex: GraphExpression) -> bool:
    """No starred subexpression of *ex* has a permutation graph in its language."""
    return _NonPermuting().is_non_permuting(ex)


# -- membership oracle -----------------------------------------------------


def _clean(p: FrontalHandle) -> bool:
    """True if the host is exactly ``extract(p) · cut_off(p)``, i.e. no host
    edge outside the handle touches an interior node."""
    host = p.host
    interior = p.sub_nodes.difference(p.sub_rear)
    if not interior:
        return True
    for e, vs in host.att.items():
        if e not in p.sub_edges and any(v in interior for v in vs):
            return False
    return True


class _Member:
    def __init__(self):
        self.memo: Dict[tuple, bool] = {}

    def __call__(self, ex: GraphExpression, g: Graph) -> bool:
        key = (id(ex), g.key())
        hit = self.memo.get(key)
        if hit is None:
            hit = self._decide(ex, g)
            self.memo[key] = hit
        return hit

    def _split(self, g: Graph, mid: int):
        for p in frontal_subgraphs(g, mid):
            if _clean(p):
                yield p

    def _decide(self, ex: GraphExpression, g: Graph) -> bool:
        if isinstance(ex, Empty):
            return False
        if isinstance(ex, Atom):
            return is_isomorphic(ex.graph, g)
        if isinstance(ex, Union):
            return self(ex.left, g) or self(ex.right, g)
        if isinstance(ex, Concat):
            mid = expr_type(ex.left)[1]
            for p in self._split(g, mid):
                if self(ex.left, extract(p)) and self(ex.right, cut_off(p)):
                    return True
            return False
        if isinstance(ex, Star):
            # a permutation step only reorders the front, so those steps are
            # explored as a search over front orders; every other step leaves
            # a strictly smaller remainder and recursion is safe
            seen = {g.key()}
            todo = [g]
            while todo:
                h = todo.pop()
                if h.is_identity():
                    return True
                for p in self._split(h, len(h.front)):
                    first = extract(p)
                    if not self(ex.inner, first):
                        continue
                    rest = cut_off(p)
                    if first.is_permutation():
                        k = rest.key()
                        if k not in seen:
                            seen.add(k)
                            todo.append(rest)
                    elif self(ex, rest):
                        return True
            return False
        raise TypeError(f"not a graph expression: {ex!r}")


def member(ex: GraphExpression, g: Graph) -> bool:
    """Is *g* isomorphic to a graph in ``L(ex)``?  Brute force over all
    decompositions; intended as a test oracle for small graphs."""
    t = expr_type(ex)
    if g.type != t:
        raise GraphTypeError(f"graph of type {g.type} tested against expression of type {t}")
    return _Member()(ex, g)


# -- anchored matching -----------------------------------------------------


class Matcher:
    """Enumerates frontal subgraphs of hosts lying in an expression's language.

    Results are memoized per (subexpression, remainder); all hosts passed to
    one matcher must come from a single id universe (e.g. remainders of one
    input graph), since remainders are identified structurally.
    """

    def __init__(self):
        self.memo: Dict[tuple, List[FrontalHandle]] = {}
        self.normalized: Dict[int, GraphExpression] = {}
        self.perm_memo: Dict[int, FrozenSet[Perm]] = {}
        self.keep: List[GraphExpression] = []

    def __call__(self, ex: GraphExpression, host: Graph) -> List[FrontalHandle]:
        key = (id(ex), host.shape)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._match(ex, host)
            self.memo[key] = hit
            self.keep.append(ex)
        return hit

    def _match(self, ex: GraphExpression, host: Graph) -> List[FrontalHandle]:
        if isinstance(ex, Empty):
            return []
        if isinstance(ex, Atom):
            return embeddings(ex.graph, host)
        if isinstance(ex, Union):
            out = dict.fromkeys(self(ex.left, host))
            out.update(dict.fromkeys(self(ex.right, host)))
            return list(out)
        if isinstance(ex, Concat):
            out: Dict[FrontalHandle, None] = {}
            for p1 in self(ex.left, host):
                rest = cut_off(p1)
                for p2 in self(ex.right, rest):
                    out[compose(p1, p2)] = None
            return list(out)
        if isinstance(ex, Star):
            if _perms(ex.inner, self.perm_memo):
                norm = self.normalized.get(id(ex))
                if norm is None:
                    norm = non_permuting(ex)
                    self.normalized[id(ex)] = norm
                    self.keep.append(norm)
                return self(norm, host)
            start = FrontalHandle.identity(host)
            seen = {start: None}
            frontier = [start]
            while frontier:
                p = frontier.pop()
                for q in self(ex.inner, cut_off(p)):
                    c = compose(p, q)
                    if c not in seen:
                        seen[c] = None
                        frontier.append(c)
            return list(seen)
        raise TypeError(f"not a graph expression: {ex!r}")


def match_expression(ex: GraphExpression, host: Graph, matcher: Optional[Matcher] = None) -> List[FrontalHandle]:
    """All handles ``P`` on *host* with ``extract(P)`` isomorphic to a member
    of ``L(ex)``, duplicate-free, in deterministic order."""
    i, _ = expr_type(ex)
    if i != len(host.front):
        raise GraphTypeError(f"expression front length {i} != host front length {len(host.front)}")
    return (matcher or Matcher())(ex, host)
