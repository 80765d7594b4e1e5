"""Systems of graph formulas with variables.

A system maps ranked variables to formulas built from ``true``, ``false``,
variables, graph quantifiers ``∃(ex, fo)`` / ``∀(ex, fo)``, negation,
conjunction and disjunction.  Its semantics is given by formula configuration
graphs (FCGs), evaluated like automaton configuration graphs.  For acyclic
systems :func:`satisfies` gives the same answer by plain recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .errors import ContractError, GraphTypeError
from .evaluation import EvaluationGraph, Verdict, verdict_at
from .expressions import (Atom, Concat, Empty, GraphExpression, Matcher, Star, Union, _perms,
                          atoms, expr_type, non_permuting)
from .graph import Graph, RankedAlphabet, cut_off, infer_alphabet


class Formula:
    """Base class of formula nodes."""

    __slots__ = ()

    def __and__(self, other: "Formula") -> "And":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Or":
        return Or(self, other)

    def __invert__(self) -> "Not":
        return Not(self)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def __repr__(self):
        return "true" if self.value else "false"


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Exists(Formula):
    expr: GraphExpression
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    expr: GraphExpression
    body: Formula


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


Quantifier = (Exists, Forall)


def is_conjunctive(fo: Formula) -> bool:
    """``true``, conjunctions and universal quantifications are conjunctive;
    everything else is disjunctive."""
    return isinstance(fo, (And, Forall)) or fo == TRUE


def subformulas(fo: Formula) -> Iterator[Formula]:
    """Pre-order walk over *fo*."""
    yield fo
    if isinstance(fo, Not):
        yield from subformulas(fo.arg)
    elif isinstance(fo, (And, Or)):
        yield from subformulas(fo.left)
        yield from subformulas(fo.right)
    elif isinstance(fo, Quantifier):
        yield from subformulas(fo.body)


def variables(fo: Formula) -> List[str]:
    """Variables occurring in *fo*, first occurrence first, no repeats."""
    return list(dict.fromkeys(s.name for s in subformulas(fo) if isinstance(s, Var)))


@dataclass
class FormulaSystem:
    """``ranks`` declares the variables, ``defs`` gives ``F(x)`` for each."""

    ranks: Dict[str, int]
    defs: Dict[str, Formula]
    alphabet: Optional[RankedAlphabet] = field(default=None, compare=False)

    def __post_init__(self):
        self.ranks = dict(self.ranks)
        self.defs = dict(self.defs)
        if self.alphabet is None:
            self.alphabet = infer_alphabet(
                a.graph for fo in self.defs.values() for s in subformulas(fo)
                if isinstance(s, Quantifier) for a in atoms(s.expr))

    @property
    def variables(self) -> List[str]:
        return list(self.ranks)

    def __getitem__(self, x: str) -> Formula:
        return self.defs[x]


# -- typing ------------------------------------------------------------------


def _infer(fo: Formula, ranks: Dict[str, int], errors: List[str], where: str) -> Optional[int]:
    """Type of *fo* (None for variable-free boolean combinations of constants),
    appending typing problems to *errors*."""
    if isinstance(fo, Const):
        return None
    if isinstance(fo, Var):
        if fo.name not in ranks:
            errors.append(f"{where}: undeclared variable {fo.name}")
            return None
        return ranks[fo.name]
    if isinstance(fo, Not):
        return _infer(fo.arg, ranks, errors, where)
    if isinstance(fo, (And, Or)):
        a = _infer(fo.left, ranks, errors, where)
        b = _infer(fo.right, ranks, errors, where)
        if a is not None and b is not None and a != b:
            errors.append(f"{where}: operands of rank {a} and {b} combined")
        return a if a is not None else b
    if isinstance(fo, Quantifier):
        try:
            i, j = expr_type(fo.expr)
        except GraphTypeError as exc:
            errors.append(f"{where}: {exc}")
            _infer(fo.body, ranks, errors, where)
            return None
        b = _infer(fo.body, ranks, errors, where)
        if b is not None and b != j:
            errors.append(f"{where}: body rank {b} ≠ {j}")
        return i
    raise TypeError(f"not a formula: {fo!r}")


def validate_system(f: FormulaSystem) -> List[str]:
    """List every typing problem of *f* (empty when well-formed)."""
    errors = []
    for x, r in f.ranks.items():
        if not isinstance(r, int) or r < 0:
            errors.append(f"variable {x}: rank must be a non-negative int, got {r!r}")
    for x in f.ranks:
        if x not in f.defs:
            errors.append(f"variable {x} has no definition")
    for x, fo in f.defs.items():
        where = f"definition of {x}"
        if x not in f.ranks:
            errors.append(f"{where}: {x} is not declared")
            continue
        t = _infer(fo, f.ranks, errors, where)
        if t is not None and t != f.ranks[x]:
            errors.append(f"{where}: formula of rank {t} ≠ rank {f.ranks[x]} of {x}")
        if f.alphabet is not None:
            for s in subformulas(fo):
                if isinstance(s, Quantifier):
                    for a in atoms(s.expr):
                        errors.extend(f"{where}: {p}" for p in f.alphabet.check(a.graph))
    return errors


def _require_valid(f: FormulaSystem) -> None:
    errors = validate_system(f)
    if errors:
        raise GraphTypeError("; ".join(errors))


# -- dependencies ------------------------------------------------------------


def dependency_graph(f: FormulaSystem) -> Dict[str, List[str]]:
    """``x -> [y, ...]`` with an edge whenever ``y`` occurs in ``F(x)``."""
    return {x: variables(f.defs[x]) if x in f.defs else [] for x in f.ranks}


def is_acyclic(f: FormulaSystem) -> bool:
    succ = dependency_graph(f)
    done: Dict[str, bool] = {}  # False while on the stack

    def visit(x) -> bool:
        state = done.get(x)
        if state is not None:
            return state
        done[x] = False
        for y in succ.get(x, ()):
            if not visit(y):
                return False
        done[x] = True
        return True

    return all(visit(x) for x in succ)


# -- formula configuration graphs ------------------------------------------


class FormulaConfiguration(NamedTuple):
    formula: Formula
    remainder: Graph
    positive: bool
    occurrence: int

    def __str__(self):
        sign = "+" if self.positive else "-"
        return f"({self.formula!r}, {self.remainder!r}, {sign})"


class _Compiled:
    """Subterm occurrences of a system, numbered deterministically.

    For every variable ``x`` there is the occurrence of its definition
    ``F(x)`` (a tree of occurrences) and a synthetic occurrence of ``Var(x)``
    serving as the start of FCGs at ``x``.
    """

    def __init__(self, f: FormulaSystem):
        self.formula: List[Formula] = []
        self.children: List[tuple] = []
        self.definition: Dict[str, int] = {}
        for x in f.ranks:
            self.definition[x] = self._walk(f.defs[x])
        self.root = {x: self._add(Var(x), ()) for x in f.ranks}
        self.conj = [is_conjunctive(fo) for fo in self.formula]

    def _add(self, fo, children) -> int:
        self.formula.append(fo)
        self.children.append(children)
        return len(self.formula) - 1

    def _walk(self, fo: Formula) -> int:
        if isinstance(fo, Not):
            return self._add(fo, (self._walk(fo.arg),))
        if isinstance(fo, (And, Or)):
            return self._add(fo, (self._walk(fo.left), self._walk(fo.right)))
        if isinstance(fo, Quantifier):
            return self._add(fo, (self._walk(fo.body),))
        return self._add(fo, ())


def fcg(f: FormulaSystem, x: str, g0: Graph, matcher: Optional[Matcher] = None) -> EvaluationGraph:
    """Formula configuration graph of *f* at *x* on *g0*.

    Node 0 is ``(x, g0, +)``; further nodes are numbered breadth-first.
    Configurations are identified by (subterm occurrence, remainder, sign).
    """
    if x not in f.ranks:
        raise ContractError(f"unknown variable {x}")
    _require_valid(f)
    if len(g0.front) != f.ranks[x]:
        raise GraphTypeError(f"input front length {len(g0.front)} != rank {f.ranks[x]} of {x}")
    code = _Compiled(f)
    matcher = matcher or Matcher()
    formula, children, definition, conj = code.formula, code.children, code.definition, code.conj
    # per occurrence: (target occurrence, sign flip) for one-step formulas,
    # the operand occurrences for ∧/∨, the expression for quantifiers
    VAR, NOT, BRANCH, QUANT, CONST = range(5)
    kinds = []
    for occ, fo in enumerate(formula):
        if isinstance(fo, Var):
            kinds.append((VAR, definition[fo.name]))
        elif isinstance(fo, Not):
            kinds.append((NOT, children[occ][0]))
        elif isinstance(fo, (And, Or)):
            kinds.append((BRANCH, children[occ]))
        elif isinstance(fo, Quantifier):
            kinds.append((QUANT, fo.expr))
        else:
            kinds.append((CONST, None))

    index: Dict[tuple, int] = {(code.root[x], g0.shape, True): 0}
    configs: List[tuple] = [(code.root[x], g0, True)]
    successors: List[Tuple[int, ...]] = []

    def visit(occ, g, pos, succ):
        key = (occ, g.shape, pos)
        n = index.get(key)
        if n is None:
            n = index[key] = len(configs)
            configs.append((occ, g, pos))
        succ[n] = None

    k = 0
    while k < len(configs):
        occ, g, pos = configs[k]
        kind, arg = kinds[occ]
        succ: Dict[int, None] = {}
        if kind == QUANT:
            body = children[occ][0]
            for p in matcher(arg, g):
                visit(body, cut_off(p), pos, succ)
        elif kind == VAR:
            visit(arg, g, pos, succ)
        elif kind == BRANCH:
            visit(arg[0], g, pos, succ)
            visit(arg[1], g, pos, succ)
        elif kind == NOT:
            visit(arg, g, not pos, succ)
        successors.append(tuple(succ))
        k += 1

    universal = tuple([conj[occ] == pos for occ, _, pos in configs])
    payload = tuple([FormulaConfiguration(formula[occ], g, pos, occ) for occ, g, pos in configs])
    return EvaluationGraph(universal, tuple(successors), payload, 0)


def classify_at(f: FormulaSystem, x: str, g0: Graph) -> Verdict:
    """Accepted iff ``g0`` is in the lower language of *f* at *x*; not
    rejected iff it is in the upper language."""
    return verdict_at(fcg(f, x, g0))


def satisfies(g: Graph, fo: Formula, f: FormulaSystem) -> bool:
    """``g ⊨ fo`` by structural recursion; *f* must be acyclic."""
    if not is_acyclic(f):
        raise ContractError("satisfies needs an acyclic formula system")
    for y in variables(fo):
        if y not in f.defs:
            raise ContractError(f"unknown variable {y}")
    matcher = Matcher()
    memo: Dict[tuple, bool] = {}

    def sat(g: Graph, fo: Formula) -> bool:
        key = (id(fo), g.shape)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(fo, Const):
            out = fo.value
        elif isinstance(fo, Not):
            out = not sat(g, fo.arg)
        elif isinstance(fo, And):
            out = sat(g, fo.left) and sat(g, fo.right)
        elif isinstance(fo, Or):
            out = sat(g, fo.left) or sat(g, fo.right)
        elif isinstance(fo, Exists):
            out = any(sat(cut_off(p), fo.body) for p in matcher(fo.expr, g))
        elif isinstance(fo, Forall):
            out = all(sat(cut_off(p), fo.body) for p in matcher(fo.expr, g))
        elif isinstance(fo, Var):
            out = sat(g, f.defs[fo.name])
        else:
            raise TypeError(f"not a formula: {fo!r}")
        memo[key] = out
        return out

    return sat(g, fo)


# -- negation elimination ----------------------------------------------------


def twin_names(names: Iterable[str]) -> Dict[str, str]:
    """Fresh name ``~x`` for the negated twin of every ``x``."""
    names = list(names)
    taken = set(names)
    out = {}
    for x in names:
        t = "~" + x
        while t in taken:
            t = "~" + t
        taken.add(t)
        out[x] = t
    return out


def _push(fo: Formula, positive: bool, twin: Dict[str, str]) -> Formula:
    """Negation-free formula equivalent to *fo* (or to ``¬fo``)."""
    if isinstance(fo, Const):
        return fo if positive else Const(not fo.value)
    if isinstance(fo, Var):
        return fo if positive else Var(twin[fo.name])
    if isinstance(fo, Not):
        return _push(fo.arg, not positive, twin)
    if isinstance(fo, (And, Or)):
        op = type(fo) if positive else (Or if isinstance(fo, And) else And)
        return op(_push(fo.left, positive, twin), _push(fo.right, positive, twin))
    if isinstance(fo, Quantifier):
        op = type(fo) if positive else (Forall if isinstance(fo, Exists) else Exists)
        return op(fo.expr, _push(fo.body, positive, twin))
    raise TypeError(f"not a formula: {fo!r}")


def eliminate_negations(f: FormulaSystem) -> FormulaSystem:
    """Equivalent negation-free system.

    Every variable ``x`` gets a twin ``~x`` defined as ``¬F(x)``; negations
    are then pushed inwards until they reach variables, which are replaced by
    their twins.
    """
    twin = twin_names(f.ranks)
    ranks = dict(f.ranks)
    defs = {x: _push(f.defs[x], True, twin) for x in f.ranks}
    for x in f.ranks:
        ranks[twin[x]] = f.ranks[x]
        defs[twin[x]] = _push(f.defs[x], False, twin)
    return FormulaSystem(ranks, defs, f.alphabet)


# -- shallow normal form -----------------------------------------------------


def is_shallow(fo: Formula) -> bool:
    """One of ``true``, ``false``, ``x ∨ y``, ``x ∧ y``, ``∃(G, x)``, ``∀(G, x)``."""
    if isinstance(fo, Const):
        return True
    if isinstance(fo, (And, Or)):
        return isinstance(fo.left, Var) and isinstance(fo.right, Var)
    if isinstance(fo, Quantifier):
        return isinstance(fo.expr, Atom) and isinstance(fo.body, Var)
    return False


def is_shallow_system(f: FormulaSystem) -> bool:
    return all(is_shallow(f.defs[x]) for x in f.ranks)


class _Normalizer:
    def __init__(self, f: FormulaSystem):
        self.ranks: Dict[str, int] = {}
        self.defs: Dict[str, Formula] = {}
        self.taken = set(f.ranks)
        self.counter: Dict[str, int] = {}
        self.perm_memo: dict = {}
        self.keep: list = []

    def fresh(self, base: str, rank: int) -> str:
        base = base.split("#", 1)[0]
        k = self.counter.get(base, 0)
        while True:
            k += 1
            name = f"{base}#{k}"
            if name not in self.taken:
                break
        self.counter[base] = k
        self.taken.add(name)
        self.ranks[name] = rank
        return name

    def var_for(self, x: str, fo: Formula, rank: int) -> Var:
        """*fo* itself if it is a variable, else a fresh variable defined as *fo*."""
        if isinstance(fo, Var):
            return fo
        y = self.fresh(x, rank)
        self.define(y, fo)
        return Var(y)

    def define(self, x: str, fo: Formula) -> None:
        """Set ``F(x)`` to a shallow formula, adding definitions as needed."""
        rank = self.ranks[x]
        if is_shallow(fo):
            self.defs[x] = fo
        elif isinstance(fo, Var):
            self.defs[x] = And(fo, fo)
        elif isinstance(fo, (And, Or)):
            left = self.var_for(x, fo.left, rank)
            right = self.var_for(x, fo.right, rank)
            self.defs[x] = type(fo)(left, right)
        elif isinstance(fo, Quantifier):
            self.quantifier(x, fo)
        else:
            raise ContractError(f"negation left in definition of {x}")

    def quantifier(self, x: str, fo: Formula) -> None:
        q = type(fo)
        ex, body = fo.expr, fo.body
        i, j = expr_type(ex)
        if isinstance(ex, Empty):
            # no frontal subgraph lies in the empty language
            self.defs[x] = TRUE if q is Forall else FALSE
        elif isinstance(ex, Atom):
            self.defs[x] = q(ex, self.var_for(x, body, j))
        elif isinstance(ex, Union):
            b = self.var_for(x, body, j)
            op = And if q is Forall else Or
            self.define(x, op(q(ex.left, b), q(ex.right, b)))
        elif isinstance(ex, Concat):
            mid = expr_type(ex.left)[1]
            inner = self.var_for(x, q(ex.right, body), mid)
            self.define(x, q(ex.left, inner))
        elif isinstance(ex, Star):
            if _perms(ex.inner, self.perm_memo):
                norm = non_permuting(ex)
                self.keep.append(norm)
                self.define(x, q(norm, body))
                return
            op = And if q is Forall else Or
            now = self.var_for(x, body, i)
            later = self.var_for(x, q(ex.inner, Var(x)), i)
            self.defs[x] = op(now, later)
        else:
            raise TypeError(f"not a graph expression: {ex!r}")


def shallow_normal_form(f: FormulaSystem) -> FormulaSystem:
    """Equivalent system in shallow normal form.

    Negations are eliminated first (adding twins ``~x``); then compound
    definitions are split top-down, introducing variables ``x#1, x#2, ...``.
    Original variables keep their names and languages; helper variables
    that none of them depends on are dropped.
    """
    _require_valid(f)
    g = eliminate_negations(f)
    norm = _Normalizer(g)
    for x in g.ranks:
        norm.ranks[x] = g.ranks[x]
    for x in g.ranks:
        norm.define(x, g.defs[x])
    # keep the original variables and whatever they depend on
    succ = {x: variables(fo) for x, fo in norm.defs.items()}
    live = set()
    stack = list(f.ranks)
    while stack:
        x = stack.pop()
        if x not in live:
            live.add(x)
            stack.extend(succ[x])
    ranks = {x: r for x, r in norm.ranks.items() if x in live}
    return FormulaSystem(ranks, {x: norm.defs[x] for x in ranks}, f.alphabet)
