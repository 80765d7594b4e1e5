"""Text format for graphs, expressions, formula systems and automata.

A spec file is a sequence of declarations::

    alphabet { _/2; L/1; }
    graph EDGE (1,1) { nodes x y; front x; rear y; edge _(x,y); }
    expr PATH = EDGE . EDGE* ;
    system { let x:1 = exists PATH -> true | !x; }
    automaton { state q:0 exists init; trans q -LOOP-> q; }

Node and edge ids are identifiers, integers or double-quoted strings.
Expressions use ``+`` (union), ``.`` (concatenation) and postfix ``*``
(star), binding ``*`` tightest and ``+`` loosest; ``empty(i,j)`` is the
empty language.  Formulas use ``!``, ``exists EX -> FO``, ``forall EX -> FO``
(all three bind to the next unary formula), then ``&``, then ``|``.
``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .automaton import Automaton, Transition, validate
from .errors import GraphTypeError, SpecSyntaxError
from .expressions import Atom, Concat, Empty, GraphExpression, Star, Union, atoms, expr_type
from .formulas import (FALSE, TRUE, And, Const, Exists, Forall, Formula, FormulaSystem, Not, Or, Var,
                       subformulas, validate_system)
from .graph import INVISIBLE, Graph, RankedAlphabet, _sorted

KEYWORDS = frozenset({
    "alphabet", "graph", "expr", "system", "automaton", "let", "state", "trans", "exists",
    "forall", "init", "true", "false", "empty", "nodes", "front", "rear", "edge",
})

_TOKEN = re.compile(r"""
    (?P<space>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_~][A-Za-z0-9_#'~]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<arrow>->)
  | (?P<punct>[{}();:,/=+.*!&|\-])
""", re.VERBOSE)

_NAME = re.compile(r"[A-Za-z_~][A-Za-z0-9_#'~]*\Z")


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = line_start = 0
    line = 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("space", "comment"):
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        for k in range(pos, m.end()):
            if text[k] == "\n":
                line += 1
                line_start = k + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


@dataclass
class SpecFile:
    """Parsed contents of a spec file; any part may be absent.

    Graphs referenced by expressions, the system or the automaton but not
    listed in ``graphs`` are added to it under their atom/transition name
    (or a fresh ``G1, G2, ...``), so that the file is self-contained.
    """

    alphabet: Optional[RankedAlphabet] = None
    graphs: Dict[str, Graph] = field(default_factory=dict)
    expressions: Dict[str, GraphExpression] = field(default_factory=dict)
    system: Optional[FormulaSystem] = None
    automaton: Optional[Automaton] = None

    def __post_init__(self):
        self.graphs = dict(self.graphs)
        self.expressions = dict(self.expressions)
        for g, name in self._referenced():
            self.name_of(g, name)

    def _referenced(self):
        for ex in self.expressions.values():
            for a in atoms(ex):
                yield a.graph, a.name
        if self.system is not None:
            for x in self.system.ranks:
                for s in subformulas(self.system.defs[x]):
                    if isinstance(s, (Exists, Forall)):
                        for a in atoms(s.expr):
                            yield a.graph, a.name
        if self.automaton is not None:
            for t in self.automaton.transitions:
                yield t.graph, t.name

    def name_of(self, g: Graph, hint: Optional[str] = None) -> str:
        """Name under which *g* is declared, declaring it if needed."""
        if hint is not None and self.graphs.get(hint) == g:
            return hint
        for name, h in self.graphs.items():
            if h == g:
                return name
        name = hint
        if name is None or name in self.graphs or not _NAME.match(name) or name in KEYWORDS:
            k = 1
            while f"G{k}" in self.graphs:
                k += 1
            name = f"G{k}"
        self.graphs[name] = g
        return name


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.k = 0
        self.spec = SpecFile()
        self.declared_alphabet: Optional[Dict[str, int]] = None

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        return SpecSyntaxError(msg, tok.line, tok.column)

    def at(self, text: str) -> bool:
        t = self.tok
        return t.text == text and t.kind in ("punct", "arrow", "name")

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.k += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        t = self.tok
        self.k += 1
        return t

    def name(self, what: str = "name") -> Token:
        t = self.tok
        if t.kind != "name" or t.text in KEYWORDS:
            raise self.error(f"expected {what}, found {t.text or 'end of input'!r}")
        self.k += 1
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise self.error(f"expected integer, found {t.text or 'end of input'!r}")
        self.k += 1
        return int(t.text)

    def ident(self):
        """Node or edge id: name, integer, negative integer or string."""
        t = self.tok
        if t.kind == "int":
            self.k += 1
            return int(t.text)
        if t.kind == "punct" and t.text == "-" and self.toks[self.k + 1].kind == "int":
            self.k += 2
            return -int(self.toks[self.k - 1].text)
        if t.kind == "string":
            self.k += 1
            return json.loads(t.text)
        if t.kind == "name":
            self.k += 1
            return t.text
        raise self.error(f"expected an id, found {t.text or 'end of input'!r}")

    def symbol(self) -> str:
        t = self.tok
        if t.kind == "string":
            self.k += 1
            return json.loads(t.text)
        if t.kind == "name":
            self.k += 1
            return t.text
        raise self.error(f"expected a label, found {t.text or 'end of input'!r}")

    # declarations
    def parse(self) -> SpecFile:
        while self.tok.kind != "eof":
            t = self.tok
            if self.accept("alphabet"):
                self.alphabet(t)
            elif self.accept("graph"):
                self.graph()
            elif self.accept("expr"):
                self.expr_decl()
            elif self.accept("system"):
                self.system(t)
            elif self.accept("automaton"):
                self.automaton(t)
            else:
                raise self.error(f"expected a declaration, found {t.text!r}")
        if self.declared_alphabet is not None:
            self.spec.alphabet = RankedAlphabet(self.declared_alphabet)
        return self.spec

    def alphabet(self, start: Token):
        if self.declared_alphabet is not None:
            raise self.error("second alphabet block", start)
        if self.spec.graphs:
            raise self.error("alphabet must come before graphs", start)
        ranks: Dict[str, int] = {INVISIBLE: 2}
        self.expect("{")
        seen = set()
        while not self.accept("}"):
            t = self.tok
            sym = self.symbol()
            self.expect("/")
            r = self.integer()
            self.expect(";")
            if sym in seen:
                raise self.error(f"symbol {sym} declared twice", t)
            seen.add(sym)
            ranks[sym] = r
        self.declared_alphabet = ranks

    def graph(self):
        nt = self.name("graph name")
        if nt.text in self.spec.graphs:
            raise self.error(f"graph {nt.text} declared twice", nt)
        self.expect("(")
        i = self.integer()
        self.expect(",")
        j = self.integer()
        self.expect(")")
        self.expect("{")
        nodes: List = []
        front: List = []
        rear: List = []
        edges: List[Tuple[object, str, tuple, Token]] = []
        while not self.accept("}"):
            t = self.tok
            if self.accept("nodes"):
                while not self.accept(";"):
                    nodes.append(self.ident())
            elif self.accept("front") or self.accept("rear"):
                seq = front if t.text == "front" else rear
                while not self.accept(";"):
                    seq.append(self.ident())
            elif self.accept("edge"):
                eid = None
                lab_or_id = self.ident()
                if self.accept(":"):
                    eid = lab_or_id
                    lab = self.symbol()
                else:
                    lab = lab_or_id
                    if not isinstance(lab, str):
                        raise self.error("expected a label", t)
                self.expect("(")
                att = []
                if not self.accept(")"):
                    att.append(self.ident())
                    while self.accept(","):
                        att.append(self.ident())
                    self.expect(")")
                self.expect(";")
                edges.append((eid, lab, tuple(att), t))
            else:
                raise self.error(f"expected nodes, front, rear or edge, found {t.text!r}")
        if len(set(nodes)) != len(nodes):
            raise self.error(f"graph {nt.text}: node listed twice", nt)
        explicit = {e for e, _, _, _ in edges if e is not None}
        fresh = (k for k in range(len(edges) + len(explicit)) if k not in explicit)
        att_map, lab_map = {}, {}
        for eid, lab, att, t in edges:
            if eid is None:
                eid = next(fresh)
            if eid in att_map:
                raise self.error(f"graph {nt.text}: edge {eid} declared twice", t)
            att_map[eid] = att
            lab_map[eid] = lab
        try:
            g = Graph(nodes, att_map, lab_map, front, rear)
        except ValueError as exc:
            raise self.error(f"graph {nt.text}: {exc}", nt) from None
        if g.type != (i, j):
            raise self.error(f"graph {nt.text}: declared type ({i},{j}) but front/rear give {g.type}", nt)
        if self.declared_alphabet is not None:
            problems = RankedAlphabet(self.declared_alphabet).check(g)
            if problems:
                raise self.error(f"graph {nt.text}: {problems[0]}", nt)
        self.spec.graphs[nt.text] = g

    def expr_decl(self):
        nt = self.name("expression name")
        if nt.text in self.spec.expressions or nt.text in self.spec.graphs:
            raise self.error(f"name {nt.text} already declared", nt)
        self.expect("=")
        ex = self.expression()
        self.expect(";")
        self.spec.expressions[nt.text] = ex

    # expressions: union < concatenation < star
    def expression(self) -> GraphExpression:
        start = self.tok
        ex = self.ex_concat()
        while self.accept("+"):
            ex = Union(ex, self.ex_concat())
        self.typecheck(ex, start)
        return ex

    def typecheck(self, ex, tok):
        try:
            expr_type(ex)
        except GraphTypeError as exc:
            raise self.error(str(exc), tok) from None

    def ex_concat(self) -> GraphExpression:
        ex = self.ex_star()
        while self.accept("."):
            ex = Concat(ex, self.ex_star())
        return ex

    def ex_star(self) -> GraphExpression:
        ex = self.ex_primary()
        while self.accept("*"):
            ex = Star(ex)
        return ex

    def ex_primary(self) -> GraphExpression:
        if self.accept("("):
            ex = self.expression()
            self.expect(")")
            return ex
        if self.accept("empty"):
            self.expect("(")
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect(")")
            return Empty(i, j)
        t = self.name("graph or expression name")
        if t.text in self.spec.graphs:
            return Atom(self.spec.graphs[t.text], t.text)
        if t.text in self.spec.expressions:
            return self.spec.expressions[t.text]
        raise self.error(f"unknown graph or expression {t.text}", t)

    # formulas: | < & < unary
    def formula(self, refs) -> Formula:
        fo = self.fo_and(refs)
        while self.accept("|"):
            fo = Or(fo, self.fo_and(refs))
        return fo

    def fo_and(self, refs) -> Formula:
        fo = self.fo_unary(refs)
        while self.accept("&"):
            fo = And(fo, self.fo_unary(refs))
        return fo

    def fo_unary(self, refs) -> Formula:
        if self.accept("!"):
            return Not(self.fo_unary(refs))
        if self.at("exists") or self.at("forall"):
            q = Exists if self.tok.text == "exists" else Forall
            self.k += 1
            ex = self.expression()
            self.expect("->")
            return q(ex, self.fo_unary(refs))
        if self.accept("true"):
            return TRUE
        if self.accept("false"):
            return FALSE
        if self.accept("("):
            fo = self.formula(refs)
            self.expect(")")
            return fo
        t = self.name("formula")
        refs.append(t)
        return Var(t.text)

    def system(self, start: Token):
        if self.spec.system is not None:
            raise self.error("second system block", start)
        self.expect("{")
        ranks: Dict[str, int] = {}
        defs: Dict[str, Formula] = {}
        refs: List[Token] = []
        where: Dict[str, Token] = {}
        while not self.accept("}"):
            self.expect("let")
            nt = self.name("variable")
            if nt.text in ranks:
                raise self.error(f"variable {nt.text} defined twice", nt)
            self.expect(":")
            ranks[nt.text] = self.integer()
            self.expect("=")
            defs[nt.text] = self.formula(refs)
            where[nt.text] = nt
            self.expect(";")
        for t in refs:
            if t.text not in ranks:
                raise self.error(f"unknown variable {t.text}", t)
        f = FormulaSystem(ranks, defs, self.alphabet_for())
        problems = validate_system(f)
        if problems:
            bad = next((x for x in ranks if problems[0].startswith(f"definition of {x}:")), None)
            raise self.error(problems[0], where.get(bad, start))
        self.spec.system = f

    def automaton(self, start: Token):
        if self.spec.automaton is not None:
            raise self.error("second automaton block", start)
        self.expect("{")
        states: Dict[str, int] = {}
        universal = set()
        initial = None
        pending: List[Tuple[Token, Token, Token]] = []
        while not self.accept("}"):
            t = self.tok
            if self.accept("state"):
                nt = self.name("state")
                if nt.text in states:
                    raise self.error(f"state {nt.text} declared twice", nt)
                self.expect(":")
                states[nt.text] = self.integer()
                if self.accept("forall"):
                    universal.add(nt.text)
                else:
                    self.expect("exists")
                if self.accept("init"):
                    if initial is not None:
                        raise self.error("second initial state", nt)
                    initial = nt.text
                self.expect(";")
            elif self.accept("trans"):
                src = self.name("state")
                self.expect("-")
                gt = self.name("graph name")
                self.expect("->")
                dst = self.name("state")
                self.expect(";")
                pending.append((src, gt, dst))
            else:
                raise self.error(f"expected state or trans, found {t.text!r}")
        if initial is None:
            raise self.error("automaton has no initial state", start)
        transitions = []
        for src, gt, dst in pending:
            for s in (src, dst):
                if s.text not in states:
                    raise self.error(f"unknown state {s.text}", s)
            if gt.text not in self.spec.graphs:
                raise self.error(f"unknown graph {gt.text}", gt)
            transitions.append(Transition(src.text, self.spec.graphs[gt.text], dst.text, gt.text))
        a = Automaton(states, transitions, initial, frozenset(universal), self.alphabet_for())
        problems = validate(a)
        if problems:
            k = next((n for n, t in enumerate(transitions) if problems[0].startswith(f"transition {n} ")), None)
            raise self.error(problems[0], pending[k][1] if k is not None else start)
        self.spec.automaton = a

    def alphabet_for(self) -> Optional[RankedAlphabet]:
        if self.declared_alphabet is None:
            return None
        return RankedAlphabet(self.declared_alphabet)


def parse(text: str) -> SpecFile:
    """Parse a spec file; raises :class:`SpecSyntaxError` with a location."""
    return _Parser(text).parse()


# -- serializer ----------------------------------------------------------------


def _id(v) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise GraphTypeError(f"id {v!r} is neither an int nor a str")
    if isinstance(v, int):
        return str(v)
    if _NAME.match(v) and v not in KEYWORDS:
        return v
    return json.dumps(v, ensure_ascii=False)


def _symbol(s: str) -> str:
    return s if _NAME.match(s) and s not in KEYWORDS else json.dumps(s, ensure_ascii=False)


def format_graph(name: str, g: Graph) -> str:
    i, j = g.type
    lines = [f"graph {name} ({i},{j}) {{"]
    lines.append("  nodes" + "".join(" " + _id(v) for v in _sorted(g.nodes)) + ";")
    if g.front:
        lines.append("  front" + "".join(" " + _id(v) for v in g.front) + ";")
    if g.rear:
        lines.append("  rear" + "".join(" " + _id(v) for v in g.rear) + ";")
    edges = _sorted(g.att)
    implicit = edges == list(range(len(edges)))
    for e in edges:
        prefix = "" if implicit else _id(e) + ": "
        att = ",".join(_id(v) for v in g.att[e])
        lines.append(f"  edge {prefix}{_symbol(g.lab[e])}({att});")
    lines.append("}")
    return "\n".join(lines)


def format_expression(ex: GraphExpression, spec: SpecFile, level: int = 0) -> str:
    """Levels: 0 union, 1 concatenation, 2 star operand."""
    if isinstance(ex, Empty):
        return f"empty({ex.i},{ex.j})"
    if isinstance(ex, Atom):
        return spec.name_of(ex.graph, ex.name)
    if isinstance(ex, Union):
        s = f"{format_expression(ex.left, spec, 0)} + {format_expression(ex.right, spec, 1)}"
        return s if level == 0 else f"({s})"
    if isinstance(ex, Concat):
        s = f"{format_expression(ex.left, spec, 1)} . {format_expression(ex.right, spec, 2)}"
        return s if level <= 1 else f"({s})"
    if isinstance(ex, Star):
        return f"{format_expression(ex.inner, spec, 2)}*"
    raise TypeError(f"not a graph expression: {ex!r}")


def format_formula(fo: Formula, spec: SpecFile, level: int = 0) -> str:
    """Levels: 0 disjunction, 1 conjunction, 2 unary."""
    if isinstance(fo, Const):
        return "true" if fo.value else "false"
    if isinstance(fo, Var):
        if not _NAME.match(fo.name) or fo.name in KEYWORDS:
            raise GraphTypeError(f"variable name {fo.name!r} cannot be written")
        return fo.name
    if isinstance(fo, Not):
        return "!" + format_formula(fo.arg, spec, 2)
    if isinstance(fo, (Exists, Forall)):
        q = "exists" if isinstance(fo, Exists) else "forall"
        return f"{q} {format_expression(fo.expr, spec)} -> {format_formula(fo.body, spec, 2)}"
    if isinstance(fo, Or):
        s = f"{format_formula(fo.left, spec, 0)} | {format_formula(fo.right, spec, 1)}"
        return s if level == 0 else f"({s})"
    if isinstance(fo, And):
        s = f"{format_formula(fo.left, spec, 1)} & {format_formula(fo.right, spec, 2)}"
        return s if level <= 1 else f"({s})"
    raise TypeError(f"not a formula: {fo!r}")


def _check_name(kind: str, name: str) -> str:
    if not _NAME.match(name) or name in KEYWORDS:
        raise GraphTypeError(f"{kind} name {name!r} cannot be written")
    return name


def serialize(spec: SpecFile) -> str:
    """Text for *spec*; ``parse(serialize(spec))`` equals *spec*."""
    # render the referencing blocks first so that every graph gets a name
    body: List[str] = []
    for name, ex in spec.expressions.items():
        body.append(f"expr {_check_name('expression', name)} = {format_expression(ex, spec)};")
    if spec.system is not None:
        f = spec.system
        lines = ["system {"]
        for x, r in f.ranks.items():
            lines.append(f"  let {_check_name('variable', x)}:{r} = {format_formula(f.defs[x], spec)};")
        lines.append("}")
        body.append("\n".join(lines))
    if spec.automaton is not None:
        a = spec.automaton
        lines = ["automaton {"]
        for q, r in a.states.items():
            mode = "forall" if q in a.universal else "exists"
            init = " init" if q == a.initial else ""
            lines.append(f"  state {_check_name('state', q)}:{r} {mode}{init};")
        for t in a.transitions:
            lines.append(f"  trans {t.source} -{spec.name_of(t.graph, t.name)}-> {t.target};")
        lines.append("}")
        body.append("\n".join(lines))
    head: List[str] = []
    if spec.alphabet is not None:
        syms = "".join(f" {_symbol(s)}/{r};" for s, r in spec.alphabet.items())
        head.append(f"alphabet {{{syms} }}")
    for name, g in spec.graphs.items():
        head.append(format_graph(_check_name("graph", name), g))
    return "\n\n".join(head + body) + "\n"


def load(path) -> SpecFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def single_graph(spec: SpecFile, name: Optional[str] = None) -> Graph:
    """The graph called *name*, or the only graph of *spec*."""
    if name is not None:
        if name not in spec.graphs:
            raise SpecSyntaxError(f"no graph named {name}")
        return spec.graphs[name]
    if len(spec.graphs) != 1:
        raise SpecSyntaxError(f"expected exactly one graph, found {len(spec.graphs)}")
    return next(iter(spec.graphs.values()))
