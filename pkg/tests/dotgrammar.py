"""A small recursive-descent checker for the DOT language.

Covers the abstract grammar of Graphviz (graph, stmt_list, node/edge/attr
statements, subgraphs, attribute lists, ports) apart from HTML strings.
``check`` raises ``ValueError`` at the first violation and otherwise returns
the node ids and edges it saw.
"""

import re

_TOKEN = re.compile(r"""
    (?P<space>\s+|//[^\n]*|/\*.*?\*/|^\#[^\n]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<num>-?(?:\.\d+|\d+(?:\.\d*)?))
  | (?P<id>[A-Za-z_\x80-\U0010ffff][A-Za-z_0-9\x80-\U0010ffff]*)
  | (?P<edgeop>->|--)
  | (?P<punct>[{}\[\];,:=])
""", re.VERBOSE | re.DOTALL | re.MULTILINE)

KEYWORDS = {"strict", "graph", "digraph", "node", "edge", "subgraph"}


def tokens(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad character {text[pos]!r} at offset {pos}")
        if m.lastgroup != "space":
            out.append((m.lastgroup, m.group()))
        pos = m.end()
    out.append(("eof", ""))
    return out


class _Checker:
    def __init__(self, text):
        self.t = tokens(text)
        self.k = 0
        self.nodes, self.edges = [], []
        self.directed = None

    def peek(self, off=0):
        return self.t[self.k + off]

    def take(self, text=None, kind=None):
        kd, tx = self.peek()
        if (text is not None and tx.lower() != text) or (kind is not None and kd != kind):
            raise ValueError(f"expected {text or kind}, found {tx!r}")
        self.k += 1
        return tx

    def is_id(self, off=0):
        kd, tx = self.peek(off)
        return kd in ("string", "num") or (kd == "id" and tx.lower() not in KEYWORDS)

    def ident(self):
        if not self.is_id():
            raise ValueError(f"expected an ID, found {self.peek()[1]!r}")
        self.k += 1
        return self.t[self.k - 1][1]

    def graph(self):
        if self.peek()[1].lower() == "strict":
            self.k += 1
        kind = self.peek()[1].lower()
        if kind not in ("graph", "digraph"):
            raise ValueError("expected graph or digraph")
        self.directed = kind == "digraph"
        self.k += 1
        if self.is_id():
            self.ident()
        self.take("{")
        self.stmt_list()
        self.take("}")
        self.take(kind="eof")

    def stmt_list(self):
        while self.peek()[1] != "}":
            self.stmt()
            if self.peek()[1] == ";":
                self.k += 1

    def stmt(self):
        kd, tx = self.peek()
        low = tx.lower() if kd == "id" else None
        if low in ("graph", "node", "edge"):
            self.k += 1
            self.attr_list(required=True)
        elif low == "subgraph" or tx == "{":
            self.edge_rest(self.subgraph())
        elif self.is_id() and self.peek(1)[1] == "=":
            self.ident()
            self.take("=")
            self.ident()
        else:
            node = self.node_id()
            if self.peek()[0] == "edgeop":
                self.edge_rest(node)
            else:
                self.nodes.append(node)
                self.attr_list()

    def subgraph(self):
        if self.peek()[1].lower() == "subgraph":
            self.k += 1
            if self.is_id():
                self.ident()
        self.take("{")
        self.stmt_list()
        self.take("}")
        return None

    def edge_rest(self, left):
        seen = False
        while self.peek()[0] == "edgeop":
            op = self.take(kind="edgeop")
            if (op == "->") != self.directed:
                raise ValueError(f"edge operator {op} does not fit the graph kind")
            right = self.subgraph() if self.peek()[1] in ("{",) or self.peek()[1].lower() == "subgraph" \
                else self.node_id()
            if left is not None and right is not None:
                self.edges.append((left, right))
            left, seen = right, True
        if seen:
            self.attr_list()

    def node_id(self):
        nid = self.ident()
        if self.peek()[1] == ":":
            self.k += 1
            self.ident()
            if self.peek()[1] == ":":
                self.k += 1
                self.ident()
        return nid

    def attr_list(self, required=False):
        if self.peek()[1] != "[":
            if required:
                raise ValueError("expected an attribute list")
            return
        while self.peek()[1] == "[":
            self.k += 1
            while self.peek()[1] != "]":
                self.ident()
                self.take("=")
                self.ident()
                if self.peek()[1] in (",", ";"):
                    self.k += 1
            self.take("]")


def check(text):
    c = _Checker(text)
    c.graph()
    return c.nodes, c.edges
