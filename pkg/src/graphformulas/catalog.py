"""Named graphs, expressions and machines used throughout docs and tests.

The small transition graphs below are the building blocks of a Hamiltonian
cycle recognizer: follow a cycle edge by edge while cutting visited nodes
off, then demand that nothing is left.
"""

from __future__ import annotations

from .graph import Graph

# Cycle-following pieces; all unlabelled (binary ``_`` edges).
LOOP = Graph(["x"], {0: ("x", "x")}, front=(), rear=())
EDGE_UP = Graph(["x", "y"], {0: ("y", "x")}, front=(), rear=("x", "y"))
OUT_EN = Graph(["x", "y", "z"], {0: ("x", "z")}, front=("x", "y"), rear=("z", "y"))
EDGE_DOWN = Graph(["z", "y"], {0: ("z", "y")}, front=("z", "y"), rear=())
NODE = Graph(["x"], {}, front=(), rear=())

# Cutting off frontal subgraphs: G ⊘ F = R, G2 ⊘ F = R2, G2 ⊘ F2 = R3.
FIG_G = Graph("abcd", {"ab": ("a", "b"), "bc": ("b", "c"), "bd": ("b", "d")},
              front=("a", "c"), rear=("d",))
FIG_F = Graph("abc", {"ab": ("a", "b")}, front=("a", "c"), rear=("b", "c"))
FIG_R = Graph("bcd", {"bc": ("b", "c"), "bd": ("b", "d")}, front=("b", "c"), rear=("d",))
FIG_G2 = Graph("abcd", {"ab": ("a", "b"), "ad": ("a", "d"), "bc": ("b", "c")},
               front=("a", "c"), rear=("d",))
FIG_F2 = Graph("acd", {"ad": ("a", "d")}, front=("a", "c"), rear=("d", "c"))
FIG_R2 = Graph("bcd", {"bc": ("b", "c")}, front=("b", "c"), rear=("d",))
FIG_R3 = Graph("bcd", {"bc": ("b", "c")}, front=("d", "c"), rear=("d",))


def cycle_expression():
    """``LOOP ⊕ EDGE_UP ⊙ OUT_EN⊛ ⊙ EDGE_DOWN``: a cycle, type (0,0)."""
    from .expressions import Atom, Concat, Star, Union

    return Union(Atom(LOOP, "LOOP"),
                 Concat(Concat(Atom(EDGE_UP, "EDGE_UP"), Star(Atom(OUT_EN, "OUT_EN"))),
                        Atom(EDGE_DOWN, "EDGE_DOWN")))


def ham_automaton():
    """Alternating automaton accepting graphs with a Hamiltonian cycle."""
    from .automaton import Automaton, Transition

    return Automaton(
        states={"q0": 0, "q1": 2, "q2": 0, "q3": 0},
        transitions=[
            Transition("q0", LOOP, "q2", "LOOP"),
            Transition("q0", EDGE_UP, "q1", "EDGE_UP"),
            Transition("q1", OUT_EN, "q1", "OUT_EN"),
            Transition("q1", EDGE_DOWN, "q2", "EDGE_DOWN"),
            Transition("q2", NODE, "q3", "NODE"),
        ],
        initial="q0",
        universal={"q2"},
    )


def ham_system():
    """Formula system whose variable ``u`` holds for Hamiltonian graphs.

    ``w`` continues a path started by a type-(0,2) graph, so it has rank 2.
    """
    from .expressions import Atom
    from .formulas import TRUE, Exists, FormulaSystem, Not, Or, Var

    return FormulaSystem(
        ranks={"u": 0, "v": 0, "w": 2},
        defs={
            "u": Or(Exists(Atom(LOOP, "LOOP"), Var("v")), Exists(Atom(EDGE_UP, "EDGE_UP"), Var("w"))),
            "v": Not(Exists(Atom(NODE, "NODE"), TRUE)),
            "w": Or(Exists(Atom(OUT_EN, "OUT_EN"), Var("w")), Exists(Atom(EDGE_DOWN, "EDGE_DOWN"), Var("v"))),
        },
    )
