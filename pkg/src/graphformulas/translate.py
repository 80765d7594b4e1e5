"""Translations between alternating graph automata and formula systems.

Both directions preserve lower and upper languages: an automaton becomes a
system with one variable per state, and a system in shallow normal form
becomes an automaton with one state per variable.
"""

from __future__ import annotations

from typing import List, Tuple

from .automaton import Automaton, Transition
from .errors import ContractError
from .expressions import Atom
from .formulas import (FALSE, TRUE, And, Const, Exists, Forall, Formula, FormulaSystem, Or, Var,
                       is_conjunctive, is_shallow, validate_system)
from .graph import identity_graph


def _fold(op, items: List[Formula], unit: Formula) -> Formula:
    # right-nested binary chain; the empty chain is the unit
    if not items:
        return unit
    out = items[-1]
    for it in reversed(items[:-1]):
        out = op(it, out)
    return out


def automaton_to_system(a: Automaton) -> Tuple[FormulaSystem, str]:
    """System with ``F(q) = ⋀ ∀(Γ, q')`` over the transitions leaving a
    universal state ``q``, and ``⋁ ∃(Γ, q')`` for existential ones.

    Returns the system and the variable of the initial state.
    """
    from .automaton import validate

    errors = validate(a)
    if errors:
        raise ContractError("; ".join(errors))
    defs = {}
    for q in a.states:
        out = a.outgoing(q)
        if q in a.universal:
            defs[q] = _fold(And, [Forall(Atom(t.graph, t.name), Var(t.target)) for t in out], TRUE)
        else:
            defs[q] = _fold(Or, [Exists(Atom(t.graph, t.name), Var(t.target)) for t in out], FALSE)
    return FormulaSystem(dict(a.states), defs, a.alphabet), a.initial


def system_to_automaton(f: FormulaSystem, x0: str) -> Automaton:
    """Automaton with a state per variable; *f* must be in shallow normal form.

    ``x' ∨ x''`` and ``x' ∧ x''`` give two identity transitions, ``Q(G, x')``
    gives one transition labelled ``G``, constants give none.  States with
    conjunctive definitions are universal.
    """
    if x0 not in f.ranks:
        raise ContractError(f"unknown variable {x0}")
    errors = validate_system(f)
    if errors:
        raise ContractError("; ".join(errors))
    transitions = []
    for x, rank in f.ranks.items():
        fo = f.defs[x]
        if not is_shallow(fo):
            raise ContractError(f"definition of {x} is not in shallow normal form: {fo!r}")
        if isinstance(fo, (And, Or)):
            ident = identity_graph(rank)
            for y in (fo.left, fo.right):
                transitions.append(Transition(x, ident, y.name, f"Id{rank}"))
        elif isinstance(fo, (Exists, Forall)):
            transitions.append(Transition(x, fo.expr.graph, fo.body.name, fo.expr.name))
    universal = {x for x in f.ranks if is_conjunctive(f.defs[x])}
    return Automaton(dict(f.ranks), transitions, x0, universal, f.alphabet)
