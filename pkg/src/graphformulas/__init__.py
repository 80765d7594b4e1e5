"""Interfaced hypergraphs, graph expressions, alternating graph automata and
systems of graph formulas with variables."""

from .automaton import (Automaton, Configuration, Transition, classify, configuration_graph,
                        has_permutation_cycle, steps, validate)
from .errors import ContractError, GraphFormulaError, GraphTypeError, SpecSyntaxError
from .evaluation import (EvaluationGraph, Verdict, evolution_chain, evolve, least_fixed_point, solve,
                         verdict_at)
from .expressions import (Atom, Concat, Empty, GraphExpression, Matcher, Star, Union, expr_type,
                          match_expression, member, non_permuting, permutation_set)
from .formulas import (FALSE, TRUE, And, Const, Exists, Forall, Formula, FormulaConfiguration,
                       FormulaSystem, Not, Or, Var, classify_at, dependency_graph,
                       eliminate_negations, fcg, is_acyclic, satisfies, shallow_normal_form,
                       validate_system)
from .graph import (FrontalHandle, Graph, RankedAlphabet, concatenate, cut_off, digraph, embeddings,
                    extract, frontal_subgraphs, identity_graph, is_isomorphic, is_permutation,
                    permutation_graph)
from .translate import automaton_to_system, system_to_automaton

__version__ = "0.1.0"
