import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphformulas.catalog import (EDGE_UP, FIG_F, FIG_F2, FIG_G, FIG_G2, FIG_R, FIG_R2, FIG_R3, LOOP,
                                   NODE)
from graphformulas.errors import GraphTypeError
from graphformulas.graph import (FrontalHandle, Graph, RankedAlphabet, compose, concatenate, cut_off,
                                 digraph, embeddings, extract, frontal_subgraphs, identity_graph,
                                 is_isomorphic, is_permutation, permutation_graph)

from support import brute_embeddings, brute_isomorphic

TRIANGLE = digraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
EMPTY = Graph([])


@st.composite
def graphs(draw, max_nodes=4, max_edges=5, front=None, rear=None, unary=True):
    n = draw(st.integers(0, max_nodes))
    nodes = list(range(n))
    f = draw(st.permutations(nodes)) if n else []
    k = draw(st.integers(0, n)) if front is None else min(front, n)
    r = draw(st.permutations(nodes)) if n else []
    m = draw(st.integers(0, n)) if rear is None else min(rear, n)
    att, lab = {}, {}
    if n:
        for e in range(draw(st.integers(0, max_edges))):
            if unary and draw(st.booleans()) and draw(st.booleans()):
                att[e], lab[e] = (draw(st.sampled_from(nodes)),), "a"
            else:
                att[e] = (draw(st.sampled_from(nodes)), draw(st.sampled_from(nodes)))
                lab[e] = "_"
    return Graph(nodes, att, lab, f[:k], r[:m])


@st.composite
def handles(draw, g, rear_len=None):
    front = set(g.front)
    others = sorted(v for v in g.nodes if v not in front)
    nodes = front | {v for v in others if draw(st.booleans())}
    induced = [e for e in sorted(g.att) if all(v in nodes for v in g.att[e])]
    edges = {e for e in induced if draw(st.booleans())}
    must = [v for v in g.rear if v in nodes]
    rest = sorted(nodes - set(must))
    extra = draw(st.permutations(rest))[: draw(st.integers(0, len(rest)))] if rest else []
    rear = list(draw(st.permutations(must + list(extra)))) if must or extra else []
    return FrontalHandle(g, nodes, edges, rear)


# -- graphs ---------------------------------------------------------------------


def test_graph_invariants_enforced():
    with pytest.raises(ValueError, match="front not repetition-free"):
        Graph(["a"], front=("a", "a"))
    with pytest.raises(ValueError, match="unknown node"):
        Graph(["a"], {"e": ("a", "b")})
    with pytest.raises(ValueError):
        Graph(["a"], rear=("b",))


def test_type_and_alphabet():
    assert FIG_G.type == (2, 1)
    sigma = RankedAlphabet({"_": 2, "L": 1})
    assert sigma.check(FIG_G) == []
    bad = Graph(["a"], {"e": ("a",)}, {"e": "_"})
    assert sigma.check(bad)
    with pytest.raises(ValueError):
        RankedAlphabet({"x": -1})


def test_key_is_deterministic_and_structural():
    g1 = digraph([1, 2], [(1, 2)])
    g2 = digraph([2, 1], [(1, 2)])
    assert g1.key() == g2.key() and g1 == g2 and hash(g1) == hash(g2)
    assert digraph([1, 2], [(2, 1)]).key() != g1.key()


# -- concatenation -------------------------------------------------------------


def test_identity_is_neutral():
    assert concatenate(identity_graph(2), identity_graph(2)) == identity_graph(2)


def test_concatenation_recomposes_figure_graph():
    glued = concatenate(FIG_F, FIG_R)
    # nodes a,b,c,d; edges a->b, b->c, b->d; front (a,c); rear (d)
    expected = Graph("abcd", {"ab": ("a", "b"), "bc": ("b", "c"), "bd": ("b", "d")},
                     front=("a", "c"), rear=("d",))
    assert glued == expected == FIG_G


def test_concatenation_of_edges_gives_path():
    edge = Graph(["x", "y"], {"e": ("x", "y")}, front=("x",), rear=("y",))
    path = concatenate(edge, edge)
    assert path.type == (1, 1)
    assert len(path.nodes) == 3 and len(path.att) == 2
    # hand-applied gluing: x -> y -> y'
    assert brute_isomorphic(path, digraph([0, 1, 2], [(0, 1), (1, 2)], front=(0,), rear=(2,)))


def test_concatenation_type_mismatch():
    with pytest.raises(GraphTypeError):
        concatenate(identity_graph(1), identity_graph(2))


def test_concatenation_renames_deterministically():
    first = concatenate(LOOP.with_interfaces(("x",), ("x",)), LOOP.with_interfaces(("x",), ("x",)))
    second = concatenate(LOOP.with_interfaces(("x",), ("x",)), LOOP.with_interfaces(("x",), ("x",)))
    assert first.key() == second.key()
    assert len(first.att) == 2 and len(first.nodes) == 1


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_concatenation_type_arithmetic(data):
    g = data.draw(graphs(max_nodes=3))
    h = data.draw(graphs(max_nodes=3, front=len(g.rear)))
    if len(h.front) != len(g.rear):
        return
    c = concatenate(g, h)
    assert c.type == (len(g.front), len(h.rear))
    assert len(c.nodes) == len(g.nodes) + len(h.nodes) - len(g.rear)
    assert len(c.att) == len(g.att) + len(h.att)


# -- handles, extraction, cutting -----------------------------------------------


def f_handle():
    return FrontalHandle(FIG_G, "abc", ["ab"], ("b", "c"))


def f2_handle():
    return FrontalHandle(FIG_G2, "acd", ["ad"], ("d", "c"))


def test_handle_invariants():
    with pytest.raises(ValueError):
        FrontalHandle(FIG_G, "bc", [], ("b", "c"))  # misses front node a
    with pytest.raises(ValueError):
        FrontalHandle(FIG_G, "ac", ["ab"], ("a",))  # edge leaves the handle
    with pytest.raises(ValueError):
        FrontalHandle(FIG_G, "acd", [], ("a",))  # host rear node d not in rear
    with pytest.raises(ValueError):
        FrontalHandle(FIG_G, "ac", [], ("a", "a"))


def test_extract_identity_handle():
    g = extract(FrontalHandle.identity(FIG_G))
    assert g.nodes == {"a", "c"} and not g.att
    assert g.front == g.rear == ("a", "c")
    assert brute_isomorphic(g, identity_graph(2))


def test_extract_figure_handles():
    assert extract(f_handle()) == FIG_F
    f2 = extract(f2_handle())
    assert f2 == FIG_F2
    assert brute_isomorphic(f2, FIG_F)


def test_cut_off_figure_cases():
    assert cut_off(f_handle()) == FIG_R
    assert cut_off(FrontalHandle(FIG_G2, "abc", ["ab"], ("b", "c"))) == FIG_R2
    assert cut_off(f2_handle()) == FIG_R3


def test_cut_off_is_not_inverse_of_concatenation():
    # G' ⊘ F drops the dangling edge a->d
    r2 = cut_off(FrontalHandle(FIG_G2, "abc", ["ab"], ("b", "c")))
    assert concatenate(FIG_F, r2) != FIG_G2


@settings(max_examples=200, deadline=None)
@given(graphs(max_nodes=5))
def test_cut_off_identity_handle(g):
    assert cut_off(FrontalHandle.identity(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_cut_compatibility(data):
    g = data.draw(graphs(max_nodes=5))
    p = data.draw(handles(g))
    rest = cut_off(p)
    q = data.draw(handles(rest))
    # validated construction: the union is always a frontal subgraph of g
    both = FrontalHandle(g, p.sub_nodes | q.sub_nodes, p.sub_edges | q.sub_edges, q.sub_rear)
    assert compose(p, q) == both
    assert cut_off(both) == cut_off(q)
    assert brute_isomorphic(extract(both), concatenate(extract(p), extract(q)))


# -- embeddings ----------------------------------------------------------------


def triples(hs):
    return {h.triple for h in hs}


def test_embeddings_spec_examples():
    assert embeddings(NODE, EMPTY) == []
    hs = embeddings(EDGE_UP, TRIANGLE)
    assert len(hs) == 3
    assert {next(iter(h.sub_edges)) for h in hs} == set(TRIANGLE.att)
    assert triples(hs) == brute_embeddings(EDGE_UP, TRIANGLE)
    hs = embeddings(FIG_F, FIG_G2)
    assert len(hs) == 2
    assert {extract(h) for h in hs} == {FIG_F, FIG_F2}


def test_embeddings_front_length_mismatch():
    with pytest.raises(GraphTypeError):
        embeddings(FIG_F, TRIANGLE)


def test_embeddings_respect_host_rear():
    host = digraph([1, 2], [(1, 2)], rear=(2,))
    pattern = Graph(["x", "y"], {"e": ("x", "y")}, front=(), rear=())
    assert embeddings(pattern, host) == []
    pattern = Graph(["x", "y"], {"e": ("x", "y")}, front=(), rear=("y",))
    assert len(embeddings(pattern, host)) == 1


def test_embeddings_of_unattached_nodes():
    host = digraph([1, 2, 3], [])
    assert len(embeddings(NODE, host)) == 3
    two = Graph(["x", "y"])
    assert len(embeddings(two, host)) == 3  # unordered pairs
    assert len(embeddings(Graph(["x", "y"], rear=("x", "y")), host)) == 6


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_embeddings_match_brute_force(data):
    host = data.draw(graphs(max_nodes=4, max_edges=5))
    pattern = data.draw(graphs(max_nodes=3, max_edges=3, front=len(host.front)))
    if len(pattern.front) != len(host.front):
        return
    hs = embeddings(pattern, host)
    assert len(hs) == len(triples(hs))
    assert triples(hs) == brute_embeddings(pattern, host)
    for h in hs:
        assert brute_isomorphic(extract(h), pattern)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_embeddings_within_frontal_subgraphs(data):
    host = data.draw(graphs(max_nodes=4, max_edges=4))
    pattern = data.draw(graphs(max_nodes=3, max_edges=2, front=len(host.front)))
    if len(pattern.front) != len(host.front):
        return
    expected = {p.triple for p in frontal_subgraphs(host, len(pattern.rear))
                if is_isomorphic(extract(p), pattern)}
    assert triples(embeddings(pattern, host)) == expected


# -- frontal subgraphs ---------------------------------------------------------


def test_frontal_subgraphs_examples():
    hs = frontal_subgraphs(EMPTY, 0)
    assert triples(hs) == {(frozenset(), frozenset(), ())}
    assert len(frontal_subgraphs(Graph(["n"]), 0)) == 2
    assert f_handle().triple in triples(frontal_subgraphs(FIG_G, 2))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_frontal_subgraphs_are_valid_handles(data):
    g = data.draw(graphs(max_nodes=4, max_edges=3))
    k = data.draw(st.integers(0, 2))
    hs = frontal_subgraphs(g, k)
    assert len(triples(hs)) == len(hs)
    for h in hs:
        FrontalHandle(g, h.sub_nodes, h.sub_edges, h.sub_rear)  # validates
        assert len(h.sub_rear) == k


# -- permutations and isomorphism ---------------------------------------------


def test_permutation_graphs():
    assert is_permutation(identity_graph(3))
    assert not is_permutation(LOOP)
    swap = permutation_graph((1, 0))
    assert is_permutation(swap) and not swap.is_identity()
    assert identity_graph(3).is_identity()


def test_isomorphism_examples():
    assert is_isomorphic(FIG_F, FIG_F2)
    assert not is_isomorphic(FIG_F, FIG_R)
    assert not is_isomorphic(permutation_graph((1, 0)), identity_graph(2))


@settings(max_examples=200, deadline=None)
@given(graphs(max_nodes=4), graphs(max_nodes=4), st.randoms(use_true_random=False))
def test_isomorphism_matches_brute_force(g, h, rnd):
    assert is_isomorphic(g, h) == brute_isomorphic(g, h)
    # a renamed copy is always isomorphic
    names = list(g.nodes)
    rnd.shuffle(names)
    renamed = g.relabel({v: f"n{w}" for v, w in zip(g.nodes, names)})
    assert is_isomorphic(g, renamed)
