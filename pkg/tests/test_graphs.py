from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphperiod.graphs import (
    EdgeClass,
    GraphFormatError,
    MultiGraph,
    canonical_key,
    classify_edge,
    component_count,
    contract_edge,
    delete_edge,
    named_graph,
    parse_edge_list,
    relabel,
    render_edge_list,
    spanning_subgraph_components,
)
from conftest import girth


# -- parsing ------------------------------------------------------------------


def test_parse_k2():
    g = parse_edge_list("n 2\ne 0 1")
    assert g == MultiGraph(2, ((0, 1),))


def test_parse_loop():
    g = parse_edge_list("n 1\ne 0 0")
    assert g.vertex_count == 1 and g.endpoints == ((0, 0),)


def test_parse_parallel_plus_isolated():
    g = parse_edge_list("n 3\ne 0 1\ne 0 1")
    assert g.vertex_count == 3
    assert g.endpoints == ((0, 1), (0, 1))


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header comment\n\nn 2 # two vertices\ne 0 1\n")
    assert g == MultiGraph(2, ((0, 1),))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("e 0 1", "line 1"),
        ("n 2\nzz", "line 2"),
        ("n 2\ne 0 2", "line 2"),
        ("n 2\ne 0", "line 2"),
        ("# nothing\n", "missing"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(GraphFormatError) as err:
        parse_edge_list(text)
    assert fragment in str(err.value)


def test_render_roundtrip():
    g = named_graph("petersen")
    assert parse_edge_list(render_edge_list(g)) == g


# -- deletion and contraction ----------------------------------------------------


def test_delete_k2_gives_edgeless():
    assert delete_edge(parse_edge_list("n 2\ne 0 1"), 0) == MultiGraph(2)


def test_delete_cycle_edge_gives_path():
    c3 = named_graph("cycle", 3)
    for e in range(3):
        without = delete_edge(c3, e)
        assert without.edge_count == 2 and component_count(without) == 1


def test_delete_loop():
    assert delete_edge(parse_edge_list("n 1\ne 0 0"), 0) == MultiGraph(1)


def test_delete_out_of_range():
    with pytest.raises(ValueError):
        delete_edge(named_graph("cycle", 3), 3)


def test_contract_k2():
    assert contract_edge(parse_edge_list("n 2\ne 0 1"), 0) == MultiGraph(1)


def test_contract_parallel_becomes_loop():
    c2 = named_graph("cycle", 2)
    assert contract_edge(c2, 0) == MultiGraph(1, ((0, 0),))


def test_contract_cycle_gives_smaller_cycle():
    c3 = named_graph("cycle", 3)
    contracted = contract_edge(c3, 0)
    assert canonical_key(contracted) == canonical_key(named_graph("cycle", 2))


def test_contract_loop_rejected():
    with pytest.raises(ValueError):
        contract_edge(parse_edge_list("n 1\ne 0 0"), 0)


# -- components --------------------------------------------------------------------


def test_component_count_edgeless():
    for n in (0, 1, 4):
        assert component_count(MultiGraph(n)) == n


def test_component_count_petersen():
    assert component_count(named_graph("petersen")) == 1


def test_component_count_disjoint():
    g = parse_edge_list("n 3\ne 0 1")
    assert component_count(g) == 2


def test_spanning_subgraph_empty_subset():
    g = named_graph("cycle", 5)
    assert spanning_subgraph_components(g, ()) == 5


def test_spanning_subgraph_k2():
    assert spanning_subgraph_components(parse_edge_list("n 2\ne 0 1"), (0,)) == 1


def test_spanning_subgraph_path_in_c5():
    # edges 0,1,2 form a path covering 4 of 5 vertices: path + isolated = 2
    assert spanning_subgraph_components(named_graph("cycle", 5), (0, 1, 2)) == 2


def test_spanning_subgraph_range_check():
    with pytest.raises(ValueError):
        spanning_subgraph_components(named_graph("cycle", 3), (5,))


# -- edge classification ---------------------------------------------------------------


def test_classify_bridge():
    assert classify_edge(parse_edge_list("n 2\ne 0 1"), 0) == EdgeClass.BRIDGE


def test_classify_loop():
    assert classify_edge(parse_edge_list("n 1\ne 0 0"), 0) == EdgeClass.LOOP


def test_classify_parallel_is_ordinary():
    c2 = named_graph("cycle", 2)
    assert classify_edge(c2, 0) == EdgeClass.ORDINARY
    assert classify_edge(c2, 1) == EdgeClass.ORDINARY


def test_deletion_component_growth_matches_classification():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 6)
        g = MultiGraph(
            n,
            tuple(
                (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, 8))
            ),
        )
        for e in range(g.edge_count):
            grew = component_count(delete_edge(g, e)) - component_count(g)
            assert grew in (0, 1)
            assert (grew == 1) == (classify_edge(g, e) == EdgeClass.BRIDGE)


# -- canonical keys ----------------------------------------------------------------------


def test_canonical_key_c3_all_labelings():
    c3 = named_graph("cycle", 3)
    keys = {
        canonical_key(relabel(c3, perm))
        for perm in itertools.permutations(range(3))
    }
    assert len(keys) == 1


def test_canonical_key_separates_c4_from_parallel_pairs():
    c4 = named_graph("cycle", 4)
    pairs = parse_edge_list("n 4\ne 0 1\ne 0 1\ne 2 3\ne 2 3")
    assert canonical_key(c4) != canonical_key(pairs)


def test_canonical_key_separates_k2_plus_isolated_from_path():
    a = parse_edge_list("n 3\ne 0 1")
    b = named_graph("path", 3)
    assert canonical_key(a) != canonical_key(b)


def test_canonical_key_multiplicity_sensitive():
    assert canonical_key(named_graph("theta", 2)) != canonical_key(
        named_graph("theta", 3)
    )


@st.composite
def multigraphs(draw):
    n = draw(st.integers(1, 6))
    q = draw(st.integers(0, 8))
    edges = tuple(
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for _ in range(q)
    )
    return MultiGraph(n, edges)


@settings(max_examples=100, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_canonical_key_relabeling_invariance(g, rnd):
    vperm = list(range(g.vertex_count))
    eperm = list(range(g.edge_count))
    rnd.shuffle(vperm)
    rnd.shuffle(eperm)
    assert canonical_key(g) == canonical_key(relabel(g, vperm, eperm))


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.data())
def test_delete_contract_commute_up_to_isomorphism(g, data):
    non_loops = [e for e, (u, v) in enumerate(g.endpoints) if u != v]
    if len(non_loops) < 2:
        return
    e = data.draw(st.sampled_from(non_loops))
    f = data.draw(st.sampled_from([x for x in non_loops if x != e]))
    # delete e first: f's id shifts down when f > e; contract f first: e likewise
    f_after = f - 1 if f > e else f
    e_after = e - 1 if e > f else e
    left = contract_edge(delete_edge(g, e), f_after)
    right = delete_edge(contract_edge(g, f), e_after)
    assert canonical_key(left) == canonical_key(right)


# -- named graphs -----------------------------------------------------------------------------


def test_petersen_shape():
    g = named_graph("petersen")
    assert g.vertex_count == 10 and g.edge_count == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert girth(g) == 5


def test_frucht_shape():
    g = named_graph("frucht")
    assert g.vertex_count == 12 and g.edge_count == 18
    assert all(g.degree(v) == 3 for v in range(12))


def test_empty_graph():
    g = named_graph("empty", 4)
    assert g.vertex_count == 4 and g.edge_count == 0


def test_theta_graph():
    g = named_graph("theta", 3)
    assert g.vertex_count == 2 and g.endpoints == ((0, 1),) * 3


def test_named_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        named_graph("cycle", 1)
    with pytest.raises(ValueError):
        named_graph("moebius")
    with pytest.raises(ValueError):
        named_graph("petersen", 5)
