import pytest
from hypothesis import given, settings, strategies as st

from codebetti import (
    Graph,
    SquarefreeIdeal,
    SquarefreeMonomial,
    all_elimination_orderings,
    canonical_form,
    chordality,
    chordless_cycle_witness,
    mask_of,
    parse_graph,
    polarized_ideal,
    relationship_graph,
    render_dot,
    render_graph,
    simplicial_degree_profile,
)
from codebetti.graphs import NotSimplicialError


def path3():
    return Graph.from_edges(3, [(1, 2), (2, 3)])


def cycle4():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def test_relationship_graph_worked(worked_code):
    g = relationship_graph(polarized_ideal(canonical_form(worked_code), worked_code.n))
    assert sorted(g.edges) == [(1, 2), (1, 4), (2, 3), (2, 4), (2, 5)]


def test_relationship_graph_zero_ideal_is_complete():
    g = relationship_graph(SquarefreeIdeal(3, ()))
    assert g == complete(3)


def test_relationship_graph_single_pair():
    g = relationship_graph(SquarefreeIdeal.from_monomials(2, [SquarefreeMonomial(3, 0)]))
    assert g.edges == frozenset()


def test_relationship_graph_rejects_non_quadratic():
    with pytest.raises(ValueError):
        relationship_graph(SquarefreeIdeal.from_monomials(3, [SquarefreeMonomial(7, 0)]))


def test_relationship_graph_xy_and_yx_forbid_the_same_pair():
    by_xy = relationship_graph(
        SquarefreeIdeal.from_monomials(2, [SquarefreeMonomial(mask_of((1,)), mask_of((2,)))])
    )
    by_yx = relationship_graph(
        SquarefreeIdeal.from_monomials(2, [SquarefreeMonomial(mask_of((2,)), mask_of((1,)))])
    )
    by_xx = relationship_graph(
        SquarefreeIdeal.from_monomials(2, [SquarefreeMonomial(mask_of((1, 2)), 0)])
    )
    assert by_xy == by_yx == by_xx


def test_chordality_verdicts(worked_code):
    assert chordality(cycle4()) is None
    assert chordality(complete(4)) is not None
    g = relationship_graph(polarized_ideal(canonical_form(worked_code), worked_code.n))
    assert chordality(g) is not None


def test_chordless_cycle_witness():
    cycle = chordless_cycle_witness(cycle4())
    assert cycle is not None and len(cycle) == 4
    assert chordality(Graph.from_edges(len(cycle), [])) is not None  # sanity on small graphs


def test_witness_is_a_chordless_cycle():
    g = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (3, 6)])
    cycle = chordless_cycle_witness(g)
    assert cycle is not None and len(cycle) >= 4
    k = len(cycle)
    for idx in range(k):
        for jdx in range(idx + 1, k):
            adjacent = (jdx - idx) in (1, k - 1)
            assert g.has_edge(cycle[idx], cycle[jdx]) == adjacent


def test_profile_path3():
    assert simplicial_degree_profile(path3(), (1, 2, 3)) == (0, 1, 1)


def test_profile_k3():
    assert simplicial_degree_profile(complete(3), (1, 2, 3)) == (0, 1, 2)


def test_profile_single_vertex():
    assert simplicial_degree_profile(Graph(1, frozenset()), (1,)) == (0,)


def test_profile_rejects_non_simplicial_step():
    with pytest.raises(NotSimplicialError, match="step 1"):
        simplicial_degree_profile(path3(), (2, 1, 3))


def test_all_orderings_k2():
    got = {o.order for o in all_elimination_orderings(complete(2))}
    assert got == {(1, 2), (2, 1)}


def test_all_orderings_path3():
    got = {o.order for o in all_elimination_orderings(path3())}
    assert got == {(1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)}


def test_all_orderings_c4_empty():
    assert list(all_elimination_orderings(cycle4())) == []


def test_all_orderings_guard():
    with pytest.raises(ValueError):
        next(all_elimination_orderings(complete(10)))


st_graphs = st.integers(1, 6).flatmap(
    lambda n: st.builds(
        lambda picks: Graph.from_edges(
            n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) in picks]
        ),
        st.sets(
            st.tuples(st.integers(1, n), st.integers(1, n)).map(lambda p: (min(p), max(p))).filter(
                lambda p: p[0] < p[1]
            ),
            max_size=10,
        ),
    )
)


@settings(max_examples=150)
@given(st_graphs)
def test_chordality_agrees_with_ordering_enumeration(g):
    orderings = list(all_elimination_orderings(g))
    assert (chordality(g) is not None) == bool(orderings)


@settings(max_examples=100)
@given(st_graphs)
def test_profile_invariance_across_orderings(g):
    profiles = {o.profile() for o in all_elimination_orderings(g)}
    assert len(profiles) <= 1


def test_graph_io_roundtrip():
    g = cycle4()
    assert parse_graph(render_graph(g)) == g
    dot = render_dot(Graph.from_edges(3, [(1, 2)]))
    assert "1 -- 2;" in dot and "3;" in dot
