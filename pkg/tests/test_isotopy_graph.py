import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from latintab.constructions import build_symmetric_family, build_Td
from latintab.errors import ComponentTooLarge, CriterionMismatch
from latintab.isotopy_graph import (
    _component_scalar,
    analyze,
    clique_number,
    component,
    cube_coordinates,
    cube_criterion,
    degree_formula,
    find_triangles,
    full_graph,
    is_cube,
    isotopy_group_order,
    label_classes_global,
    max_clique_size,
    stabilizer_order,
    symmetric_pairs,
    symmetric_pairs_structural,
    triangle_conditions,
    triangle_witnesses,
    vertex_degree,
)
from latintab.partition_core import Partition, is_squareable, partitions_up_to, staircase
from latintab.tableau import parse_transform

from conftest import T, fillings_of, naive_component, naive_neighbours, tableaux


def hypercube(d):
    # networkx returns an empty graph for d = 0
    return nx.hypercube_graph(d) if d else nx.path_graph(1)


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(len(G)))
    g.add_edges_from((e.u, e.v) for e in G.edges)
    return g


def all_components(max_boxes):
    for lam in partitions_up_to(max_boxes):
        yield from full_graph(lam)


# --- components --------------------------------------------------------------


def test_single_row_of_two():
    G = component(T("12"))
    assert len(G) == 2
    assert [(e.u, e.v, [str(x) for x in e.labels]) for e in G.edges] == [(0, 1, ["c(1,2)", "s(1,2)"])]


def test_staircase_is_isolated_vertex():
    for n in range(1, 6):
        G = full_graph(staircase(n))
        assert len(G) == 1 and len(G[0]) == 1 and G[0].edges == ()


def test_t2_is_four_cycle():
    G = component(T("312,12"))
    assert len(G) == 4
    assert nx.is_isomorphic(to_nx(G), nx.cycle_graph(4))


def test_full_graph_examples():
    assert [len(G) for G in full_graph((3, 2))] == [2, 4]
    assert [len(G) for G in full_graph((2,))] == [2]
    assert [len(G) for G in full_graph((3, 3, 3))] == [12]


def test_components_match_naive_orbits():
    for lam in partitions_up_to(7):
        covered = set()
        for G in full_graph(lam):
            verts = {t.rows for t in G.vertices}
            assert verts == naive_component(G.basepoint)
            assert not verts & covered
            covered |= verts
        assert covered == {t.rows for t in fillings_of(lam)}


def test_adjacency_matches_naive_neighbours():
    for G in all_components(6):
        for u, t in enumerate(G.vertices):
            assert {G.vertices[v].rows for v in G.adjacency[u]} == naive_neighbours(t)
            assert G.degrees()[u] == len(naive_neighbours(t))


def test_edges_carry_every_coinciding_transform():
    for G in all_components(6):
        for e in G.edges:
            a, b = G.vertices[e.u], G.vertices[e.v]
            coinciding = [g for g in G.generators if g.act(a.rows) == b.rows]
            assert list(e.labels) == coinciding


def test_vectorized_and_scalar_search_agree():
    for G in all_components(7):
        if G.images.shape[1]:
            f, im = _component_scalar(G.basepoint.flat, G.shape, 1 << 20)
            assert np.array_equal(f, G.fillings) and np.array_equal(im, G.images)


def test_vertex_ids_are_reproducible():
    a = component(T("1234,2143"))
    b = component(T("1234,2143"))
    assert a.flat_vertices == b.flat_vertices and a.edges == b.edges
    assert a.basepoint == T("1234,2143")


def test_cap():
    with pytest.raises(ComponentTooLarge) as e:
        component(T("123456"), cap=100)
    assert e.value.cap == 100
    assert len(component(T("123456"), cap=720)) == 720


# --- degrees and symmetric pairs -----------------------------------------------


def test_symmetric_pair_examples():
    assert symmetric_pairs(T("1234,2143")) == [((1, 2), (1, 2)), ((3, 4), (3, 4))]
    assert symmetric_pairs(T("123,231,312")) == []
    assert symmetric_pairs(T("1234,2143,3412,4321")) == []
    assert symmetric_pairs(T("312,12")) == []


def test_degree_examples():
    assert vertex_degree(component(T("1234,2143"))) == 11 == degree_formula(T("1234,2143"))
    for t in fillings_of(Partition((3, 3, 3))):
        assert vertex_degree(component(t)) == 9
    assert vertex_degree(component(T("4321,321,21,1"))) == 0


@settings(max_examples=80, deadline=None)
@given(tableaux())
def test_symmetric_pairs_structural_agrees(t):
    assert symmetric_pairs(t) == symmetric_pairs_structural(t)


def test_regular_and_degree_formula_up_to_7_boxes_except_2_2():
    offenders = set()
    for G in all_components(7):
        d = vertex_degree(G)
        for t in G.vertices:
            if degree_formula(t) != d:
                offenders.add(tuple(G.shape))
    assert offenders == {(2, 2)}


def test_two_by_two_counterexample():
    # r(1,2), c(1,2) and s(1,2) all act as the same involution on both fillings
    for t in (T("12,21"), T("21,12")):
        G = component(t)
        images = {g.act(t.rows) for g in G.generators}
        assert len(images) == 1
        assert len(G) == 2 and vertex_degree(G) == 1
        assert len(symmetric_pairs(t)) == 1 and degree_formula(t) == 2
        assert stabilizer_order(t, G) == 4 and is_cube(G) == 1
        assert cube_criterion(t, G, check=False) is False
        with pytest.raises(CriterionMismatch):
            cube_criterion(t, G)


# --- group orders --------------------------------------------------------------


def test_group_order_examples():
    assert isotopy_group_order((2,)) == 4
    assert stabilizer_order(T("12")) == 2
    assert stabilizer_order(T("312,12")) == 1
    s = build_symmetric_family(3)
    G = component(s)
    assert stabilizer_order(s, G) >= 2 and len(G) < 2**9


def test_orbit_stabilizer_up_to_8_boxes():
    for G in all_components(8):
        assert len(G) * stabilizer_order(G.basepoint, G) == isotopy_group_order(G.shape)


# --- triangles and cliques ------------------------------------------------------


def test_triangle_examples():
    t = T("231,312,12")
    wit = triangle_witnesses(t)
    assert len(wit) == 1
    w = wit[0]
    assert (str(w.r), str(w.c), str(w.s)) == ("r(1,2)", "c(1,2)", "s(1,2)")
    assert w.conditions_hold and w.corner == "ab/ba"
    assert find_triangles(component(t))
    for s in fillings_of(Partition((4, 4, 3, 1))):
        assert triangle_witnesses(s) == []
        assert find_triangles(component(s)) == []
    assert triangle_witnesses(T("312,12")) == []


def test_triangles_match_networkx():
    for G in all_components(7):
        assert len(find_triangles(G)) == sum(nx.triangles(to_nx(G)).values()) // 3


def test_clique_examples():
    assert clique_number(component(T("4321,321,21,1"))) == 1
    assert clique_number(component(T("1234,2143"))) == 4
    assert [clique_number(G) for G in full_graph((3, 2))] == [2, 2]


def test_clique_number_matches_networkx_up_to_7_boxes():
    for G in all_components(7):
        omega = max(len(c) for c in nx.find_cliques(to_nx(G)))
        assert clique_number(G) == omega == max_clique_size(G.adjacency)
        assert omega in (1, 2, 4)


def test_witness_entries_outside_four():
    # the swapped entries of a genuine witness need not lie in {1, 2, 3, 4}
    t = T("463125,12,21")
    w = triangle_conditions(t, parse_transform("r(2,3)"), parse_transform("c(1,2)"), parse_transform("s(4,6)"))
    assert w.r.act(w.c.act(t.rows)) == w.s.act(t.rows)
    assert w.structural_conditions and not w.entries_in_four
    assert any(x.conditions_hold for x in triangle_witnesses(t))


# --- cubes ------------------------------------------------------------------------


def test_cube_examples():
    assert is_cube(component(T("12"))) == 1
    assert is_cube(component(T("312,12"))) == 2
    assert is_cube(component(build_symmetric_family(3))) is None
    t3 = T("2431,4312,312,12")
    assert cube_criterion(t3) and is_cube(component(t3)) == 3
    assert not cube_criterion(T("123,231,312"))


def test_cube_recognition_matches_hypercube_isomorphism():
    seen = 0
    for G in all_components(7):
        if len(G) > 16:
            continue
        g = to_nx(G)
        for d in range(5):
            iso = len(G) == 2**d and nx.is_isomorphic(g, hypercube(d))
            assert iso == (is_cube(G) == d)
            seen += iso
    for d in range(5):
        G = component(build_Td(d))
        assert nx.is_isomorphic(to_nx(G), hypercube(d))
        assert is_cube(G) == d
    assert seen > 10


def test_cube_coordinates_are_a_bijection():
    G = component(build_Td(5))
    coords = cube_coordinates(G)
    assert sorted(coords) == list(range(32))


def test_non_cube_same_size_regular_graph_rejected():
    # the 4x4 grid graph is not hypercube-like, yet has 16 vertices
    G = component(T("1234,2143"))
    assert cube_coordinates(G) is None


def test_label_classes_global_for_squareable_shapes():
    for G in all_components(8):
        if is_squareable(G.shape):
            assert label_classes_global(G)


def test_analyze_report():
    r = analyze(T("1234,2143"))
    assert (r.component_size, r.degree, r.degree_formula, r.stabilizer_order) == (72, 11, 11, 16)
    assert r.symmetric_pairs == (((1, 2), (1, 2)), ((3, 4), (3, 4)))
    assert r.has_triangle and r.clique_number == 4 and r.cube_dimension is None
    assert r.component_size * r.stabilizer_order == isotopy_group_order(r.shape)
