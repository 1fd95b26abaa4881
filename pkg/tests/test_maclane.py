import random
import itertools

import pytest

from embed3.algebra import ExactMatrix, GF2, GF3, GF5, QQ, same_row_space
from embed3.constants import MatroidMode
from embed3.corpus import corpus
from embed3.errors import NotSparseError
from embed3.graph import Graph
from embed3.maclane import (
    SparseFamily, is_sparse_family, sparse_set_from_graph, graph_from_sparse_set,
    orient_to_cycle_space, sparse_generating_set, maclane_check,
)
from embed3.matroid import GraphMatroid, VectorMatroid, dual_matroid, matroids_equal


def _k4():
    edges = [(f'{u}{v}', u, v) for u, v in itertools.combinations(range(4), 2)]
    return Graph(range(4), edges)


def test_is_sparse_family():
    assert is_sparse_family(SparseFamily(GF3, 'ab', [[1, 0], [-1, 0]])).sparse
    assert is_sparse_family(SparseFamily(GF2, 'a', [[1], [1]])).sparse

    check = is_sparse_family(SparseFamily(GF3, 'ab', [[1, 1], [-1, 1]]))
    assert not check.sparse
    assert check.coordinate == 'b'

    # three nonzero entries at one coordinate
    assert not is_sparse_family(SparseFamily(GF2, 'a', [[1], [1], [1]])).sparse

    with pytest.raises(ValueError):
        SparseFamily(GF2, 'ab', [[1]])


def test_sparse_set_from_graph():
    g = Graph(['x', 'y'], [('a', 'x', 'y'), ('l', 'y', 'y')])
    family = sparse_set_from_graph(g, QQ)
    assert family.names == ('x', 'y')
    assert family.to_list() == [['x', [1, 0]], ['y', [-1, 0]]]
    assert is_sparse_family(family).sparse


def test_graph_from_sparse_set_round_trip():
    g = _k4().reversed_edges(['01', '23'])
    family = sparse_set_from_graph(g, GF5)
    h, mapping = graph_from_sparse_set(family)
    assert mapping == {e: e for e in g.edges}
    assert all(h.ends(e) == g.ends(e) for e in g.edges)


def test_graph_from_sparse_set_edge_cases():
    h, _ = graph_from_sparse_set(SparseFamily(GF2, ['a'], []))
    assert h.vertices == (0,)
    assert h.is_loop('a')

    h, _ = graph_from_sparse_set(SparseFamily(GF3, 'ab', [[1, 0], [-1, 0]]))
    assert h.ends('a') == (0, 1)
    assert h.ends('b') == (0, 0)

    with pytest.raises(NotSparseError):
        graph_from_sparse_set(SparseFamily(GF3, 'a', [[1], [1]]))


def test_orient_to_cycle_space():
    k4 = _k4()
    m = GraphMatroid(k4).to_vector_matroid(GF3)
    scrambled = k4.reversed_edges(['01', '13', '23'])
    oriented = orient_to_cycle_space(scrambled, m)
    assert oriented is not None
    stars = sparse_set_from_graph(oriented, GF3, m.ground).as_matrix()
    assert same_row_space(stars, m.rep)


def test_sparse_generating_set_of_bond_matroid():
    m = GraphMatroid(_k4(), MatroidMode.Bond).to_vector_matroid(GF5)
    result = sparse_generating_set(m)
    assert result.graphic
    assert result.exact
    assert is_sparse_family(result.family).sparse
    assert same_row_space(result.family.as_matrix(), m.rep)


def test_sparse_generating_set_non_graphic():
    m = VectorMatroid(ExactMatrix(GF3, [[1, 0, 1, 1], [0, 1, 1, 2]], col_labels='abcd'))
    result = sparse_generating_set(m)
    assert not result.graphic
    assert result.family is None
    assert result.components == (('a', 'b', 'c', 'd'),)


def test_sparse_generating_set_needs_exact_orientation():
    # signed incidence of a triangle with one column scaled by 2
    rep = ExactMatrix(GF5, [[1, 0, 2], [-1, 1, 0], [0, -1, -2]], col_labels='abc')
    m = VectorMatroid(rep)
    result = sparse_generating_set(m)
    assert result.graphic
    assert not result.exact
    assert result.family is None
    assert result.graph.number_of_edges() == 3


@pytest.mark.parametrize('name', [
    'triangle', 'tetrahedron', 'octahedron', 'icosahedron', 'suspension-of-cycle(5)',
    'suspension(4)', 'cone(K5)', 'cone(C4)', 'cone(P4)', 'cone(K2,3)', 'book(3)',
    'torus7', 'parallel-triangles(3)', 'two-tetrahedra-glued', 'bowtie',
])
def test_maclane_families_span_the_cycle_space(name):
    c = corpus(name)
    for k in (GF3, QQ):
        result = maclane_check(c, k)
        if not result.graphic:
            assert result.family is None
            continue
        assert result.exact
        assert is_sparse_family(result.family).sparse
        assert same_row_space(result.family.as_matrix(), dual_matroid(c, k).rep)


@pytest.mark.parametrize('name', ['tetrahedron', 'octahedron', 'torus7'])
def test_maclane_check_of_surfaces(name):
    c = corpus(name)
    for k in (GF2, GF3):
        result = maclane_check(c, k)
        assert result.graphic
        assert result.exact
        assert len(result.family) == 2
        assert result.family.labels == tuple(c.faces)
        assert same_row_space(result.family.as_matrix(), dual_matroid(c, k).rep)


def test_maclane_check_of_loops():
    result = maclane_check(corpus('cone(K5)'), GF3)
    assert result.graphic
    assert result.exact
    assert result.graph.number_of_vertices() == 1
    assert all(x == 0 for v in result.family.vectors for x in v)


def test_random_sparse_families():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 5)
        edges = [(f'e{i}', rng.randrange(n), rng.randrange(n))
                 for i in range(rng.randint(0, 8))]
        g = Graph(range(n), edges)
        for k in (GF2, GF3, QQ):
            family = sparse_set_from_graph(g, k)
            assert is_sparse_family(family).sparse
            h, _ = graph_from_sparse_set(family)
            assert matroids_equal(GraphMatroid(h), GraphMatroid(g))
