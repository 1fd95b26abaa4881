import pytest

from embed3.algebra import GF2, GF3, QQ
from embed3.complex import link_graph
from embed3.corpus import corpus
from embed3.errors import UnknownVertexError
from embed3.locality import is_k_local, is_locally_2connected, is_link_2connected, g_v
from embed3.matroid import dual_matroid, graph_realization


@pytest.mark.parametrize('name', ['tetrahedron', 'octahedron', 'suspension-of-cycle(4)',
                                  'torus7'])
def test_closed_surfaces_are_local(name):
    c = corpus(name)
    for k in (GF2, GF3, QQ):
        report = is_k_local(c, k)
        assert report.local
        assert bool(report)
        assert report.failures() == ()
        assert [r.vertex for r in report.records] == list(c.vertices)


def test_cone_over_k5_fails_at_apex():
    c = corpus('cone(K5)')
    report = is_k_local(c, GF2, workers=3)
    assert not report.local
    assert [r.vertex for r in report.failures()] == [0]

    apex = report.record(0)
    # the link at the apex is K5, its bond matroid has rank 10 - 5 + 1
    assert apex.link_matroid_rank == 6
    assert apex.restriction_rank == 0
    # smallest witness is the bond around a vertex of K5
    assert apex.witness.side == 'link'
    assert len(apex.witness.circuit) == 4


def test_locality_is_independent_of_workers():
    c = corpus('cone(K5)')
    assert is_k_local(c, GF3, workers=1).records == is_k_local(c, GF3, workers=4).records


def test_link_2connected():
    assert is_link_2connected(link_graph(corpus('tetrahedron'), 0))
    assert not is_link_2connected(link_graph(corpus('book(3)'), 0))

    two = link_graph(corpus('parallel-triangles(3)'), 0)
    assert two.number_of_vertices() == 2
    assert not is_link_2connected(two)
    assert is_link_2connected(two, allow_two_vertex=True)

    single = link_graph(corpus('triangle'), 0)
    assert not is_link_2connected(single, allow_two_vertex=True)


def test_locally_2connected():
    assert all(is_locally_2connected(corpus('octahedron')).values())

    result = is_locally_2connected(corpus('cone(K5)'))
    assert result[0]
    assert not any(result[v] for v in range(1, 6))

    result = is_locally_2connected(corpus('bowtie'))
    assert not any(result.values())


def test_g_v():
    c = corpus('tetrahedron')
    g = graph_realization(dual_matroid(c, GF2)).graph
    gv = g_v(g, c, 0)
    assert set(gv.edges) == set(c.faces_at_vertex(0))
    assert gv.number_of_vertices() == 2

    bijection = {f: f'd{f}' for f in c.faces}
    relabelled = g.relabel_edges(bijection)
    assert set(g_v(relabelled, c, 0, bijection).edges) == \
        {bijection[f] for f in c.faces_at_vertex(0)}

    with pytest.raises(UnknownVertexError):
        g_v(g, c, 42)
