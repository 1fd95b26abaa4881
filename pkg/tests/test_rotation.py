import pytest

from embed3.algebra import GF2, GF3
from embed3.complex import face_degree
from embed3.constants import Colour, Parity
from embed3.corpus import corpus
from embed3.errors import (
    FacesAtEdgeNotCycleError, DegenerateDegreesError, HostMismatchError, CertificateError,
    PrescribedDualFailureError,
)
from embed3.graph import Graph
from embed3.matroid import dual_matroid, graph_realization
from embed3.rotation import (
    construct_rotation_framework, colour_edges, flip, sparsity_check, chamber_boundaries,
    junkify, face_parity_check, normalize_face, induces_check, restrict_framework,
    is_even, is_even_exhaustive, subdivide, replay_ledger, is_subdivision,
    framework_to_list, framework_from_list,
)


def _induced(name, k=GF2):
    c = corpus(name)
    g = graph_realization(dual_matroid(c, k)).graph
    return c, g, construct_rotation_framework(c, g)


def test_construct_framework_of_tetrahedron():
    c, g, s = _induced('tetrahedron')
    assert set(s.embeddings) == set(c.vertices)
    for v in c.vertices:
        pe = s.embedding(v)
        assert pe.genus == 0
        assert sorted(pe.face_names) == sorted(g.vertices)


def test_degenerate_colours(caplog):
    c, g, s = _induced('tetrahedron')
    colours = colour_edges(s)
    assert set(colours.values()) == {Colour.DegenerateGreen}
    assert 'degenerate-green' in caplog.text

    with pytest.raises(DegenerateDegreesError):
        face_parity_check(s, 'f0')


def test_faces_at_edge_not_cycle():
    c = corpus('tetrahedron')
    path = Graph(range(4), [('f0', 0, 1), ('f1', 1, 2), ('f2', 2, 3), ('f3', 3, 0)])
    with pytest.raises(FacesAtEdgeNotCycleError):
        construct_rotation_framework(c, path)

    report = sparsity_check(c, path)
    assert not report.sparse
    assert report.violations

    with pytest.raises(PrescribedDualFailureError):
        construct_rotation_framework(c, path.relabel_edges({'f0': 'x', 'f1': 'f1',
                                                            'f2': 'f2', 'f3': 'f3'}))


def test_sparsity_and_chambers():
    c, g, s = _induced('octahedron')
    assert sparsity_check(c, g) == (True, [])

    chambers = chamber_boundaries(c, g)
    assert len(chambers) == 2
    assert all(set(faces) == set(c.faces) for faces in chambers.values())


def test_junkify_sphere():
    c, g, s = _induced('tetrahedron')
    result = junkify(c, g, s)

    assert all(face_degree(result.complex, e) >= 3 for e in result.complex.edges)
    # six edges of face-degree two, each new face raises three of them
    assert 2 <= len(result.ledger) <= 6
    assert set(c.faces) <= set(result.complex.faces)
    assert len(result.complex.faces) == len(c.faces) + len(result.ledger)

    for step in result.ledger:
        assert step.copy.startswith(f"{step.face}'")
        faces = result.complex.faces
        assert faces[step.copy].vertices == faces[step.face].vertices
        assert result.graph.degree(step.vertex) == 2

    assert is_subdivision(result.graph, g, result.ledger)
    assert replay_ledger(g, result.ledger).same_as(result.graph)
    assert not is_subdivision(result.graph, g, ())
    assert induces_check(result.framework, s)


def test_junkify_two_parallel_triangles():
    c = corpus('parallel-triangles(2)')
    g = graph_realization(dual_matroid(c, GF2)).graph
    s = construct_rotation_framework(c, g, allow_two_vertex=True)
    result = junkify(c, g, s)

    assert len(result.ledger) == 1
    assert all(face_degree(result.complex, e) == 3 for e in result.complex.edges)
    assert len(result.complex.faces) == 3
    assert is_subdivision(result.graph, g, result.ledger)
    assert induces_check(result.framework, s)


def test_junkify_fresh_vertices():
    c, g, s = _induced('tetrahedron')
    result = junkify(c, g, s)
    vertices = [step.vertex for step in result.ledger]
    assert vertices == list(range(2, 2 + len(vertices)))


def test_extended_sphere_is_even():
    c, g, s = _induced('octahedron', GF3)
    result = junkify(c, g, s)
    colours = colour_edges(result.framework)
    assert Colour.DegenerateGreen not in colours.values()

    for f in result.complex.faces:
        assert face_parity_check(result.framework, f, colours) is Parity.Even
        assert normalize_face(result.framework, f, colours) is not None

    assert is_even(result.framework, colours).even
    assert is_even_exhaustive(result.framework, colours).even


def test_flip_toggles_edges_at_vertex():
    c, g, s = _induced('tetrahedron')
    ext = junkify(c, g, s).framework
    before = colour_edges(ext)
    after = colour_edges(flip(ext, 0))
    for e, edge in ext.complex.edges.items():
        toggled = 0 in (edge.tail, edge.head)
        assert (before[e] != after[e]) == toggled
    assert is_even(flip(ext, 0)).even == is_even(ext).even
    assert flip(ext, 0).orientation(0) == -ext.orientation(0)


def test_odd_cycle_witness():
    c, g, s = _induced('tetrahedron')
    ext = junkify(c, g, s).framework
    colours = colour_edges(ext)
    # force a single red edge
    e = next(iter(ext.complex.edges))
    colours = {x: (Colour.Red if x == e else Colour.Green) for x in colours}
    report = is_even(ext, colours)
    assert not report.even
    assert e in report.witness
    assert not is_even_exhaustive(ext, colours).even


def test_induces_host_mismatch():
    c, g, s = _induced('tetrahedron')
    ext = junkify(c, g, s).framework
    with pytest.raises(HostMismatchError):
        induces_check(s, ext)

    restricted = restrict_framework(ext, c)
    for v in c.vertices:
        assert restricted[v] == s.embeddings[v].rotation.canonical()


def test_subdivide():
    g = Graph(['a', 'b'], [('x', 'a', 'b'), ('y', 'a', 'b')])
    h = subdivide(g, 'x', "x'1", 'm', 'b')
    assert h.ends('x') == ('a', 'm')
    assert h.ends("x'1") == ('m', 'b')
    assert h.degree('m') == 2


def test_framework_round_trip():
    c, g, s = _induced('tetrahedron')
    result = junkify(c, g, s)
    data = framework_to_list(result.framework)
    again = framework_from_list(result.complex, data)
    for v in result.complex.vertices:
        assert again.embedding(v).rotation.canonical() == \
            result.framework.embedding(v).rotation.canonical()
        assert again.orientation(v) == result.framework.orientation(v)
    assert colour_edges(again) == colour_edges(result.framework)


def test_framework_from_garbage():
    c = corpus('tetrahedron')
    with pytest.raises(CertificateError):
        framework_from_list(c, [[0, {}]])
    with pytest.raises(CertificateError):
        framework_from_list(c, [])
