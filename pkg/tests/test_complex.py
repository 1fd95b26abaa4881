import json
import random

import pytest

from embed3.algebra import GF2, GF3, QQ, rank
from embed3.complex import (
    validate, load_complex, link_graph, incidence_matrix, face_degree,
    h1_f2_trivial, fundamental_group_report, copy_id,
)
from embed3.constants import GroupStatus
from embed3.corpus import corpus
from embed3.errors import (
    ComplexError, MissingFaceError, DegenerateFaceError, DegenerateEdgeError,
    DanglingReferenceError, DuplicateIdError, UnknownVertexError, DisconnectedError,
    InputError, FileError,
)
from embed3.locality import is_k_local
from embed3.matroid import dual_matroid, matroids_equal


def _triangle(**overrides):
    raw = {
        'vertices': [0, 1, 2],
        'edges': [['a', 0, 1], ['b', 1, 2], ['c', 0, 2]],
        'faces': [['f', 0, 1, 2]],
    }
    raw.update(overrides)
    return raw


def test_validate_triangle():
    c = validate(_triangle())
    assert c.vertices == (0, 1, 2)
    assert list(c.edges) == ['a', 'b', 'c']
    assert c.face_edges('f') == ('a', 'b', 'c')
    assert c.sign('a', 'f') == 1
    assert c.sign('c', 'f') == -1


def test_validate_expands_copies():
    c = validate(_triangle(faces=[['f', 0, 1, 2, 3]]))
    assert set(c.faces) == {'f', copy_id('f', 1), copy_id('f', 2)}
    assert c.faces["f'2"].copy == 2
    assert c.faces["f'2"].vertices == (0, 1, 2)
    assert face_degree(c, 'a') == 3
    assert set(c.parallel_class('f')) == set(c.faces)


@pytest.mark.parametrize('overrides,exc', [
    ({'vertices': [0, 1, 1]}, DuplicateIdError),
    ({'edges': [['a', 0, 1], ['a', 1, 2], ['c', 0, 2]]}, DuplicateIdError),
    ({'edges': [['a', 0, 1], ['b', 1, 2], ['c', 0, 7]]}, DanglingReferenceError),
    ({'edges': [['a', 0, 0], ['b', 1, 2], ['c', 0, 2]]}, DegenerateEdgeError),
    ({'edges': [['a', 0, 1], ['b', 1, 0], ['c', 0, 2]]}, DegenerateEdgeError),
    ({'faces': [['f', 0, 1, 1]]}, DegenerateFaceError),
    ({'faces': [['f', 0, 1, 5]]}, DanglingReferenceError),
    ({'faces': [['f', 0, 1, 2], ['f', 0, 2, 1]]}, DuplicateIdError),
    ({'faces': [['f', 0, 1, 2, 0]]}, ComplexError),
    ({'faces': [['f', 0, 1]]}, ComplexError),
    ({'vertices': [0, 1, 2, 3],
      'edges': [['a', 0, 1], ['b', 1, 2], ['c', 0, 2], ['d', 2, 3]]}, MissingFaceError),
    ({'vertices': [0, 1, 2.5]}, ComplexError),
])
def test_validate_rejects(overrides, exc):
    with pytest.raises(exc):
        validate(_triangle(**overrides))


def test_validate_rejects_non_mapping():
    with pytest.raises(ComplexError):
        validate([])
    with pytest.raises(ComplexError):
        validate({'vertices': []})


def test_missing_face_error_names_edge():
    raw = _triangle(vertices=[0, 1, 2, 3],
                    edges=[['a', 0, 1], ['b', 1, 2], ['c', 0, 2], ['d', 2, 3]])
    with pytest.raises(MissingFaceError) as info:
        validate(raw)
    assert info.value.edge == 'd'


def test_load_complex(tmp_path):
    path = tmp_path / 'triangle.json'
    path.write_text(json.dumps(_triangle()))
    c = load_complex(str(path))
    assert len(c.faces) == 1

    bad = tmp_path / 'bad.json'
    bad.write_text('{not json')
    with pytest.raises(InputError):
        load_complex(str(bad))

    with pytest.raises(FileError):
        load_complex(str(tmp_path / 'missing.json'))


def test_link_graph_of_tetrahedron():
    c = corpus('tetrahedron')
    link = link_graph(c, 0)
    assert link.host == 0
    assert set(link.vertices) == {'0-1', '0-2', '0-3'}
    assert link.number_of_edges() == 3
    # the link of a vertex of a sphere is a cycle
    assert all(link.degree(v) == 2 for v in link.vertices)

    with pytest.raises(UnknownVertexError):
        link_graph(c, 9)


def test_link_graph_of_book():
    c = corpus('book(3)')
    link = link_graph(c, 0)
    # three faces at the spine edge 0-1
    assert link.degree('0-1') == 3
    assert link.number_of_edges() == 3


def test_incidence_matrix():
    c = corpus('tetrahedron')
    m = incidence_matrix(c, GF3)
    assert m.shape == (6, 4)
    assert m.row_labels == tuple(c.edges)
    assert m.col_labels == tuple(c.faces)
    # boundaries of a closed oriented surface sum to zero
    assert rank(m) == 3
    for e in c.edges:
        assert sum(c.sign(e, f) for f in c.faces) == 0


def test_reoriented_and_redirected():
    c = corpus('triangle')
    flipped = c.reoriented()
    assert flipped.sign('0-1', 'f0') == -c.sign('0-1', 'f0')
    redirected = c.redirected(['0-1'])
    assert redirected.edges['0-1'].tail == 1
    assert redirected.sign('0-1', 'f0') == -c.sign('0-1', 'f0')
    assert c.reoriented().reoriented().same_as(c)


@pytest.mark.parametrize('name', [
    'tetrahedron', 'octahedron', 'torus7', 'cone(K5)', 'book(3)', 'two-tetrahedra-glued',
])
def test_directions_do_not_change_invariants(name):
    rng = random.Random(name)
    c = corpus(name)
    edges = list(c.edges)
    faces = list(c.faces)
    matroids = {k: dual_matroid(c, k) for k in (GF3, QQ)}
    locality = {k: is_k_local(c, k) for k in (GF3, QQ)}

    for _ in range(5):
        c2 = c.redirected(rng.sample(edges, rng.randint(1, len(edges))))
        c2 = c2.reoriented(rng.sample(faces, rng.randint(0, len(faces))))
        assert h1_f2_trivial(c2) == h1_f2_trivial(c)
        for k in (GF3, QQ):
            assert matroids_equal(dual_matroid(c2, k), matroids[k])
            before = locality[k]
            after = is_k_local(c2, k)
            assert after.local == before.local
            assert [r.vertex for r in after.failures()] == \
                   [r.vertex for r in before.failures()]


def test_with_parallel_face():
    c = corpus('triangle')
    d = c.with_parallel_face('f0', "f0'1")
    assert len(d.faces) == 2
    assert d.faces["f0'1"].copy == 1
    with pytest.raises(DuplicateIdError):
        d.with_parallel_face('f0', "f0'1")


def test_h1_f2_trivial():
    assert h1_f2_trivial(corpus('tetrahedron'))
    assert h1_f2_trivial(corpus('cone(K5)'))
    assert h1_f2_trivial(corpus('two-tetrahedra-glued'))
    assert not h1_f2_trivial(corpus('torus7'))

    # triangulated annulus between the cycles 0 1 2 and 3 4 5
    annulus = [(0, 1, 3), (1, 4, 3), (1, 2, 4), (2, 5, 4), (2, 0, 5), (0, 3, 5)]
    edges = {frozenset(p) for a, b, c in annulus for p in ((a, b), (b, c), (c, a))}
    c = validate({
        'vertices': list(range(6)),
        'edges': [[f'e{i}', *sorted(p)] for i, p in enumerate(sorted(edges, key=sorted))],
        'faces': [[f'f{i}', *t] for i, t in enumerate(annulus)],
    })
    assert len(c.edges) == 12
    assert not h1_f2_trivial(c)


def test_fundamental_group_of_sphere():
    report = fundamental_group_report(corpus('octahedron'))
    assert report.status is GroupStatus.CertifiedTrivial
    assert report.reduced_generators == ()
    assert not report.refuted_by_homology
    # one generator per non-tree edge
    assert len(report.generators) == 12 - 6 + 1


def test_fundamental_group_of_torus():
    report = fundamental_group_report(corpus('torus7'))
    assert report.status is GroupStatus.Unknown
    assert report.refuted_by_homology
    assert len(report.reduced_generators) >= 2


def test_fundamental_group_of_cone():
    report = fundamental_group_report(corpus('cone(C5)'))
    assert report.status is GroupStatus.CertifiedTrivial


def test_fundamental_group_disconnected():
    c = corpus('bowtie')
    # bowtie is connected through vertex 0
    assert fundamental_group_report(c).status is GroupStatus.CertifiedTrivial

    two = validate({
        'vertices': [0, 1, 2, 3, 4, 5],
        'edges': [['a', 0, 1], ['b', 1, 2], ['c', 0, 2],
                  ['d', 3, 4], ['e', 4, 5], ['f', 3, 5]],
        'faces': [['x', 0, 1, 2], ['y', 3, 4, 5]],
    })
    with pytest.raises(DisconnectedError):
        fundamental_group_report(two)


def test_to_dict_round_trip():
    c = corpus('parallel-triangles(2)')
    again = validate(c.to_dict())
    assert again.same_as(c)
    assert rank(incidence_matrix(again, GF2)) == 1
