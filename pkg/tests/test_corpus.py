import pytest

from embed3.complex import face_degree
from embed3.corpus import corpus, NAMES
from embed3.errors import UnknownCorpusNameError


@pytest.mark.parametrize('name, counts', [
    ('triangle', (3, 3, 1)),
    ('tetrahedron', (4, 6, 4)),
    ('octahedron', (6, 12, 8)),
    ('icosahedron', (12, 30, 20)),
    ('suspension-of-cycle(5)', (7, 15, 10)),
    ('suspension(3)', (5, 9, 6)),
    ('cone(K5)', (6, 15, 10)),
    ('cone(C4)', (5, 8, 4)),
    ('cone(P4)', (5, 7, 3)),
    ('cone(K2,3)', (6, 11, 6)),
    ('book(3)', (5, 7, 3)),
    ('torus7', (7, 21, 14)),
    ('parallel-triangles(3)', (3, 3, 3)),
    ('two-tetrahedra-glued', (5, 9, 7)),
    ('bowtie', (5, 6, 2)),
])
def test_counts(name, counts):
    c = corpus(name)
    assert (len(c.vertices), len(c.edges), len(c.faces)) == counts


def test_names_are_buildable():
    for name in NAMES:
        c = corpus(name.replace('Km,n', 'K2,2').replace('(n)', '(4)').replace('Kn', 'K4')
                   .replace('Cn', 'C4').replace('Pn', 'P4'))
        assert c.faces


def test_closed_surfaces():
    for name in ('tetrahedron', 'octahedron', 'icosahedron', 'torus7'):
        c = corpus(name)
        assert all(face_degree(c, e) == 2 for e in c.edges)


def test_deterministic():
    assert corpus('cone(K2,3)').to_dict() == corpus(' cone(K2, 3) ').to_dict()
    assert list(corpus('octahedron').faces) == [f'f{i}' for i in range(8)]


def test_parallel_copies():
    c = corpus('parallel-triangles(3)')
    assert set(c.faces) == {'f0', "f0'1", "f0'2"}
    assert all(face_degree(c, e) == 3 for e in c.edges)


@pytest.mark.parametrize('name', [
    'sphere', 'cone(X3)', 'cone(K1)', 'cone(C2)', 'cone(K0,2)', 'book(0)',
    'suspension-of-cycle(2)', 'parallel-triangles(0)', 'book(n)',
])
def test_unknown_names(name):
    with pytest.raises(UnknownCorpusNameError):
        corpus(name)
