import random
import itertools

import pytest

from embed3.errors import (
    NotTwoConnectedError, FaceSetNotCycleError, NotPlanarAssemblyError, NotPlanarError,
    NotIncidentError, UnknownVertexError,
)
from embed3.graph import Graph
from embed3.planar import (
    RotationSystem, trace_faces, is_cycle_edge_set, embedding_with_prescribed_dual,
    dual_graph_of_embedding, rotator_neighbors, opposite, darts_at,
)


def _k4():
    edges = [(f'{u}{v}', u, v) for u, v in itertools.combinations(range(4), 2)]
    return Graph(range(4), edges)


def _k4_dual():
    # face 'Ti' of the plane K4 is the triangle avoiding vertex i
    return Graph(['T0', 'T1', 'T2', 'T3'], [
        ('01', 'T2', 'T3'), ('02', 'T1', 'T3'), ('03', 'T1', 'T2'),
        ('12', 'T0', 'T3'), ('13', 'T0', 'T2'), ('23', 'T0', 'T1'),
    ])


def _cycle(n):
    return Graph(range(n), [(f'c{i}', i, (i + 1) % n) for i in range(n)])


def test_darts():
    g = Graph([0, 1], [('a', 0, 1), ('l', 1, 1)])
    assert darts_at(g, 0) == [('a', 0)]
    assert darts_at(g, 1) == [('a', 1), ('l', 0), ('l', 1)]
    assert opposite(('a', 0)) == ('a', 1)


def test_rotation_system_validation():
    g = _cycle(3)
    with pytest.raises(ValueError):
        RotationSystem(g, {0: [('c0', 0)], 1: [], 2: []})


def test_trace_faces_of_cycle():
    g = _cycle(4)
    r = RotationSystem.from_edge_rotators(g, {v: g.incident_edges(v) for v in g.vertices})
    pe = trace_faces(g, r)
    assert len(pe.faces) == 2
    assert pe.genus == 0
    assert pe.face_names == (0, 1)


def test_k5_has_no_planar_rotation_system():
    rng = random.Random(5)
    k5 = Graph(range(5), [(f'{u}{v}', u, v) for u, v in itertools.combinations(range(5), 2)])
    for _ in range(200):
        rotators = {}
        for v in k5.vertices:
            darts = list(darts_at(k5, v))
            rng.shuffle(darts)
            rotators[v] = darts
        pe = trace_faces(k5, RotationSystem(k5, rotators))
        assert pe.genus >= 1


def test_trace_faces_of_torus():
    g = Graph([0], [('a', 0, 0), ('b', 0, 0)])
    r = RotationSystem(g, {0: [('a', 0), ('b', 0), ('a', 1), ('b', 1)]})
    pe = trace_faces(g, r)
    assert len(pe.faces) == 1
    assert pe.genus == 1

    with pytest.raises(NotPlanarError):
        dual_graph_of_embedding(pe)


def test_is_cycle_edge_set():
    g = _k4()
    assert is_cycle_edge_set(g, ['01', '12', '02'])
    assert is_cycle_edge_set(g, ['01', '12', '23', '03'])
    assert not is_cycle_edge_set(g, ['01', '02', '03'])
    assert not is_cycle_edge_set(g, [])
    assert not is_cycle_edge_set(g, ['01'])

    loops = Graph([0, 1], [('l', 0, 0), ('a', 0, 1), ('b', 0, 1)])
    assert is_cycle_edge_set(loops, ['l'])
    assert is_cycle_edge_set(loops, ['a', 'b'])

    two = Graph(range(6), [(f'x{i}', i, (i + 1) % 3) for i in range(3)]
                + [(f'y{i}', 3 + i, 3 + (i + 1) % 3) for i in range(3)])
    assert not is_cycle_edge_set(two, list(two.edges))


def test_prescribed_dual_of_k4():
    link, gv = _k4(), _k4_dual()
    pe = embedding_with_prescribed_dual(link, gv)
    assert pe.genus == 0
    assert sorted(pe.face_names) == ['T0', 'T1', 'T2', 'T3']
    assert set(pe.face_edges('T3')) == {'01', '02', '12'}
    assert set(pe.face_edges('T0')) == {'12', '13', '23'}

    dual, bijection = dual_graph_of_embedding(pe)
    assert dual.same_as(gv)
    assert bijection == {e: e for e in link.edges}

    assert set(rotator_neighbors(pe, 0, '01')) == {'02', '03'}


def test_prescribed_dual_is_deterministic():
    link, gv = _k4(), _k4_dual()
    pe1 = embedding_with_prescribed_dual(link, gv)
    pe2 = embedding_with_prescribed_dual(link, gv)
    assert pe1.rotation.rotators == pe2.rotation.rotators
    assert pe1.faces == pe2.faces


def test_prescribed_dual_with_bijection():
    link = _k4()
    gv = _k4_dual().relabel_edges({e: f'd{e}' for e in link.edges})
    pe = embedding_with_prescribed_dual(link, gv, {e: f'd{e}' for e in link.edges})
    assert set(pe.face_edges('T1')) == {'02', '03', '23'}


def test_prescribed_dual_of_cycle():
    link = _cycle(5)
    gv = Graph(['in', 'out'], [(e, 'in', 'out') for e in link.edges])
    pe = embedding_with_prescribed_dual(link, gv)
    assert sorted(pe.face_names) == ['in', 'out']
    assert all(len(pe.edge_rotator(v)) == 2 for v in link.vertices)


def test_reflected():
    pe = embedding_with_prescribed_dual(_k4(), _k4_dual())
    ref = pe.reflected()
    assert ref.orientation == -1
    assert ref.genus == 0
    for name in pe.face_names:
        assert set(ref.face_edges(name)) == set(pe.face_edges(name))
    for v in pe.graph.vertices:
        assert ref.edge_rotator(v) == tuple(reversed(pe.edge_rotator(v)))
    assert ref.reflected().orientation == 1


def test_prescribed_dual_failures():
    with pytest.raises(NotTwoConnectedError):
        path = Graph(range(3), [('a', 0, 1), ('b', 1, 2)])
        embedding_with_prescribed_dual(path, Graph(['x'], [('a', 'x', 'x'), ('b', 'x', 'x')]))

    link = _k4()
    fat = Graph(['X', 'Y'], [(e, 'X', 'Y') for e in link.edges])
    with pytest.raises(FaceSetNotCycleError):
        embedding_with_prescribed_dual(link, fat)

    looped = Graph(['T0', 'T1', 'T2', 'T3'],
                   [(e, 'T2', 'T2') if e == '01' else (e, u, v)
                    for e, u, v in _k4_dual().triples()])
    with pytest.raises(FaceSetNotCycleError):
        embedding_with_prescribed_dual(link, looped)

    with pytest.raises(NotPlanarAssemblyError):
        embedding_with_prescribed_dual(link, _k4_dual().delete_edges(['01']))


def test_rotator_neighbors_errors():
    pe = embedding_with_prescribed_dual(_k4(), _k4_dual())
    with pytest.raises(NotIncidentError):
        rotator_neighbors(pe, 0, '23')
    with pytest.raises(UnknownVertexError):
        rotator_neighbors(pe, 9, '01')


def test_rotator_neighbors_degenerate(caplog):
    link = _cycle(3)
    gv = Graph(['in', 'out'], [(e, 'in', 'out') for e in link.edges])
    pe = embedding_with_prescribed_dual(link, gv)
    before, after = rotator_neighbors(pe, 0, 'c0')
    assert before == after == 'c2'
    assert 'degenerate' in caplog.text
