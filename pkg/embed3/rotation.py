# -*- coding: utf-8 -*-
"""
Rotation frameworks.

A rotation framework chooses a plane embedding of every link graph of a complex. At an
edge ``e = vw`` the rotators at the link vertex ``e`` in the links of ``v`` and ``w``
are cyclic orders of the faces at ``e``. They must either be reverse to each other,
which colours ``e`` green, or agree, which colours ``e`` red. A framework is even if
every cycle of the 1-skeleton contains an even number of red edges.

This module builds the framework induced by a dual graph, colours and flips it,
checks sparsity and face parity, adds parallel faces until every edge has face-degree
at least three, and decides evenness.

"""
import logging
import itertools
from collections import namedtuple

import networkx as nx

from embed3.complex import link_graph, face_degree, one_skeleton
from embed3.constants import Colour, Parity, MAX_CIRCUIT_SUBSETS
from embed3.errors import (
    FacesAtEdgeNotCycleError, PrescribedDualFailureError, CompatibilityViolationError,
    DegenerateDegreesError, HostMismatchError, HypothesisFailureError, PlanarError,
    CertificateError,
)
from embed3.graph import Graph
from embed3.locality import g_v
from embed3.planar import (
    PlaneEmbedding, RotationSystem, embedding_with_prescribed_dual, trace_faces,
    is_cycle_edge_set,
)
from embed3.utils import id_key, same_cycle, reverse_cycle, cyclic_canonical

logger = logging.getLogger(__name__)

SparsityReport = namedtuple('SparsityReport', ['sparse', 'violations'])
EvenReport = namedtuple('EvenReport', ['even', 'witness'])
JunkifyStep = namedtuple('JunkifyStep', ['face', 'copy', 'vertex', 'far_end'])
JunkifyResult = namedtuple('JunkifyResult', ['complex', 'framework', 'graph', 'ledger'])


class RotationFramework:
    """
    Plane embeddings of all link graphs of a complex.

    :param DirectedComplex c: Host complex.
    :param dict embeddings: Mapping from vertex to the :class:`PlaneEmbedding` of its
        link graph. Face names of the embeddings are vertices of the dual graph.
    """

    def __init__(self, c, embeddings):
        self.complex = c
        self.embeddings = {v: embeddings[v] for v in c.vertices}

    def embedding(self, v):
        self.complex.check_vertex(v)
        return self.embeddings[v]

    def rotator(self, v, e):
        """The cyclic order of faces around edge ``e`` as seen in the link of ``v``."""
        return self.embeddings[v].edge_rotator(e)

    def orientation(self, v):
        return self.embeddings[v].orientation

    def __repr__(self):
        return f'<RotationFramework on {self.complex!r}>'


def _edge_colour(s, e):
    edge = s.complex.edges[e]
    r1 = s.rotator(edge.tail, e)
    r2 = s.rotator(edge.head, e)
    if len(r1) <= 2:
        return Colour.DegenerateGreen
    if same_cycle(r1, reverse_cycle(r2)):
        return Colour.Green
    if same_cycle(r1, r2):
        return Colour.Red
    raise CompatibilityViolationError('Incompatible rotators',
                                      f'The rotators at edge {e!r} neither agree nor are '
                                      f'reverse.', edge=e)


def colour_edges(s):
    """
    Colours every edge of the host complex. Edges whose rotators have length at most
    two are marked degenerate-green.

    :returns: Mapping from edge id to :class:`Colour`.
    :raises CompatibilityViolationError: if two rotators are neither reverse nor equal.
    """
    colours = {e: _edge_colour(s, e) for e in s.complex.edges}
    degenerate = [e for e, col in colours.items() if col is Colour.DegenerateGreen]
    if degenerate:
        logger.warning('Edges %s have face-degree at most two and are coloured '
                       'degenerate-green', degenerate)
    return colours


def flip(s, v):
    """Reverses all rotators of the embedding at ``v``."""
    s.complex.check_vertex(v)
    embeddings = dict(s.embeddings)
    embeddings[v] = embeddings[v].reflected()
    return RotationFramework(s.complex, embeddings)


def _face_labelled(c, g, bijection):
    if bijection is None:
        if set(g.edges) != set(c.faces):
            raise PrescribedDualFailureError('Dual graph mismatch',
                                             'The edges of the dual graph are not the '
                                             'faces of the complex.')
        return g
    if set(bijection) != set(c.faces) or set(bijection.values()) != set(g.edges):
        raise PrescribedDualFailureError('Dual graph mismatch',
                                         'The bijection does not match faces to edges.')
    return g.relabel_edges({ge: f for f, ge in bijection.items()})


def construct_rotation_framework(c, g, bijection=None, allow_two_vertex=False,
                                 limit=MAX_CIRCUIT_SUBSETS):
    """
    Builds the rotation framework induced by the dual graph ``g``: at every vertex
    ``v`` the link graph is embedded so that its faces are the vertex stars of
    ``g_v``.

    :param DirectedComplex c: Locally 2-connected complex.
    :param Graph g: Dual graph with one edge per face.
    :param dict bijection: Face to edge of ``g``. Defaults to the identity.
    :param bool allow_two_vertex: Accept link graphs on two vertices.
    :param int limit: Budget for matroid comparisons.
    :rtype: RotationFramework
    :raises FacesAtEdgeNotCycleError: if the faces at an edge do not form a cycle of
        ``g``.
    :raises PrescribedDualFailureError: if some link graph has no embedding with the
        prescribed dual.
    :raises CompatibilityViolationError: if the resulting rotators are incompatible.
    """
    gf = _face_labelled(c, g, bijection)

    for e in c.edges:
        if not is_cycle_edge_set(gf, list(c.faces_at_edge(e))):
            raise FacesAtEdgeNotCycleError('Faces at edge not a cycle',
                                           f'The faces at edge {e!r} do not form a cycle '
                                           f'of the dual graph.', edge=e)

    embeddings = {}
    for v in c.vertices:
        link = link_graph(c, v)
        gv = g_v(gf, c, v)
        try:
            embeddings[v] = embedding_with_prescribed_dual(
                link, gv, allow_two_vertex=allow_two_vertex, limit=limit)
        except PlanarError as exc:
            raise PrescribedDualFailureError('Prescribed dual failed',
                                             f'At vertex {v!r}: {exc}', vertex=v) from exc
        logger.debug('Embedded link of %r with faces %s', v,
                     list(embeddings[v].face_names))

    s = RotationFramework(c, embeddings)
    for e in c.edges:
        _edge_colour(s, e)

    logger.info('Constructed rotation framework on %s vertices', len(c.vertices))
    return s


def chamber_boundaries(c, g, bijection=None):
    """
    Returns, for every vertex of the dual graph, the faces whose dual edge is incident
    with it.
    """
    gf = _face_labelled(c, g, bijection)
    return {b: tuple(gf.incident_edges(b)) for b in gf.vertices}


def sparsity_check(c, g, bijection=None):
    """
    Checks that for every dual vertex ``b`` and every edge ``e`` of ``c`` either zero
    or exactly two faces at ``e`` have their dual edge incident with ``b``.

    :returns: Verdict and the list of violations ``(b, e, count)``.
    :rtype: SparsityReport
    """
    gf = _face_labelled(c, g, bijection)
    violations = []
    for b in gf.vertices:
        at_b = set(gf.incident_edges(b))
        for e in c.edges:
            count = sum(1 for f in c.faces_at_edge(e) if f in at_b)
            if count not in (0, 2):
                violations.append((b, e, count))
    if violations:
        logger.info('Pair is not sparse: %s violations', len(violations))
    return SparsityReport(not violations, violations)


def _check_degrees(s, f):
    c = s.complex
    edges = c.face_edges(f)
    low = [e for e in edges if face_degree(c, e) < 3]
    if low:
        raise DegenerateDegreesError('Face-degree below three',
                                     f'Edges {low} of face {f!r} have fewer than three '
                                     f'faces.', face=f)
    return edges


def normalize_face(s, f, colours=None):
    """
    Finds at most two vertices of ``f`` whose flips make its first two edges green and
    returns them together with the resulting colour of the third edge.
    """
    c = s.complex
    edges = _check_degrees(s, f)
    colours = colours or colour_edges(s)
    verts = c.faces[f].vertices

    for k in range(3):
        for flipped in itertools.combinations(verts, k):
            after = []
            for e in edges:
                edge = c.edges[e]
                toggles = (edge.tail in flipped) != (edge.head in flipped)
                red = (colours[e] is Colour.Red) != toggles
                after.append(Colour.Red if red else Colour.Green)
            if after[0] is Colour.Green and after[1] is Colour.Green:
                return flipped, after[2]
    return None


def face_parity_check(s, f, colours=None):
    """
    Parity of the number of red edges on the boundary of face ``f``.

    :raises DegenerateDegreesError: if an edge of ``f`` has face-degree below three.
    """
    edges = _check_degrees(s, f)
    colours = colours or colour_edges(s)
    reds = sum(1 for e in edges if colours[e] is Colour.Red)
    parity = Parity.Even if reds % 2 == 0 else Parity.Odd
    if parity is Parity.Odd:
        logger.debug('Face %r is odd, normal form %s', f, normalize_face(s, f, colours))
    return parity


# ==== junkify ===========================================================================

def _fresh_vertex(g):
    m = g.number_of_vertices()
    while g.has_vertex(m):
        m += 1
    return m


def _fresh_copy_id(c, x):
    n = 1
    while f"{x}'{n}" in c.faces:
        n += 1
    return f"{x}'{n}"


def _insert_copy(pe, link, x, xp, a, b, m):
    """
    Inserts the link edge ``xp`` parallel to ``x`` so that both bound a new face ``m``
    and ``xp`` takes the place of ``x`` on the face named ``b``.
    """
    rot = {v: list(pe.rotation.rotators[v]) for v in pe.graph.vertices}
    rot.update({v: [] for v in link.vertices if v not in rot})
    d_u, d_w = (x, 0), (x, 1)
    u, w = pe.graph.ends(x)
    xp_u, xp_w = (xp, 0), (xp, 1)

    side = pe.face_of_dart(d_u)
    if side not in (a, b):
        raise HypothesisFailureError('Framework not induced',
                                     f'Link edge {x!r} lies on face {side!r} which is '
                                     f'not an end of its dual edge.', face=x)

    i, j = rot[u].index(d_u), rot[w].index(d_w)
    if side == b:
        rot[u].insert(i, xp_u)
        rot[w].insert(j + 1, xp_w)
    else:
        rot[u].insert(i + 1, xp_u)
        rot[w].insert(j, xp_w)

    traced = trace_faces(link, RotationSystem(link, rot))
    names = []
    for face in traced.faces:
        edges = sorted({e for e, _ in face}, key=id_key)
        if len(face) == 2 and set(edges) == {x, xp}:
            names.append(m)
        else:
            names.append(pe.face_of_dart(next(d for d in face if d[0] != xp)))

    if traced.genus != 0:
        raise HypothesisFailureError('Insertion not planar',
                                     f'Inserting {xp!r} produced genus {traced.genus}.')
    return PlaneEmbedding(link, traced.rotation, traced.faces, names, 0, pe.orientation)


def subdivide(g, x, xp, m, far_end):
    """
    Subdivides the edge ``x`` of ``g`` by the new vertex ``m`` into ``x`` and ``xp``
    where ``xp`` joins ``m`` to ``far_end``.
    """
    u, w = g.ends(x)
    near = w if far_end == u else u
    triples = [(e, near, m) if e == x else (e, u2, w2) for e, u2, w2 in g.triples()]
    triples.append((xp, m, far_end))
    return Graph(list(g.vertices) + [m], triples)


def replay_ledger(g, ledger):
    """Applies the subdivisions recorded by :func:`junkify` to ``g``."""
    for step in ledger:
        g = subdivide(g, step.face, step.copy, step.vertex, step.far_end)
    return g


def is_subdivision(g_prime, g, ledger):
    """
    Checks that ``g_prime`` arises from ``g`` by the ledger's subdivisions and that
    every subdivision vertex has degree two.
    """
    if not replay_ledger(g, ledger).same_as(g_prime):
        return False
    return all(g_prime.degree(step.vertex) == 2 for step in ledger)


def junkify(c, g, s, bijection=None):
    """
    Adds parallel faces until every edge has face-degree at least three.

    While some edge has face-degree two, a face ``x`` at it receives a parallel copy
    ``x'``. The dual edge ``x = ab`` is subdivided by a new vertex ``m`` into ``x = am``
    and ``x' = mb``, and in the links of the three vertices of ``x`` the new link edge
    is inserted next to ``x`` so that ``x`` and ``x'`` bound the face ``m``.

    :param DirectedComplex c: Locally 2-connected complex.
    :param Graph g: Dual graph.
    :param RotationFramework s: Framework induced by ``g``.
    :param dict bijection: Face to edge of ``g``. Defaults to the identity.
    :returns: Extended complex, framework and dual graph, the latter labelled by face
        ids, and the ledger of added faces.
    :rtype: JunkifyResult
    :raises HypothesisFailureError: if an edge has face-degree below two or the
        framework is not induced by ``g``.
    """
    g = _face_labelled(c, g, bijection)
    embeddings = dict(s.embeddings)
    ledger = []

    while True:
        low = [e for e in c.edges if face_degree(c, e) < 3]
        if not low:
            break
        e = low[0]
        if face_degree(c, e) < 2:
            raise HypothesisFailureError('Face-degree below two',
                                         f'Edge {e!r} has a single face.', edge=e)

        x = min(c.faces_at_edge(e), key=id_key)
        a, b = g.ends(x)
        if a == b:
            raise HypothesisFailureError('Dual loop', f'Face {x!r} is a loop of the dual '
                                         f'graph.', face=x)
        xp = _fresh_copy_id(c, x)
        m = _fresh_vertex(g)

        c = c.with_parallel_face(x, xp)
        g = subdivide(g, x, xp, m, b)
        for v in c.faces[x].vertices:
            embeddings[v] = _insert_copy(embeddings[v], link_graph(c, v), x, xp, a, b, m)

        ledger.append(JunkifyStep(x, xp, m, b))
        logger.debug('Added face %r parallel to %r at edge %r', xp, x, e)

    s_prime = RotationFramework(c, embeddings)
    for e in c.edges:
        _edge_colour(s_prime, e)

    logger.info('Added %s parallel faces', len(ledger))
    return JunkifyResult(c, s_prime, g, tuple(ledger))


def restrict_framework(s_prime, c):
    """
    Deletes from every link embedding of ``s_prime`` the link edges of faces not in
    ``c`` and returns the resulting rotators as canonical edge sequences.
    """
    keep = set(c.faces)
    out = {}
    for v, pe in s_prime.embeddings.items():
        out[v] = {lv: cyclic_canonical([f for f in pe.edge_rotator(lv) if f in keep])
                  for lv in pe.graph.vertices}
    return out


def induces_check(s_prime, s):
    """
    Checks that deleting the added link edges from every embedding of ``s_prime``
    yields exactly the embeddings of ``s``.

    :raises HostMismatchError: if the host of ``s_prime`` does not extend the host of
        ``s`` by parallel faces.
    """
    big, small = s_prime.complex, s.complex
    if big.vertices != small.vertices or big.edges != small.edges \
            or not set(small.faces) <= set(big.faces):
        raise HostMismatchError('Host mismatch',
                                'The larger framework does not extend the smaller one.')
    for f in set(big.faces) - set(small.faces):
        if not any(set(big.faces[f].vertices) == set(face.vertices)
                   for face in small.faces.values()):
            raise HostMismatchError('Host mismatch',
                                    f'Face {f!r} is not parallel to an existing face.',
                                    face=f)

    restricted = restrict_framework(s_prime, small)
    for v in small.vertices:
        if restricted[v] != s.embeddings[v].rotation.canonical():
            logger.debug('Rotators at %r are not induced', v)
            return False
    return True


# ==== evenness ==========================================================================

def _skeleton(c):
    g = one_skeleton(c).simple()
    return g


def _red_count(c, colours, cycle):
    edges = [c.edge_between(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    return edges, sum(1 for e in edges if colours[e] is Colour.Red)


def is_even(s, colours=None):
    """
    Checks that every cycle of the 1-skeleton has an even number of red edges. The
    red count modulo two is additive over the cycle space, so fundamental cycles of a
    spanning forest suffice.

    :returns: Verdict and the edges of an odd fundamental cycle, if any.
    :rtype: EvenReport
    """
    c = s.complex
    colours = colours or colour_edges(s)
    for cycle in nx.cycle_basis(_skeleton(c)):
        edges, reds = _red_count(c, colours, cycle)
        if reds % 2:
            logger.info('Odd cycle %s', edges)
            return EvenReport(False, tuple(edges))
    return EvenReport(True, None)


def is_even_exhaustive(s, colours=None):
    """Like :func:`is_even` but enumerates every cycle of the 1-skeleton."""
    c = s.complex
    colours = colours or colour_edges(s)
    for cycle in nx.simple_cycles(_skeleton(c)):
        edges, reds = _red_count(c, colours, cycle)
        if reds % 2:
            return EvenReport(False, tuple(edges))
    return EvenReport(True, None)


# ==== serialization =====================================================================

def framework_to_list(s):
    """
    Plain representation of a framework: per vertex the orientation flag, the rotator
    at every link vertex as a cyclic list of face ids, and the named faces as dart
    lists.
    """
    out = []
    for v in s.complex.vertices:
        pe = s.embeddings[v]
        rotators = [[lv, list(cyclic_canonical(pe.edge_rotator(lv)))]
                    for lv in pe.graph.vertices]
        faces = sorted(([name, [list(d) for d in face]]
                        for face, name in zip(pe.faces, pe.face_names)),
                       key=lambda item: id_key(item[0]))
        out.append([v, {'orientation': pe.orientation, 'rotators': rotators,
                        'faces': faces}])
    return out


def framework_from_list(c, data):
    """
    Rebuilds a framework on ``c`` from :func:`framework_to_list` output.

    :raises CertificateError: if the data does not describe plane embeddings of the
        link graphs of ``c``.
    """
    embeddings = {}
    try:
        for v, item in data:
            link = link_graph(c, v)
            rotation = RotationSystem.from_edge_rotators(
                link, {lv: faces for lv, faces in item['rotators']})
            traced = trace_faces(link, rotation)
            name_of = {(f, side): name for name, darts in item['faces']
                       for f, side in darts}
            names = [name_of[face[0]] for face in traced.faces]
            pe = PlaneEmbedding(link, rotation, traced.faces, names, traced.genus,
                                item['orientation'])
            if any(pe.face_of_dart(d) != name_of[d] for d in name_of):
                raise CertificateError('Invalid framework',
                                       f'Named faces at {v!r} do not match the rotators.',
                                       vertex=v)
            embeddings[v] = pe
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError('Invalid framework', f'Cannot rebuild rotators: {exc!r}.')

    if set(embeddings) != set(c.vertices):
        raise CertificateError('Invalid framework', 'Not every vertex has rotators.')
    return RotationFramework(c, embeddings)
