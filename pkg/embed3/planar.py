# -*- coding: utf-8 -*-
"""
Rotation systems and plane embeddings of link graphs.

An edge ``e`` with ends ``(u, v)`` has two darts: ``(e, 0)`` leaves ``u`` and
``(e, 1)`` leaves ``v``. A rotation system fixes a cyclic order of the darts at every
vertex. Faces are traced by following a dart to its head and continuing with the
successor of the opposite dart in the rotator there.

"""
import logging
from collections import deque

from embed3.errors import (
    NotTwoConnectedError, FaceSetNotCycleError, NotPlanarAssemblyError, NotPlanarError,
    NotIncidentError, UnknownVertexError,
)
from embed3.constants import MatroidMode, MAX_CIRCUIT_SUBSETS
from embed3.graph import Graph
from embed3.locality import is_link_2connected
from embed3.matroid import GraphMatroid, matroids_equal
from embed3.utils import id_key, cyclic_canonical

logger = logging.getLogger(__name__)


def opposite(dart):
    e, side = dart
    return e, 1 - side


def darts_at(g, v):
    out = []
    for e in g.incident_edges(v):
        u, w = g.ends(e)
        if u == v:
            out.append((e, 0))
        if w == v:
            out.append((e, 1))
    return out


class RotationSystem:
    """
    A cyclic order of the darts at every vertex of a graph.

    :param Graph graph: Underlying graph.
    :param dict rotators: Mapping from vertex to a sequence of darts.
    :raises ValueError: if a rotator is not a permutation of the darts at its vertex.
    """

    def __init__(self, graph, rotators):
        self.graph = graph
        self.rotators = {v: tuple(rotators.get(v, ())) for v in graph.vertices}
        self._succ = {}
        self._pred = {}
        for v, rot in self.rotators.items():
            if sorted(rot, key=lambda d: (id_key(d[0]), d[1])) != \
                    sorted(darts_at(graph, v), key=lambda d: (id_key(d[0]), d[1])):
                raise ValueError(f'Rotator at {v!r} does not list the darts at {v!r}')
            for i, d in enumerate(rot):
                self._succ[d] = rot[(i + 1) % len(rot)]
                self._pred[d] = rot[i - 1]

    @classmethod
    def from_edge_rotators(cls, graph, edge_rotators):
        """
        Builds a rotation system of a loopless graph from cyclic orders of edges.
        """
        rotators = {}
        for v, edges in edge_rotators.items():
            rotators[v] = [(e, 0 if graph.ends(e)[0] == v else 1) for e in edges]
        return cls(graph, rotators)

    def successor(self, dart):
        return self._succ[dart]

    def predecessor(self, dart):
        return self._pred[dart]

    def edge_rotator(self, v):
        """The rotator at ``v`` as a cyclic sequence of edge ids."""
        return tuple(e for e, _ in self.rotators[v])

    def reflected(self):
        return RotationSystem(self.graph, {v: tuple(reversed(rot))
                                           for v, rot in self.rotators.items()})

    def canonical(self):
        """Rotators as edge sequences, each rotated to start at its smallest edge."""
        return {v: cyclic_canonical(self.edge_rotator(v)) for v in self.graph.vertices}


class PlaneEmbedding:
    """
    A graph with a rotation system and its traced faces.

    :ivar Graph graph: Embedded graph.
    :ivar RotationSystem rotation: Rotation system.
    :ivar tuple faces: Traced faces as tuples of darts.
    :ivar tuple face_names: Name of each face, aligned with ``faces``.
    :ivar int genus: Genus derived from the Euler relation.
    :ivar int orientation: +1 or -1, toggled by :meth:`reflected`.
    """

    def __init__(self, graph, rotation, faces, face_names, genus, orientation=1):
        self.graph = graph
        self.rotation = rotation
        self.faces = tuple(tuple(f) for f in faces)
        self.face_names = tuple(face_names)
        self.genus = genus
        self.orientation = orientation
        self._face_of_dart = {d: name for f, name in zip(self.faces, self.face_names)
                              for d in f}

    def face_of_dart(self, dart):
        return self._face_of_dart[dart]

    def face_edges(self, name):
        f = self.faces[self.face_names.index(name)]
        return tuple(e for e, _ in f)

    def edge_rotator(self, v):
        return self.rotation.edge_rotator(v)

    def renamed(self, names):
        return PlaneEmbedding(self.graph, self.rotation, self.faces, names, self.genus,
                              self.orientation)

    def reflected(self):
        """
        Reverses every rotator. The face containing a dart ``d`` in the reflection is
        the reverse of the face containing the opposite of ``d``, and keeps its name.
        """
        rotation = self.rotation.reflected()
        pe = trace_faces(self.graph, rotation)
        names = [self.face_of_dart(opposite(f[0])) for f in pe.faces]
        return PlaneEmbedding(self.graph, rotation, pe.faces, names, pe.genus,
                              -self.orientation)

    def __repr__(self):
        return f'<PlaneEmbedding faces={len(self.faces)} genus={self.genus} ' \
               f'orientation={self.orientation:+d}>'


def trace_faces(g, r):
    """
    Traces the faces of the rotation system ``r`` of ``g``. Faces are named
    ``0, 1, ...`` in order of their smallest starting dart.

    :param Graph g: Graph.
    :param RotationSystem r: Rotation system of ``g``.
    :rtype: PlaneEmbedding
    """
    all_darts = sorted((d for v in g.vertices for d in r.rotators[v]),
                       key=lambda d: (id_key(d[0]), d[1]))
    seen = set()
    faces = []

    for start in all_darts:
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = r.successor(opposite(d))
        faces.append(face)

    isolated = sum(1 for v in g.vertices if g.degree(v) == 0)
    n_faces = len(faces) + isolated
    euler = 2 * g.number_of_components() - g.number_of_vertices() + g.number_of_edges() \
        - n_faces
    genus = euler // 2

    return PlaneEmbedding(g, r, faces, range(len(faces)), genus)


def is_cycle_edge_set(g, edges):
    """Checks if ``edges`` form a cycle of ``g``. A single loop is a cycle."""
    if not edges:
        return False
    if len(edges) == 1:
        return g.is_loop(edges[0])
    degree = {}
    for e in edges:
        u, v = g.ends(e)
        if u == v:
            return False
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    return g.edge_subgraph(edges).number_of_components() == 1


def _walk_cycle(g, edges, start):
    """Orients the cycle ``edges`` of ``g`` as a dart sequence beginning with ``start``."""
    remaining = set(edges)
    walk = [start]
    remaining.discard(start[0])
    d = start
    while remaining:
        y = g.ends(d[0])[1 - d[1]]
        e = next(e for e in edges if e in remaining and y in g.ends(e))
        remaining.discard(e)
        d = (e, 0 if g.ends(e)[0] == y else 1)
        walk.append(d)
    return walk


def embedding_with_prescribed_dual(link, gv, bijection=None, allow_two_vertex=False,
                                   check_matroid=True, limit=MAX_CIRCUIT_SUBSETS):
    """
    Builds the plane embedding of ``link`` whose faces are the vertex stars of ``gv``.

    For every vertex ``b`` of ``gv`` the link edges matched to edges at ``b`` must form
    a cycle. These cycles are oriented so that adjacent faces traverse their common
    edge in opposite directions, starting from the smallest face, and the rotators are
    read off from consecutive darts. The traced faces are named by the vertices of
    ``gv``.

    :param Graph link: A 2-connected link graph.
    :param Graph gv: Prescribed dual graph.
    :param dict bijection: Link edge to ``gv`` edge. Defaults to the identity.
    :param bool allow_two_vertex: Accept links on two vertices.
    :param bool check_matroid: Also check that the cycle matroid of ``gv`` equals the
        bond matroid of ``link``.
    :rtype: PlaneEmbedding
    :raises NotTwoConnectedError: if ``link`` is not 2-connected.
    :raises FaceSetNotCycleError: if some vertex star is not a cycle.
    :raises NotPlanarAssemblyError: if the cycles do not glue to a sphere.
    """
    if not is_link_2connected(link, allow_two_vertex):
        raise NotTwoConnectedError('Link not 2-connected',
                                   'Prescribed duals need a 2-connected link graph.')

    to_link = {(bijection[e] if bijection else e): e for e in link.edges}
    if set(to_link) != set(gv.edges):
        raise NotPlanarAssemblyError('Dual mismatch',
                                     'The prescribed dual has a different edge set.')

    names = sorted(gv.vertices, key=id_key)
    stars = {}
    for b in names:
        if any(gv.is_loop(e) for e in gv.incident_edges(b)):
            raise FaceSetNotCycleError('Face set is not a cycle',
                                       f'Dual vertex {b!r} carries a loop.', vertex=b)
        s = [to_link[e] for e in gv.incident_edges(b)]
        if not is_cycle_edge_set(link, s):
            raise FaceSetNotCycleError('Face set is not a cycle',
                                       f'The edges at dual vertex {b!r} do not form a '
                                       f'cycle of the link graph.', vertex=b)
        stars[b] = sorted(s, key=id_key)

    if check_matroid:
        relabeled = gv.relabel_edges(to_link)
        if not matroids_equal(GraphMatroid(relabeled),
                              GraphMatroid(link, MatroidMode.Bond), limit):
            raise NotPlanarAssemblyError('Dual mismatch',
                                         'The prescribed dual does not have the bond '
                                         'matroid of the link as cycle matroid.')

    faces_at_edge = {e: [] for e in link.edges}
    for b, s in stars.items():
        for e in s:
            faces_at_edge[e].append(b)

    # orient faces breadth-first so that shared edges are used in opposite directions
    orientation = {}
    name_of_dart = {}
    for root in names:
        if root in orientation:
            continue
        orientation[root] = _walk_cycle(link, stars[root], (stars[root][0], 0))
        queue = deque([root])
        while queue:
            b = queue.popleft()
            for d in orientation[b]:
                name_of_dart.setdefault(d, b)
                if name_of_dart[d] != b:
                    raise NotPlanarAssemblyError('Inconsistent orientation',
                                                 f'Dart {d!r} is used by two faces.')
                for b2 in faces_at_edge[d[0]]:
                    if b2 == b:
                        continue
                    if b2 not in orientation:
                        orientation[b2] = _walk_cycle(link, stars[b2], opposite(d))
                        queue.append(b2)
                    elif opposite(d) not in orientation[b2]:
                        raise NotPlanarAssemblyError('Non-orientable assembly',
                                                     f'Faces {b!r} and {b2!r} cannot '
                                                     f'be oriented compatibly.')

    succ = {}
    for b, walk in orientation.items():
        for i, d in enumerate(walk):
            nxt = walk[(i + 1) % len(walk)]
            key = opposite(d)
            if key in succ:
                raise NotPlanarAssemblyError('Inconsistent rotation',
                                             f'Dart {key!r} has two successors.')
            succ[key] = nxt

    rotators = {}
    for v in link.vertices:
        darts = sorted(darts_at(link, v), key=lambda d: (id_key(d[0]), d[1]))
        if any(d not in succ for d in darts):
            raise NotPlanarAssemblyError('Incomplete rotation',
                                         f'Not every edge at {v!r} lies on two faces.')
        rot = [darts[0]]
        while True:
            nxt = succ[rot[-1]]
            if nxt == rot[0]:
                break
            rot.append(nxt)
        if len(rot) != len(darts):
            raise NotPlanarAssemblyError('Not a disk',
                                         f'The faces around {v!r} do not close up to a '
                                         f'single disk.', vertex=v)
        rotators[v] = rot

    pe = trace_faces(link, RotationSystem(link, rotators))
    if pe.genus != 0:
        raise NotPlanarAssemblyError('Not planar',
                                     f'The assembled surface has genus {pe.genus}.')

    traced_names = []
    for f in pe.faces:
        names_here = {name_of_dart[d] for d in f}
        if len(names_here) != 1:
            raise NotPlanarAssemblyError('Face mismatch',
                                         'A traced face does not match a prescribed one.')
        traced_names.append(names_here.pop())
    if sorted(traced_names, key=id_key) != names:
        raise NotPlanarAssemblyError('Face mismatch',
                                     'Traced faces differ from the prescribed ones.')

    logger.debug('Assembled embedding of link %r with %s faces',
                 getattr(link, 'host', None), len(pe.faces))
    return pe.renamed(traced_names)


def dual_graph_of_embedding(pe):
    """
    Returns the dual graph of a genus 0 embedding: one vertex per face name and one
    edge per primal edge, joining the faces on its two sides. Dual edges keep the
    primal edge ids, so the returned bijection is the identity.

    :raises NotPlanarError: if the embedding has positive genus.
    """
    if pe.genus != 0:
        raise NotPlanarError('Not planar',
                             f'The embedding has genus {pe.genus}, no plane dual exists.')
    triples = [(e, pe.face_of_dart((e, 0)), pe.face_of_dart((e, 1)))
               for e in pe.graph.edges]
    return Graph(pe.face_names, triples), {e: e for e in pe.graph.edges}


def rotator_neighbors(pe, v, e):
    """
    Returns the edges just before and just after ``e`` in the rotator at ``v``.
    Rotators of length two return the other edge twice.

    :raises NotIncidentError: if ``e`` is not incident with ``v``.
    """
    if not pe.graph.has_vertex(v):
        raise UnknownVertexError('Unknown vertex', f'No vertex {v!r} in the embedding.',
                                 vertex=v)
    rot = pe.edge_rotator(v)
    if e not in rot:
        raise NotIncidentError('Not incident', f'{e!r} is not incident with {v!r}.',
                               vertex=v, edge=e)
    if len(rot) <= 2:
        logger.warning('Rotator at %r has length %s, neighbours are degenerate',
                       v, len(rot))
    i = rot.index(e)
    return rot[i - 1], rot[(i + 1) % len(rot)]
