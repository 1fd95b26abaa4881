# -*- coding: utf-8 -*-
"""
Directed 2-dimensional complexes.

A :class:`DirectedComplex` has vertices, directed edges and oriented triangular faces.
Faces store a cyclic vertex triple and may come in parallel copies with identical
vertex sets. This module provides validation of raw descriptions, link graphs,
edge/face incidence matrices and the simple-connectivity surrogates consumed by the
decision pipeline.

"""
import json
import logging
from collections import deque, namedtuple

from embed3.algebra import ExactMatrix, GF2, rank
from embed3.constants import GroupStatus, TIETZE_BUDGET, MAX_RELATOR_LENGTH
from embed3.errors import (
    ComplexError, MissingFaceError, DegenerateFaceError, DegenerateEdgeError,
    DanglingReferenceError, DuplicateIdError, UnknownVertexError, UnknownEdgeError,
    DisconnectedError, InputError, os_to_embed3_error,
)
from embed3.graph import Graph
from embed3.utils import id_key, sorted_ids, is_valid_id, same_cycle

logger = logging.getLogger(__name__)

Edge = namedtuple('Edge', ['id', 'tail', 'head'])
Face = namedtuple('Face', ['id', 'vertices', 'copy'])

GroupReport = namedtuple('GroupReport', [
    'generators', 'relators', 'reduced_generators', 'reduced_relators', 'status',
    'refuted_by_homology', 'steps',
])


def copy_id(face_id, n):
    """Id of the ``n``-th parallel copy of a face."""
    return f"{face_id}'{n}"


class DirectedComplex:
    """
    A validated directed 2-complex. Instances are immutable; use :func:`validate` or
    :meth:`from_parts` to create them.

    :ivar tuple vertices: Vertex ids, sorted.
    :ivar dict edges: Mapping of edge id to :class:`Edge`, sorted by id.
    :ivar dict faces: Mapping of face id to :class:`Face`, sorted by id.
    """

    def __init__(self, vertices, edges, faces):
        # expects validated input, see validate()
        self.vertices = tuple(sorted_ids(vertices))
        self.edges = {e.id: e for e in sorted(edges, key=lambda e: id_key(e.id))}
        self.faces = {f.id: f for f in sorted(faces, key=lambda f: id_key(f.id))}

        self._edge_by_pair = {frozenset((e.tail, e.head)): e.id for e in self.edges.values()}

        self._face_edges = {}
        self._faces_at_edge = {e: [] for e in self.edges}
        for f in self.faces.values():
            a, b, c = f.vertices
            fe = tuple(self._edge_by_pair[frozenset(p)] for p in ((a, b), (b, c), (c, a)))
            self._face_edges[f.id] = fe
            for e in fe:
                self._faces_at_edge[e].append(f.id)

        self._edges_at_vertex = {v: [] for v in self.vertices}
        for e in self.edges.values():
            self._edges_at_vertex[e.tail].append(e.id)
            self._edges_at_vertex[e.head].append(e.id)

        self._faces_at_vertex = {v: [] for v in self.vertices}
        for f in self.faces.values():
            for v in f.vertices:
                self._faces_at_vertex[v].append(f.id)

    @classmethod
    def from_parts(cls, vertices, edges, faces):
        """
        Validates and builds a complex from ``(id, u, v)`` edge triples and
        ``(id, a, b, c)`` face quadruples.
        """
        return validate({
            'vertices': list(vertices),
            'edges': [list(e) for e in edges],
            'faces': [list(f) for f in faces],
        })

    # ---- lookups -------------------------------------------------------------------

    def check_vertex(self, v):
        if v not in self._edges_at_vertex:
            raise UnknownVertexError('Unknown vertex',
                                     f'The complex has no vertex {v!r}.', vertex=v)

    def check_edge(self, e):
        if e not in self.edges:
            raise UnknownEdgeError('Unknown edge', f'The complex has no edge {e!r}.',
                                   edge=e)

    def edge_between(self, u, v):
        try:
            return self._edge_by_pair[frozenset((u, v))]
        except KeyError:
            raise UnknownEdgeError('Unknown edge',
                                   f'The complex has no edge between {u!r} and {v!r}.'
                                   ) from None

    def face_edges(self, f):
        """The three edges of ``f`` in the order ab, bc, ca of its vertex triple."""
        return self._face_edges[f]

    def faces_at_edge(self, e):
        self.check_edge(e)
        return tuple(self._faces_at_edge[e])

    def edges_at_vertex(self, v):
        self.check_vertex(v)
        return tuple(self._edges_at_vertex[v])

    def faces_at_vertex(self, v):
        self.check_vertex(v)
        return tuple(self._faces_at_vertex[v])

    def sign(self, e, f):
        """
        Incidence sign of edge ``e`` in face ``f``: +1 if the direction of ``e``
        appears in the cyclic vertex order of ``f``, -1 if the reverse appears and 0 if
        ``e`` is not an edge of ``f``.
        """
        edge = self.edges[e]
        a, b, c = self.faces[f].vertices
        pairs = ((a, b), (b, c), (c, a))
        if (edge.tail, edge.head) in pairs:
            return 1
        if (edge.head, edge.tail) in pairs:
            return -1
        return 0

    def parallel_class(self, f):
        """All faces with the same vertex set as ``f``, including ``f``."""
        vs = set(self.faces[f].vertices)
        return tuple(g for g, face in self.faces.items() if set(face.vertices) == vs)

    # ---- derived complexes ---------------------------------------------------------

    def redirected(self, edges=None):
        """Returns a copy with the directions of ``edges`` (default: all) reversed."""
        flip = set(self.edges if edges is None else edges)
        new = [Edge(e.id, e.head, e.tail) if e.id in flip else e
               for e in self.edges.values()]
        return DirectedComplex(self.vertices, new, self.faces.values())

    def reoriented(self, faces=None):
        """Returns a copy with the orientations of ``faces`` (default: all) reversed."""
        flip = set(self.faces if faces is None else faces)
        new = []
        for f in self.faces.values():
            if f.id in flip:
                a, b, c = f.vertices
                f = Face(f.id, (a, c, b), f.copy)
            new.append(f)
        return DirectedComplex(self.vertices, self.edges.values(), new)

    def with_parallel_face(self, f, new_id):
        """Returns a copy with one more parallel copy of face ``f`` named ``new_id``."""
        if new_id in self.faces:
            raise DuplicateIdError('Duplicate face id', f'Face {new_id!r} exists.',
                                   face=new_id)
        face = self.faces[f]
        copy = len(self.parallel_class(f))
        new = list(self.faces.values()) + [Face(new_id, face.vertices, copy)]
        return DirectedComplex(self.vertices, self.edges.values(), new)

    # ---- serialization -------------------------------------------------------------

    def to_dict(self):
        """Returns the complex in the JSON file layout, one entry per face copy."""
        return {
            'vertices': list(self.vertices),
            'edges': [[e.id, e.tail, e.head] for e in self.edges.values()],
            'faces': [[f.id, *f.vertices] for f in self.faces.values()],
        }

    def same_as(self, other):
        """Equality of vertices, directed edges and oriented faces (up to rotation)."""
        if self.vertices != other.vertices or self.edges != other.edges:
            return False
        if set(self.faces) != set(other.faces):
            return False
        return all(same_cycle(f.vertices, other.faces[f.id].vertices)
                   for f in self.faces.values())

    def __repr__(self):
        return f'<DirectedComplex |V|={len(self.vertices)} |E|={len(self.edges)} ' \
               f'|F|={len(self.faces)}>'


class LinkGraph(Graph):
    """
    The link graph of a complex at a host vertex: its vertices are the edges of the
    complex at the host and its edges are the faces at the host.

    :ivar host: The host vertex.
    """

    def __init__(self, host, vertices=(), edges=()):
        super().__init__(vertices, edges)
        self.host = host

    def delete_edges(self, edges):
        drop = set(edges)
        return LinkGraph(self.host, self.vertices,
                         [t for t in self.triples() if t[0] not in drop])


# ==== validation ========================================================================

def _check_id(x, kind):
    if not is_valid_id(x):
        raise ComplexError('Invalid id', f'{kind} id {x!r} must be a string or integer.')


def validate(raw):
    """
    Validates a raw complex description and returns a :class:`DirectedComplex`.

    The description is a mapping with the keys ``vertices`` (list of ids), ``edges``
    (list of ``[id, u, v]``) and ``faces`` (list of ``[id, a, b, c]`` or
    ``[id, a, b, c, copies]``). A face with ``copies = n > 1`` is expanded into the face
    itself plus copies ``<id>'1`` to ``<id>'<n-1>``. Faces listed with the same vertex
    set are parallel.

    :param dict raw: Raw description.
    :returns: Validated complex.
    :raises ComplexError: for any violation of the data model.
    """

    if not isinstance(raw, dict) or not all(k in raw for k in ('vertices', 'edges', 'faces')):
        raise ComplexError('Malformed complex',
                           'Expected an object with "vertices", "edges" and "faces".')

    vertices = list(raw['vertices'])
    for v in vertices:
        _check_id(v, 'Vertex')
    if len(set(vertices)) != len(vertices):
        dup = next(v for v in vertices if vertices.count(v) > 1)
        raise DuplicateIdError('Duplicate vertex id', f'Vertex {dup!r} is listed twice.',
                               vertex=dup)
    vset = set(vertices)

    edges = []
    pairs = {}
    for item in raw['edges']:
        try:
            e, u, v = item
        except (TypeError, ValueError):
            raise ComplexError('Malformed edge', f'Expected [id, u, v], got {item!r}.')
        _check_id(e, 'Edge')
        if any(x.id == e for x in edges):
            raise DuplicateIdError('Duplicate edge id', f'Edge {e!r} is listed twice.',
                                   edge=e)
        for x in (u, v):
            if x not in vset:
                raise DanglingReferenceError('Dangling reference',
                                             f'Edge {e!r} refers to unknown vertex {x!r}.',
                                             edge=e, vertex=x)
        if u == v:
            raise DegenerateEdgeError('Degenerate edge',
                                      f'Both ends of edge {e!r} are {u!r}.', edge=e)
        key = frozenset((u, v))
        if key in pairs:
            raise DegenerateEdgeError('Repeated edge',
                                      f'Edges {pairs[key]!r} and {e!r} join the same '
                                      f'vertices.', edge=e)
        pairs[key] = e
        edges.append(Edge(e, u, v))

    faces = []
    fids = set()
    copies_of = {}

    def add_face(fid, triple):
        if fid in fids:
            raise DuplicateIdError('Duplicate face id', f'Face {fid!r} is listed twice.',
                                   face=fid)
        fids.add(fid)
        key = frozenset(triple)
        n = copies_of.get(key, 0)
        copies_of[key] = n + 1
        faces.append(Face(fid, triple, n))

    for item in raw['faces']:
        if not isinstance(item, (list, tuple)) or len(item) not in (4, 5):
            raise ComplexError('Malformed face',
                               f'Expected [id, a, b, c] or [id, a, b, c, copies], '
                               f'got {item!r}.')
        f, a, b, c = item[:4]
        copies = item[4] if len(item) == 5 else 1
        _check_id(f, 'Face')
        if not isinstance(copies, int) or isinstance(copies, bool) or copies < 1:
            raise ComplexError('Malformed face', f'Face {f!r} has invalid copies {copies!r}.',
                               face=f)
        for x in (a, b, c):
            if x not in vset:
                raise DanglingReferenceError('Dangling reference',
                                             f'Face {f!r} refers to unknown vertex {x!r}.',
                                             face=f, vertex=x)
        if len({a, b, c}) < 3:
            raise DegenerateFaceError('Degenerate face',
                                      f'Face {f!r} repeats a vertex.', face=f)
        for p in ((a, b), (b, c), (c, a)):
            if frozenset(p) not in pairs:
                raise DanglingReferenceError('Dangling reference',
                                             f'Face {f!r} needs an edge between {p[0]!r} '
                                             f'and {p[1]!r}.', face=f)
        add_face(f, (a, b, c))
        for n in range(1, copies):
            add_face(copy_id(f, n), (a, b, c))

    used = {frozenset(p) for face in faces for p in
            ((face.vertices[0], face.vertices[1]), (face.vertices[1], face.vertices[2]),
             (face.vertices[2], face.vertices[0]))}
    for e in edges:
        if frozenset((e.tail, e.head)) not in used:
            raise MissingFaceError('Edge without face',
                                   f'Edge {e.id!r} is not incident with any face.',
                                   edge=e.id)

    c = DirectedComplex(vertices, edges, faces)
    logger.debug('Validated %r', c)
    return c


def load_complex(path):
    """
    Reads and validates a complex file.

    :param str path: Path to a JSON complex file.
    :raises InputError: if the file is not valid JSON.
    :raises FileError: if the file cannot be read.
    """
    try:
        with open(path, encoding='utf-8') as f:
            raw = json.load(f)
    except json.JSONDecodeError as exc:
        raise InputError('Cannot parse complex file',
                         f'"{path}" is not valid JSON: {exc}.') from exc
    except OSError as exc:
        raise os_to_embed3_error(exc, path) from exc

    return validate(raw)


# ==== queries ===========================================================================

def link_graph(c, v):
    """
    Returns the link graph of ``c`` at ``v``. Each face at ``v`` becomes a link edge
    with the face id joining the two edges of the face that contain ``v``.

    :raises UnknownVertexError: if ``v`` is not a vertex of ``c``.
    """
    c.check_vertex(v)
    link_edges = []
    for f in c.faces_at_vertex(v):
        ends = [e for e in c.face_edges(f) if v in (c.edges[e].tail, c.edges[e].head)]
        link_edges.append((f, ends[0], ends[1]))
    return LinkGraph(v, c.edges_at_vertex(v), link_edges)


def incidence_matrix(c, k):
    """
    Returns the signed edge/face incidence matrix of ``c`` over the field ``k``, with
    rows labelled by edges and columns labelled by faces.
    """
    rows = [[c.sign(e, f) for f in c.faces] for e in c.edges]
    return ExactMatrix(k, rows, tuple(c.edges), tuple(c.faces), ncols=len(c.faces))


def face_degree(c, e):
    """Number of faces at ``e``, counting parallel copies."""
    return len(c.faces_at_edge(e))


def one_skeleton(c):
    return Graph(c.vertices, [(e.id, e.tail, e.head) for e in c.edges.values()])


def h1_f2_trivial(c):
    """
    Checks if the face boundaries span the cycle space of the 1-skeleton over GF(2).

    Face boundaries are cycles, so this holds iff the rank of the incidence matrix
    equals ``|E| - |V| + #components``.
    """
    skeleton = one_skeleton(c)
    cycle_dim = len(c.edges) - len(c.vertices) + skeleton.number_of_components()
    boundary_dim = rank(incidence_matrix(c, GF2))
    logger.debug('Cycle space dimension %s, boundary rank %s', cycle_dim, boundary_dim)
    return boundary_dim == cycle_dim


# ==== fundamental group =================================================================

def _bfs_tree(c):
    root = c.vertices[0]
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in c.edges_at_vertex(u):
            edge = c.edges[e]
            w = edge.head if edge.tail == u else edge.tail
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    return tree, seen


def _free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def _cyclic_reduce(word):
    word = _free_reduce(word)
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    return word


def _inverse(word):
    return [(g, -s) for g, s in reversed(word)]


def _substitute(word, g, replacement):
    out = []
    for h, s in word:
        if h == g:
            out.extend(replacement if s == 1 else _inverse(replacement))
        else:
            out.append((h, s))
    return out


def _simplify(generators, relators, budget, max_length):

    gens = list(generators)
    rels = [_cyclic_reduce(r) for r in relators]
    rels = [r for r in rels if r]
    steps = 0

    while gens and steps < budget:
        steps += 1
        progress = False

        for i, r in enumerate(rels):
            counts = {}
            for h, _ in r:
                counts[h] = counts.get(h, 0) + 1
            candidates = [h for h in sorted(counts, key=id_key) if counts[h] == 1]
            if not candidates:
                continue
            g = candidates[0]
            j = next(j for j, (h, _) in enumerate(r) if h == g)
            rotated = r[j:] + r[:j]
            sign, rest = rotated[0][1], rotated[1:]
            # g^sign * rest = 1
            replacement = _inverse(rest) if sign == 1 else list(rest)

            new_rels = []
            for k, other in enumerate(rels):
                if k == i:
                    continue
                reduced = _cyclic_reduce(_substitute(other, g, replacement))
                if reduced:
                    new_rels.append(reduced)
            if any(len(r2) > max_length for r2 in new_rels):
                continue

            gens.remove(g)
            rels = new_rels
            progress = True
            break

        if not progress:
            break

    return gens, rels, steps


def fundamental_group_report(c, budget=TIETZE_BUDGET, max_relator_length=MAX_RELATOR_LENGTH):
    """
    Builds a presentation of the fundamental group of ``c`` and tries to simplify it to
    the empty presentation.

    Generators are the non-tree edges of a breadth-first spanning tree of the
    1-skeleton and each face contributes the word read along its boundary. The
    presentation is simplified by free and cyclic reduction and by eliminating
    generators which occur exactly once in some relator, within ``budget`` steps.

    :param DirectedComplex c: Complex with connected 1-skeleton.
    :param int budget: Maximum number of simplification rounds.
    :param int max_relator_length: Eliminations producing longer relators are skipped.
    :returns: Presentation and status. The status is only
        :attr:`GroupStatus.CertifiedTrivial` if all generators were eliminated.
    :rtype: GroupReport
    :raises DisconnectedError: if the 1-skeleton is disconnected.
    """

    if not c.vertices:
        return GroupReport((), (), (), (), GroupStatus.CertifiedTrivial, False, 0)

    tree, reached = _bfs_tree(c)
    if len(reached) != len(c.vertices):
        raise DisconnectedError('Disconnected complex',
                                'The 1-skeleton must be connected to present the '
                                'fundamental group.')

    generators = [e for e in c.edges if e not in tree]
    relators = []
    for f, face in c.faces.items():
        a, b, cc = face.vertices
        word = []
        for x, y in ((a, b), (b, cc), (cc, a)):
            e = c.edge_between(x, y)
            if e not in tree:
                word.append((e, 1 if c.edges[e].tail == x else -1))
        relators.append(word)

    gens, rels, steps = _simplify(generators, relators, budget, max_relator_length)
    status = GroupStatus.Unknown if gens else GroupStatus.CertifiedTrivial
    refuted = not h1_f2_trivial(c)

    logger.debug('Presentation with %s generators and %s relators reduced to %s/%s in '
                 '%s steps', len(generators), len(relators), len(gens), len(rels), steps)

    return GroupReport(
        tuple(generators), tuple(tuple(r) for r in relators), tuple(gens),
        tuple(tuple(r) for r in rels), status, refuted, steps,
    )
