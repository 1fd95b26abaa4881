# -*- coding: utf-8 -*-
"""
Sparse generating sets of the face cycle space.

A family of vectors over the faces is sparse if at every coordinate either all vectors
vanish or exactly two are nonzero, with entries 1 and -1. The cycle space of a complex
has a sparse generating set iff its dual matroid is graphic: the vertex stars of a
realizing graph form such a set.

"""
import logging
from collections import namedtuple, deque

from embed3.algebra import ExactMatrix, same_row_space, null_space_basis
from embed3.constants import MAX_CIRCUIT_SUBSETS, MAX_REALIZATION_STEPS
from embed3.errors import NotSparseError
from embed3.graph import Graph
from embed3.matroid import dual_matroid, graph_realization, restriction, components

logger = logging.getLogger(__name__)

SparseCheck = namedtuple('SparseCheck', ['sparse', 'coordinate'])
MacLaneResult = namedtuple('MacLaneResult', [
    'graphic', 'family', 'graph', 'components', 'exact',
])


class SparseFamily:
    """
    Labelled vectors over a common set of coordinate labels.

    :param Field field: Field of all entries.
    :param labels: Coordinate labels.
    :param vectors: Sequence of vectors, each aligned with ``labels``.
    :param names: Vector names, defaults to ``0, 1, ...``. Vectors are a labelled
        family, equal vectors with different names are distinct members.
    """

    def __init__(self, field, labels, vectors, names=None):
        self.field = field
        self.labels = tuple(labels)
        self.vectors = tuple(tuple(field.element(x) for x in v) for v in vectors)
        self.names = tuple(range(len(self.vectors)) if names is None else names)
        if any(len(v) != len(self.labels) for v in self.vectors):
            raise ValueError('All vectors must have one entry per label')

    def as_matrix(self):
        return ExactMatrix(self.field, self.vectors, self.names, self.labels)

    def to_list(self):
        return [[name, [self.field.to_plain(x) for x in v]]
                for name, v in zip(self.names, self.vectors)]

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return f'<SparseFamily {len(self.vectors)} vectors on {len(self.labels)} ' \
               f'coordinates over {self.field.name}>'


def is_sparse_family(family):
    """
    Checks the sparsity condition at every coordinate. Over GF(2) the pair ``(1, -1)``
    is ``(1, 1)``.

    :param SparseFamily family: Family to check.
    :returns: Verdict and the first violating coordinate label.
    :rtype: SparseCheck
    """
    k = family.field
    expected = sorted([k.one, k.neg(k.one)])
    for j, label in enumerate(family.labels):
        nonzero = [v[j] for v in family.vectors if v[j] != 0]
        if nonzero and sorted(nonzero) != expected:
            return SparseCheck(False, label)
    return SparseCheck(True, None)


def sparse_set_from_graph(g, k, labels=None):
    """
    Returns the signed vertex stars of ``g``: +1 where an edge leaves the vertex, -1
    where it enters and 0 for loops.

    :param Graph g: Graph with oriented edges.
    :param Field k: Field of the entries.
    :param labels: Coordinate order, defaults to the edge order of ``g``.
    :rtype: SparseFamily
    """
    labels = tuple(g.edges if labels is None else labels)
    vectors = []
    for v in g.vertices:
        row = []
        for e in labels:
            tail, head = g.ends(e)
            row.append(0 if tail == head else 1 if v == tail else -1 if v == head else 0)
        vectors.append(row)
    return SparseFamily(k, labels, vectors, g.vertices)


def graph_from_sparse_set(family):
    """
    Builds the graph whose vertices are the vectors of a sparse family. A coordinate
    with two nonzero entries becomes an edge from the vector carrying 1 to the vector
    carrying -1. A coordinate on which all vectors vanish becomes a loop at the first
    vector, or at a single sink vertex ``0`` if the family is empty.

    :returns: Graph and the map from coordinate labels to edge ids.
    :raises NotSparseError: if the family is not sparse.
    """
    check = is_sparse_family(family)
    if not check.sparse:
        raise NotSparseError('Family not sparse',
                             f'Coordinate {check.coordinate!r} violates sparsity.')

    k = family.field
    vertices = list(family.names) if family.names else [0]
    triples = []
    for j, label in enumerate(family.labels):
        support = [i for i, v in enumerate(family.vectors) if v[j] != 0]
        if not support:
            triples.append((label, vertices[0], vertices[0]))
            continue
        a, b = support
        if family.vectors[a][j] != k.one:
            a, b = b, a
        triples.append((label, family.names[a], family.names[b]))

    return Graph(vertices, triples), {label: label for label in family.labels}


def _fundamental_cycles(g):
    """Yields ``(edge, {edge_on_cycle: traversal sign})`` for every non-tree edge."""
    parent = {}
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for e in g.incident_edges(u):
                w = g.other_end(e, u)
                if w not in parent:
                    parent[w] = (e, u)
                    queue.append(w)

    tree = {p[0] for p in parent.values() if p is not None}

    def path_to_root(v):
        out = []
        while parent[v] is not None:
            e, u = parent[v]
            out.append((e, u, v))
            v = u
        return out

    for e in g.edges:
        if e in tree:
            continue
        u, v = g.ends(e)
        signs = {e: 1}
        if u == v:
            yield e, signs
            continue
        # e runs u -> v, return along the tree from v to u
        up_v = path_to_root(v)
        up_u = path_to_root(u)
        common = {x[0] for x in up_v} & {x[0] for x in up_u}
        for f, a, b in up_v:
            if f not in common:
                # traversed from b towards the root a
                signs[f] = 1 if g.ends(f) == (b, a) else -1
        for f, a, b in up_u:
            if f not in common:
                # traversed from the root side a down to b
                signs[f] = 1 if g.ends(f) == (a, b) else -1
        yield e, signs


def orient_to_cycle_space(g, m):
    """
    Re-directs edges of a graph realizing ``m`` so that its signed vertex stars span
    the row space of the representation of ``m`` exactly, not just up to column
    scaling.

    :param Graph g: Graph whose edge ids are the ground set of ``m``.
    :param VectorMatroid m: Matroid realized by ``g``.
    :returns: Re-directed graph or ``None`` if no choice of directions works.
    """
    k = m.field
    sign = {}
    pending = list(_fundamental_cycles(g))

    while pending:
        # prefer cycles through an edge that is already directed, one free sign per
        # matroid component
        i = next((i for i, (_, cycle) in enumerate(pending)
                  if any(f in sign for f in cycle)), 0)
        e, cycle = pending.pop(i)
        if len(cycle) == 1:
            sign.setdefault(e, 1)
            continue
        elements = list(cycle)
        y = null_space_basis(m.rep.columns(elements))
        if y.nrows != 1 or any(x == 0 for x in y.rows[0]):
            logger.debug('Cycle through %r is not a circuit of the matroid', e)
            return None
        y = dict(zip(elements, y.rows[0]))
        anchor = next((f for f in elements if f in sign), e)
        scale = k.mul(k.element(cycle[anchor] * sign.get(anchor, 1)), k.inv(y[anchor]))
        for f in elements:
            s = k.mul(k.mul(scale, y[f]), k.element(cycle[f]))
            if s == k.one:
                value = 1
            elif s == k.neg(k.one):
                value = -1
            else:
                return None
            if sign.setdefault(f, value) != value:
                return None

    oriented = g.reversed_edges([e for e, s in sign.items() if s == -1])
    stars = sparse_set_from_graph(oriented, k, m.ground).as_matrix()
    target = ExactMatrix(k, m.rep.rows, col_labels=m.ground)
    if not same_row_space(stars, target):
        return None
    return oriented


def _disjoint_union(graphs, loops):
    triples = []
    n = 0
    for g in graphs:
        relabel = {v: n + i for i, v in enumerate(g.vertices)}
        n += g.number_of_vertices()
        triples.extend((e, relabel[u], relabel[v]) for e, u, v in g.triples())
    n = max(n, 1)
    triples.extend((e, 0, 0) for e in loops)
    return Graph(range(n), triples)


def sparse_generating_set(m, max_steps=MAX_REALIZATION_STEPS, limit=MAX_CIRCUIT_SUBSETS):
    """
    Returns a sparse family spanning the row space of the representation of ``m``.
    Connected components are realized separately. The family is ``None`` if ``m`` is
    not graphic, or if no edge directions of the realizing graph make the signed stars
    span that row space exactly (then ``exact`` is ``False`` and ``graph`` is the
    unoriented realization).

    :rtype: MacLaneResult
    """
    comps = components(m)
    loops = set(m.loops())
    graphs = []
    for comp in comps:
        if len(comp) == 1 and comp[0] in loops:
            continue
        realization = graph_realization(restriction(m, comp), max_steps, limit)
        if realization is None:
            logger.info('Component %s is not graphic', list(comp))
            return MacLaneResult(False, None, None, tuple(comps), False)
        graphs.append(realization.graph)

    order = {e: i for i, e in enumerate(m.ground)}
    g = _disjoint_union(graphs, sorted(loops, key=order.__getitem__))
    g = Graph(g.vertices, sorted(g.triples(), key=lambda t: order[t[0]]))

    oriented = orient_to_cycle_space(g, m)
    if oriented is None:
        logger.warning('No edge directions make the stars span the space exactly')
        return MacLaneResult(True, None, g, tuple(comps), False)

    family = sparse_set_from_graph(oriented, m.field, m.ground)
    return MacLaneResult(True, family, oriented, tuple(comps), True)


def maclane_check(c, k, max_steps=MAX_REALIZATION_STEPS, limit=MAX_CIRCUIT_SUBSETS):
    """
    Decides whether the cycle space of ``c`` over ``k`` (the null space of the
    incidence matrix) has a sparse generating set, and returns one if so.

    :rtype: MacLaneResult
    :raises ScaleExceededError: if a budget is exhausted.
    """
    m = dual_matroid(c, k)
    result = sparse_generating_set(m, max_steps, limit)
    logger.info('Sparse generating set over %s: %s', k.name,
                'found' if result.family is not None else 'none')
    return result
