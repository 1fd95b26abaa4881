# -*- coding: utf-8 -*-
"""
The two hypotheses checked vertex by vertex before a dual graph is used: local
2-connectivity and k-locality. Also provides the restriction ``g_v`` of a dual graph
to the faces at a vertex.

"""
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import networkx as nx

from embed3.complex import link_graph
from embed3.constants import MatroidMode, MAX_CIRCUIT_SUBSETS
from embed3.matroid import (
    GraphMatroid, dual_matroid, restriction, circuit_difference,
)

logger = logging.getLogger(__name__)

LocalityRecord = namedtuple('LocalityRecord', [
    'vertex', 'faces_at_vertex', 'link_matroid_rank', 'restriction_rank', 'equal',
    'witness',
])

Witness = namedtuple('Witness', ['circuit', 'side'])


class LocalityReport:
    """
    Per-vertex outcome of :func:`is_k_local`, in vertex order.

    :ivar tuple records: One :class:`LocalityRecord` per vertex.
    """

    def __init__(self, records):
        self.records = tuple(records)

    @property
    def local(self):
        return all(r.equal for r in self.records)

    def failures(self):
        return tuple(r for r in self.records if not r.equal)

    def record(self, v):
        return next(r for r in self.records if r.vertex == v)

    def __bool__(self):
        return self.local

    def __repr__(self):
        return f'<LocalityReport local={self.local} failures={len(self.failures())}>'


def g_v(g, c, v, bijection=None, keep_isolated=False):
    """
    Deletes from the dual graph ``g`` all edges whose faces do not contain ``v``.

    :param Graph g: Graph whose edges correspond to the faces of ``c``.
    :param DirectedComplex c: Complex.
    :param v: Vertex of ``c``.
    :param dict bijection: Mapping from faces to edges of ``g``. Defaults to the
        identity.
    :param bool keep_isolated: Keep vertices of ``g`` which lose all their edges.
    :raises UnknownVertexError: if ``v`` is not a vertex of ``c``.
    """
    faces = c.faces_at_vertex(v)
    edges = [bijection[f] for f in faces] if bijection else faces
    return g.edge_subgraph(edges, keep_isolated)


def _compare_at(c, m, v, limit):

    link = link_graph(c, v)
    bond = GraphMatroid(link, MatroidMode.Bond)
    res = restriction(m, c.faces_at_vertex(v))

    only_link, only_res = circuit_difference(bond, res, limit)
    if only_link:
        witness = Witness(only_link[0], 'link')
    elif only_res:
        witness = Witness(only_res[0], 'restriction')
    else:
        witness = None

    if witness:
        logger.debug('Not local at %r: circuit %s only in the %s matroid', v,
                     list(witness.circuit), witness.side)

    return LocalityRecord(v, c.faces_at_vertex(v), bond.rank, res.rank,
                          witness is None, witness)


def is_k_local(c, k, workers=1, limit=MAX_CIRCUIT_SUBSETS):
    """
    Compares, at every vertex, the bond matroid of the link graph with the restriction
    of the dual matroid to the faces at the vertex. Link edges carry the ids of their
    faces so both matroids live on the same ground set.

    :param DirectedComplex c: Complex.
    :param Field k: Field of the dual matroid.
    :param int workers: Number of worker threads for the per-vertex comparisons.
    :param int limit: Budget for circuit enumeration.
    :rtype: LocalityReport
    :raises ScaleExceededError: if a comparison is too expensive.
    """
    m = dual_matroid(c, k)

    with ThreadPoolExecutor(max_workers=max(1, workers),
                            thread_name_prefix='embed3-locality') as executor:
        records = list(executor.map(lambda v: _compare_at(c, m, v, limit), c.vertices))

    report = LocalityReport(records)
    logger.info('Locality over %s: %s', k.name,
                'pass' if report.local else
                f'fails at {[r.vertex for r in report.failures()]}')
    return report


def is_link_2connected(link, allow_two_vertex=False):
    """
    Checks if a link graph is 2-connected: at least three vertices, connected and
    without cut vertex. Parallel edges are permitted. With ``allow_two_vertex``, two
    vertices joined by at least two parallel edges also count.
    """
    n = link.number_of_vertices()
    if n == 2 and allow_two_vertex:
        return link.number_of_edges() >= 2 and link.number_of_components() == 1
    if n < 3:
        return False
    return nx.is_biconnected(link.simple())


def is_locally_2connected(c, allow_two_vertex=False):
    """
    Returns a mapping from each vertex of ``c`` to whether its link graph is
    2-connected.
    """
    result = {v: is_link_2connected(link_graph(c, v), allow_two_vertex)
              for v in c.vertices}
    bad = [v for v, ok in result.items() if not ok]
    if bad:
        logger.info('Links are not 2-connected at %s', bad)
    return result
