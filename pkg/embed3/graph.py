# -*- coding: utf-8 -*-
"""
Labelled multigraphs.

:class:`Graph` is shared by the 1-skeleton of a complex, link graphs and dual graphs.
Every edge carries an id and an ordered pair of endpoints. The order is ignored by all
matroid and connectivity queries but is used as the orientation when signed incidence
vectors are needed. Loops and parallel edges are allowed.

"""
import logging

import networkx as nx

from embed3.errors import UnknownVertexError, UnknownEdgeError
from embed3.utils import id_key

logger = logging.getLogger(__name__)


class Graph:
    """
    A multigraph with labelled edges, backed by a :class:`networkx.MultiGraph` whose
    edge keys are the edge ids.

    :param vertices: Vertex ids. Endpoints of edges are added automatically.
    :param edges: Iterable of ``(edge_id, u, v)`` triples.
    """

    def __init__(self, vertices=(), edges=()):

        self._nx = nx.MultiGraph()
        self._ends = {}

        for v in vertices:
            self._nx.add_node(v)

        for e, u, v in edges:
            self._add_edge(e, u, v)

    def _add_edge(self, e, u, v):
        if e in self._ends:
            raise ValueError(f'Duplicate edge id {e!r}')
        self._nx.add_edge(u, v, key=e)
        self._ends[e] = (u, v)

    # ---- queries -------------------------------------------------------------------

    @property
    def nx(self):
        """The backing :class:`networkx.MultiGraph`. Do not mutate."""
        return self._nx

    @property
    def vertices(self):
        return tuple(self._nx.nodes)

    @property
    def edges(self):
        return tuple(self._ends)

    def number_of_vertices(self):
        return self._nx.number_of_nodes()

    def number_of_edges(self):
        return len(self._ends)

    def has_vertex(self, v):
        return v in self._nx

    def has_edge(self, e):
        return e in self._ends

    def ends(self, e):
        try:
            return self._ends[e]
        except KeyError:
            raise UnknownEdgeError('Unknown edge', f'The graph has no edge {e!r}.',
                                   edge=e) from None

    def is_loop(self, e):
        u, v = self.ends(e)
        return u == v

    def other_end(self, e, v):
        u, w = self.ends(e)
        if v == u:
            return w
        elif v == w:
            return u
        raise UnknownVertexError('Not an endpoint', f'{v!r} is not an end of {e!r}.',
                                 vertex=v, edge=e)

    def incident_edges(self, v):
        """Edges at ``v`` in edge order. A loop is listed once."""
        self._check_vertex(v)
        return tuple(e for e, ends in self._ends.items() if v in ends)

    def degree(self, v):
        """Number of edge-ends at ``v``. A loop contributes two."""
        self._check_vertex(v)
        return sum((u == v) + (w == v) for u, w in self._ends.values())

    def number_of_components(self):
        return nx.number_connected_components(self._nx)

    def components(self):
        """Vertex sets of the connected components, in order of first vertex."""
        order = {v: i for i, v in enumerate(self._nx.nodes)}
        comps = [sorted(c, key=order.__getitem__)
                 for c in nx.connected_components(self._nx)]
        return sorted(comps, key=lambda c: order[c[0]])

    def simple(self):
        """The simple graph underlying this graph: loops dropped, parallels merged."""
        g = nx.Graph()
        g.add_nodes_from(self._nx.nodes)
        g.add_edges_from((u, v) for u, v in self._ends.values() if u != v)
        return g

    def _check_vertex(self, v):
        if v not in self._nx:
            raise UnknownVertexError('Unknown vertex', f'The graph has no vertex {v!r}.',
                                     vertex=v)

    # ---- derived graphs ------------------------------------------------------------

    def edge_subgraph(self, edges, keep_isolated=False):
        """
        Returns the subgraph on the given edge ids.

        :param edges: Edge ids to keep.
        :param bool keep_isolated: Keep all vertices instead of only the endpoints of
            kept edges.
        """
        keep = set(edges)
        kept = [(e, u, v) for e, (u, v) in self._ends.items() if e in keep]
        if keep_isolated:
            vertices = self.vertices
        else:
            touched = {x for _, u, v in kept for x in (u, v)}
            vertices = [v for v in self.vertices if v in touched]
        return Graph(vertices, kept)

    def delete_edges(self, edges):
        drop = set(edges)
        return Graph(self.vertices,
                     [(e, u, v) for e, (u, v) in self._ends.items() if e not in drop])

    def relabel_edges(self, mapping):
        return Graph(self.vertices,
                     [(mapping[e], u, v) for e, (u, v) in self._ends.items()])

    def reversed_edges(self, edges):
        """Returns a copy with the stored orientation of ``edges`` flipped."""
        flip = set(edges)
        return Graph(self.vertices,
                     [(e, v, u) if e in flip else (e, u, v)
                      for e, (u, v) in self._ends.items()])

    def with_edge(self, e, u, v):
        g = Graph(self.vertices, self.triples())
        g._add_edge(e, u, v)
        return g

    def triples(self):
        return [(e, u, v) for e, (u, v) in self._ends.items()]

    # ---- comparison ----------------------------------------------------------------

    def same_as(self, other):
        """
        Checks equality as labelled multigraphs: equal vertex sets and equal endpoint
        sets per edge id. Stored orientations are ignored.
        """
        if set(self.vertices) != set(other.vertices):
            return False
        if set(self.edges) != set(other.edges):
            return False
        return all(sorted(self.ends(e), key=id_key) == sorted(other.ends(e), key=id_key)
                   for e in self.edges)

    def __repr__(self):
        return f'<{self.__class__.__name__} |V|={self.number_of_vertices()} ' \
               f'|E|={self.number_of_edges()}>'
