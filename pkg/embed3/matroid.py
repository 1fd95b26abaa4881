# -*- coding: utf-8 -*-
"""
Representable matroids, graph matroids and graphic matroid recognition.

The dual matroid of a complex is realized as the column matroid of a null space basis
of its edge/face incidence matrix ``A``: the dependencies of those columns form the
orthogonal complement of ``null(A)``, which is the row space of ``A``. All queries are
answered through exact rank computations.

"""
import json
import logging
import itertools
from collections import deque, namedtuple
from math import comb

import networkx as nx
from networkx.utils import UnionFind

from embed3.algebra import (
    ExactMatrix, Field, GF2, rank, rank_and_rref, null_space_basis,
)
from embed3.complex import incidence_matrix
from embed3.constants import (
    MatroidMode, MAX_CIRCUIT_SUBSETS, MAX_REALIZATION_STEPS, MAX_ISOMORPHISM_STEPS,
    MAX_GROUND_SET,
)
from embed3.errors import (
    UnknownElementError, GroundMismatchError, ScaleExceededError, InputError,
    os_to_embed3_error,
)
from embed3.graph import Graph
from embed3.utils import id_key

logger = logging.getLogger(__name__)

Realization = namedtuple('Realization', ['graph', 'bijection'])


class _MatroidBase:

    ground = ()

    def rank_of(self, subset):
        raise NotImplementedError()

    def check_subset(self, subset):
        missing = [x for x in subset if x not in self._ground_set]
        if missing:
            raise UnknownElementError('Unknown element',
                                      f'{missing[0]!r} is not in the ground set.')

    @property
    def rank(self):
        if self._rank is None:
            self._rank = self.rank_of(self.ground)
        return self._rank

    def is_independent(self, subset):
        subset = tuple(subset)
        return self.rank_of(subset) == len(subset)

    def loops(self):
        return tuple(e for e in self.ground if self.rank_of((e,)) == 0)

    def kernel_basis(self):
        """A matrix whose row space is the space of linear dependencies of the ground."""
        raise NotImplementedError()

    def circuits(self, size_cap=None, limit=MAX_CIRCUIT_SUBSETS):
        return circuits(self, size_cap, limit)


class VectorMatroid(_MatroidBase):
    """
    The column matroid of an :class:`ExactMatrix`. The ground set is the list of column
    labels.

    :param ExactMatrix rep: Representation matrix.
    """

    def __init__(self, rep):
        self.rep = rep
        self.field = rep.field
        self.ground = tuple(rep.col_labels)
        self._ground_set = set(self.ground)
        self._rank = None
        self._kernel = None

    def rank_of(self, subset):
        subset = tuple(subset)
        self.check_subset(subset)
        if not subset:
            return 0
        return rank(self.rep.columns(subset))

    def kernel_basis(self):
        if self._kernel is None:
            self._kernel = null_space_basis(self.rep)
        return self._kernel

    def __repr__(self):
        return f'<VectorMatroid |E|={len(self.ground)} over {self.field.name}>'


class GraphMatroid(_MatroidBase):
    """
    The cycle matroid or the bond matroid of a :class:`Graph`. The ground set is the
    list of edge ids.

    :param Graph graph: Underlying graph.
    :param MatroidMode mode: Cycle or bond matroid.
    """

    def __init__(self, graph, mode=MatroidMode.Cycle):
        self.graph = graph
        self.mode = MatroidMode(mode)
        self.ground = tuple(graph.edges)
        self._ground_set = set(self.ground)
        self._rank = None
        self._kernel = None

    def _cycle_rank(self, subset):
        uf = UnionFind()
        r = 0
        for e in subset:
            u, v = self.graph.ends(e)
            if uf[u] != uf[v]:
                uf.union(u, v)
                r += 1
        return r

    def rank_of(self, subset):
        subset = tuple(subset)
        self.check_subset(subset)
        if self.mode is MatroidMode.Cycle:
            return self._cycle_rank(subset)
        rest = self._ground_set.difference(subset)
        return len(subset) - self._cycle_rank(self.ground) + self._cycle_rank(rest)

    def to_vector_matroid(self, field=GF2):
        """
        Returns a representation over ``field``. The cycle matroid is represented by the
        signed vertex/edge incidence matrix (tail +1, head -1, loops zero) and the bond
        matroid by a basis of its null space.
        """
        g = self.graph
        rows = []
        for v in g.vertices:
            row = []
            for e in g.edges:
                tail, head = g.ends(e)
                row.append(0 if tail == head else 1 if v == tail else -1 if v == head else 0)
            rows.append(row)
        inc = ExactMatrix(field, rows, g.vertices, g.edges)
        if self.mode is MatroidMode.Cycle:
            return VectorMatroid(inc)
        return VectorMatroid(null_space_basis(inc))

    def kernel_basis(self):
        if self._kernel is None:
            self._kernel = self.to_vector_matroid(GF2).kernel_basis()
        return self._kernel

    def __repr__(self):
        return f'<GraphMatroid {self.mode.value} |E|={len(self.ground)}>'


# ==== constructions =====================================================================

def dual_matroid(c, k):
    """
    Returns the dual matroid of ``c`` over ``k``: a vector matroid on the faces whose
    circuit space is the row space of the incidence matrix. Its rank is
    ``|F| - rank(A)``.
    """
    a = incidence_matrix(c, k)
    m = VectorMatroid(null_space_basis(a))
    logger.debug('Dual matroid over %s: %s elements, rank %s', k.name, len(m.ground), m.rank)
    return m


def restriction(m, s):
    """
    Restricts ``m`` to the subset ``s``. Elements keep the order of the ground set.

    :raises UnknownElementError: if ``s`` is not contained in the ground set.
    """
    s = set(s)
    m.check_subset(s)
    kept = [e for e in m.ground if e in s]
    if isinstance(m, VectorMatroid):
        return VectorMatroid(m.rep.columns(kept))
    return VectorMatroid(m.to_vector_matroid(GF2).rep.columns(kept))


def load_matrix(path):
    """
    Reads a raw labelled matrix file ``{"field": ..., "columns": [...], "rows": [...]}``
    and returns its column matroid.
    """
    try:
        with open(path, encoding='utf-8') as f:
            raw = json.load(f)
    except json.JSONDecodeError as exc:
        raise InputError('Cannot parse matrix file',
                         f'"{path}" is not valid JSON: {exc}.') from exc
    except OSError as exc:
        raise os_to_embed3_error(exc, path) from exc

    return matrix_from_dict(raw)


def matrix_from_dict(raw):
    try:
        field = Field.parse(raw.get('field', 'gf2'))
        rep = ExactMatrix(field, raw['rows'], col_labels=raw['columns'])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError('Malformed matrix', f'Cannot read labelled matrix: {exc}.') from exc
    return VectorMatroid(rep)


# ==== circuits ==========================================================================

def _sum_comb(n, k_max):
    return sum(comb(n, k) for k in range(1, k_max + 1))


def _circuits_by_rank(m, k_max):
    found = []
    for k in range(1, k_max + 1):
        for subset in itertools.combinations(m.ground, k):
            s = frozenset(subset)
            if any(c <= s for c in found):
                continue
            if m.rank_of(subset) < k:
                found.append(s)
    return found


def _circuits_by_kernel(m):
    w = m.kernel_basis()
    k = w.nrows
    n = len(m.ground)
    found = set()
    for t in itertools.combinations(m.ground, k - 1):
        sub = w.columns(t)
        if rank(sub) != k - 1:
            continue
        y = null_space_basis(sub.transpose()).rows[0]
        x = [w.field.zero] * n
        for coeff, row in zip(y, w.rows):
            if coeff != 0:
                x = [w.field.add(a, w.field.mul(coeff, b)) for a, b in zip(x, row)]
        found.add(frozenset(e for e, xe in zip(m.ground, x) if xe != 0))
    return found


def circuits(m, size_cap=None, limit=MAX_CIRCUIT_SUBSETS):
    """
    Enumerates the circuits of ``m``.

    Two routes are available and the cheaper is taken: testing all subsets of size at
    most ``rank + 1`` (pruned by circuits found so far), or testing all sets of
    ``|E| - rank - 1`` elements on which a one-dimensional space of dependencies
    vanishes.

    :param m: :class:`VectorMatroid` or :class:`GraphMatroid`.
    :param int size_cap: Only return circuits with at most this many elements.
    :param int limit: Maximum number of subsets to test.
    :returns: Set of circuits.
    :rtype: frozenset
    :raises ScaleExceededError: if both routes exceed ``limit``.
    """
    n = len(m.ground)
    r = m.rank

    if n == r:
        return frozenset()

    k_max = r + 1 if size_cap is None else min(r + 1, size_cap)
    rank_cost = _sum_comb(n, k_max)
    kernel_cost = comb(n, n - r - 1)

    if min(rank_cost, kernel_cost) > limit:
        raise ScaleExceededError('Too many subsets',
                                 f'Enumerating circuits on {n} elements of rank {r} '
                                 f'needs more than {limit} rank tests.')

    if kernel_cost < rank_cost:
        found = _circuits_by_kernel(m)
        if size_cap is not None:
            found = {c for c in found if len(c) <= size_cap}
    else:
        found = _circuits_by_rank(m, k_max)

    return frozenset(found)


def sorted_circuits(cs):
    """Circuits ordered by size, then by their sorted element ids."""
    return sorted((tuple(sorted(c, key=id_key)) for c in cs),
                  key=lambda c: (len(c), [id_key(x) for x in c]))


def circuit_difference(m1, m2, limit=MAX_CIRCUIT_SUBSETS):
    """
    Returns the circuits of ``m1`` which are not circuits of ``m2`` and vice versa,
    each ordered by :func:`sorted_circuits`.

    :raises GroundMismatchError: if the ground sets differ.
    """
    if set(m1.ground) != set(m2.ground):
        raise GroundMismatchError('Ground sets differ',
                                  'Matroids can only be compared on equal ground sets.')
    c1 = circuits(m1, limit=limit)
    c2 = circuits(m2, limit=limit)
    return sorted_circuits(c1 - c2), sorted_circuits(c2 - c1)


def matroids_equal(m1, m2, limit=MAX_CIRCUIT_SUBSETS):
    """
    Checks if two matroids on the same ground set have the same circuits.

    :raises GroundMismatchError: if the ground sets differ.
    :raises ScaleExceededError: if circuit enumeration is too expensive.
    """
    if set(m1.ground) != set(m2.ground):
        raise GroundMismatchError('Ground sets differ',
                                  'Matroids can only be compared on equal ground sets.')
    if m1.rank != m2.rank:
        return False
    only1, only2 = circuit_difference(m1, m2, limit)
    return not only1 and not only2


def components(m):
    """
    Returns the connected components of ``m`` as tuples in ground order. Two elements
    are connected if they lie on a common fundamental circuit with respect to the
    pivot basis. Loops and coloops are singletons.
    """
    rep = m.rep if isinstance(m, VectorMatroid) else m.to_vector_matroid(GF2).rep
    rk, rref, pivots = rank_and_rref(rep)

    g = nx.Graph()
    g.add_nodes_from(m.ground)
    for e in m.ground:
        if e in pivots:
            continue
        col = rref.column(e)
        for i, p in enumerate(pivots):
            if col[i] != 0:
                g.add_edge(e, p)

    order = {e: i for i, e in enumerate(m.ground)}
    comps = [tuple(sorted(c, key=order.__getitem__)) for c in nx.connected_components(g)]
    return sorted(comps, key=lambda c: order[c[0]])


# ==== binary matroids ===================================================================

def _binary_support(m):
    rk, rref, pivots = rank_and_rref(m.rep)
    rows = [[0 if x == 0 else 1 for x in row] for row in rref.rows[:rk]]
    return VectorMatroid(ExactMatrix(GF2, rows, col_labels=m.ground, ncols=len(m.ground)))


def binary_candidate(m, limit=MAX_CIRCUIT_SUBSETS):
    """
    Returns a GF(2) representation of ``m`` if there is one.

    The candidate is the support of the standard form ``[I | D]`` with respect to the
    pivot basis. A matroid is binary iff this candidate represents it.

    :returns: GF(2) :class:`VectorMatroid` or ``None`` if ``m`` is not binary.
    :raises ScaleExceededError: if the comparison is too expensive.
    """
    candidate = _binary_support(m)
    if m.field == GF2:
        return candidate
    if matroids_equal(candidate, m, limit):
        return candidate
    logger.debug('%r is not binary', m)
    return None


# ==== graph realization =================================================================

class _Budget:

    def __init__(self, max_steps, what):
        self.max_steps = max_steps
        self.steps = 0
        self.what = what

    def tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise ScaleExceededError('Search budget exhausted',
                                     f'{self.what} needed more than {self.max_steps} steps.')


def _is_path(tree_edges, path):
    # a subforest is a path iff it is connected with max degree two
    degree = {}
    for b in path:
        for x in tree_edges[b]:
            degree[x] = degree.get(x, 0) + 1
    return len(degree) == len(path) + 1 and max(degree.values()) <= 2


def _path_ends(tree_edges, path):
    degree = {}
    for b in path:
        for x in tree_edges[b]:
            degree[x] = degree.get(x, 0) + 1
    ends = [x for x in sorted(degree) if degree[x] == 1]
    return ends[0], ends[1]


def _basis_order(basis, paths):
    adjacent = {b: [] for b in basis}
    for p in paths.values():
        for b in p:
            adjacent[b].extend(x for x in basis if x in p and x != b)

    order, seen = [], set()
    for start in basis:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            b = queue.popleft()
            order.append(b)
            for x in adjacent[b]:
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
    return order


def _search_tree(order, paths, budget):
    """
    Yields trees (dicts basis element -> (u, v)) in which every path set is a path, by
    splitting vertices of the tree built so far.
    """

    def consistent(tree_edges, placed):
        for p in paths.values():
            q = [b for b in p if b in placed]
            if q and not _is_path(tree_edges, q):
                return False
        return True

    def extend(i, tree_edges, n_vertices, placed):
        if i == len(order):
            yield dict(tree_edges)
            return

        b = order[i]
        y = n_vertices
        for x in range(n_vertices):
            incident = [(e, end) for e, ends in tree_edges.items()
                        for end, z in enumerate(ends) if z == x]
            # the first incident end stays at x, the mirrored splits give the same tree
            free = incident[1:]
            for bits in range(2 ** len(free)):
                budget.tick()
                new_edges = dict(tree_edges)
                for j, (e, end) in enumerate(free):
                    if bits >> j & 1:
                        ends = list(new_edges[e])
                        ends[end] = y
                        new_edges[e] = tuple(ends)
                new_edges[b] = (x, y)
                new_placed = placed | {b}
                if consistent(new_edges, new_placed):
                    yield from extend(i + 1, new_edges, n_vertices + 1, new_placed)

    yield from extend(0, {}, 1, frozenset())


def _realize_component(sub, budget, limit):
    """Realizes a connected loopless binary matroid given as a GF(2) VectorMatroid."""

    rk, rref, pivots = rank_and_rref(sub.rep)
    basis = list(pivots)
    non_basis = [e for e in sub.ground if e not in pivots]
    paths = {}
    for e in non_basis:
        col = rref.column(e)
        paths[e] = frozenset(p for i, p in enumerate(pivots) if col[i] != 0)

    order = _basis_order(basis, paths)

    for tree in _search_tree(order, paths, budget):
        triples = [(b, *tree[b]) for b in basis]
        for e in non_basis:
            u, v = _path_ends(tree, paths[e])
            triples.append((e, u, v))
        n_vertices = rk + 1
        g = Graph(range(n_vertices), sorted(triples, key=lambda t: sub.ground.index(t[0])))
        if matroids_equal(GraphMatroid(g), sub, limit):
            return g

    return None


def _glue(parts, loops, ground):
    """Glues component graphs at vertex 0 and adds loops there."""
    triples = []
    offset = 1
    for g in parts:
        relabel = {v: (0 if v == 0 else offset + v - 1) for v in g.vertices}
        offset += g.number_of_vertices() - 1
        triples.extend((e, relabel[u], relabel[v]) for e, u, v in g.triples())
    triples.extend((e, 0, 0) for e in loops)
    order = {e: i for i, e in enumerate(ground)}
    triples.sort(key=lambda t: order[t[0]])
    return Graph(range(offset), triples)


def graph_realization(m, max_steps=MAX_REALIZATION_STEPS, limit=MAX_CIRCUIT_SUBSETS):
    """
    Finds a graph whose cycle matroid is ``m``.

    Loops are set aside and the remaining elements are split into connected
    components. Each component must be binary. Its standard form ``[I | D]`` prescribes
    for every non-basis element the set of basis elements on its fundamental circuit,
    which must form a path in a spanning tree. The tree is searched for by splitting
    vertices, placing basis elements in breadth-first order. Component graphs are glued
    at a single vertex which also carries all loops.

    The edge ids of the returned graph are the ground set elements.

    :param m: :class:`VectorMatroid` to realize.
    :param int max_steps: Budget for the tree search.
    :param int limit: Budget for circuit enumeration during verification.
    :returns: :class:`Realization` or ``None`` if ``m`` is not graphic.
    :raises ScaleExceededError: if a budget is exhausted.
    """
    budget = _Budget(max_steps, 'Graph realization')

    loops = m.loops()
    rest = [e for e in m.ground if e not in loops]
    parts = []

    if rest:
        loopless = restriction(m, rest)
        for comp in components(loopless):
            sub = restriction(loopless, comp)
            candidate = binary_candidate(sub, limit)
            if candidate is None:
                logger.info('Component %s is not binary, hence not graphic', list(comp))
                return None
            g = _realize_component(candidate, budget, limit)
            if g is None:
                logger.info('Component %s is binary but not graphic', list(comp))
                return None
            parts.append(g)

    g = _glue(parts, loops, m.ground)
    logger.debug('Realized %r by %r in %s search steps', m, g, budget.steps)
    return Realization(g, {e: e for e in m.ground})


def exhaustive_graph_realization(m, max_steps=MAX_REALIZATION_STEPS):
    """
    Reference search for a graph realizing ``m``: assigns every element to a pair of
    vertices among ``rank + 1`` vertices and checks ranks of all subsets involving the
    newest element. Intended for small ground sets.

    :returns: :class:`Realization` or ``None``.
    :raises ScaleExceededError: if ``max_steps`` is exhausted.
    """
    budget = _Budget(max_steps, 'Exhaustive graph realization')
    ground = m.ground
    n_vertices = m.rank + 1

    def agrees(assigned):
        g = Graph(range(n_vertices), [(ground[i], u, v) for i, (u, v) in enumerate(assigned)])
        gm = GraphMatroid(g)
        i = len(assigned) - 1
        for k in range(i + 1):
            for others in itertools.combinations(ground[:i], k):
                s = others + (ground[i],)
                if gm.rank_of(s) != m.rank_of(s):
                    return False
        return True

    def extend(assigned, used):
        if len(assigned) == len(ground):
            return assigned
        # vertices are introduced in increasing order
        top = min(used + 3, n_vertices)
        for u in range(top):
            for v in range(u, top):
                budget.tick()
                new = assigned + [(u, v)]
                if agrees(new):
                    result = extend(new, max(used, v))
                    if result is not None:
                        return result
        return None

    if len(ground) > MAX_GROUND_SET:
        raise ScaleExceededError('Ground set too large',
                                 f'Exhaustive search is limited to {MAX_GROUND_SET} '
                                 f'elements.')

    result = extend([], -1)
    if result is None:
        return None
    g = Graph(range(n_vertices), [(ground[i], u, v) for i, (u, v) in enumerate(result)])
    return Realization(g, {e: e for e in ground})


# ==== isomorphism =======================================================================

def matroid_isomorphic(m1, m2, max_steps=MAX_ISOMORPHISM_STEPS, limit=MAX_CIRCUIT_SUBSETS):
    """
    Searches for a bijection of ground sets that maps the circuits of ``m1`` onto the
    circuits of ``m2``. The identity is tried first if the ground sets agree.

    :returns: Dict from elements of ``m1`` to elements of ``m2`` or ``None``.
    :raises ScaleExceededError: if a budget is exhausted.
    """
    if len(m1.ground) != len(m2.ground) or m1.rank != m2.rank:
        return None

    c1 = circuits(m1, limit=limit)
    c2 = circuits(m2, limit=limit)
    if len(c1) != len(c2):
        return None

    if set(m1.ground) == set(m2.ground) and c1 == c2:
        return {e: e for e in m1.ground}

    def signature(cs, e):
        return tuple(sorted(len(c) for c in cs if e in c))

    sig1 = {e: signature(c1, e) for e in m1.ground}
    sig2 = {e: signature(c2, e) for e in m2.ground}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    budget = _Budget(max_steps, 'Matroid isomorphism')
    order = list(m1.ground)
    by_element = {e: [c for c in c1 if e in c] for e in order}

    def extend(i, mapping, used):
        if i == len(order):
            return dict(mapping)
        e = order[i]
        for f in m2.ground:
            if f in used or sig2[f] != sig1[e]:
                continue
            budget.tick()
            mapping[e] = f
            ok = all(frozenset(mapping[x] for x in c) in c2
                     for c in by_element[e] if all(x in mapping for x in c))
            if ok:
                result = extend(i + 1, mapping, used | {f})
                if result is not None:
                    return result
            del mapping[e]
        return None

    return extend(0, {}, frozenset())
