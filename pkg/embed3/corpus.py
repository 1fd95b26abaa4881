# -*- coding: utf-8 -*-
"""
Named example complexes.

Every generator is deterministic. Edges are named ``'<u>-<v>'`` and directed from the
smaller to the larger vertex, faces are named ``'f0'``, ``'f1'``, ... in the order
listed below.

=========================  ==========  =======  =======
name                       vertices    edges    faces
=========================  ==========  =======  =======
triangle                   3           3        1
tetrahedron                4           6        4
octahedron                 6           12       8
icosahedron                12          30       20
suspension-of-cycle(n)     n + 2       3n       2n
cone(Kn)                   n + 1       n(n+1)/2 n(n-1)/2
cone(Cn)                   n + 1       2n       n
cone(Pn)                   n + 1       2n - 1   n - 1
cone(Km,n)                 m + n + 1   mn+m+n   mn
book(n)                    n + 2       2n + 1   n
torus7                     7           21       14
parallel-triangles(n)      3           3        n
two-tetrahedra-glued       5           9        7
bowtie                     5           6        2
=========================  ==========  =======  =======

"""
import re
import itertools

from embed3.complex import validate
from embed3.errors import UnknownCorpusNameError
from embed3.utils import id_key


NAMES = (
    'triangle', 'tetrahedron', 'octahedron', 'icosahedron', 'suspension-of-cycle(n)',
    'suspension(n)', 'cone(Kn)', 'cone(Cn)', 'cone(Pn)', 'cone(Km,n)', 'book(n)',
    'torus7', 'parallel-triangles(n)', 'two-tetrahedra-glued', 'bowtie',
)


def _edge_id(u, v):
    u, v = sorted((u, v), key=id_key)
    return f'{u}-{v}'


def _from_triangles(vertices, triangles, copies=1):
    edges = {}
    for tri in triangles:
        for u, v in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            a, b = sorted((u, v), key=id_key)
            edges.setdefault(_edge_id(a, b), [_edge_id(a, b), a, b])
    faces = [[f'f{i}', *tri] + ([copies] if copies > 1 else [])
             for i, tri in enumerate(triangles)]
    return validate({'vertices': list(vertices), 'edges': list(edges.values()),
                     'faces': faces})


def _cone(edges, n_vertices):
    """Cone with apex ``0`` over a graph on the vertices ``1, ..., n_vertices``."""
    return _from_triangles(range(n_vertices + 1), [(0, u, v) for u, v in edges])


def tetrahedron():
    return _from_triangles(range(4), [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])


def octahedron():
    triangles = []
    for a, b, c in itertools.product((0, 1), (2, 3), (4, 5)):
        # keep orientations consistent across the sphere
        flips = (a == 1) + (b == 3) + (c == 5)
        triangles.append((a, b, c) if flips % 2 == 0 else (a, c, b))
    return _from_triangles(range(6), triangles)


def icosahedron():
    top, bottom = 0, 11
    upper = [1 + i for i in range(5)]
    lower = [6 + i for i in range(5)]
    triangles = []
    for i in range(5):
        j = (i + 1) % 5
        triangles.append((top, upper[i], upper[j]))
        triangles.append((upper[i], lower[i], upper[j]))
        triangles.append((upper[j], lower[i], lower[j]))
        triangles.append((bottom, lower[j], lower[i]))
    return _from_triangles(range(12), triangles)


def suspension_of_cycle(n):
    if n < 3:
        raise UnknownCorpusNameError('Invalid corpus parameter',
                                     'A suspended cycle needs at least 3 vertices.')
    triangles = [(n, i, (i + 1) % n) for i in range(n)]
    triangles += [(n + 1, (i + 1) % n, i) for i in range(n)]
    return _from_triangles(range(n + 2), triangles)


def book(n):
    if n < 1:
        raise UnknownCorpusNameError('Invalid corpus parameter',
                                     'A book needs at least one page.')
    return _from_triangles(range(n + 2), [(0, 1, i) for i in range(2, n + 2)])


def torus7():
    triangles = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    triangles += [(i, (i + 3) % 7, (i + 2) % 7) for i in range(7)]
    return _from_triangles(range(7), triangles)


def parallel_triangles(n):
    if n < 1:
        raise UnknownCorpusNameError('Invalid corpus parameter',
                                     'At least one copy of the triangle is needed.')
    return _from_triangles(range(3), [(0, 1, 2)], copies=n)


def two_tetrahedra_glued():
    triangles = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1),
                 (1, 2, 4), (0, 4, 2), (0, 1, 4)]
    return _from_triangles(range(5), triangles)


def _cone_over(base):
    match = re.fullmatch(r'K(\d+),(\d+)', base)
    if match:
        m, n = int(match.group(1)), int(match.group(2))
        if m < 1 or n < 1:
            raise UnknownCorpusNameError('Invalid corpus parameter',
                                         'Both sides of Km,n need a vertex.')
        edges = [(u, m + v) for u in range(1, m + 1) for v in range(1, n + 1)]
        return _cone(edges, m + n)

    match = re.fullmatch(r'([KCP])(\d+)', base)
    if not match:
        raise UnknownCorpusNameError('Unknown corpus name',
                                     f'Cannot build a cone over "{base}". Use Kn, Cn, Pn '
                                     f'or Km,n.')
    kind, n = match.group(1), int(match.group(2))
    vs = list(range(1, n + 1))
    if kind == 'K' and n >= 2:
        edges = list(itertools.combinations(vs, 2))
    elif kind == 'C' and n >= 3:
        edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    elif kind == 'P' and n >= 2:
        edges = [(vs[i], vs[i + 1]) for i in range(n - 1)]
    else:
        raise UnknownCorpusNameError('Invalid corpus parameter',
                                     f'"{base}" has too few vertices.')
    return _cone(edges, n)


_FIXED = {
    'triangle': lambda: _from_triangles(range(3), [(0, 1, 2)]),
    'tetrahedron': tetrahedron,
    'octahedron': octahedron,
    'icosahedron': icosahedron,
    'torus7': torus7,
    'two-tetrahedra-glued': two_tetrahedra_glued,
    'bowtie': lambda: _from_triangles(range(5), [(0, 1, 2), (0, 3, 4)]),
}

_PARAMETRIZED = {
    'suspension-of-cycle': suspension_of_cycle,
    'suspension': suspension_of_cycle,
    'book': book,
    'parallel-triangles': parallel_triangles,
}


def corpus(name):
    """
    Builds the named complex.

    :param str name: One of :data:`NAMES` with ``n``, ``m`` replaced by integers.
    :rtype: DirectedComplex
    :raises UnknownCorpusNameError: if the name is unknown or its parameter is out of
        range.
    """
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()

    match = re.fullmatch(r'([a-z-]+)\((.+)\)', name)
    if match:
        kind, arg = match.group(1), match.group(2).replace(' ', '')
        if kind == 'cone':
            return _cone_over(arg)
        if kind in _PARAMETRIZED and arg.isdigit():
            return _PARAMETRIZED[kind](int(arg))

    raise UnknownCorpusNameError('Unknown corpus name',
                                 f'"{name}" is not one of {", ".join(NAMES)}.')
