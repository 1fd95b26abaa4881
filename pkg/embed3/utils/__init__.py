# -*- coding: utf-8 -*-
"""
Small helpers shared across embed3.

"""


def id_key(x):
    """
    Sort key for vertex, edge and face ids which may be a mix of integers and strings.
    Integers sort numerically and before all strings.
    """
    return (0, x) if isinstance(x, int) else (1, str(x))


def sorted_ids(ids):
    return sorted(ids, key=id_key)


def is_valid_id(x):
    return (isinstance(x, int) and not isinstance(x, bool)) or isinstance(x, str)


def cyclic_canonical(seq):
    """
    Returns the rotation of ``seq`` which starts at its smallest element under
    :func:`id_key`. Used to compare cyclic sequences of distinct ids.
    """
    seq = tuple(seq)
    if not seq:
        return seq
    i = min(range(len(seq)), key=lambda j: id_key(seq[j]))
    return seq[i:] + seq[:i]


def same_cycle(a, b):
    """Checks if two cyclic sequences of distinct ids agree up to rotation."""
    return cyclic_canonical(a) == cyclic_canonical(b)


def reverse_cycle(seq):
    return tuple(reversed(tuple(seq)))
