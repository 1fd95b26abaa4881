# -*- coding: utf-8 -*-
"""
Conversion of graphs, junkify ledgers and exceptions to plain JSON types, and stable
JSON reading and writing.

"""
import json
import traceback

from atomicwrites import atomic_write

from embed3.errors import InputError, os_to_embed3_error
from embed3.graph import Graph
from embed3.rotation import JunkifyStep


def error_to_dict(err):
    """
    Converts an exception to a dict. Keys will be strings and entries are native Python
    types.

    :param Exception err: Exception to convert.
    :returns: Dictionary where all keys are strings and all items are native Python types.
        The following keys will always be present but may contain empty strings: 'type',
        'inherits', 'traceback', 'title', and 'message'.
    :rtype: dict
    """

    dictionary = dict(
        type=err.__class__.__name__,
        inherits=[b.__name__ for b in err.__class__.__bases__],
        traceback=''.join(traceback.format_exception(err.__class__, err, err.__traceback__)),
        title='An unexpected error occurred',
        message='Please report this as a bug.',
    )
    for name, value in err.__dict__.items():
        dictionary[str(name)] = value if value is None else str(value)

    return dictionary


def graph_to_dict(g):
    return {'vertices': list(g.vertices), 'edges': [list(t) for t in g.triples()]}


def graph_from_dict(raw):
    try:
        return Graph(raw['vertices'], [tuple(t) for t in raw['edges']])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError('Malformed graph', f'Cannot read graph: {exc!r}.') from exc


def ledger_to_list(ledger):
    return [[step.face, step.copy, step.vertex, step.far_end] for step in ledger]


def ledger_from_list(raw):
    try:
        return tuple(JunkifyStep(*item) for item in raw)
    except TypeError as exc:
        raise InputError('Malformed ledger', f'Cannot read ledger: {exc!r}.') from exc


def dumps(obj):
    """Serializes ``obj`` with sorted keys and two-space indentation."""
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def write_json(path, obj):
    """Atomically writes ``obj`` as stable JSON to ``path``."""
    try:
        with atomic_write(path, overwrite=True, encoding='utf-8') as f:
            f.write(dumps(obj))
    except OSError as exc:
        raise os_to_embed3_error(exc, path) from exc


def read_json(path):
    """
    Reads a JSON document.

    :raises InputError: if the file is not valid JSON.
    :raises FileError: if the file cannot be read.
    """
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise InputError('Cannot parse file', f'"{path}" is not valid JSON: {exc}.') from exc
    except OSError as exc:
        raise os_to_embed3_error(exc, path) from exc
