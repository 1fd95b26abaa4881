# -*- coding: utf-8 -*-
"""
Text and structured reports of verdicts and certificate verifications.

The structured report is a JSON document with ``format = "embed3-report"`` and a
version. Its keys are:

    status, exit_code, field, simple_connectivity, stages, obstruction, certificate,
    dual_graph, chambers, cross_field, warnings

Errors that stop a command before it reaches a verdict are reported with a null
``status`` and an ``error`` object instead.

"""
from embed3.constants import Status, Outcome, ExitCode, REPORT_FORMAT, REPORT_VERSION
from embed3.pipeline import sorted_chambers
from embed3.utils.serializer import dumps, error_to_dict, graph_to_dict

TEXT = 'text'
STRUCTURED = 'structured'
FORMATS = (TEXT, STRUCTURED)

_NOTES = {
    Status.EmbeddableCertified: 'An even rotation framework exists, so the complex '
                                'embeds in 3-space.',
    Status.NotEmbeddable: 'The dual matroid is not graphic. Equivalently the cycle '
                          'space has no sparse generating set, so the complex does not '
                          'embed in 3-space.',
    Status.HypothesisFailed: 'The complex is not locally 2-connected or not local, so '
                             'the graphicness criterion does not apply.',
    Status.Inconclusive: 'The pipeline could not certify the complex.',
}


def _cross_field_dict(cross):
    return {
        'isomorphic': cross.isomorphic,
        'statuses': {name: v.status.value for name, v in sorted(cross.verdicts.items())},
        'pairs': [[a, b, iso is not None and all(x == y for x, y in iso.items())]
                  for (a, b), iso in sorted(cross.pairs.items())],
    }


def verdict_to_dict(verdict, cross_field=None):
    """Structured report of a :class:`embed3.pipeline.Verdict`."""
    return {
        'format': REPORT_FORMAT,
        'version': REPORT_VERSION,
        'status': verdict.status.value,
        'exit_code': int(verdict.exit_code),
        'field': verdict.field.name,
        'simple_connectivity': verdict.connectivity.value if verdict.connectivity else None,
        'stages': [{'name': s.name, 'outcome': s.outcome.value, 'detail': s.detail}
                   for s in verdict.stages],
        'obstruction': verdict.obstruction,
        'certificate': verdict.certificate.to_dict() if verdict.certificate else None,
        'dual_graph': graph_to_dict(verdict.dual_graph) if verdict.dual_graph else None,
        'chambers': sorted_chambers(verdict.chambers) if verdict.chambers else None,
        'cross_field': _cross_field_dict(cross_field) if cross_field else None,
        'warnings': list(verdict.warnings),
    }


def _stage_lines(stages):
    width = max((len(s.name) for s in stages), default=0)
    return [f'  {s.name:<{width}}  {s.outcome.value:<7}  {s.detail}'.rstrip()
            for s in stages]


def verdict_to_text(verdict, cross_field=None):
    lines = [f'{verdict.status.value} over {verdict.field.name}', '']
    lines += _stage_lines(verdict.stages)
    lines.append('')

    if verdict.connectivity:
        lines.append(f'Simple connectivity: {verdict.connectivity.value}')
    if verdict.dual_graph:
        g = verdict.dual_graph
        lines.append(f'Dual graph: {g.number_of_vertices()} vertices, '
                     f'{g.number_of_edges()} edges')
    if verdict.chambers:
        lines.append('Chambers:')
        for b, faces in sorted_chambers(verdict.chambers):
            lines.append(f'  {b}: {", ".join(str(f) for f in faces)}')
    if verdict.obstruction:
        lines.append('Obstruction:')
        for key, value in sorted(verdict.obstruction.items()):
            lines.append(f'  {key}: {value}')
    if verdict.certificate:
        lines.append(f'Certificate: {len(verdict.certificate.ledger)} parallel faces '
                     f'added')
    if cross_field:
        statuses = ', '.join(f'{name} {v.status.value}'
                             for name, v in sorted(cross_field.verdicts.items()))
        lines.append(f'Cross-field: {statuses}')
        lines.append('  dual matroids are pairwise isomorphic' if cross_field.isomorphic
                     else '  dual matroids are NOT pairwise isomorphic')
    if verdict.warnings:
        lines.append('Warnings:')
        lines += [f'  {w}' for w in verdict.warnings]

    lines.append(_NOTES[verdict.status])
    return '\n'.join(lines) + '\n'


def report(verdict, fmt=TEXT, cross_field=None):
    """
    Renders a verdict.

    :param Verdict verdict: Pipeline outcome.
    :param str fmt: 'text' or 'structured'.
    :param CrossFieldReport cross_field: Optional cross-field comparison.
    :returns: The report and the process exit code.
    :rtype: tuple[str, int]
    """
    if fmt not in FORMATS:
        raise ValueError(f'Unknown report format "{fmt}"')
    if fmt == STRUCTURED:
        text = dumps(verdict_to_dict(verdict, cross_field))
    else:
        text = verdict_to_text(verdict, cross_field)
    return text, int(verdict.exit_code)


def verification_report(result, fmt=TEXT):
    """Renders a :class:`embed3.pipeline.VerificationReport`."""
    if fmt == STRUCTURED:
        return dumps({
            'format': REPORT_FORMAT,
            'version': REPORT_VERSION,
            'valid': result.valid,
            'checks': [{'name': s.name, 'outcome': s.outcome.value, 'detail': s.detail}
                       for s in result.checks],
        })
    verdict = 'valid' if result.valid else 'INVALID'
    failed = sum(1 for s in result.checks if s.outcome is Outcome.Failed)
    lines = [f'Certificate {verdict} ({failed} failed checks)', '']
    lines += _stage_lines(result.checks)
    return '\n'.join(lines) + '\n'


def error_report(err, exit_code=None):
    """
    Structured report of an error that stopped a command before it produced a verdict.
    The ``status`` is null and ``error`` holds the fields of the exception.

    :param Exception err: The error.
    :param int exit_code: Process exit code. Defaults to the exit code of ``err``.
    :rtype: str
    """
    code = exit_code or getattr(err, 'exit_code', ExitCode.InternalError)
    return dumps({
        'format': REPORT_FORMAT,
        'version': REPORT_VERSION,
        'status': None,
        'exit_code': int(code),
        'error': error_to_dict(err),
    })
