import json

import pytest

from embed3.algebra import GF3
from embed3.corpus import corpus
from embed3.pipeline import decide, decide_cross_field, verify_certificate
from embed3.errors import DegenerateFaceError
from embed3.report import (
    report, verdict_to_dict, verification_report, error_report, TEXT, STRUCTURED,
)


KEYS = {
    'format', 'version', 'status', 'exit_code', 'field', 'simple_connectivity', 'stages',
    'obstruction', 'certificate', 'dual_graph', 'chambers', 'cross_field', 'warnings',
}


def test_structured_report_of_sphere():
    verdict = decide(corpus('tetrahedron'), GF3)
    text, code = report(verdict, STRUCTURED)
    doc = json.loads(text)

    assert set(doc) == KEYS
    assert code == 0
    assert doc['status'] == 'EMBEDDABLE_CERTIFIED'
    assert doc['exit_code'] == 0
    assert doc['field'] == 'gf3'
    assert doc['certificate']['format'] == 'embed3-certificate'
    assert len(doc['chambers']) == 2
    assert doc['stages'][0] == {'name': 'validate', 'outcome': 'pass',
                                'detail': '4 vertices, 6 edges, 4 faces'}
    assert doc['cross_field'] is None


def test_structured_report_of_cone():
    text, code = report(decide(corpus('cone(K5)')), STRUCTURED)
    doc = json.loads(text)
    assert code == 2
    assert doc['status'] == 'HYPOTHESIS_FAILED'
    assert doc['certificate'] is None
    assert doc['dual_graph'] is None
    assert doc['obstruction']['locality'][0]['vertex'] == 0


def test_text_report():
    text, code = report(decide(corpus('torus7')))
    assert code == 3
    assert text.startswith('INCONCLUSIVE over gf2\n')
    assert 'simple-connectivity' in text
    assert 'Simple connectivity: refuted-by-homology' in text
    assert text.endswith('The pipeline could not certify the complex.\n')

    text, _ = report(decide(corpus('octahedron')), TEXT)
    assert 'Dual graph: 2 vertices, 8 edges' in text
    assert 'Certificate:' in text


def test_cross_field_section():
    c = corpus('tetrahedron')
    cross = decide_cross_field(c)
    doc = verdict_to_dict(decide(c), cross)
    assert doc['cross_field']['isomorphic']
    assert set(doc['cross_field']['statuses']) == {'gf2', 'gf3', 'gf5', 'rational'}
    assert all(identity for _, _, identity in doc['cross_field']['pairs'])

    text, _ = report(decide(c), TEXT, cross)
    assert 'dual matroids are pairwise isomorphic' in text


def test_unknown_format():
    with pytest.raises(ValueError):
        report(decide(corpus('triangle')), 'xml')


def test_verification_report():
    result = verify_certificate(decide(corpus('tetrahedron')).certificate)
    text = verification_report(result)
    assert text.startswith('Certificate valid (0 failed checks)')

    doc = json.loads(verification_report(result, STRUCTURED))
    assert doc['valid']
    assert [c['outcome'] for c in doc['checks']] == ['pass'] * len(result.checks)


def test_error_report():
    exc = DegenerateFaceError('Degenerate face', 'Face f3 repeats a vertex.', face='f3')
    doc = json.loads(error_report(exc))
    assert doc['format'] == 'embed3-report'
    assert doc['status'] is None
    assert doc['exit_code'] == 10
    assert doc['error']['type'] == 'DegenerateFaceError'
    assert doc['error']['face'] == 'f3'
    assert doc['error']['message'] == 'Face f3 repeats a vertex.'

    doc = json.loads(error_report(RuntimeError('boom')))
    assert doc['exit_code'] == 13
    assert doc['error']['title'] == 'An unexpected error occurred'
