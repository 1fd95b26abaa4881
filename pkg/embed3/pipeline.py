# -*- coding: utf-8 -*-
"""
The decision pipeline.

:func:`decide` runs the stages below in order and stops at the first stage which
determines the verdict:

    validate -> locally-2-connected -> k-local -> dual-matroid -> graph-realization ->
    rotation-framework -> sparsity -> junkify -> face-parity -> induces ->
    simple-connectivity -> evenness -> certificate

A dual matroid which is not graphic only refutes embeddability if both hypotheses hold.
If they fail the verdict is HYPOTHESIS_FAILED and the realization result is recorded as
a note. Simple connectivity is checked by the GF(2) homology surrogate and, where
possible, certified by simplifying a presentation of the fundamental group.

"""
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from packaging.version import Version, InvalidVersion

from embed3.algebra import Field, GF2, GF3, GF5, QQ
from embed3.complex import (
    DirectedComplex, validate, h1_f2_trivial, fundamental_group_report, face_degree,
)
from embed3.constants import (
    Status, STATUS_EXIT_CODES, Connectivity, GroupStatus, Outcome, Colour, Parity,
    CERTIFICATE_FORMAT, CERTIFICATE_VERSION, MAX_CIRCUIT_SUBSETS, MAX_REALIZATION_STEPS,
    MAX_ISOMORPHISM_STEPS, TIETZE_BUDGET, MAX_RELATOR_LENGTH,
)
from embed3.errors import (
    CertificateError, DisconnectedError, ScaleExceededError, FRAMEWORK_ERRORS,
    InputError, Embed3Error,
)
from embed3.locality import is_k_local, is_locally_2connected, g_v
from embed3.matroid import (
    dual_matroid, graph_realization, restriction, components, matroid_isomorphic,
)
from embed3.planar import dual_graph_of_embedding
from embed3.rotation import (
    construct_rotation_framework, sparsity_check, junkify, colour_edges,
    face_parity_check, induces_check, is_even, chamber_boundaries, is_subdivision,
    framework_to_list, framework_from_list,
)
from embed3.utils import id_key
from embed3.utils.serializer import (
    graph_to_dict, graph_from_dict, ledger_to_list, ledger_from_list,
)

logger = logging.getLogger(__name__)

CROSS_FIELDS = (GF2, GF3, GF5, QQ)

_Limits = namedtuple('Limits', [
    'max_circuit_subsets', 'max_realization_steps', 'max_isomorphism_steps',
    'tietze_budget', 'max_relator_length',
])


class Limits(_Limits):
    """Budgets for the expensive searches of the pipeline."""

    __slots__ = ()

    def __new__(cls, max_circuit_subsets=MAX_CIRCUIT_SUBSETS,
                max_realization_steps=MAX_REALIZATION_STEPS,
                max_isomorphism_steps=MAX_ISOMORPHISM_STEPS,
                tietze_budget=TIETZE_BUDGET, max_relator_length=MAX_RELATOR_LENGTH):
        return super().__new__(cls, max_circuit_subsets, max_realization_steps,
                               max_isomorphism_steps, tietze_budget, max_relator_length)

    @classmethod
    def from_config(cls, conf):
        return cls(**{name: conf.get('limits', name) for name in cls._fields})


StageRecord = namedtuple('StageRecord', ['name', 'outcome', 'detail'])
VerificationReport = namedtuple('VerificationReport', ['valid', 'checks'])
CrossFieldReport = namedtuple('CrossFieldReport', ['verdicts', 'isomorphic', 'pairs'])


class Verdict:
    """
    Outcome of :func:`decide`.

    :ivar Status status: Verdict.
    :ivar Field field: Field of the dual matroid.
    :ivar list stages: :class:`StageRecord` per stage that was run.
    :ivar Certificate certificate: Present iff the status is EMBEDDABLE_CERTIFIED.
    :ivar dict obstruction: Witnesses for a negative or failed outcome.
    :ivar Connectivity connectivity: How simple connectivity was established, if the
        pipeline got that far.
    :ivar GroupReport group: Fundamental group simplification, if attempted.
    :ivar Graph dual_graph: Realizing graph of the dual matroid, if found.
    :ivar dict chambers: Faces at every vertex of the dual graph, if it was found.
    :ivar list warnings: Warnings logged during the run.
    """

    def __init__(self, field):
        self.status = None
        self.field = field
        self.stages = []
        self.certificate = None
        self.obstruction = {}
        self.connectivity = None
        self.group = None
        self.dual_graph = None
        self.chambers = None
        self.warnings = []

    @property
    def exit_code(self):
        return STATUS_EXIT_CODES[self.status]

    def stage(self, name):
        """Returns the record of the stage ``name`` or ``None`` if it did not run."""
        return next((s for s in self.stages if s.name == name), None)

    def _record(self, name, outcome, detail=''):
        self.stages.append(StageRecord(name, outcome, detail))
        log = logger.info if outcome is not Outcome.Failed else logger.warning
        log('Stage %s: %s%s', name, outcome.value, f' ({detail})' if detail else '')

    def _finish(self, status):
        self.status = status
        logger.info('Verdict over %s: %s', self.field.name, status.value)
        return self

    def __repr__(self):
        return f'<Verdict {self.status.value if self.status else None} over ' \
               f'{self.field.name}>'


# ==== certificate =======================================================================

class Certificate:
    """
    Everything needed to re-check an embeddability claim: the complex and its
    junkified extension, the induced frameworks on both, the colouring of the
    extension, the dual graph and its subdivision, and the junkify ledger.
    """

    def __init__(self, field, complex, extended_complex, framework, base_framework,
                 colours, dual_graph, extended_graph, ledger):
        self.field = field
        self.complex = complex
        self.extended_complex = extended_complex
        self.framework = framework
        self.base_framework = base_framework
        self.colours = dict(colours)
        self.dual_graph = dual_graph
        self.extended_graph = extended_graph
        self.ledger = tuple(ledger)

    def to_dict(self):
        return {
            'format': CERTIFICATE_FORMAT,
            'version': CERTIFICATE_VERSION,
            'field': self.field.name,
            'complex': self.complex.to_dict(),
            'extended_complex': self.extended_complex.to_dict(),
            'framework': framework_to_list(self.framework),
            'base_framework': framework_to_list(self.base_framework),
            'colours': [[e, self.colours[e].value] for e in self.extended_complex.edges],
            'dual_graph': graph_to_dict(self.dual_graph),
            'extended_graph': graph_to_dict(self.extended_graph),
            'ledger': ledger_to_list(self.ledger),
        }

    @classmethod
    def from_dict(cls, raw):
        """
        Parses a certificate document.

        :raises CertificateError: if the document is not a certificate, has an
            incompatible version, or its parts do not fit together.
        """
        if not isinstance(raw, dict) or raw.get('format') != CERTIFICATE_FORMAT:
            raise CertificateError('Not a certificate',
                                   f'Expected format "{CERTIFICATE_FORMAT}".')
        try:
            version = Version(str(raw.get('version')))
        except InvalidVersion as exc:
            raise CertificateError('Invalid certificate version', str(exc)) from exc
        if version.major != Version(CERTIFICATE_VERSION).major:
            raise CertificateError('Incompatible certificate',
                                   f'Version {version} cannot be read, expected '
                                   f'{CERTIFICATE_VERSION}.')

        try:
            field = Field.parse(raw['field'])
            c = validate(raw['complex'])
            c_prime = validate(raw['extended_complex'])
            s = framework_from_list(c, raw['base_framework'])
            s_prime = framework_from_list(c_prime, raw['framework'])
            colours = {e: Colour(col) for e, col in raw['colours']}
            g = graph_from_dict(raw['dual_graph'])
            g_prime = graph_from_dict(raw['extended_graph'])
            ledger = ledger_from_list(raw['ledger'])
        except CertificateError:
            raise
        except (InputError, KeyError, TypeError, ValueError) as exc:
            raise CertificateError('Malformed certificate', str(exc)) from exc

        if set(colours) != set(c_prime.edges):
            raise CertificateError('Malformed certificate',
                                   'Colours must be given for every edge.')

        return cls(field, c, c_prime, s_prime, s, colours, g, g_prime, ledger)

    def __repr__(self):
        return f'<Certificate over {self.field.name}: {len(self.ledger)} added faces>'


def _dual_round_trip(s, g):
    """Vertices whose embedding's dual graph differs from ``g_v``."""
    bad = []
    for v in s.complex.vertices:
        dual, _ = dual_graph_of_embedding(s.embeddings[v])
        if not dual.same_as(g_v(g, s.complex, v)):
            bad.append(v)
    return bad


def verify_certificate(cert, workers=1):
    """
    Re-checks a certificate from its serialized parts only: colours, face parities,
    evenness, the induced framework, the dual graphs at every vertex, the subdivision
    of the dual graph and the minimum face-degree.

    :param Certificate cert: Parsed certificate.
    :param int workers: Threads for the per-face parity checks.
    :rtype: VerificationReport
    """
    checks = []

    def check(name, ok, detail=''):
        checks.append(StageRecord(name, Outcome.Passed if ok else Outcome.Failed, detail))
        if not ok:
            logger.warning('Certificate check %s failed%s', name,
                           f': {detail}' if detail else '')

    c, c_prime = cert.complex, cert.extended_complex
    s, s_prime = cert.base_framework, cert.framework

    low = [e for e in c_prime.edges if face_degree(c_prime, e) < 3]
    check('min-face-degree', not low, f'edges {low}' if low else '')

    try:
        colours = colour_edges(s_prime)
    except Embed3Error as exc:
        check('colours', False, str(exc))
        return VerificationReport(False, checks)
    wrong = [e for e in c_prime.edges if colours[e] is not cert.colours[e]]
    check('colours', not wrong, f'edges {wrong}' if wrong else '')

    if not low:
        with ThreadPoolExecutor(max_workers=max(1, workers),
                                thread_name_prefix='embed3-parity') as executor:
            parities = list(executor.map(
                lambda f: face_parity_check(s_prime, f, colours), c_prime.faces))
        odd = [f for f, p in zip(c_prime.faces, parities) if p is Parity.Odd]
        check('face-parity', not odd, f'odd faces {odd}' if odd else '')

    even = is_even(s_prime, colours)
    check('evenness', even.even, f'odd cycle {list(even.witness)}' if not even.even else '')

    try:
        check('induces', induces_check(s_prime, s))
    except Embed3Error as exc:
        check('induces', False, str(exc))

    for name, fw, g in (('dual-graph', s, cert.dual_graph),
                        ('extended-dual-graph', s_prime, cert.extended_graph)):
        try:
            bad = _dual_round_trip(fw, g)
        except Embed3Error as exc:
            check(name, False, str(exc))
        else:
            check(name, not bad, f'vertices {bad}' if bad else '')

    check('subdivision', is_subdivision(cert.extended_graph, cert.dual_graph, cert.ledger))

    sparse = sparsity_check(c, cert.dual_graph)
    check('sparsity', sparse.sparse, f'{len(sparse.violations)} violations'
          if not sparse.sparse else '')

    valid = all(r.outcome is Outcome.Passed for r in checks)
    logger.info('Certificate %s', 'verified' if valid else 'rejected')
    return VerificationReport(valid, checks)


# ==== decision ==========================================================================

def _realization_note(m, limits):
    try:
        realization = graph_realization(m, limits.max_realization_steps,
                                        limits.max_circuit_subsets)
    except ScaleExceededError:
        return 'realization not attempted within the limits'
    if realization is None:
        return 'dual matroid is not graphic, which is no refutation since the ' \
               'hypotheses fail'
    return 'dual matroid is graphic'


def _non_graphic_components(m, limits):
    loops = set(m.loops())
    rest = [e for e in m.ground if e not in loops]
    if not rest:
        return []
    loopless = restriction(m, rest)
    bad = []
    for comp in components(loopless):
        sub = restriction(loopless, comp)
        if graph_realization(sub, limits.max_realization_steps,
                             limits.max_circuit_subsets) is None:
            bad.append(list(comp))
    return bad


def _connectivity(c, verdict, limits):
    """Runs the simple connectivity gate and returns ``True`` if it passes."""
    if not h1_f2_trivial(c):
        verdict.connectivity = Connectivity.RefutedByHomology
        verdict._record('simple-connectivity', Outcome.Failed,
                        'face boundaries do not span the GF(2) cycle space')
        return False

    try:
        verdict.group = fundamental_group_report(c, limits.tietze_budget,
                                                 limits.max_relator_length)
    except DisconnectedError:
        verdict.connectivity = Connectivity.HomologyOnly
        verdict._record('simple-connectivity', Outcome.Passed,
                        'homology surrogate only, the 1-skeleton is disconnected')
        return True

    if verdict.group.status is GroupStatus.CertifiedTrivial:
        verdict.connectivity = Connectivity.CertifiedTrivial
        detail = 'fundamental group certified trivial'
    else:
        verdict.connectivity = Connectivity.HomologyOnly
        detail = f'homology surrogate only, {len(verdict.group.reduced_generators)} ' \
                 f'generators left'
    verdict._record('simple-connectivity', Outcome.Passed, detail)
    return True


def decide(c, k=GF2, workers=1, allow_two_vertex=False, limits=None):
    """
    Decides whether a complex embeds in 3-space, under the hypotheses of simple
    connectivity, local 2-connectivity and locality.

    :param c: :class:`DirectedComplex` or a raw description accepted by
        :func:`embed3.complex.validate`.
    :param Field k: Field of the dual matroid.
    :param int workers: Threads for per-vertex and per-face checks.
    :param bool allow_two_vertex: Accept link graphs with two vertices.
    :param Limits limits: Search budgets.
    :rtype: Verdict
    :raises ComplexError: if ``c`` is not a valid complex.
    :raises ScaleExceededError: if a search exceeds its budget.
    """
    limits = limits or Limits()
    verdict = Verdict(k)

    if not isinstance(c, DirectedComplex):
        c = validate(c)
    verdict._record('validate', Outcome.Passed,
                    f'{len(c.vertices)} vertices, {len(c.edges)} edges, '
                    f'{len(c.faces)} faces')

    # hypotheses are both evaluated so that every failure is reported

    connected = is_locally_2connected(c, allow_two_vertex)
    not_2conn = [v for v, ok in connected.items() if not ok]
    verdict._record('locally-2-connected',
                    Outcome.Failed if not_2conn else Outcome.Passed,
                    f'links not 2-connected at {not_2conn}' if not_2conn else '')

    locality = is_k_local(c, k, workers, limits.max_circuit_subsets)
    failures = locality.failures()
    verdict._record('k-local', Outcome.Failed if failures else Outcome.Passed,
                    f'fails at {[r.vertex for r in failures]}' if failures else '')

    m = dual_matroid(c, k)
    loops = m.loops()
    if m.rank == 0 and loops:
        detail = f'sum of {len(loops)} loops'
    else:
        detail = f'rank {m.rank} on {len(m.ground)} faces, {len(loops)} loops'
    logger.info('Dual matroid over %s: %s', k.name, detail)
    verdict._record('dual-matroid', Outcome.Info, detail)

    if not_2conn or failures:
        if not_2conn:
            verdict.obstruction['not_2_connected'] = not_2conn
        if failures:
            verdict.obstruction['locality'] = [
                {'vertex': r.vertex, 'circuit': list(r.witness.circuit),
                 'only_in': r.witness.side} for r in failures
            ]
        verdict._record('graph-realization', Outcome.Info, _realization_note(m, limits))
        return verdict._finish(Status.HypothesisFailed)

    realization = graph_realization(m, limits.max_realization_steps,
                                    limits.max_circuit_subsets)
    if realization is None:
        verdict.obstruction['non_graphic_components'] = _non_graphic_components(m, limits)
        verdict._record('graph-realization', Outcome.Failed,
                        'dual matroid is not graphic; no embedding exists since both '
                        'hypotheses hold')
        return verdict._finish(Status.NotEmbeddable)

    g = realization.graph
    verdict.dual_graph = g
    verdict.chambers = chamber_boundaries(c, g)
    verdict._record('graph-realization', Outcome.Passed,
                    f'{g.number_of_vertices()} vertices, {g.number_of_edges()} edges')

    try:
        s = construct_rotation_framework(c, g, allow_two_vertex=allow_two_vertex,
                                         limit=limits.max_circuit_subsets)
    except FRAMEWORK_ERRORS as exc:
        verdict.obstruction['framework'] = str(exc)
        verdict._record('rotation-framework', Outcome.Failed, str(exc))
        return verdict._finish(Status.Inconclusive)
    verdict._record('rotation-framework', Outcome.Passed)

    sparse = sparsity_check(c, g)
    if not sparse.sparse:
        verdict.obstruction['sparsity'] = [list(x) for x in sparse.violations]
        verdict._record('sparsity', Outcome.Failed,
                        f'{len(sparse.violations)} violations')
        return verdict._finish(Status.Inconclusive)
    verdict._record('sparsity', Outcome.Passed)

    try:
        result = junkify(c, g, s)
    except FRAMEWORK_ERRORS as exc:
        verdict.obstruction['junkify'] = str(exc)
        verdict._record('junkify', Outcome.Failed, str(exc))
        return verdict._finish(Status.Inconclusive)
    verdict._record('junkify', Outcome.Passed, f'{len(result.ledger)} faces added')

    s_prime = result.framework
    colours = colour_edges(s_prime)
    with ThreadPoolExecutor(max_workers=max(1, workers),
                            thread_name_prefix='embed3-parity') as executor:
        parities = list(executor.map(lambda f: face_parity_check(s_prime, f, colours),
                                     result.complex.faces))
    odd = [f for f, p in zip(result.complex.faces, parities) if p is Parity.Odd]
    if odd:
        verdict.obstruction['odd_faces'] = odd
        verdict._record('face-parity', Outcome.Failed, f'odd faces {odd}')
        if not h1_f2_trivial(c):
            verdict.connectivity = Connectivity.RefutedByHomology
        return verdict._finish(Status.Inconclusive)
    verdict._record('face-parity', Outcome.Passed, f'{len(parities)} faces even')

    if not induces_check(s_prime, s):
        verdict._record('induces', Outcome.Failed)
        return verdict._finish(Status.Inconclusive)
    verdict._record('induces', Outcome.Passed)

    if not _connectivity(c, verdict, limits):
        return verdict._finish(Status.Inconclusive)

    even = is_even(s_prime, colours)
    if not even.even:
        verdict.obstruction['odd_cycle'] = list(even.witness)
        verdict._record('evenness', Outcome.Failed, f'odd cycle {list(even.witness)}')
        return verdict._finish(Status.Inconclusive)
    verdict._record('evenness', Outcome.Passed)

    verdict.certificate = Certificate(k, c, result.complex, s_prime, s, colours, g,
                                      result.graph, result.ledger)
    verdict._record('certificate', Outcome.Passed)
    return verdict._finish(Status.EmbeddableCertified)


def decide_cross_field(c, fields=CROSS_FIELDS, workers=1, allow_two_vertex=False,
                       limits=None):
    """
    Runs :func:`decide` over several fields and checks that the dual matroids of all
    certified runs are pairwise isomorphic.

    :returns: Verdicts by field name, overall result and per pair the bijection found
        (``None`` if the matroids are not isomorphic).
    :rtype: CrossFieldReport
    """
    limits = limits or Limits()
    if not isinstance(c, DirectedComplex):
        c = validate(c)

    verdicts = {k.name: decide(c, k, workers, allow_two_vertex, limits) for k in fields}
    certified = [k for k in fields if verdicts[k.name].status is Status.EmbeddableCertified]
    matroids = {k.name: dual_matroid(c, k) for k in certified}

    pairs = {}
    for i, k1 in enumerate(certified):
        for k2 in certified[i + 1:]:
            iso = matroid_isomorphic(matroids[k1.name], matroids[k2.name],
                                     limits.max_isomorphism_steps,
                                     limits.max_circuit_subsets)
            pairs[(k1.name, k2.name)] = iso
            if iso is None:
                logger.warning('Dual matroids over %s and %s are not isomorphic',
                               k1.name, k2.name)
            elif any(a != b for a, b in iso.items()):
                logger.info('Dual matroids over %s and %s are isomorphic, but not by '
                            'the identity', k1.name, k2.name)

    isomorphic = all(iso is not None for iso in pairs.values())
    logger.info('Cross-field check over %s: %s', [k.name for k in fields],
                'isomorphic' if isomorphic else 'not isomorphic')
    return CrossFieldReport(verdicts, isomorphic, pairs)


def sorted_chambers(chambers):
    """Chambers as a list of ``[dual vertex, [faces]]`` in vertex order."""
    return [[b, list(faces)] for b, faces in sorted(chambers.items(),
                                                    key=lambda item: id_key(item[0]))]
