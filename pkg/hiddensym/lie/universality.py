"""
Universality verdicts for globally controlled graphs.
"""
from __future__ import unicode_literals

from ..algebra.dense import BudgetExceededError
from ..algebra.hamiltonians import build_generators
from ..enums import Verdict
from ..graphs.graph import Graph
from ..log import logger
from ..symmetry.commutant import DEFAULT_MAX_UNKNOWNS, commutant
from ..symmetry.report import aut_span_dim
from .closure import lie_closure

__all__ = (
    'UniversalityResult',
    'is_universal',
)


class UniversalityResult(object):
    """
    Verdict plus the evidence it rests on.

    :param reason: ``'symmetry'`` (a non-trivial commutant element),
        ``'closure'`` (Lie closure dimension), or ``'budget'`` when nothing
        conclusive could be computed.
    """
    def __init__(self, verdict, reason, commutant_dim=None, aut_span_dim=None,
                 lie_dim=None, budget_hit=False):
        assert verdict in Verdict._ALL
        self.verdict = verdict
        self.reason = reason
        self.commutant_dim = commutant_dim
        self.aut_span_dim = aut_span_dim
        self.lie_dim = lie_dim
        self.budget_hit = budget_hit

    def to_json(self):
        return {
            'verdict': self.verdict,
            'reason': self.reason,
            'commutant_dim': self.commutant_dim,
            'aut_span_dim': self.aut_span_dim,
            'lie_dim': self.lie_dim,
            'budget_hit': self.budget_hit,
        }

    def __repr__(self):
        return 'UniversalityResult(%r, reason=%r)' % (self.verdict, self.reason)


def is_universal(graph, extra=(), include_hz=True, max_lie_qubits=5, max_unknowns=DEFAULT_MAX_UNKNOWNS,
                 lie_method='auto', rng=None):
    """
    Decide whether the global-control set of `graph` (plus `extra`)
    generates ``su(2**n)``.

    1. A commutant of dimension above one is a non-trivial symmetry, so the
       set is not universal. When the commutant is over budget, a
       non-trivial combination of automorphism operators commuting with
       `extra` is used instead.
    2. Otherwise the Lie closure decides, for up to `max_lie_qubits` qubits.
    3. Otherwise the verdict is undecided.
    """
    assert isinstance(graph, Graph)
    extra = list(extra)
    commutant_dim = span_dim = None

    generators = build_generators(graph, include_hz=include_hz, extra=extra)
    try:
        commutant_dim = commutant(generators, graph.n, max_unknowns=max_unknowns, rng=rng).dim
    except BudgetExceededError as e:
        logger.info('Universality: commutant skipped (%s).', e.message)
    try:
        span_dim = aut_span_dim(graph, extra, rng=rng)
    except BudgetExceededError as e:
        logger.info('Universality: automorphism span skipped (%s).', e.message)

    if (commutant_dim or 0) > 1 or (commutant_dim is None and (span_dim or 0) > 1):
        return UniversalityResult(Verdict.NOT_UNIVERSAL, 'symmetry', commutant_dim, span_dim)

    if graph.n <= max_lie_qubits:
        closure = lie_closure(generators, graph.n, method=lie_method)
        if closure.universal:
            return UniversalityResult(Verdict.UNIVERSAL, 'closure', commutant_dim, span_dim, closure.dim)
        if closure.budget_hit:
            return UniversalityResult(Verdict.UNDECIDED, 'budget', commutant_dim, span_dim,
                                      closure.dim, True)
        return UniversalityResult(Verdict.NOT_UNIVERSAL, 'closure', commutant_dim, span_dim, closure.dim)

    return UniversalityResult(Verdict.UNDECIDED, 'budget', commutant_dim, span_dim)
