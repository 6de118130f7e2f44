"""
The command line workflows. Each returns a process exit code (see
:class:`hiddensym.enums.ExitCode`) and writes its report to `out`.
"""
from __future__ import unicode_literals
import io
import os
import sys
import time

from .algebra.dense import BudgetExceededError
from .algebra.hamiltonians import build_generators, generators_hash
from .algebra.pauli import AlgebraError, PauliSum
from .census.census import run_census
from .census.checkpoint import CheckpointError
from .census.query import CensusFileError, census_query
from .constructions.catalog import ConfigError
from .constructions.result_one import build_result_one, locate_result_one_graph, verify_result_one
from .constructions.result_two import build_result_two, verify_result_two
from .constructions.verification import ConstructionError
from .enums import ExitCode, Verdict
from .format import format_records, print_report, write_formatted
from .graphs.automorphisms import automorphism_group, canonical_form
from .graphs.graph import Graph, GraphError, is_connected
from .graphs.graph6 import Graph6Error, emit_graph6, parse_graph6
from .lie.closure import lie_closure
from .lie.universality import is_universal
from .log import logger
from .subspaces import decompose, extended_blocks_Q

__all__ = (
    'InputError',
    'cmd_analyze',
    'cmd_census',
    'cmd_config',
    'cmd_query',
    'cmd_verify',
    'load_extra',
    'load_graph',
)

#: Line separating Hamiltonians in an --extra file.
EXTRA_SEPARATOR = '---'

# Exceptions caused by bad user input.
_INPUT_ERRORS = (AlgebraError, CensusFileError, CheckpointError, ConfigError, ConstructionError,
                 Graph6Error, GraphError, IOError)


class InputError(Exception):
    def __init__(self, message):
        super(InputError, self).__init__(message)
        self.message = message


def _message(e):
    return getattr(e, 'message', None) or '%s' % (e, )


def load_graph(session, text):
    """
    A graph from a catalog name, a graph6 string, or a file holding either
    a graph6 line or an edge list (vertex count on the first line, then one
    0-based ``i j`` pair per line).
    """
    if text in session.catalog.graphs:
        return session.catalog.get_graph(text).graph

    if not os.path.isfile(text):
        return parse_graph6(text)

    with io.open(text, encoding='utf-8') as f:
        lines = [l.strip() for l in f if l.strip() and not l.strip().startswith('#')]
    if not lines:
        raise InputError('%s: empty graph file.' % text)
    if len(lines) == 1 and not lines[0].isdigit():
        return parse_graph6(lines[0])

    try:
        n = int(lines[0])
        edges = [tuple(int(v) for v in l.split()) for l in lines[1:]]
    except ValueError:
        raise InputError('%s: expected the vertex count, then one "i j" edge per line.' % text)
    if any(len(e) != 2 for e in edges):
        raise InputError('%s: every edge line needs two vertices.' % text)
    return Graph(n, edges)


def load_extra(path):
    " PauliSums of an --extra file, separated by ``---`` lines. "
    with io.open(path, encoding='utf-8') as f:
        text = f.read()

    blocks, current = [], []
    for line in text.splitlines():
        if line.strip() == EXTRA_SEPARATOR:
            blocks.append('\n'.join(current))
            current = []
        else:
            current.append(line)
    blocks.append('\n'.join(current))

    result = []
    for block in blocks:
        if any(l.strip() and not l.strip().startswith('#') for l in block.splitlines()):
            h = PauliSum.parse(block)
            if not h.is_hermitian():
                raise InputError('%s: extra Hamiltonians must be Hermitian.' % path)
            result.append(h)
    return result


def _error(out, pretty, e, session):
    print_report({'error': _message(e), 'seed': session.seed}, pretty, title='error', file=out)


class _Timer(object):
    " Elapsed milliseconds per named stage, from a monotonic clock. "
    def __init__(self):
        self.timings = {}

    def run(self, name, func, *a, **kw):
        start = time.perf_counter()
        try:
            return func(*a, **kw)
        finally:
            self.timings[name] = int(round((time.perf_counter() - start) * 1000))


def cmd_analyze(session, graph_text, lie=False, blocks=False, extra_file=None, qaoa=False,
                allow_disconnected=False, pretty=False, out=None):
    try:
        graph = load_graph(session, graph_text)
        if not allow_disconnected and not is_connected(graph):
            raise InputError('Graph %s is disconnected (use --allow-disconnected).' % emit_graph6(graph))
        extra = load_extra(extra_file) if extra_file else []
        generators = build_generators(graph, include_hz=not qaoa, extra=extra)
    except (InputError, ) + _INPUT_ERRORS as e:
        logger.error('analyze: %s', _message(e))
        _error(out, pretty, e, session)
        return ExitCode.INPUT_ERROR

    timer = _Timer()
    rng = session.rng()
    group = timer.run('automorphisms', automorphism_group, graph)
    result = timer.run('universality', is_universal, graph, extra=extra, include_hz=not qaoa,
                       max_lie_qubits=session.max_lie_qubits, max_unknowns=session.max_unknowns,
                       lie_method=session.lie_method, rng=rng)

    report = {
        'command': 'analyze',
        'seed': session.seed,
        'graph6': emit_graph6(graph),
        'canonical_graph6': emit_graph6(canonical_form(graph)),
        'n': graph.n,
        'generator_set': 'qaoa' if qaoa else 'full',
        'extra': len(extra),
        'generators_hash': generators_hash(generators),
        'aut_order': group.order,
        'aut_span_dim': result.aut_span_dim,
        'commutant_dim': result.commutant_dim,
        'hidden': None,
        'lie_dim': result.lie_dim,
        'verdict': result.verdict,
        'reason': result.reason,
        'block_dims': None,
    }
    if result.commutant_dim is not None and result.aut_span_dim is not None:
        report['hidden'] = result.commutant_dim > result.aut_span_dim

    exit_code = ExitCode.UNDECIDED if result.verdict == Verdict.UNDECIDED else ExitCode.OK
    try:
        if lie and report['lie_dim'] is None:
            closure = timer.run('lie', lie_closure, generators, graph.n, method=session.lie_method,
                                tolerance=session.tolerance)
            report['lie_dim'] = closure.dim
            report['lie_exact'] = closure.exact
        if blocks:
            decomposition = timer.run('blocks', decompose, generators, graph.n, seed=session.seed,
                                      max_unknowns=session.max_unknowns)
            report['block_dims'] = decomposition.dims
            report['block_method'] = decomposition.method
    except BudgetExceededError as e:
        report['budget'] = e.message
        exit_code = ExitCode.UNDECIDED

    report['timings'] = timer.timings
    print_report(report, pretty, title='analyze %s' % report['graph6'], file=out)
    return exit_code


def cmd_census(session, n=None, input_file=None, jobs=1, checkpoint=None, resume=False,
               pretty=False, out=None):
    if checkpoint is None:
        name = 'census-n%s.jsonl' % n if n else '%s.census.jsonl' % os.path.basename(input_file)
        checkpoint = session.checkpoint_path(name)

    try:
        summary = run_census(n, jobs=jobs, checkpoint_path=checkpoint, resume=resume,
                             input_file=input_file, flush_every=session.census_flush_every,
                             timings=session.census_timings, max_unknowns=session.max_unknowns,
                             seed=session.seed)
    except _INPUT_ERRORS as e:
        logger.error('census: %s', _message(e))
        _error(out, pretty, e, session)
        return ExitCode.INPUT_ERROR

    report = summary.to_json()
    report.update({'command': 'census', 'seed': session.seed, 'checkpoint': checkpoint})
    print_report(report, pretty, title='census', file=out)
    return ExitCode.UNDECIDED if summary.failed else ExitCode.OK


def cmd_verify(session, result1=False, result2=False, N=7, force=False, blocks=False,
               locate=None, pretty=False, out=None):
    force = force or not session.strict_family
    try:
        if result1:
            bundle = build_result_one(catalog=session.catalog)
            verification = verify_result_one(bundle)
            if blocks:
                dims = decompose(bundle.generators, seed=session.seed,
                                 max_unknowns=session.max_unknowns).dims
                verification.fact('block_dims', dims)
            if locate:
                hits = [r.graph6 for r in census_query(locate, 'hidden == true and n == 7')]
                matches = locate_result_one_graph(hits)
                verification.fact('located', [[g, [list(p) for p in pairs]] for g, pairs in matches])
                canonical = emit_graph6(canonical_form(bundle.graph_H))
                verification.check('catalog graph among located graphs',
                                   canonical in set(emit_graph6(canonical_form(parse_graph6(g)))
                                                    for g, _ in matches))
        elif result2:
            family = session.catalog.get_family('Q')
            bundle = build_result_two(N, force=force, leaf=family.leaf, minimum=family.minimum)
            verification = verify_result_two(bundle, rng=session.rng())
            if blocks:
                dims = extended_blocks_Q(N, seed=session.seed, force=force,
                                         max_unknowns=session.max_unknowns,
                                         leaf=family.leaf, minimum=family.minimum).dims
                verification.fact('extended_block_dims', dims)
        else:
            raise InputError('Nothing to verify: pass --result1 or --result2.')
    except (InputError, ) + _INPUT_ERRORS as e:
        logger.error('verify: %s', _message(e))
        _error(out, pretty, e, session)
        return ExitCode.INPUT_ERROR
    except BudgetExceededError as e:
        logger.error('verify: %s', e.message)
        _error(out, pretty, e, session)
        return ExitCode.UNDECIDED

    report = verification.to_json()
    report.update({'command': 'verify', 'seed': session.seed})
    print_report(report, pretty, title='verify %s' % verification.name, file=out)
    return ExitCode.OK if verification.passed else ExitCode.VERIFICATION_FAILED


def cmd_query(session, path, expression='', pretty=False, out=None):
    try:
        records = [r.to_json() for r in census_query(path, expression)]
    except CensusFileError as e:
        logger.error('query: %s', e.message)
        _error(out, pretty, e, session)
        return ExitCode.INPUT_ERROR

    if pretty:
        write_formatted(format_records(records), out)
    else:
        print_report({'command': 'query', 'filter': expression, 'count': len(records),
                      'records': records}, file=out)
    return ExitCode.OK


def cmd_config(session, out=None):
    " Write the effective options and catalog as config commands. "
    session.handle_command('show-options')
    session.handle_command('list-graphs')
    (out or sys.stdout).write('\n'.join(session.output) + '\n')
    return ExitCode.OK
