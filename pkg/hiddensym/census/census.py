"""
Hidden-symmetry census over connected asymmetric graphs.

Graphs are assigned to shards by the stable hash of their graph6 string;
each shard is cut into chunks that the worker pool analyzes independently.
The parent process is the only writer of the checkpoint file and flushes it
after every chunk, so an interrupted census resumes where it stopped.
Output is sorted by graph6, which makes it independent of the job count.
"""
from __future__ import unicode_literals
from collections import Counter
import multiprocessing
import time

from ..algebra.hamiltonians import build_generators
from ..enums import CENSUS_SCHEMA
from ..graphs.automorphisms import automorphism_group
from ..graphs.enumeration import enumerate_connected
from ..graphs.graph import is_connected
from ..graphs.graph6 import emit_graph6, parse_graph6, read_graph6_file
from ..log import logger
from ..subspaces import decompose
from ..symmetry.commutant import DEFAULT_MAX_UNKNOWNS
from ..symmetry.report import symmetry_report
from ..utils import make_rng, stable_hash
from .checkpoint import CheckpointError, read_checkpoint, write_checkpoint

__all__ = (
    'CensusRecord',
    'CensusSummary',
    'MAX_CENSUS_VERTICES',
    'analyze_graph',
    'run_census',
)

#: Largest vertex count of a generated census.
MAX_CENSUS_VERTICES = 8


class CensusRecord(object):
    """
    Result for one graph.

    :param block_dims: Sorted invariant block dimensions, only computed for
        graphs with hidden symmetries (None otherwise).
    :param error: Message of the exception that stopped the analysis, if any.
    """
    def __init__(self, graph6, n, aut_order, commutant_dim, hidden, block_dims=None,
                 elapsed_ms=0, error=None):
        self.graph6 = graph6
        self.n = n
        self.aut_order = aut_order
        self.commutant_dim = commutant_dim
        self.hidden = hidden
        self.block_dims = block_dims
        self.elapsed_ms = elapsed_ms
        self.error = error

    @property
    def failed(self):
        return self.error is not None

    def to_json(self):
        data = {
            'schema': CENSUS_SCHEMA,
            'graph6': self.graph6,
            'n': self.n,
            'aut_order': self.aut_order,
            'commutant_dim': self.commutant_dim,
            'hidden': self.hidden,
            'block_dims': self.block_dims,
            'elapsed_ms': self.elapsed_ms,
        }
        if self.error is not None:
            data['error'] = self.error
        return data

    @classmethod
    def from_json(cls, data):
        return cls(data['graph6'], data['n'], data['aut_order'], data['commutant_dim'],
                   data['hidden'], data.get('block_dims'), data.get('elapsed_ms', 0),
                   data.get('error'))

    def __eq__(self, other):
        return isinstance(other, CensusRecord) and self.to_json() == other.to_json()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'CensusRecord(%r, commutant_dim=%r, hidden=%r)' % (
            self.graph6, self.commutant_dim, self.hidden)


class CensusSummary(object):
    """
    Totals of a census. Graphs listed in `failed` raised during analysis;
    they are counted in `total_asymmetric` but in none of the hidden totals
    or block profiles.
    """
    def __init__(self, n, total_connected, total_asymmetric, total_hidden,
                 distinct_block_profiles, failed=()):
        assert total_hidden <= total_asymmetric <= total_connected
        self.n = n
        self.total_connected = total_connected
        self.total_asymmetric = total_asymmetric
        self.total_hidden = total_hidden
        self.distinct_block_profiles = dict(distinct_block_profiles)
        self.failed = sorted(failed)

    @property
    def errored(self):
        " Number of graphs whose analysis raised. "
        return len(self.failed)

    def to_json(self):
        return {
            'n': self.n,
            'total_connected': self.total_connected,
            'total_asymmetric': self.total_asymmetric,
            'total_hidden': self.total_hidden,
            'distinct_block_profiles': self.distinct_block_profiles,
            'errored': self.errored,
            'failed': self.failed,
        }

    @classmethod
    def from_json(cls, data):
        return cls(data['n'], data['total_connected'], data['total_asymmetric'],
                   data['total_hidden'], data['distinct_block_profiles'], data.get('failed', ()))

    def __eq__(self, other):
        return isinstance(other, CensusSummary) and self.to_json() == other.to_json()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'CensusSummary(n=%r, asymmetric=%r, hidden=%r, errored=%r)' % (
            self.n, self.total_asymmetric, self.total_hidden, self.errored)


def analyze_graph(graph6, max_unknowns=DEFAULT_MAX_UNKNOWNS, seed=0, timings=False):
    """
    Census analysis of one graph: commutant dimension, hidden flag and,
    for hits, the invariant block dimensions.
    Exceptions are caught and stored in the record.
    """
    start = time.perf_counter()
    try:
        graph = parse_graph6(graph6)
        report = symmetry_report(graph, max_unknowns=max_unknowns, rng=make_rng(seed))
        block_dims = None
        if report.has_hidden:
            block_dims = decompose(build_generators(graph), seed=seed, method='commutant',
                                   max_unknowns=max_unknowns).dims
        record = CensusRecord(graph6, graph.n, report.aut_order, report.commutant_dim,
                              report.has_hidden, block_dims)
    except Exception as e:
        logger.exception('Census: analysis of %s failed.', graph6)
        record = CensusRecord(graph6, None, None, None, False, error='%s: %s' % (type(e).__name__, e))

    if timings:
        record.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return record.to_json()


def _analyze_chunk(args):
    graph6s, max_unknowns, seed, timings = args
    return [analyze_graph(g, max_unknowns, seed, timings) for g in graph6s]


def _candidates(n, input_file):
    """
    Connected graphs to consider, as ``(total_connected, asymmetric graph6
    strings)``.
    """
    if input_file:
        graphs = [g for _, g in read_graph6_file(input_file)]
        graphs = [g for g in graphs if is_connected(g)]
    else:
        graphs = list(enumerate_connected(n))

    asymmetric = sorted(set(emit_graph6(g) for g in graphs
                            if automorphism_group(g).is_trivial()))
    return len(graphs), asymmetric


def _chunks(graph6s, jobs, size):
    shards = [[] for _ in range(jobs)]
    for g in graph6s:
        shards[int(stable_hash(g), 16) % jobs].append(g)
    for shard in shards:
        for k in range(0, len(shard), size):
            yield shard[k:k + size]


def _summarize(n, total_connected, asymmetric, records):
    profiles = Counter()
    hidden = 0
    failed = []
    for g in asymmetric:
        r = records[g]
        if r.get('error') is not None:
            failed.append(g)
        elif r['hidden']:
            hidden += 1
            profiles[','.join(str(d) for d in r['block_dims'] or [])] += 1
    return CensusSummary(n, total_connected, len(asymmetric), hidden, profiles, failed)


def run_census(n=None, jobs=1, checkpoint_path=None, resume=False, input_file=None,
               flush_every=64, timings=False, max_unknowns=DEFAULT_MAX_UNKNOWNS, seed=0):
    """
    Analyze every connected asymmetric graph on `n` vertices (or from a
    graph6 `input_file`).

    :param checkpoint_path: JSON-lines output, rewritten after every chunk.
    :param resume: Keep the records already present in `checkpoint_path`.
    :param flush_every: Graphs per chunk.
    :param timings: Record elapsed times (makes the output
        run-dependent).
    :raises CheckpointError: for a corrupt checkpoint or one belonging to a
        different census.
    """
    if input_file is None and not (2 <= (n or 0) <= MAX_CENSUS_VERTICES):
        raise CheckpointError('Census vertex count must be within 2..%i, got %r.' % (
            MAX_CENSUS_VERTICES, n))
    jobs = max(1, int(jobs))

    total_connected, asymmetric = _candidates(n, input_file)
    if input_file and asymmetric:
        n = parse_graph6(asymmetric[0]).n
    logger.info('Census: %i connected, %i asymmetric graph(s).', total_connected, len(asymmetric))

    records = {}
    if resume and checkpoint_path:
        records, _ = read_checkpoint(checkpoint_path)
        unknown = set(records) - set(asymmetric)
        if unknown:
            raise CheckpointError('Checkpoint %s holds %i graph(s) outside this census.' % (
                checkpoint_path, len(unknown)))
        # Failed graphs are retried.
        records = dict((k, v) for k, v in records.items() if v.get('error') is None)

    pending = [g for g in asymmetric if g not in records]
    tasks = [(chunk, max_unknowns, seed, timings)
             for chunk in _chunks(pending, jobs, max(1, flush_every))]
    logger.info('Census: %i graph(s) left in %i chunk(s), %i job(s).', len(pending), len(tasks), jobs)

    def store(results):
        for r in results:
            records[r['graph6']] = r
        if checkpoint_path:
            write_checkpoint(checkpoint_path, records)
        logger.info('Census: %i/%i done.', len(records), len(asymmetric))

    if jobs == 1:
        for task in tasks:
            store(_analyze_chunk(task))
    else:
        pool = multiprocessing.Pool(jobs)
        try:
            for results in pool.imap_unordered(_analyze_chunk, tasks):
                store(results)
        finally:
            pool.close()
            pool.join()

    summary = _summarize(n, total_connected, asymmetric, records)
    if checkpoint_path:
        write_checkpoint(checkpoint_path, records, summary.to_json())
    if summary.failed:
        logger.warning('Census: %i graph(s) failed: %s', len(summary.failed), ', '.join(summary.failed))
    return summary
