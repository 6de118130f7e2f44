"""
Census of hidden symmetries over small connected graphs.
"""
from __future__ import unicode_literals

from .census import CensusRecord, CensusSummary, analyze_graph, run_census
from .checkpoint import CheckpointError, read_checkpoint
from .query import CensusFileError, census_query

__all__ = (
    'CensusFileError',
    'CensusRecord',
    'CensusSummary',
    'CheckpointError',
    'analyze_graph',
    'census_query',
    'read_checkpoint',
    'run_census',
)
