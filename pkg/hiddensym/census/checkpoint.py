"""
JSON-lines storage for census records.

Every line is a JSON object with a ``sha`` field: the stable hash of the
object's canonical encoding without that field. The last line of a
finished census holds the summary under the ``summary`` key. Files are
rewritten with an atomic rename, so a reader never sees a partial file.
"""
from __future__ import unicode_literals
import json
import os

from ..enums import CENSUS_SCHEMA
from ..log import logger
from ..utils import atomic_write, stable_hash

__all__ = (
    'CheckpointError',
    'dump_line',
    'load_line',
    'read_checkpoint',
    'write_checkpoint',
)


class CheckpointError(Exception):
    " Raised for corrupt or incompatible census files. "
    def __init__(self, message):
        super(CheckpointError, self).__init__(message)
        self.message = message


def _canonical(data):
    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def dump_line(data):
    " Encode one JSON object with its hash. "
    data = dict(data)
    data.pop('sha', None)
    data['sha'] = stable_hash(_canonical(data))
    return _canonical(data)


def load_line(line, number=None, path=None):
    """
    Decode and verify one line.

    :raises CheckpointError: on invalid JSON or a hash mismatch.
    """
    where = '%s:%s' % (path or '<census>', number if number is not None else '?')
    try:
        data = json.loads(line)
    except ValueError as e:
        raise CheckpointError('%s: invalid JSON (%s).' % (where, e))
    if not isinstance(data, dict):
        raise CheckpointError('%s: expected a JSON object.' % where)

    sha = data.pop('sha', None)
    if sha is None or sha != stable_hash(_canonical(data)):
        raise CheckpointError('%s: hash mismatch, the line was modified or truncated.' % where)
    return data


def read_checkpoint(path):
    """
    Read a census file.

    :returns: ``(records, summary)``: record dicts keyed by graph6 and the
        summary dict, or None for an unfinished census.
    """
    records = {}
    summary = None
    if not os.path.exists(path):
        return records, summary

    with open(path) as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            data = load_line(line, number, path)
            if 'summary' in data:
                summary = data['summary']
                continue
            if data.get('schema') != CENSUS_SCHEMA:
                raise CheckpointError('%s:%i: unknown schema %r.' % (path, number, data.get('schema')))
            records[data['graph6']] = data

    logger.info('Checkpoint %s: %i record(s)%s.', path, len(records),
                ', finished' if summary is not None else '')
    return records, summary


def write_checkpoint(path, records, summary=None):
    """
    Atomically replace `path` with `records` (dicts) sorted by graph6, and
    the summary line when given.
    """
    with atomic_write(path) as f:
        for key in sorted(records):
            f.write(dump_line(records[key]) + '\n')
        if summary is not None:
            f.write(dump_line({'summary': summary}) + '\n')
