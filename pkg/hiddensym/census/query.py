"""
Streaming filters over census files.

A filter is a list of ``field op value`` clauses joined by ``and``, for
instance ``hidden == true and n >= 7`` or ``block_dims == [2,126]``.
Values are parsed as JSON when possible and compared as text otherwise.
"""
from __future__ import unicode_literals
import json
import operator
import re

from .census import CensusRecord
from .checkpoint import CheckpointError, load_line

__all__ = (
    'CensusFileError',
    'census_query',
    'parse_filter',
)

_OPERATORS = {
    '==': operator.eq,
    '!=': operator.ne,
    '<=': operator.le,
    '>=': operator.ge,
    '<': operator.lt,
    '>': operator.gt,
}

_CLAUSE = re.compile(r'^\s*([a-z_0-9]+)\s*(==|!=|<=|>=|<|>)\s*(.+?)\s*$')

_FIELDS = ('graph6', 'n', 'aut_order', 'commutant_dim', 'hidden', 'block_dims', 'elapsed_ms', 'error')


class CensusFileError(Exception):
    " Raised for unreadable census files or invalid filters. "
    def __init__(self, message):
        super(CensusFileError, self).__init__(message)
        self.message = message


def _value(text):
    try:
        return json.loads(text)
    except ValueError:
        return text.strip('"\'')


def parse_filter(expression):
    """
    Compile a filter expression into a predicate on record dicts.

    :raises CensusFileError: for unknown fields or malformed clauses.
    """
    expression = (expression or '').strip()
    if not expression:
        return lambda record: True

    clauses = []
    for part in re.split(r'\s+and\s+', expression):
        m = _CLAUSE.match(part)
        if not m:
            raise CensusFileError('Invalid filter clause %r, expected "field op value".' % (part, ))
        field, op, value = m.groups()
        if field not in _FIELDS:
            raise CensusFileError('Unknown field %r. Fields: %s.' % (field, ', '.join(_FIELDS)))
        clauses.append((field, _OPERATORS[op], _value(value)))

    def predicate(record):
        for field, op, value in clauses:
            actual = record.get(field)
            try:
                if not op(actual, value):
                    return False
            except TypeError:
                return False
        return True
    return predicate


def census_query(path, expression=''):
    """
    Yield the :class:`CensusRecord` objects of `path` matching
    `expression`. The summary line is skipped.

    :raises CensusFileError: for a missing file or a malformed line; the
        message names the line number.
    """
    predicate = parse_filter(expression)
    try:
        f = open(path)
    except IOError as e:
        raise CensusFileError('Cannot open census file %s: %s' % (path, e))

    with f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                data = load_line(line, number, path)
            except CheckpointError as e:
                raise CensusFileError(e.message)
            if 'summary' in data:
                continue
            if 'graph6' not in data:
                raise CensusFileError('%s:%i: not a census record.' % (path, number))
            if predicate(data):
                yield CensusRecord.from_json(data)
