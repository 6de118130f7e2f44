"""
Report output: JSON for scripts, styled text for --pretty.
"""
from __future__ import unicode_literals
import json
import sys

import six
from prompt_toolkit import print_formatted_text
from prompt_toolkit.formatted_text import FormattedText

from .enums import REPORT_SCHEMA, Verdict
from .style import report_style

__all__ = (
    'dumps_report',
    'format_records',
    'format_report',
    'print_report',
    'write_formatted',
)

_TABLE_COLUMNS = ('graph6', 'n', 'aut_order', 'commutant_dim', 'hidden', 'block_dims')


def dumps_report(data):
    " Canonical JSON text of a report. "
    data = dict(data)
    data.setdefault('schema', REPORT_SCHEMA)
    return json.dumps(data, sort_keys=True, indent=2)


def _value_style(key, value):
    if key == 'verdict' and value in Verdict._ALL:
        return 'class:verdict.%s' % value
    if isinstance(value, bool):
        return 'class:check.pass' if value else 'class:check.fail'
    if isinstance(value, six.integer_types + (float, )):
        return 'class:value.number'
    return 'class:value'


def _format_value(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '-'
    if isinstance(value, (list, tuple)):
        return ', '.join(_format_value(v) for v in value) or '-'
    return '%s' % (value, )


def _format_mapping(result, data, indent):
    width = max([len(k) for k in data] + [0])
    for key in sorted(data):
        value = data[key]
        result.append(('class:key', '%s%s ' % ('  ' * indent, key.ljust(width))))
        if isinstance(value, dict):
            result.append(('', '\n'))
            _format_mapping(result, value, indent + 1)
        else:
            result.append((_value_style(key, value), _format_value(value)))
            result.append(('', '\n'))


def format_report(data, title=None):
    """
    Styled text of a (nested) report dict.

    :returns: :class:`FormattedText`.
    """
    result = []
    if title:
        result.append(('class:title', title))
        result.append(('', '\n'))
    _format_mapping(result, data, 0)
    return FormattedText(result)


def format_records(records):
    " Census records (dicts) as a table. "
    rows = [[_format_value(r.get(c)) for c in _TABLE_COLUMNS] for r in records]
    widths = [max([len(c)] + [len(row[k]) for row in rows]) for k, c in enumerate(_TABLE_COLUMNS)]

    result = [('class:table.header', '  '.join(c.ljust(w) for c, w in zip(_TABLE_COLUMNS, widths))),
              ('', '\n')]
    for record, row in zip(records, rows):
        style = 'class:table.row.hidden' if record.get('hidden') else 'class:table.row'
        result.append((style, '  '.join(v.ljust(w) for v, w in zip(row, widths))))
        result.append(('', '\n'))
    return FormattedText(result)


def write_formatted(text, file=None):
    """
    Write styled text to `file` (stdout). Files that are not terminals get
    the plain text.
    """
    file = file or sys.stdout
    if file.isatty():
        print_formatted_text(text, style=report_style, file=file, end='')
    else:
        file.write(''.join(fragment[1] for fragment in text))


def print_report(data, pretty=False, title=None, file=None):
    """
    Write a report to `file` (stdout): JSON, or styled text when `pretty`.
    """
    file = file or sys.stdout
    if pretty:
        write_formatted(format_report(data, title), file)
    else:
        file.write(dumps_report(data) + '\n')
