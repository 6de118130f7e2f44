"""
The color scheme of the --pretty output.
"""
from __future__ import unicode_literals
from prompt_toolkit.styles import Style, Priority

__all__ = (
    'report_style',
)


report_style = Style.from_dict({
    'title':                        'bold underline',
    'key':                          '#888888',
    'value':                        '',
    'value.number':                 '#44aaff',

    'verdict.universal':            'ansigreen bold',
    'verdict.not_universal':        'ansired bold',
    'verdict.undecided':            'ansiyellow bold',

    'check.pass':                   'ansigreen',
    'check.fail':                   'bg:#aa0000 #ffffff bold',

    'table.header':                 'bold reverse',
    'table.row':                    '',
    'table.row.hidden':             '#ffaa44',
}, priority=Priority.MOST_PRECISE)
