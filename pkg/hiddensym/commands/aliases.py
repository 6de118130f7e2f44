"""
Aliases for all commands.
"""
from __future__ import unicode_literals

__all__ = (
    'ALIASES',
)


ALIASES = {
    'family': 'define-family',
    'graph': 'define-graph',
    'lsg': 'list-graphs',
    'set': 'set-option',
    'show': 'show-options',
    'source': 'source-file',
}
