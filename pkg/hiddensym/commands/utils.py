"""
Text helpers for writing config commands back out.
"""
from __future__ import unicode_literals

__all__ = (
    'format_edges',
    'wrap_argument',
)


def wrap_argument(text):
    """
    Quote a command argument when shlex would split or unescape it.
    Empty arguments are quoted too.
    """
    if text and not any(c in text for c in ' "\'\\#'):
        return text
    return '"%s"' % (text.replace('\\', r'\\').replace('"', r'\"'), )


def format_edges(edges, base=1, separator=' '):
    " ``[(0, 1), (1, 2)]`` as ``'1-2 2-3'`` in the numbering starting at `base`. "
    return separator.join('%i-%i' % (i + base, j + base) for i, j in edges)
