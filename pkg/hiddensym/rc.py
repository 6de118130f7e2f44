"""
Built-in catalog, executed at session start-up before the user's file.

Edge lists of ``H`` and ``J`` are transcribed from drawings and use the
drawings' 1-based vertex labels. ``locate`` in the verify workflow checks
``H`` against the seven-vertex census.
"""
from __future__ import unicode_literals

__all__ = (
    'CATALOG_COMMANDS',
)

CATALOG_COMMANDS = """
# Seven vertices, asymmetric, symmetric under the three-pair operator.
define-graph -p 1-3,2-7,4-6 -N "transcribed from drawing" H 7 1-2 1-4 1-5 1-7 2-4 2-6 3-4 3-5

# Nine vertices, hidden symmetries reported only.
define-graph -p 1-2,3-4,5-6 -N "transcribed from drawing" J 9 1-3 1-4 3-5 3-6 5-1 5-2 7-1 7-2 8-7 8-3 8-4 9-8

# Two pendant pairs on a chain with a leaf on the third chain vertex.
define-family -l 3 -m 7 Q

# Small reference graphs.
define-graph K2 2 1-2
define-graph P3 3 1-2 2-3
define-graph K3 3 1-2 2-3 1-3
"""
