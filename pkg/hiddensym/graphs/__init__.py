"""
Graph layer: labeled simple graphs, graph6, automorphisms, enumeration.
"""
from __future__ import unicode_literals

from .automorphisms import AutomorphismGroup, automorphism_group, canonical_form, canonical_labeling
from .enumeration import enumerate_connected, enumerate_graphs
from .graph import Graph, GraphError, Permutation, is_connected
from .graph6 import Graph6Error, emit_graph6, parse_graph6

__all__ = (
    'AutomorphismGroup',
    'Graph',
    'Graph6Error',
    'GraphError',
    'Permutation',
    'automorphism_group',
    'canonical_form',
    'canonical_labeling',
    'emit_graph6',
    'enumerate_connected',
    'enumerate_graphs',
    'is_connected',
    'parse_graph6',
)
