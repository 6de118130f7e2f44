"""
Hamiltonian symmetries: commutants and their comparison with graph
automorphisms.
"""
from __future__ import unicode_literals

from .commutant import CommutantBasis, commutant, commutant_fast
from .report import SymmetryReport, aut_span_dim, breaks_all_automorphisms, membership_in_span, symmetry_report

__all__ = (
    'CommutantBasis',
    'SymmetryReport',
    'aut_span_dim',
    'breaks_all_automorphisms',
    'commutant',
    'commutant_fast',
    'membership_in_span',
    'symmetry_report',
)
