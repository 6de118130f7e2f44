"""
Dynamical Lie algebras and universality.
"""
from __future__ import unicode_literals

from .adjoint import adjoint_symmetry_dim
from .closure import LieClosure, dense_closure_dim, lie_closure
from .universality import UniversalityResult, is_universal

__all__ = (
    'LieClosure',
    'UniversalityResult',
    'adjoint_symmetry_dim',
    'dense_closure_dim',
    'is_universal',
    'lie_closure',
)
