"""
Exact operator algebra: Pauli sums, matrix realizations, integer kernels.
"""
from __future__ import unicode_literals

from .coefficients import GaussianRational
from .dense import BudgetExceededError, DenseOperator, permutation_operator, to_dense
from .hamiltonians import build_generators, h_x, h_z, h_zz, parity_operator, pi_operator, swap_operator
from .pauli import AlgebraError, PauliParseError, PauliString, PauliSum, commutator

__all__ = (
    'AlgebraError',
    'BudgetExceededError',
    'DenseOperator',
    'GaussianRational',
    'PauliParseError',
    'PauliString',
    'PauliSum',
    'build_generators',
    'commutator',
    'h_x',
    'h_z',
    'h_zz',
    'parity_operator',
    'permutation_operator',
    'pi_operator',
    'swap_operator',
    'to_dense',
)
