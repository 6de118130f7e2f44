"""
Explicit counterexamples: an asymmetric graph with a non-trivial
symmetry, and a family where a symmetry-breaking Hamiltonian leaves a
combination of automorphisms in the commutant.
"""
from __future__ import unicode_literals

from .catalog import Catalog, ConfigError, NamedFamily, NamedGraph, default_catalog
from .result_one import (ResultOneBundle, build_result_one, locate_result_one_graph,
                         pair_symmetry, singlet_projector, verify_result_one)
from .result_two import (ResultTwoBundle, build_result_two, family_graph,
                         reflection_projector, verify_result_two)
from .verification import ConstructionError, VerificationReport

__all__ = (
    'Catalog',
    'ConfigError',
    'ConstructionError',
    'NamedFamily',
    'NamedGraph',
    'ResultOneBundle',
    'ResultTwoBundle',
    'VerificationReport',
    'build_result_one',
    'build_result_two',
    'default_catalog',
    'family_graph',
    'locate_result_one_graph',
    'pair_symmetry',
    'reflection_projector',
    'singlet_projector',
    'verify_result_one',
    'verify_result_two',
)
