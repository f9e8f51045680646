"""Exact Laplace-Beltrami spectra on compact simple Lie groups of rank <= 3."""

__version__ = "0.1.0"

from .groups import GROUP_NAMES, GroupDescriptor, descriptor, highest_weights_of
from .root_systems import (
    RootSystemData,
    builtin_root_system,
    inner,
    weight_to_epsilon,
)
from .spectrum import SpectrumEntry, adjoint_check, enumerate_spectrum, eigenvalue, weyl_dimension
from .theorems import EigenvalueVerdict, ValidationReport, check_eigenvalue, cross_validate

__all__ = [
    "GROUP_NAMES",
    "GroupDescriptor",
    "RootSystemData",
    "SpectrumEntry",
    "EigenvalueVerdict",
    "ValidationReport",
    "adjoint_check",
    "builtin_root_system",
    "check_eigenvalue",
    "cross_validate",
    "descriptor",
    "eigenvalue",
    "enumerate_spectrum",
    "highest_weights_of",
    "inner",
    "weight_to_epsilon",
    "weyl_dimension",
    "__version__",
]
