# Copyright 2026 The idpent Authors
# SPDX-License-Identifier: Apache-2.0
"""Separability and entanglement checks for two identical particles."""

from ._core import (
    TOLERANCE,
    FockSpace,
    IdpentError,
    bell_phi,
    bell_psi,
    entanglement_entropy,
    expectation,
    expectation_extended,
    extended_pair_expectation,
    factorization_identity_sides,
    factorization_test,
    is_separable_pure,
    k_reduced_dm,
    kron,
    list_cases,
    nl_inner,
    partial_trace,
    pauli,
    run_all,
    run_case,
    schmidt_coefficients,
    to_first_quantized,
    verify,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "TOLERANCE",
    "FockSpace",
    "IdpentError",
    "bell_phi",
    "bell_psi",
    "entanglement_entropy",
    "expectation",
    "expectation_extended",
    "extended_pair_expectation",
    "factorization_identity_sides",
    "factorization_test",
    "is_separable_pure",
    "k_reduced_dm",
    "kron",
    "list_cases",
    "nl_inner",
    "partial_trace",
    "pauli",
    "run_all",
    "run_case",
    "schmidt_coefficients",
    "to_first_quantized",
    "verify",
    "von_neumann_entropy",
]
