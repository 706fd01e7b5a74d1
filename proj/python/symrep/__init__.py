"""Exact representation theory of the symmetric groups.

Thin wrapper over the C++ core: partitions, standard tableaux, content
vectors, Young's seminormal/orthogonal forms, Jucys-Murphy spectra,
Murnaghan-Nakayama characters, and the verification suite.
"""

from ._core import (
    character,
    character_table,
    content_vector,
    coxeter_matrix,
    dim,
    is_content_vector,
    partitions,
    permutation_matrix,
    skew_hook_height,
    spectrum,
    spectrum_bruteforce,
    tableau_from_content,
    tableaux,
    validate_content,
    verify,
    yjm_matrix,
    young_neighbors,
)

__all__ = [
    "character",
    "character_table",
    "content_vector",
    "coxeter_matrix",
    "dim",
    "is_content_vector",
    "partitions",
    "permutation_matrix",
    "skew_hook_height",
    "spectrum",
    "spectrum_bruteforce",
    "tableau_from_content",
    "tableaux",
    "validate_content",
    "verify",
    "yjm_matrix",
    "young_neighbors",
]
