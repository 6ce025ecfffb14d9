"""Lehman matrices and Lehman graphs: verification, constructions and search."""
from .exactmat import RationalMatrix, determinant, inverse, rank, solve
from .graph import BipartiteGraph, InputError
from .lehman import (
    LehmanCertificate,
    LehmanType,
    auxiliary,
    certify,
    is_lehman_pair,
    lehman_types,
    mate,
    partner,
)

__all__ = [
    "BipartiteGraph",
    "InputError",
    "LehmanCertificate",
    "LehmanType",
    "RationalMatrix",
    "auxiliary",
    "certify",
    "determinant",
    "inverse",
    "is_lehman_pair",
    "lehman_types",
    "mate",
    "partner",
    "rank",
    "solve",
]

__version__ = "0.1.0"
