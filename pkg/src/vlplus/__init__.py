"""Exact computations for the rank-one lattice VOA V_L, its fixed-point subalgebra V_L^+,
twisted modules, and Zhu's algebra A(V_L^+)."""
from .kernels import BACKEND
from .lattice import (
    K1Notice,
    LatticeState,
    ModuleDescriptor,
    build_generators,
    module_catalog,
    vertex_mode,
)
from .structure import (
    classify,
    fit_structure_polynomials,
    lemma51_check,
    verify_relations,
    zhu_basis_certificate,
)
from .zhu import certify_in_OV, character, circ, l_reduce, ov_residue, star

__all__ = [
    "BACKEND",
    "K1Notice",
    "LatticeState",
    "ModuleDescriptor",
    "build_generators",
    "module_catalog",
    "vertex_mode",
    "classify",
    "fit_structure_polynomials",
    "lemma51_check",
    "verify_relations",
    "zhu_basis_certificate",
    "certify_in_OV",
    "character",
    "circ",
    "l_reduce",
    "ov_residue",
    "star",
]
