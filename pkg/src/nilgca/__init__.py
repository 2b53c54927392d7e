"""Exact-arithmetic engine for invariant generalized complex structures
on nilpotent Lie algebras: the Courant double g x| g*, integrability,
the invariant differential Gerstenhaber algebra and its cohomology,
holomorphic-Poisson and Maurer-Cartan deformations, and semi-abelian
admissible-pair verdicts.
"""

from .scalars import GaussianRational, parse_gaussian, format_gaussian
from .linalg import (
    AffineSolution,
    Matrix,
    Subspace,
    kernel,
    rref,
    solve_affine,
)
from .exterior import Exterior
from .lie import LieAlgebra, NotALieAlgebraError, interior
from .double import CourantDouble, DoubleSubspace, jacobi_on_isotropic, dual_identification
from .gcs import (
    ClassicalComplexStructure,
    Gcs,
    NotAlmostGcsError,
    find_ascending_basis,
    nijenhuis,
)
from .dga import (
    ClassicalDga,
    DgaPresentation,
    ambient_schouten,
    is_holomorphic_poisson,
    poisson_coform_kernel_test,
    poisson_vector_kernel_test,
    symplectic_dga_iso_check,
)
from .semiabelian import (
    AdmissibleReport,
    SemiAbelianVerdict,
    check_admissible,
    check_semi_abelian,
    complement_feasibility,
    forced_kernel_candidates,
    search_semi_abelian,
    semi_abelian_report,
    symplectic_semi_abelian,
)
from .catalog import CatalogEntry, build_structure, catalog, heisenberg_product_entry

__version__ = "0.1.0"

__all__ = [
    "AdmissibleReport",
    "AffineSolution",
    "CatalogEntry",
    "ClassicalComplexStructure",
    "ClassicalDga",
    "CourantDouble",
    "DgaPresentation",
    "DoubleSubspace",
    "Exterior",
    "GaussianRational",
    "Gcs",
    "LieAlgebra",
    "Matrix",
    "NotALieAlgebraError",
    "NotAlmostGcsError",
    "SemiAbelianVerdict",
    "Subspace",
    "ambient_schouten",
    "build_structure",
    "catalog",
    "check_admissible",
    "check_semi_abelian",
    "complement_feasibility",
    "dual_identification",
    "find_ascending_basis",
    "forced_kernel_candidates",
    "format_gaussian",
    "heisenberg_product_entry",
    "interior",
    "is_holomorphic_poisson",
    "jacobi_on_isotropic",
    "kernel",
    "nijenhuis",
    "parse_gaussian",
    "poisson_coform_kernel_test",
    "poisson_vector_kernel_test",
    "rref",
    "search_semi_abelian",
    "semi_abelian_report",
    "solve_affine",
    "symplectic_dga_iso_check",
    "symplectic_semi_abelian",
]
