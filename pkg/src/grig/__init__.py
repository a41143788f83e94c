"""Exact homological computations over finite-dimensional algebras over Q."""

from .algebra import (
    Algebra,
    IdemSpec,
    corner_algebra,
    morita_context_zero,
    product_algebra,
    tensor_algebra,
)
from .errors import GrigError
from .grigdim import GprojSet, GrigReport, cm_classify, gproj_closure, grigdim
from .homology import (
    ExtendedNat,
    ExtTable,
    ResolutionSeg,
    ext_table,
    gorenstein_check,
    gproj_certify,
    hom_coresolution_exactness,
    injective_dimension,
    minimal_injective_coresolution,
    minimal_projective_resolution,
    rigidity_degree,
    t_domdim,
)
from .linalg import Mat, Subspace
from .modules import (
    ModMap,
    Module,
    direct_sum,
    dual_module,
    endomorphism_algebra,
    hom_space,
    indecomposable_summands,
    injective_envelope,
    projective_cover,
    projective_indecomposables,
    regular_module,
    simple_modules,
    syzygy,
    cosyzygy,
)
from .quiver import BoundQuiver, algebra_from_bound_quiver, dual_numbers, nakayama
