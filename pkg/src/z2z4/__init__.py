"""Additive codes over Z2 x Z4: the rank and kernel of their Gray images,
plus constructions that hit any admissible rank/kernel combination."""

from __future__ import annotations

from .code import (
    AdditiveCode,
    GeneratorMatrix,
    StandardForm,
    TypeParams,
    codewords,
    contains,
    dual,
    equal_as_sets,
    from_rows,
    infer_type,
    is_linear_image,
    standard_form,
)
from .construct import FeasibleSet, construct_kernel, construct_pair, construct_rank, feasible
from .errors import (
    BoundViolation,
    CoverViolation,
    DegenerateCodeError,
    GuardExceeded,
    InfeasibleError,
    ParseError,
    ShapeError,
    SymbolError,
    Z2Z4Error,
)
from .guard import DEFAULT_GUARD, SizeGuard
from .invariants import (
    KernelReport,
    RankReport,
    bounds_check,
    kernel,
    kernel_coset_cover,
    kernel_via_chi,
    rank,
)
from .vector import BinaryVector, MixedVector, gray, gray_inverse, inner_product, star

__all__ = [
    "AdditiveCode",
    "BinaryVector",
    "BoundViolation",
    "CoverViolation",
    "DEFAULT_GUARD",
    "DegenerateCodeError",
    "FeasibleSet",
    "GeneratorMatrix",
    "GuardExceeded",
    "InfeasibleError",
    "KernelReport",
    "MixedVector",
    "ParseError",
    "RankReport",
    "ShapeError",
    "SizeGuard",
    "StandardForm",
    "SymbolError",
    "TypeParams",
    "Z2Z4Error",
    "bounds_check",
    "codewords",
    "construct_kernel",
    "construct_pair",
    "construct_rank",
    "contains",
    "dual",
    "equal_as_sets",
    "feasible",
    "from_rows",
    "gray",
    "gray_inverse",
    "infer_type",
    "inner_product",
    "is_linear_image",
    "kernel",
    "kernel_coset_cover",
    "kernel_via_chi",
    "rank",
    "standard_form",
    "star",
]
