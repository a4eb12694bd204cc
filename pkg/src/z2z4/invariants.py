"""Rank and kernel of the Gray image of an additive code.

Both invariants are computed from the generator matrix alone:

* beyond the images of the generators and their doubles, the linear span of
  the image needs only the pairwise products ``2 v_j * v_k``;
* a codeword lies in the kernel iff ``2 u * v`` is a codeword for every
  generator ``v``.  That condition only depends on ``u`` modulo the order-two
  subcode and is F2-linear, so the kernel falls out of one binary matrix of
  syndromes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import bounds, gf2
from .code import (
    AdditiveCode,
    TypeParams,
    codewords,
    dual,
    from_rows,
    infer_type,
    syndrome,
)
from .errors import BoundViolation, CoverViolation
from .guard import DEFAULT_GUARD, SizeGuard
from .vector import BinaryVector, MixedVector, chi, chi_inverse, gray_bits, twice_star


@dataclass(frozen=True)
class RankReport:
    rank: int
    r_bar: int
    span_code: AdditiveCode


@dataclass(frozen=True)
class KernelReport:
    ker_dim: int
    k_bar: int
    kernel_code: AdditiveCode
    coset_reps: tuple[MixedVector, ...]


@dataclass(frozen=True)
class CoverCertificate:
    cosets: int
    coset_size: int
    code_size: int


@dataclass(frozen=True)
class BoundsCertificate:
    params: TypeParams
    rank: int
    ker_dim: int
    checked: tuple[str, ...]


def _pair_products(code: AdditiveCode) -> list[MixedVector]:
    return [twice_star(vj, vk) for vj, vk in combinations(code.gen.rows4, 2)]


def span_generators(code: AdditiveCode) -> gf2.BinaryMatrix:
    """Gray images of ``u_i``, ``v_j``, ``2 v_j`` and ``2 v_j * v_k`` (j < k)."""
    g = code.gen
    rows = list(g.rows2) + list(g.rows4) + [v.scale(2) for v in g.rows4] + _pair_products(code)
    return gf2.BinaryMatrix(code.alpha + 2 * code.beta, tuple(gray_bits(r) for r in rows))


def rank(code: AdditiveCode) -> RankReport:
    r = span_generators(code).rank()
    span = from_rows(code.alpha, code.beta, list(code.gen.rows) + _pair_products(code))
    return RankReport(r, r - code.log2_size, span)


def kernel_matrix(code: AdditiveCode) -> gf2.BinaryMatrix:
    """Row ``i`` concatenates the syndromes of ``2 v_i * v_j`` over all ``j``.

    Order-two generators are omitted: ``2 u * v`` vanishes when ``u`` has
    order two.  Each syndrome block is ``alpha + beta`` bits wide.
    """
    width = code.alpha + code.beta
    rows4 = code.gen.rows4
    out = []
    for vi in rows4:
        row = 0
        for j, vj in enumerate(rows4):
            row |= syndrome(code, twice_star(vi, vj)) << (j * width)
        out.append(row)
    return gf2.BinaryMatrix(width * len(rows4), tuple(out))


def kernel(code: AdditiveCode) -> KernelReport:
    ech = kernel_matrix(code).echelon()
    k_bar = len(ech.rows)
    rows4 = code.gen.rows4
    zero = MixedVector(code.alpha, code.beta)

    def combo(mask: int) -> MixedVector:
        w = zero
        for i, v in enumerate(rows4):
            if (mask >> i) & 1:
                w = w + v
        return w

    gens = list(code.gen.rows2) + [v.scale(2) for v in rows4] + [combo(m) for m in ech.kernel]
    kcode = from_rows(code.alpha, code.beta, gens)
    reps = tuple(rows4[i] for i in ech.selected)
    return KernelReport(code.log2_size - k_bar, k_bar, kcode, reps)


def kernel_coset_cover(
    code: AdditiveCode, report: KernelReport, guard: SizeGuard = DEFAULT_GUARD
) -> CoverCertificate:
    """Check by enumeration that the Gray image is tiled by translates of the kernel.

    The translates are by the images of ``v_I``, with ``I`` ranging over
    subsets of the coset representatives.
    """
    n = code.alpha + 2 * code.beta
    image = {gray_bits(c) for c in codewords(code, guard)}
    kset = [gray_bits(c) for c in codewords(report.kernel_code, guard)]
    if len(kset) != 1 << report.ker_dim:
        raise CoverViolation(f"kernel has {len(kset)} words, expected 2^{report.ker_dim}")
    covered: set[int] = set()
    zero = MixedVector(code.alpha, code.beta)
    reps = report.coset_reps
    for mask in range(1 << len(reps)):
        shift_vec = zero
        for i, v in enumerate(reps):
            if (mask >> i) & 1:
                shift_vec = shift_vec + v
        shift = gray_bits(shift_vec)
        for k in kset:
            w = k ^ shift
            if w not in image:
                raise CoverViolation("coset leaves the code", BinaryVector(n, w))
            if w in covered:
                raise CoverViolation("cosets overlap", BinaryVector(n, w))
            covered.add(w)
    if len(covered) != len(image):
        missing = next(iter(image - covered))
        raise CoverViolation("cosets do not cover the code", BinaryVector(n, missing))
    return CoverCertificate(1 << len(reps), len(kset), len(image))


def kernel_via_chi(code: AdditiveCode) -> AdditiveCode:
    """Kernel through the quaternary embedding.

    With ``G`` generating ``chi(C)`` and ``H`` its dual, the kernel of
    ``chi(C)`` is the dual of the code spanned by ``H`` and all ``2 g * h``.
    """
    a, b = code.alpha, code.beta
    g_rows = [chi(r) for r in code.gen.rows]
    qcode = from_rows(0, a + b, g_rows)
    h_rows = list(dual(qcode).gen.rows)
    stacked = h_rows + [twice_star(g, h) for g in g_rows for h in h_rows]
    qkernel = dual(from_rows(0, a + b, stacked, allow_zero=True))
    return from_rows(a, b, [chi_inverse(w, a) for w in qkernel.gen.rows])


def bounds_check(code: AdditiveCode | TypeParams, rank: int, ker_dim: int) -> BoundsCertificate:
    """Raise :class:`BoundViolation` unless ``(rank, ker_dim)`` is admissible for the type."""
    p = code if isinstance(code, TypeParams) else infer_type(code)
    top = p.gamma + 2 * p.delta
    r_bar, k_bar = rank - top, top - ker_dim

    ranks = bounds.rank_values(p)
    if rank not in ranks:
        raise BoundViolation(f"rank {rank} outside [{ranks[0]}, {ranks[-1]}] for {p}", "rank_range")
    kernels = bounds.kernel_values(p)
    if ker_dim not in kernels:
        raise BoundViolation(
            f"kernel dimension {ker_dim} not in {kernels} for {p} (s={p.s})", "kernel_values"
        )
    if (r_bar == 0) != (k_bar == 0):
        raise BoundViolation(f"r_bar={r_bar} and k_bar={k_bar}: exactly one is zero", "linear_iff")
    if k_bar >= 2 and not 1 <= r_bar <= comb(k_bar, 2):
        raise BoundViolation(f"r_bar={r_bar} outside [1, C({k_bar},2)]", "pair_upper")
    if k_bar % 2 == 1 and r_bar < 2:
        raise BoundViolation(f"odd k_bar={k_bar} forces r_bar >= 2, got {r_bar}", "odd_deficiency")
    if (rank, ker_dim) not in bounds.pair_values(p):
        raise BoundViolation(f"pair ({rank}, {ker_dim}) not achievable for {p}", "pair_set")
    return BoundsCertificate(
        p,
        rank,
        ker_dim,
        ("rank_range", "kernel_values", "linear_iff", "pair_upper", "odd_deficiency", "pair_set"),
    )
