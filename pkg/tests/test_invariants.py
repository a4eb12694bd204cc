from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import KERNEL_FIXTURES, PAIR_FIXTURES, RANK_FIXTURES, fixture_code, small_codes
from z2z4 import TypeParams, codewords, contains, equal_as_sets, from_rows, gf2, is_linear_image
from z2z4.errors import BoundViolation, CoverViolation
from z2z4.invariants import (
    KernelReport,
    bounds_check,
    kernel,
    kernel_coset_cover,
    kernel_matrix,
    kernel_via_chi,
    rank,
    span_generators,
)
from z2z4.oracle import brute_kernel, brute_span_dim
from z2z4.vector import gray, gray_bits


@pytest.mark.parametrize("name, r", sorted(RANK_FIXTURES.items()))
def test_reference_rank_matrices(name, r):
    rep = rank(fixture_code(name))
    assert rep.rank == r and rep.r_bar == r - 12


@pytest.mark.parametrize("name, k", sorted(KERNEL_FIXTURES.items()))
def test_reference_kernel_matrices(name, k):
    rep = kernel(fixture_code(name))
    assert rep.ker_dim == k and rep.k_bar == 12 - k


@pytest.mark.parametrize("name, rk", sorted(PAIR_FIXTURES.items()))
def test_reference_pair_matrices(name, rk):
    code = fixture_code(name)
    assert (rank(code).rank, kernel(code).ker_dim) == rk


@settings(max_examples=120, deadline=None)
@given(small_codes(max_alpha=3, max_beta=5, max_bits=9))
def test_engines_match_oracles(code):
    rk, kr = rank(code), kernel(code)
    assert rk.rank == brute_span_dim(code)
    brute = brute_kernel(code)
    assert {gray(w) for w in codewords(kr.kernel_code)} == brute
    assert kr.ker_dim == len(brute).bit_length() - 1


@settings(max_examples=120, deadline=None)
@given(small_codes(max_alpha=3, max_beta=5, max_bits=9))
def test_structure_of_rank_and_kernel(code):
    rk, kr = rank(code), kernel(code)
    top = code.log2_size
    # the order-two subcode always sits inside the kernel
    for u in list(code.gen.rows2) + [v.scale(2) for v in code.gen.rows4]:
        assert contains(kr.kernel_code, u)
    # K(C) <= C <= <C>, with <C> the image of the span code
    image = {gray_bits(w) for w in codewords(code)}
    span = {gray_bits(w) for w in codewords(rk.span_code)}
    assert {gray_bits(w) for w in codewords(kr.kernel_code)} <= image <= span
    assert len(span) == 1 << rk.rank and is_linear_image(rk.span_code)
    # linear exactly when both excesses vanish
    assert (rk.r_bar == 0) == (kr.k_bar == 0) == is_linear_image(code)
    assert top - kr.k_bar == kr.ker_dim
    assert span_generators(code).rank() == rk.rank


@settings(max_examples=100, deadline=None)
@given(small_codes(max_alpha=3, max_beta=5, max_bits=9))
def test_bounds_hold_on_random_codes(code):
    rk, kr = rank(code), kernel(code)
    cert = bounds_check(code, rk.rank, kr.ker_dim)
    assert cert.rank == rk.rank
    assert not (rk.r_bar == 1 and kr.k_bar % 2 == 1)


@settings(max_examples=60, deadline=None)
@given(small_codes(max_alpha=3, max_beta=5, max_bits=9))
def test_coset_cover(code):
    kr = kernel(code)
    cert = kernel_coset_cover(code, kr)
    assert cert.cosets == 1 << kr.k_bar
    assert cert.cosets * cert.coset_size == cert.code_size == len(code)


def test_coset_cover_catches_a_wrong_kernel():
    code = fixture_code("s13_8")
    kr = kernel(code)
    too_big = KernelReport(kr.ker_dim + 1, kr.k_bar - 1, code, kr.coset_reps[:-1])
    with pytest.raises(CoverViolation):
        kernel_coset_cover(code, too_big)


@settings(max_examples=60, deadline=None)
@given(small_codes(max_alpha=3, max_beta=5, max_bits=9))
def test_chi_route_agrees(code):
    assert equal_as_sets(kernel_via_chi(code), kernel(code).kernel_code)


def test_chi_route_on_fixtures():
    for name in ("s13", "s7", "s15_7"):
        code = fixture_code(name)
        assert equal_as_sets(kernel_via_chi(code), kernel(code).kernel_code)


def test_kernel_matrix_rank_is_the_deficiency():
    code = fixture_code("s8")
    assert kernel_matrix(code).rank() == 4


@given(st.integers(1, 6).map(lambda m: 2 * m + 1), st.integers(0, 2**32 - 1))
def test_odd_symmetric_zero_diagonal_matrices_are_singular(order, seed):
    rng = random.Random(seed)
    rows = [0] * order
    for i in range(order):
        for j in range(i + 1, order):
            if rng.randrange(2):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    assert gf2.rank(rows) < order


P = TypeParams(1, 9, 2, 5, 1)


@pytest.mark.parametrize(
    "r, k, bound",
    [
        (16, 12, "rank_range"),
        (11, 12, "rank_range"),
        (13, 11, "kernel_values"),
        (12, 10, "linear_iff"),
        (13, 12, "linear_iff"),
        (13, 9, "odd_deficiency"),
        (15, 10, "pair_upper"),
    ],
)
def test_bound_violations_name_the_bound(r, k, bound):
    with pytest.raises(BoundViolation) as exc:
        bounds_check(P, r, k)
    assert exc.value.bound == bound


def test_rank_excess_is_capped_by_s():
    # s = 1: k_bar = 4 allows r_bar = 1 only, and odd k_bar never occurs
    p = TypeParams(0, 6, 0, 5, 0)
    assert p.s == 1
    bounds_check(p, 11, 6)
    with pytest.raises(BoundViolation) as exc:
        bounds_check(p, 12, 6)
    assert exc.value.bound == "rank_range"
    with pytest.raises(BoundViolation) as exc:
        bounds_check(p, 11, 7)
    assert exc.value.bound == "kernel_values"


def test_single_order_four_generator_gives_a_linear_image():
    rows = fixture_code("s13").gen.rows
    code = from_rows(1, 9, list(rows[:3]))
    assert rank(code).r_bar == 0 and kernel(code).k_bar == 0 and is_linear_image(code)
    assert kernel(code).ker_dim == code.log2_size == 4


def test_coset_cover_counts_for_kernel_ten():
    code = fixture_code("s10")
    cert = kernel_coset_cover(code, kernel(code))
    assert (cert.cosets, cert.coset_size, cert.code_size) == (4, 1024, 4096)
