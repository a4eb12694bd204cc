from __future__ import annotations

import pytest

from strategies import fixture_code
from z2z4 import MixedVector, from_rows
from z2z4.errors import GuardExceeded
from z2z4.guard import SizeGuard
from z2z4.invariants import kernel, rank
from z2z4.oracle import brute_dual, brute_kernel, brute_kernel_dim, brute_span_dim, gray_image
from z2z4.vector import BinaryVector


def mv(xs, ys):
    return MixedVector.from_symbols(xs, ys)


def test_single_quaternary_coordinate():
    code = from_rows(0, 1, [mv([], [1])])
    assert sorted(gray_image(code)) == [0, 1, 2, 3]
    assert brute_span_dim(code) == 2 and brute_kernel_dim(code) == 2


def test_smallest_nonlinear_image():
    # v1 = (1,1,0), v2 = (0,1,1): 2 v1*v2 = (0,2,0) is not a codeword
    code = from_rows(0, 3, [mv([], [1, 1, 0]), mv([], [0, 1, 1])])
    assert len(gray_image(code)) == 16
    assert brute_span_dim(code) == 5
    kern = brute_kernel(code)
    assert len(kern) == 4
    zero = BinaryVector(6, 0)
    assert zero in kern
    for a in kern:
        for b in kern:
            assert (a ^ b) in kern


def test_brute_dual_by_hand():
    code = from_rows(1, 1, [mv([1], [1])])
    assert brute_dual(code) == {mv([0], [0]), mv([1], [2])}
    assert len(brute_dual(from_rows(1, 2, [mv([0], [2, 0])]))) == 16


def test_reference_code_by_brute_force():
    code = fixture_code("s15_7")
    assert brute_span_dim(code) == 15
    assert brute_kernel_dim(code) == 7


def test_search_path_above_table_size():
    # n = 25 exceeds the lookup-table width and exercises the sorted search
    rows = [mv([1], [0] * 12), mv([0], [1, 1] + [0] * 10), mv([0], [0, 1, 1] + [0] * 9)]
    code = from_rows(1, 12, rows)
    # |C| = 2^5 and 2 v1*v2 is not a codeword, so k_bar = 2 and r_bar = 1
    assert brute_kernel_dim(code) == kernel(code).ker_dim == 3
    assert brute_span_dim(code) == rank(code).rank == 6


def test_guards():
    with pytest.raises(GuardExceeded) as exc:
        brute_dual(fixture_code("s13"), SizeGuard(max_ambient_log2=18))
    assert exc.value.required == {"max_ambient_log2": 19}
    with pytest.raises(GuardExceeded):
        brute_kernel(fixture_code("s13"), SizeGuard(max_codeword_bits=11))
