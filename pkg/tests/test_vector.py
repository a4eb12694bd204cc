from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import shapes, vector_pairs, vectors_of
from z2z4.errors import ShapeError, SymbolError
from z2z4.vector import (
    BinaryVector,
    MixedVector,
    chi,
    chi_inverse,
    gray,
    gray_bits,
    gray_inverse,
    hamming_distance,
    inner_product,
    lee_weight,
    order,
    star,
    twice_star,
)


def mv(xs, ys):
    return MixedVector.from_symbols(xs, ys)


@pytest.mark.parametrize("symbol, image", [(0, (0, 0)), (1, (0, 1)), (2, (1, 1)), (3, (1, 0))])
def test_gray_map_on_one_symbol(symbol, image):
    assert gray(mv([], [symbol])).to_tuple() == image


def test_gray_keeps_binary_part_in_front():
    assert gray(mv([1, 0], [3, 2])).to_tuple() == (1, 0, 1, 0, 1, 1)


def test_arithmetic_by_hand():
    u, v = mv([1, 1], [1, 3, 2]), mv([1, 0], [3, 3, 2])
    assert (u + v).xs == (0, 1) and (u + v).ys == (0, 2, 0)
    assert (-u).ys == (3, 1, 2) and (-u).xs == (1, 1)
    assert star(u, v).ys == (3, 1, 0) and star(u, v).xs == (1, 0)
    assert twice_star(u, v).ys == (2, 2, 0) and twice_star(u, v).xs == (0, 0)
    assert inner_product(u, v) == (2 * 1 + 3 + 9 + 4) % 4
    assert order(u) == 4 and order(2 * u) == 2 and order(mv([0, 0], [0, 0, 0])) == 1
    assert lee_weight(u) == 2 + 1 + 1 + 2


def test_bad_symbols_are_rejected():
    with pytest.raises(SymbolError):
        mv([2], [0])
    with pytest.raises(SymbolError):
        mv([0], [4])


def test_shape_mismatch_is_rejected():
    with pytest.raises(ShapeError):
        mv([0], [1]) + mv([], [1, 1])
    with pytest.raises(ShapeError):
        inner_product(mv([0], [1]), mv([0, 1], [1]))


@given(vector_pairs())
def test_gray_sum_identity(pair):
    u, v = pair
    assert gray(u + v) == gray(u) ^ gray(v) ^ gray(twice_star(u, v))


@given(vector_pairs())
def test_gray_is_an_isometry(pair):
    u, v = pair
    assert lee_weight(u - v) == hamming_distance(gray(u), gray(v))


@given(shapes().flatmap(lambda s: st.tuples(st.just(s), vectors_of(*s))))
def test_gray_inverse_round_trip(arg):
    (a, b), u = arg
    assert gray_inverse(gray(u), a, b) == u
    assert gray_inverse(list(gray(u)), a, b) == u
    assert gray_bits(u) == gray(u).bits


@given(shapes().flatmap(lambda s: st.tuples(vectors_of(*s), vectors_of(*s), vectors_of(*s))))
def test_group_and_product_laws(triple):
    u, v, w = triple
    zero = MixedVector.zero(u.alpha, u.beta)
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u + zero == u and u + (-u) == zero and u - v == u + (-v)
    assert star(u, v) == star(v, u)
    assert twice_star(u, v) == 2 * star(u, v)
    assert twice_star(u + 2 * w, v) == twice_star(u, v)
    assert inner_product(u, v) == inner_product(v, u)
    assert inner_product(u + v, w) == (inner_product(u, w) + inner_product(v, w)) % 4
    assert 4 * u == zero and 3 * u == -u


@given(shapes().flatmap(lambda s: st.tuples(st.just(s[0]), vectors_of(*s))))
def test_chi_round_trip(arg):
    a, u = arg
    w = chi(u)
    assert w.alpha == 0 and w.beta == u.alpha + u.beta
    assert w.ys[: u.alpha] == tuple(2 * x for x in u.xs)
    assert w.ys[u.alpha :] == u.ys
    assert chi_inverse(w, a) == u


def test_binary_vector_basics():
    b = BinaryVector.from_bits([1, 0, 1, 1])
    assert len(b) == 4 and list(b) == [1, 0, 1, 1] and b[2] == 1 and b.weight == 3
    assert (b ^ BinaryVector.from_bits([1, 1, 1, 1])).to_tuple() == (0, 1, 0, 0)


def test_small_worked_examples():
    assert gray(mv([1], [2, 1])).to_tuple() == (1, 1, 1, 0, 1)
    assert gray_inverse([1, 0], 0, 1) == mv([], [3])
    assert inner_product(mv([1, 1], []), mv([1, 0], [])) == 2
    assert chi(mv([1], [3])) == mv([], [2, 3])
