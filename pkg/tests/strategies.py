"""Random inputs shared by the test modules."""

from __future__ import annotations

import random
from pathlib import Path

from hypothesis import strategies as st

from z2z4 import AdditiveCode, MixedVector, TypeParams, from_rows
from z2z4.construct import assemble
from z2z4.matfile import load

FIXTURES = Path(__file__).parent / "fixtures"

# Reference generator matrices of type (1,9;2,5;1) and the invariants they realise.
RANK_FIXTURES = {"s13": 13, "s14": 14, "s15": 15}
KERNEL_FIXTURES = {"s10": 10, "s9": 9, "s8": 8, "s7": 7}
PAIR_FIXTURES = {
    "s13_10": (13, 10),
    "s13_8": (13, 8),
    "s14_9": (14, 9),
    "s14_8": (14, 8),
    "s14_7": (14, 7),
    "s15_9": (15, 9),
    "s15_8": (15, 8),
    "s15_7": (15, 7),
}


def fixture_code(name: str) -> AdditiveCode:
    mf = load(FIXTURES / f"{name}.z2z4")
    return from_rows(mf.alpha, mf.beta, mf.rows)


def random_vector(rng: random.Random, alpha: int, beta: int, order_two: bool = False) -> MixedVector:
    xs = [rng.randrange(2) for _ in range(alpha)]
    if order_two:
        ys = [2 * rng.randrange(2) for _ in range(beta)]
    else:
        ys = [rng.choice((0, 0, 1, 2, 3)) for _ in range(beta)]
    return MixedVector.from_symbols(xs, ys)


def _unstructured(rng, a: int, b: int, max_bits: int) -> list[MixedVector]:
    n4 = rng.randint(0, min(b, (max_bits + 1) // 2))
    rows = [random_vector(rng, a, b) for _ in range(n4)]
    rows += [random_vector(rng, a, b, order_two=True) for _ in range(rng.randint(0, 3))]
    return rows


def _disguised(rng, a: int, b: int, max_bits: int) -> list[MixedVector]:
    """Generators of a random type with a random quaternary S block, scrambled.

    Columns are permuted within X and within Y and every row picks up random
    multiples of the other rows, so the result is far from standard form.
    """
    types = [
        TypeParams(a, b, g, d, k)
        for g in range(max_bits + 1)
        for d in range((max_bits - g) // 2 + 1)
        for k in range(min(a, g) + 1)
    ]
    feasible = [q for q in types if q.is_feasible()]
    roomy = [q for q in feasible if q.delta >= 2 and q.s >= 1]
    p = rng.choice(roomy or feasible)
    cols = [[rng.randrange(4) for _ in range(p.delta)] for _ in range(p.s)]
    rows = list(assemble(p, cols, seed=rng.randrange(2**32)).gen.rows)
    xp, yp = list(range(a)), list(range(b))
    rng.shuffle(xp)
    rng.shuffle(yp)
    rows = [MixedVector.from_symbols([r.xs[i] for i in xp], [r.ys[j] for j in yp]) for r in rows]
    mixed = []
    for i, r in enumerate(rows):
        for other in rows[i + 1 :]:
            r = r + other.scale(rng.randrange(4))
        mixed.append(r)
    rng.shuffle(mixed)
    return mixed


def random_code(
    rng: random.Random,
    max_alpha: int = 4,
    max_beta: int = 8,
    max_bits: int = 12,
    max_ambient: int | None = None,
) -> AdditiveCode:
    """A nonzero code with ``gamma + 2*delta <= max_bits``.

    Half the draws are plain random generating sets, half are disguised
    structured codes, which are far more often nonlinear.  About a third get
    an extra dependent row to exercise the reduction.
    """
    while True:
        a = rng.randint(0, max_alpha)
        b = rng.randint(0, max_beta)
        if a + b == 0 or (max_ambient is not None and a + 2 * b > max_ambient):
            continue
        make = _disguised if rng.random() < 0.5 else _unstructured
        rows = make(rng, a, b, max_bits)
        if rows and rng.random() < 0.3:
            rows.append(rng.choice(rows) + rng.choice(rows).scale(rng.randrange(4)))
        code = from_rows(a, b, rows, allow_zero=True)
        if 0 < code.log2_size <= max_bits:
            return code


@st.composite
def shapes(draw, max_alpha: int = 5, max_beta: int = 6) -> tuple[int, int]:
    a = draw(st.integers(0, max_alpha))
    b = draw(st.integers(0 if a else 1, max_beta))
    return a, b


@st.composite
def vectors_of(draw, alpha: int, beta: int) -> MixedVector:
    xs = draw(st.lists(st.integers(0, 1), min_size=alpha, max_size=alpha))
    ys = draw(st.lists(st.integers(0, 3), min_size=beta, max_size=beta))
    return MixedVector.from_symbols(xs, ys)


@st.composite
def vector_pairs(draw, max_alpha: int = 5, max_beta: int = 6):
    a, b = draw(shapes(max_alpha, max_beta))
    return draw(vectors_of(a, b)), draw(vectors_of(a, b))


@st.composite
def small_codes(draw, max_alpha: int = 3, max_beta: int = 4, max_bits: int = 8) -> AdditiveCode:
    seed = draw(st.integers(0, 2**32 - 1))
    return random_code(random.Random(seed), max_alpha, max_beta, max_bits)
