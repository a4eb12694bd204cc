"""Codes of a prescribed type whose rank or kernel dimension (or both) hit a target.

Every construction uses the generator matrix

    ( I_kappa  T' |  0    0         0       )
    (   0      0  | 2T1   2I_(g-k)  0       )
    (   0      S' |  S    0         I_delta )

and only varies the ``delta x s`` block ``S`` (``s = beta - (gamma-kappa) - delta``).
Its columns are 0/1 vectors; the products ``2 v_i * v_j`` are then supported
on the S columns where rows ``i`` and ``j`` both carry a 1, and nothing else
in the code lives there.  The other free blocks do not affect rank or
kernel; they are zero unless a seed is given.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import bounds
from .code import AdditiveCode, GeneratorMatrix, TypeParams
from .errors import InfeasibleError
from .vector import MixedVector


@dataclass(frozen=True)
class FeasibleSet:
    params: TypeParams
    ranks: tuple[int, ...]
    kernels: tuple[int, ...]
    pairs: frozenset[tuple[int, int]]

    def table(self) -> list[tuple[int, list[bool]]]:
        """Rows ``(k, marks)`` with kernels descending and ranks ascending."""
        return [(k, [(r, k) in self.pairs for r in self.ranks]) for k in sorted(self.kernels, reverse=True)]


def feasible(params: TypeParams) -> FeasibleSet:
    params.check()
    return FeasibleSet(
        params,
        tuple(bounds.rank_values(params)),
        tuple(bounds.kernel_values(params)),
        frozenset(bounds.pair_values(params)),
    )


def pair_order(limit: int) -> list[tuple[int, int]]:
    """Index pairs ``(a, b)``, ``a < b < limit``, by ascending ``b`` then descending ``a``.

    Starts (0,1), (1,2), (0,2), (2,3), ...  Any distinct pairs would do; this
    order reproduces the reference matrices under tests/fixtures.
    """
    return [(a, b) for b in range(1, limit) for a in range(b - 1, -1, -1)]


def _col(delta: int, support: Sequence[int]) -> list[int]:
    col = [0] * delta
    for i in support:
        col[i] = 1
    return col


def rank_columns(delta: int, r_bar: int) -> list[list[int]]:
    return [_col(delta, pair) for pair in pair_order(delta)[:r_bar]]


def kernel_columns(delta: int, s: int, k_bar: int) -> list[list[int]]:
    """Columns with an even number of ones inside rows ``0..k_bar-1``.

    The first covers rows ``0..2*floor(k_bar/2)-1``; for ``k_bar >= 3`` a
    second covers rows ``1..2*floor((k_bar-1)/2)``.  Between them they reach
    every one of the first ``k_bar`` rows.
    """
    if k_bar == 0:
        return []
    cols = [_col(delta, range(2 * (k_bar // 2)))]
    if k_bar >= 3 and s >= 2:
        cols.append(_col(delta, range(1, 1 + 2 * ((k_bar - 1) // 2))))
    return cols


def pair_columns(delta: int, r_bar: int, k_bar: int) -> list[list[int]]:
    if r_bar == 0:
        return []
    cols = [_col(delta, range(k_bar))]
    cols += [_col(delta, pair) for pair in pair_order(k_bar)[: r_bar - 1]]
    return cols


def assemble(
    params: TypeParams, s_columns: Sequence[Sequence[int]], seed: int | None = None
) -> AdditiveCode:
    """Build the code whose S block has the given leading columns (rest zero)."""
    a, b, g, d, k = params.alpha, params.beta, params.gamma, params.delta, params.kappa
    s = params.s
    if len(s_columns) > s:
        raise InfeasibleError(f"{len(s_columns)} S columns do not fit in s={s}", "s_width")
    rng = random.Random(seed) if seed is not None else None

    def bits(n: int) -> list[int]:
        return [rng.randrange(2) for _ in range(n)] if rng else [0] * n

    rows2 = []
    for i in range(k):
        xs = _col(a, [i])
        xs[k:] = bits(a - k)
        rows2.append(MixedVector.from_symbols(xs, [0] * b))
    for i in range(g - k):
        ys = [2 * t for t in bits(s)] + [2 * (t == i) for t in range(g - k)] + [0] * d
        rows2.append(MixedVector.from_symbols([0] * a, ys))
    rows4 = []
    for j in range(d):
        xs = [0] * k + bits(a - k)
        srow = [col[j] for col in s_columns] + [0] * (s - len(s_columns))
        ys = srow + [0] * (g - k) + _col(d, [j])
        rows4.append(MixedVector.from_symbols(xs, ys))
    return AdditiveCode(GeneratorMatrix(a, b, rows2, rows4))


def construct_rank(params: TypeParams, r: int, seed: int | None = None) -> AdditiveCode:
    fs = feasible(params)
    if r not in fs.ranks:
        raise InfeasibleError(f"rank {r} not in {list(fs.ranks)} for type {params}", "rank_range")
    r_bar = r - params.log2_size
    return assemble(params, rank_columns(params.delta, r_bar), seed)


def construct_kernel(params: TypeParams, k: int, seed: int | None = None) -> AdditiveCode:
    fs = feasible(params)
    if k not in fs.kernels:
        raise InfeasibleError(
            f"kernel dimension {k} not in {list(fs.kernels)} for type {params}", "kernel_values"
        )
    k_bar = params.log2_size - k
    return assemble(params, kernel_columns(params.delta, params.s, k_bar), seed)


def construct_pair(params: TypeParams, r: int, k: int, seed: int | None = None) -> AdditiveCode:
    fs = feasible(params)
    if (r, k) not in fs.pairs:
        top = params.log2_size
        r_bar, k_bar = r - top, top - k
        if r not in fs.ranks:
            bound = "rank_range"
        elif k not in fs.kernels:
            bound = "kernel_values"
        elif k_bar % 2 and r_bar == 1:
            bound = "odd_deficiency"
        elif (r_bar == 0) != (k_bar == 0):
            bound = "linear_iff"
        else:
            bound = "pair_upper"
        raise InfeasibleError(f"pair (rank={r}, kernel={k}) is not achievable for type {params}", bound)
    top = params.log2_size
    return assemble(params, pair_columns(params.delta, r - top, top - k), seed)
