"""Brute-force reference computations.

These work from the definitions on fully enumerated sets and share no
elimination code with the engines in :mod:`z2z4.invariants` or the dual
solver in :mod:`z2z4.code`.  They are meant for tests and ``verify`` only.
"""

from __future__ import annotations

import numpy as np

from .code import AdditiveCode, codewords
from .guard import DEFAULT_GUARD, SizeGuard
from .vector import BinaryVector, MixedVector, gray_bits

__all__ = ["SizeGuard", "brute_span_dim", "brute_kernel", "brute_dual", "gray_image"]

# bool lookup table up to 2^24 entries (16 MiB); sorted search above that
_TABLE_BITS = 24


def gray_image(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> list[int]:
    return [gray_bits(c) for c in codewords(code, guard)]


def brute_span_dim(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Dimension of the XOR span of every Gray image."""
    basis: dict[int, int] = {}  # leading bit -> vector
    for w in gray_image(code, guard):
        while w:
            top = w.bit_length() - 1
            if top not in basis:
                basis[top] = w
                break
            w ^= basis[top]
    return len(basis)


def _kernel_bits(words: list[int], n: int) -> list[int]:
    # 0 is a codeword, so every kernel element x = 0 + x is itself a codeword
    if n <= 62:
        arr = np.array(words, dtype=np.uint64)
        if n <= _TABLE_BITS:
            table = np.zeros(1 << n, dtype=bool)
            table[arr] = True

            def member(v: np.ndarray) -> bool:
                return bool(table[v].all())

        else:
            srt = np.sort(arr)

            def member(v: np.ndarray) -> bool:
                idx = np.searchsorted(srt, v)
                idx[idx == len(srt)] = 0
                return bool((srt[idx] == v).all())

        return [x for x in words if member(arr ^ np.uint64(x))]
    image = set(words)
    return [x for x in words if all((c ^ x) in image for c in words)]


def brute_kernel(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> set[BinaryVector]:
    """All ``x`` with ``C + x = C`` for the Gray image ``C``."""
    n = code.alpha + 2 * code.beta
    return {BinaryVector(n, x) for x in _kernel_bits(gray_image(code, guard), n)}


def brute_kernel_dim(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> int:
    size = len(_kernel_bits(gray_image(code, guard), code.alpha + 2 * code.beta))
    return size.bit_length() - 1


def _ambient(alpha: int, beta: int) -> tuple[np.ndarray, np.ndarray]:
    """Every vector of Z2^alpha x Z4^beta as (X bit matrix, Y symbol matrix)."""
    total = alpha + 2 * beta
    t = np.arange(1 << total, dtype=np.int64)
    xs = ((t[:, None] >> np.arange(alpha)) & 1).astype(np.int64)
    ys = ((t[:, None] >> (alpha + 2 * np.arange(beta))) & 3).astype(np.int64)
    return xs, ys


def brute_dual(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> set[MixedVector]:
    """Every ambient vector orthogonal to all generators."""
    a, b = code.alpha, code.beta
    guard.check_ambient(a + 2 * b)
    xs, ys = _ambient(a, b)
    gens = code.gen.rows
    keep = np.ones(len(xs), dtype=bool)
    if gens:
        gx = np.array([g.xs for g in gens], dtype=np.int64).reshape(len(gens), a)
        gy = np.array([g.ys for g in gens], dtype=np.int64).reshape(len(gens), b)
        ip = (2 * (xs @ gx.T) + ys @ gy.T) % 4
        keep = ~ip.any(axis=1)
    xs, ys = xs[keep], ys[keep]
    x = (xs << np.arange(a)).sum(axis=1) if a else np.zeros(len(xs), dtype=np.int64)
    lo = ((ys & 1) << np.arange(b)).sum(axis=1) if b else np.zeros(len(ys), dtype=np.int64)
    hi = ((ys >> 1) << np.arange(b)).sum(axis=1) if b else np.zeros(len(ys), dtype=np.int64)
    return {MixedVector(a, b, int(i), int(j), int(k)) for i, j, k in zip(x, lo, hi)}
