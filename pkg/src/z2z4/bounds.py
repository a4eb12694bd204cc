"""Which ranks and kernel dimensions a code type admits, alone and in pairs."""

from __future__ import annotations

from math import ceil, comb

from .code import TypeParams


def rank_values(p: TypeParams) -> list[int]:
    lo = p.gamma + 2 * p.delta
    hi = min(p.beta + p.delta + p.kappa, lo + comb(p.delta, 2))
    return list(range(lo, hi + 1))


def kernel_deficiencies(p: TypeParams) -> list[int]:
    """Achievable ``k_bar = gamma + 2*delta - ker``, ascending, always including 0."""
    s = p.s
    if s <= 0:
        return [0]
    if s == 1:
        return [0] + list(range(2, 2 * ceil((p.delta - 1) / 2) + 1, 2))
    return [0] + list(range(2, p.delta + 1))


def kernel_values(p: TypeParams) -> list[int]:
    top = p.gamma + 2 * p.delta
    return sorted(top - kb for kb in kernel_deficiencies(p))


def rank_excess_range(p: TypeParams, k_bar: int) -> range:
    """Achievable ``r_bar`` once the kernel deficiency is fixed (empty if none)."""
    if k_bar == 0:
        return range(0, 1)
    if k_bar not in kernel_deficiencies(p):
        return range(0)
    lo = 2 if k_bar % 2 else 1
    hi = min(p.s, comb(k_bar, 2))
    return range(lo, hi + 1)


def pair_values(p: TypeParams) -> set[tuple[int, int]]:
    top = p.gamma + 2 * p.delta
    return {
        (top + rb, top - kb) for kb in kernel_deficiencies(p) for rb in rank_excess_range(p, kb)
    }
