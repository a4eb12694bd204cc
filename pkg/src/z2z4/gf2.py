"""Bit-packed matrices over F2.

Each row is a Python int whose bit ``j`` is the entry in column ``j``.
Elimination XORs whole rows at once, so the cost per row operation is one
big-int XOR regardless of width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .vector import BinaryVector


@dataclass(frozen=True)
class Echelon:
    """Reduced row-echelon data: ``rows[i]`` has its pivot at bit ``pivots[i]``.

    ``combos[i]`` records which input rows were XORed to produce ``rows[i]``.
    ``kernel`` lists input-row combinations that sum to zero (a basis of the
    left null space).
    """

    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    combos: tuple[int, ...]
    kernel: tuple[int, ...]
    selected: tuple[int, ...]


def _lowest_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def echelon(rows: Sequence[int]) -> Echelon:
    """Row-reduce in input order.

    Rows are inserted one at a time; an input row is ``selected`` when it is
    independent of the rows before it, so ``selected`` is the greedy
    lowest-index basis of the row space.
    """
    basis: list[int] = []
    pivots: list[int] = []
    combos: list[int] = []
    kernel: list[int] = []
    selected: list[int] = []
    for idx, r in enumerate(rows):
        combo = 1 << idx
        for b, p, c in zip(basis, pivots, combos):
            if (r >> p) & 1:
                r ^= b
                combo ^= c
        if r == 0:
            kernel.append(combo)
            continue
        p = _lowest_bit(r)
        # keep the basis fully reduced on its pivot columns
        for k in range(len(basis)):
            if (basis[k] >> p) & 1:
                basis[k] ^= r
                combos[k] ^= combo
        basis.append(r)
        pivots.append(p)
        combos.append(combo)
        selected.append(idx)
    return Echelon(tuple(basis), tuple(pivots), tuple(combos), tuple(kernel), tuple(selected))


def rank(rows: Iterable[int]) -> int:
    return len(echelon(list(rows)).rows)


def in_span(vec: int, ech: Echelon) -> bool:
    for b, p in zip(ech.rows, ech.pivots):
        if (vec >> p) & 1:
            vec ^= b
    return vec == 0


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable bit-packed F2 matrix with ``ncols`` columns."""

    ncols: int
    rows: tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BinaryVector], ncols: int | None = None) -> BinaryMatrix:
        if ncols is None:
            ncols = vectors[0].n if vectors else 0
        for v in vectors:
            if v.n != ncols:
                raise ValueError(f"row of length {v.n} in a matrix with {ncols} columns")
        return cls(ncols, tuple(v.bits for v in vectors))

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> BinaryMatrix:
        ncols = len(data[0]) if data else 0
        return cls.from_vectors([BinaryVector.from_bits(r) for r in data], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.ncols, self.rows[i])

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def echelon(self) -> Echelon:
        return echelon(self.rows)

    def rank(self) -> int:
        return len(self.echelon().rows)

    def left_kernel(self) -> tuple[int, ...]:
        """Basis of row combinations (bitmasks over row indices) summing to zero."""
        return self.echelon().kernel

    def transpose(self) -> BinaryMatrix:
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.rows):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return BinaryMatrix(self.nrows, tuple(cols))
