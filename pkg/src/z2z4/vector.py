"""Vectors over Z2^alpha x Z4^beta and their binary Gray images.

A :class:`MixedVector` keeps its binary part as one bitmask and its
quaternary part bit-sliced into two bitmasks, ``lo`` and ``hi``, so that
``y_j = lo_j + 2*hi_j``.  Coordinate ``i`` of every part lives in bit ``i``.
All arithmetic is word-parallel on Python ints.

Binary vectors use the same convention: coordinate ``i`` is bit ``i`` of
:attr:`BinaryVector.bits`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError, SymbolError

# _SPREAD[b] moves bit i of the byte b to bit 2i.
_SPREAD = tuple(sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256))
_COMPACT = {v: b for b, v in enumerate(_SPREAD)}


def _spread(v: int) -> int:
    out = 0
    shift = 0
    while v:
        out |= _SPREAD[v & 0xFF] << shift
        v >>= 8
        shift += 16
    return out


def _compact(v: int) -> int:
    """Inverse of :func:`_spread` on the even bits of ``v``."""
    out = 0
    shift = 0
    while v:
        chunk = v & 0x5555
        out |= _COMPACT[chunk] << shift
        v >>= 16
        shift += 8
    return out


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class BinaryVector:
    """Bit-packed vector in Z2^n."""

    n: int
    bits: int

    @classmethod
    def from_bits(cls, seq: Sequence[int]) -> BinaryVector:
        value = 0
        for i, b in enumerate(seq):
            if b not in (0, 1):
                raise SymbolError(f"binary symbol {b!r} at position {i}")
            value |= b << i
        return cls(len(seq), value)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        for i in range(self.n):
            yield (self.bits >> i) & 1

    def __getitem__(self, i: int) -> int:
        if not -self.n <= i < self.n:
            raise IndexError(i)
        return (self.bits >> (i % self.n)) & 1

    def __xor__(self, other: BinaryVector) -> BinaryVector:
        if self.n != other.n:
            raise ShapeError(f"length {self.n} vs {other.n}")
        return BinaryVector(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return "BinaryVector(" + "".join(map(str, self)) + ")"


@dataclass(frozen=True, slots=True)
class MixedVector:
    """Element of Z2^alpha x Z4^beta, stored word-packed.

    Build instances with :meth:`from_symbols` unless you already hold the
    packed words; the raw constructor does not mask stray high bits.
    """

    alpha: int
    beta: int
    x: int = 0
    lo: int = 0
    hi: int = 0

    @classmethod
    def from_symbols(cls, xs: Iterable[int], ys: Iterable[int]) -> MixedVector:
        xs = list(xs)
        ys = list(ys)
        x = lo = hi = 0
        for i, s in enumerate(xs):
            if s not in (0, 1):
                raise SymbolError(f"X symbol {s!r} at position {i} is not in Z2")
            x |= s << i
        for j, s in enumerate(ys):
            if s not in (0, 1, 2, 3):
                raise SymbolError(f"Y symbol {s!r} at position {j} is not in Z4")
            lo |= (s & 1) << j
            hi |= (s >> 1) << j
        return cls(len(xs), len(ys), x, lo, hi)

    @classmethod
    def zero(cls, alpha: int, beta: int) -> MixedVector:
        return cls(alpha, beta)

    @classmethod
    def unit_x(cls, alpha: int, beta: int, i: int) -> MixedVector:
        return cls(alpha, beta, x=1 << i)

    @classmethod
    def unit_y(cls, alpha: int, beta: int, j: int) -> MixedVector:
        return cls(alpha, beta, lo=1 << j)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.alpha, self.beta)

    @property
    def xs(self) -> tuple[int, ...]:
        return tuple((self.x >> i) & 1 for i in range(self.alpha))

    @property
    def ys(self) -> tuple[int, ...]:
        return tuple(((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1) for j in range(self.beta))

    def x_at(self, i: int) -> int:
        return (self.x >> i) & 1

    def y_at(self, j: int) -> int:
        return ((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)

    def is_zero(self) -> bool:
        return not (self.x or self.lo or self.hi)

    def _check(self, other: MixedVector) -> None:
        if self.alpha != other.alpha or self.beta != other.beta:
            raise ShapeError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: MixedVector) -> MixedVector:
        self._check(other)
        return MixedVector(
            self.alpha,
            self.beta,
            self.x ^ other.x,
            self.lo ^ other.lo,
            self.hi ^ other.hi ^ (self.lo & other.lo),
        )

    def __neg__(self) -> MixedVector:
        # -1 = 3, -3 = 1 flip hi where lo is set; X symbols are self-inverse
        return MixedVector(self.alpha, self.beta, self.x, self.lo, self.hi ^ self.lo)

    def __sub__(self, other: MixedVector) -> MixedVector:
        return self + (-other)

    def scale(self, c: int) -> MixedVector:
        """Return ``c * self`` for an integer ``c`` acting as a group multiple."""
        c %= 4
        if c == 0:
            return MixedVector(self.alpha, self.beta)
        if c == 1:
            return self
        if c == 2:
            return MixedVector(self.alpha, self.beta, 0, 0, self.lo)
        return -self

    def __rmul__(self, c: int) -> MixedVector:
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return star(self, other)

    def __repr__(self) -> str:
        xs = " ".join(map(str, self.xs))
        ys = " ".join(map(str, self.ys))
        return f"MixedVector({xs} | {ys})"


def _same_shape(u: MixedVector, v: MixedVector) -> None:
    if u.alpha != v.alpha or u.beta != v.beta:
        raise ShapeError(f"shape {u.shape} vs {v.shape}")


def add(u: MixedVector, v: MixedVector) -> MixedVector:
    return u + v


def order(u: MixedVector) -> int:
    """Additive order of ``u``: 1 for zero, 4 if any Y symbol is odd, else 2."""
    if u.lo:
        return 4
    if u.x or u.hi:
        return 2
    return 1


def star(u: MixedVector, v: MixedVector) -> MixedVector:
    """Component-wise product (mod 2 on X, mod 4 on Y)."""
    _same_shape(u, v)
    return MixedVector(
        u.alpha,
        u.beta,
        u.x & v.x,
        u.lo & v.lo,
        (u.hi & v.lo) ^ (u.lo & v.hi),
    )


def twice_star(u: MixedVector, v: MixedVector) -> MixedVector:
    """``2 * (u * v)``; only the parities of the Y symbols matter."""
    _same_shape(u, v)
    return MixedVector(u.alpha, u.beta, 0, 0, u.lo & v.lo)


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """Mixed inner product ``2*sum_X u_i v_i + sum_Y u_j v_j`` in Z4."""
    _same_shape(u, v)
    s = star(u, v)
    return (2 * (u.x & v.x).bit_count() + s.lo.bit_count() + 2 * s.hi.bit_count()) % 4


def gray(u: MixedVector) -> BinaryVector:
    """Gray image: X copied, each Y symbol expanded 0->00, 1->01, 2->11, 3->10."""
    a = u.alpha
    bits = u.x | (_spread(u.hi) << a) | (_spread(u.hi ^ u.lo) << (a + 1))
    return BinaryVector(a + 2 * u.beta, bits)


def gray_bits(u: MixedVector) -> int:
    """Packed Gray image as an int (hot path for the enumeration oracles)."""
    a = u.alpha
    return u.x | (_spread(u.hi) << a) | (_spread(u.hi ^ u.lo) << (a + 1))


def gray_inverse(b: BinaryVector | Sequence[int], alpha: int, beta: int) -> MixedVector:
    if not isinstance(b, BinaryVector):
        b = BinaryVector.from_bits(b)
    if b.n != alpha + 2 * beta:
        raise ShapeError(f"binary length {b.n} != alpha + 2*beta = {alpha + 2 * beta}")
    x = b.bits & _mask(alpha)
    rest = b.bits >> alpha
    hi = _compact(rest & _spread(_mask(beta)))
    first_xor_second = _compact((rest >> 1) & _spread(_mask(beta)))
    return MixedVector(alpha, beta, x, hi ^ first_xor_second, hi)


def chi(u: MixedVector) -> MixedVector:
    """Embed into Z4^(alpha+beta): X symbols map 0->0, 1->2; Y symbols are kept."""
    a = u.alpha
    return MixedVector(0, a + u.beta, 0, u.lo << a, u.x | (u.hi << a))


def chi_inverse(w: MixedVector, alpha: int) -> MixedVector:
    """Pull back a quaternary vector whose first ``alpha`` symbols lie in {0, 2}."""
    if w.alpha != 0 or w.beta < alpha:
        raise ShapeError(f"cannot split {w.shape} into alpha={alpha}")
    m = _mask(alpha)
    if w.lo & m:
        raise SymbolError("odd symbol in a coordinate that must come from Z2")
    beta = w.beta - alpha
    return MixedVector(alpha, beta, w.hi & m, w.lo >> alpha, w.hi >> alpha)


def lee_weight(u: MixedVector) -> int:
    """Hamming weight on X plus Lee weight on Y (1 and 3 weigh 1, 2 weighs 2)."""
    return u.x.bit_count() + u.lo.bit_count() + 2 * (u.hi & ~u.lo).bit_count()


def hamming_distance(a: BinaryVector, b: BinaryVector) -> int:
    return (a ^ b).weight
