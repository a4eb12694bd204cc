"""Z2Z4-additive codes: generator matrices, standard form, membership, duals."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import gf2, z4
from .errors import DegenerateCodeError, InfeasibleError, ShapeError
from .guard import DEFAULT_GUARD, SizeGuard
from .vector import MixedVector, order, twice_star


@dataclass(frozen=True, order=True)
class TypeParams:
    """The type ``(alpha, beta; gamma, delta; kappa)`` of an additive code."""

    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    @property
    def s(self) -> int:
        """Width of the free quaternary block: ``beta - (gamma - kappa) - delta``."""
        return self.beta - (self.gamma - self.kappa) - self.delta

    @property
    def n(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def log2_size(self) -> int:
        return self.gamma + 2 * self.delta

    def violations(self) -> list[str]:
        a, b, g, d, k = self.alpha, self.beta, self.gamma, self.delta, self.kappa
        bad = []
        if min(a, b, g, d, k) < 0:
            bad.append("parameters must be non-negative")
        if a + b <= 0:
            bad.append("alpha + beta must be positive")
        if not 0 < d + g:
            bad.append("gamma + delta must be positive")
        if d + g > b + k:
            bad.append("gamma + delta must not exceed beta + kappa")
        if k > min(a, g):
            bad.append("kappa must not exceed min(alpha, gamma)")
        return bad

    def is_feasible(self) -> bool:
        return not self.violations()

    def check(self) -> TypeParams:
        bad = self.violations()
        if bad:
            raise InfeasibleError(f"no additive code of type {self}: " + "; ".join(bad), "type")
        return self

    def dual(self) -> TypeParams:
        """Type of the additive dual code."""
        a, b, g, d, k = self.alpha, self.beta, self.gamma, self.delta, self.kappa
        return TypeParams(a, b, a + g - 2 * k, b - g - d + k, a - k)

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta};{self.kappa})"


@dataclass(frozen=True)
class GeneratorMatrix:
    """``gamma`` rows of order two followed by ``delta`` rows of order four."""

    alpha: int
    beta: int
    rows2: tuple[MixedVector, ...] = ()
    rows4: tuple[MixedVector, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows2", tuple(self.rows2))
        object.__setattr__(self, "rows4", tuple(self.rows4))
        for r in self.rows:
            if r.shape != (self.alpha, self.beta):
                raise ShapeError(f"row of shape {r.shape} in a ({self.alpha}, {self.beta}) matrix")
        for r in self.rows2:
            if order(r) > 2:
                raise ValueError(f"order-two block holds {r} of order 4")
        for r in self.rows4:
            if order(r) != 4:
                raise ValueError(f"order-four block holds {r} of order {order(r)}")

    @property
    def rows(self) -> tuple[MixedVector, ...]:
        return self.rows2 + self.rows4

    @property
    def gamma(self) -> int:
        return len(self.rows2)

    @property
    def delta(self) -> int:
        return len(self.rows4)

    def to_lists(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return [(r.xs, r.ys) for r in self.rows]


@dataclass(frozen=True)
class _Reduction:
    """Row-reduced generators in original coordinates plus their pivot columns.

    ``rows_x`` have an X pivot (the identity block on X), ``rows_2`` a Y pivot
    equal to 2, ``rows_4`` a Y pivot equal to 1.  Pivot columns are zero in
    every other reduced row.
    """

    rows_x: tuple[MixedVector, ...]
    piv_x: tuple[int, ...]
    rows_2: tuple[MixedVector, ...]
    piv_2: tuple[int, ...]
    rows_4: tuple[MixedVector, ...]
    piv_4: tuple[int, ...]


def _top_bit(v: int) -> int:
    return v.bit_length() - 1


def _low_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _reduce(rows: Sequence[MixedVector]) -> _Reduction:
    # Rows are scanned top to bottom.  Order-four pivots take the rightmost
    # unit, order-two Y pivots the rightmost 2, X pivots the leftmost 1, so a
    # matrix already in standard shape is a fixed point.
    pending = [r for r in rows if not r.is_zero()]
    rows4: list[MixedVector] = []
    piv4: list[int] = []
    while True:
        i = next((i for i, r in enumerate(pending) if r.lo), None)
        if i is None:
            break
        r = pending.pop(i)
        p = _top_bit(r.lo)
        if r.y_at(p) == 3:
            r = -r
        pending = [t - r.scale(t.y_at(p)) if t.y_at(p) else t for t in pending]
        rows4 = [t - r.scale(t.y_at(p)) if t.y_at(p) else t for t in rows4]
        rows4.append(r)
        piv4.append(p)

    rowsx: list[MixedVector] = []
    pivx: list[int] = []
    while True:
        i = next((i for i, r in enumerate(pending) if r.x), None)
        if i is None:
            break
        r = pending.pop(i)
        p = _low_bit(r.x)
        pending = [t + r if t.x_at(p) else t for t in pending]
        rowsx = [t + r if t.x_at(p) else t for t in rowsx]
        rows4 = [t + r if t.x_at(p) else t for t in rows4]
        rowsx.append(r)
        pivx.append(p)

    rows2: list[MixedVector] = []
    piv2: list[int] = []
    while True:
        i = next((i for i, r in enumerate(pending) if r.hi), None)
        if i is None:
            break
        r = pending.pop(i)
        p = _top_bit(r.hi)
        pending = [t + r if t.y_at(p) >= 2 else t for t in pending]
        rowsx = [t + r if t.y_at(p) >= 2 else t for t in rowsx]
        rows2 = [t + r if t.y_at(p) >= 2 else t for t in rows2]
        rows4 = [t + r if t.y_at(p) >= 2 else t for t in rows4]
        rows2.append(r)
        piv2.append(p)

    assert all(t.is_zero() for t in pending)
    return _Reduction(tuple(rowsx), tuple(pivx), tuple(rows2), tuple(piv2), tuple(rows4), tuple(piv4))


@dataclass(frozen=True)
class StandardForm:
    """Canonical generator matrix together with the column permutations.

    Position ``i`` of the permuted X part holds original X column
    ``x_perm[i]``; likewise for ``y_perm``.  The matrix rows are, in order,
    the ``kappa`` rows ``(I | T' | 2T2 0 0)``, the ``gamma - kappa`` rows
    ``(0 | 0 | 2T1 2I 0)`` and the ``delta`` rows ``(0 | S' | S R I)``.
    """

    matrix: GeneratorMatrix
    x_perm: tuple[int, ...]
    y_perm: tuple[int, ...]
    params: TypeParams

    def permute(self, v: MixedVector) -> MixedVector:
        xs, ys = v.xs, v.ys
        return MixedVector.from_symbols([xs[i] for i in self.x_perm], [ys[j] for j in self.y_perm])

    def unpermute(self, v: MixedVector) -> MixedVector:
        xs = [0] * v.alpha
        ys = [0] * v.beta
        for new, old in enumerate(self.x_perm):
            xs[old] = v.x_at(new)
        for new, old in enumerate(self.y_perm):
            ys[old] = v.y_at(new)
        return MixedVector.from_symbols(xs, ys)

    @property
    def is_identity(self) -> bool:
        return self.x_perm == tuple(range(len(self.x_perm))) and self.y_perm == tuple(
            range(len(self.y_perm))
        )


class AdditiveCode:
    """Subgroup of Z2^alpha x Z4^beta given by a generator matrix.

    Instances are immutable.  The row reduction behind :attr:`std` and
    membership tests is computed on first use under a lock and then shared.
    Use :func:`from_rows` for arbitrary generating sets; the constructor
    trusts that ``gen`` rows are independent (this is checked when the
    reduction runs).
    """

    __slots__ = ("gen", "_red", "_std", "_lock")

    def __init__(self, gen: GeneratorMatrix, *, _reduction: _Reduction | None = None) -> None:
        self.gen = gen
        self._red = _reduction
        self._std: StandardForm | None = None
        self._lock = threading.Lock()

    @property
    def alpha(self) -> int:
        return self.gen.alpha

    @property
    def beta(self) -> int:
        return self.gen.beta

    @property
    def gamma(self) -> int:
        return self.gen.gamma

    @property
    def delta(self) -> int:
        return self.gen.delta

    @property
    def log2_size(self) -> int:
        return self.gen.gamma + 2 * self.gen.delta

    @property
    def reduction(self) -> _Reduction:
        red = self._red
        if red is None:
            with self._lock:
                if self._red is None:
                    red = _reduce(self.gen.rows)
                    if (len(red.rows_x) + len(red.rows_2), len(red.rows_4)) != (
                        self.gen.gamma,
                        self.gen.delta,
                    ):
                        raise ValueError("generator rows are not independent; use from_rows")
                    self._red = red
                red = self._red
        return red

    @property
    def params(self) -> TypeParams:
        return infer_type(self)

    @property
    def std(self) -> StandardForm:
        std = self._std
        if std is None:
            std = _build_standard_form(self.alpha, self.beta, self.reduction)
            with self._lock:
                if self._std is None:
                    self._std = std
                std = self._std
        return std

    def __contains__(self, w: MixedVector) -> bool:
        return contains(self, w)

    def __len__(self) -> int:
        return 1 << self.log2_size

    def __repr__(self) -> str:
        return f"AdditiveCode(type={infer_type(self)})"


def from_rows(
    alpha: int, beta: int, raw_rows: Sequence[MixedVector], *, allow_zero: bool = False
) -> AdditiveCode:
    """Code generated by an arbitrary set of vectors.

    Dependent rows are eliminated and order-two content hidden inside
    order-four rows is split off.  Spanning only ``{0}`` raises
    :class:`DegenerateCodeError` unless ``allow_zero``.
    """
    for r in raw_rows:
        if r.shape != (alpha, beta):
            raise ShapeError(f"row of shape {r.shape}, expected ({alpha}, {beta})")
    red = _reduce(raw_rows)
    if not (red.rows_x or red.rows_2 or red.rows_4) and not allow_zero:
        raise DegenerateCodeError("the generating set spans only the zero vector")
    gen = GeneratorMatrix(alpha, beta, red.rows_x + red.rows_2, red.rows_4)
    return AdditiveCode(gen, _reduction=red)


def _build_standard_form(alpha: int, beta: int, red: _Reduction) -> StandardForm:
    used_y = set(red.piv_2) | set(red.piv_4)
    x_perm = tuple(red.piv_x) + tuple(i for i in range(alpha) if i not in set(red.piv_x))
    y_perm = tuple(j for j in range(beta) if j not in used_y) + red.piv_2 + red.piv_4
    params = TypeParams(
        alpha,
        beta,
        len(red.rows_x) + len(red.rows_2),
        len(red.rows_4),
        len(red.rows_x) if alpha else 0,
    )
    sf = StandardForm(GeneratorMatrix(alpha, beta), x_perm, y_perm, params)
    matrix = GeneratorMatrix(
        alpha,
        beta,
        tuple(sf.permute(r) for r in red.rows_x + red.rows_2),
        tuple(sf.permute(r) for r in red.rows_4),
    )
    return StandardForm(matrix, x_perm, y_perm, params)


def standard_form(code: AdditiveCode) -> StandardForm:
    return code.std


def infer_type(code: AdditiveCode) -> TypeParams:
    red = code.reduction
    gamma = len(red.rows_x) + len(red.rows_2)
    delta = len(red.rows_4)
    order_two = list(code.gen.rows2) + [v.scale(2) for v in code.gen.rows4]
    kappa = gf2.rank(r.x for r in order_two) if code.alpha else 0
    return TypeParams(code.alpha, code.beta, gamma, delta, kappa)


def codewords(code: AdditiveCode, guard: SizeGuard = DEFAULT_GUARD) -> Iterator[MixedVector]:
    """Every codeword exactly once, as ``sum lambda_i u_i + sum mu_j v_j``."""
    guard.check_code(code.log2_size)
    words = [MixedVector(code.alpha, code.beta)]
    for u in code.gen.rows2:
        words += [w + u for w in words]
    for v in code.gen.rows4:
        v2 = v.scale(2)
        v3 = -v
        words = words + [w + v for w in words] + [w + v2 for w in words] + [w + v3 for w in words]
    return iter(words)


def residue(code: AdditiveCode, w: MixedVector) -> MixedVector:
    """What remains of ``w`` after back-substitution against the reduced rows.

    ``w`` is a codeword iff the residue is zero.  On order-two inputs the map
    is a group homomorphism whose kernel is exactly the order-two subcode,
    and the residue vanishes on every pivot column.
    """
    if w.shape != (code.alpha, code.beta):
        raise ShapeError(f"vector of shape {w.shape}, code is ({code.alpha}, {code.beta})")
    red = code.reduction
    for v, p in zip(red.rows_4, red.piv_4):
        c = w.y_at(p)
        if c:
            w = w - v.scale(c)
    for u, p in zip(red.rows_x, red.piv_x):
        if w.x_at(p):
            w = w + u
    for u, p in zip(red.rows_2, red.piv_2):
        if w.y_at(p) >= 2:
            w = w + u
    return w


def contains(code: AdditiveCode, w: MixedVector) -> bool:
    return residue(code, w).is_zero()


def syndrome(code: AdditiveCode, w: MixedVector) -> int:
    """F2 coordinates of ``w`` modulo the code, for ``w`` of order at most two.

    Layout: bits ``0..alpha-1`` carry the X residue and bits
    ``alpha..alpha+beta-1`` the halves of the Y residue.  Pivot positions are
    always zero.
    """
    r = residue(code, w)
    if r.lo:
        raise ValueError("syndrome is defined on vectors of order at most two")
    return r.x | (r.hi << code.alpha)


def dual(code: AdditiveCode) -> AdditiveCode:
    """Additive dual under ``2 sum_X u_i v_i + sum_Y u_j v_j``.

    Each X unknown ``v_i`` enters the constraints only through ``2 v_i``, so
    the X columns of the system are doubled and the system is solved over Z4;
    reducing the X coordinates of the solutions mod 2 yields the dual.
    """
    a, b = code.alpha, code.beta
    system = [[2 * s for s in r.xs] + list(r.ys) for r in code.gen.rows]
    sols = z4.nullspace(system, a + b)
    gens = [MixedVector.from_symbols([s % 2 for s in z[:a]], z[a:]) for z in sols]
    return from_rows(a, b, gens, allow_zero=True)


def equal_as_sets(a: AdditiveCode, b: AdditiveCode) -> bool:
    if (a.alpha, a.beta) != (b.alpha, b.beta):
        raise ShapeError(f"codes live in ({a.alpha}, {a.beta}) and ({b.alpha}, {b.beta})")
    return all(contains(b, r) for r in a.gen.rows) and all(contains(a, r) for r in b.gen.rows)


def is_subcode(a: AdditiveCode, b: AdditiveCode) -> bool:
    """True when every codeword of ``a`` lies in ``b``."""
    return all(contains(b, r) for r in a.gen.rows)


def is_linear_image(code: AdditiveCode) -> bool:
    """Whether the Gray image is a binary linear code."""
    return all(contains(code, twice_star(vj, vk)) for vj, vk in combinations(code.gen.rows4, 2))


def full_space(alpha: int, beta: int) -> AdditiveCode:
    rows = [MixedVector.unit_x(alpha, beta, i) for i in range(alpha)]
    rows += [MixedVector.unit_y(alpha, beta, j) for j in range(beta)]
    return from_rows(alpha, beta, rows)
