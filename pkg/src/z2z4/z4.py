"""Linear algebra over the chain ring Z4."""

from __future__ import annotations

from typing import Sequence


def nullspace(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Generators of ``{z in Z4^ncols : matrix @ z == 0 (mod 4)}``.

    Diagonalises ``P A Q = diag(1,..,1,2,..,2,0,..)`` with unit pivots taken
    before 2-pivots, tracking only the column transform ``Q``.  The solution
    group is then spanned by ``Q e_i`` for zero diagonal entries and
    ``2 Q e_i`` for entries equal to 2.
    """
    a = [[v % 4 for v in row] for row in matrix]
    for row in a:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a {ncols}-column matrix")
    m = len(a)
    # q[j] is column j of Q, stored as a list of length ncols
    q = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    diag: list[int] = []

    t = 0
    while t < min(m, ncols):
        pivot = None
        for want_unit in (True, False):
            for i in range(t, m):
                for j in range(t, ncols):
                    v = a[i][j]
                    if v and (v & 1) == want_unit:
                        pivot = (i, j)
                        break
                if pivot:
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
            q[t], q[j] = q[j], q[t]
        p = a[t][t]
        if p == 3:
            a[t] = [(3 * v) % 4 for v in a[t]]
            p = 1
        # p is 1 or 2; when p == 2 every remaining entry is even, so the
        # quotients below are exact.
        for i2 in range(m):
            if i2 != t and a[i2][t]:
                c = a[i2][t] // p
                a[i2] = [(x - c * y) % 4 for x, y in zip(a[i2], a[t])]
        for j2 in range(t + 1, ncols):
            if a[t][j2]:
                c = a[t][j2] // p
                for row in a:
                    row[j2] = (row[j2] - c * row[t]) % 4
                q[j2] = [(x - c * y) % 4 for x, y in zip(q[j2], q[t])]
        diag.append(p)
        t += 1

    gens: list[list[int]] = []
    for j in range(ncols):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            gens.append(list(q[j]))
        elif d == 2:
            gens.append([(2 * v) % 4 for v in q[j]])
    return gens
