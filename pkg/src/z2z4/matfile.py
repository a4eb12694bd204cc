"""Plain-text generator matrix files.

::

    # expect: rank=13 kernel=10 type=(1,9;2,5;1)
    1 9
    1 | 0 0 0 0 0 0 0 0 0
    0 | 0 0 0 2 0 0 0 0 0
    0 | 1 0 0 0 1 0 0 0 0

The first data line is ``alpha beta``; each following line is one row with
the X symbols, a literal ``|``, then the Y symbols.  ``#`` starts a comment.
A comment of the form ``# expect: key=value ...`` declares invariants that
``verify`` checks; it survives a parse/serialize round trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .vector import MixedVector

_EXPECT = re.compile(r"^\s*#\s*expect:\s*(.*)$")


@dataclass(frozen=True)
class MatrixFile:
    alpha: int
    beta: int
    rows: tuple[MixedVector, ...]
    expect: tuple[tuple[str, str], ...] = field(default=())

    @property
    def expectations(self) -> dict[str, str]:
        return dict(self.expect)


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None


def parse(text: str) -> MatrixFile:
    expect: list[tuple[str, str]] = []
    header: tuple[int, int] | None = None
    rows: list[MixedVector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        m = _EXPECT.match(raw)
        if m:
            for item in m.group(1).split():
                key, sep, value = item.partition("=")
                if not sep or not key or not value:
                    raise ParseError(f"malformed expectation {item!r}", lineno, raw.find(item) + 1)
                expect.append((key, value))
            continue
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        if header is None:
            if len(toks) != 2:
                raise ParseError("header must be 'alpha beta'", lineno, toks[0][1])
            alpha, beta = (_int(t, lineno, c) for t, c in toks)
            if alpha < 0 or beta < 0 or alpha + beta == 0:
                raise ParseError(f"invalid dimensions alpha={alpha} beta={beta}", lineno, toks[0][1])
            header = (alpha, beta)
            continue
        alpha, beta = header
        bars = [i for i, (t, _) in enumerate(toks) if t == "|"]
        if len(bars) != 1:
            raise ParseError("row needs exactly one '|' between X and Y symbols", lineno, 1)
        xs_tok, ys_tok = toks[: bars[0]], toks[bars[0] + 1 :]
        if len(xs_tok) != alpha:
            raise ParseError(f"expected {alpha} X symbols, got {len(xs_tok)}", lineno, toks[bars[0]][1])
        if len(ys_tok) != beta:
            col = ys_tok[-1][1] if ys_tok else toks[bars[0]][1]
            raise ParseError(f"expected {beta} Y symbols, got {len(ys_tok)}", lineno, col)
        xs = []
        for t, c in xs_tok:
            v = _int(t, lineno, c)
            if v not in (0, 1):
                raise ParseError(f"X symbol {t} is not in Z2", lineno, c)
            xs.append(v)
        ys = []
        for t, c in ys_tok:
            v = _int(t, lineno, c)
            if not 0 <= v <= 3:
                raise ParseError(f"Y symbol {t} is not in Z4", lineno, c)
            ys.append(v)
        rows.append(MixedVector.from_symbols(xs, ys))
    if header is None:
        raise ParseError("missing 'alpha beta' header")
    return MatrixFile(header[0], header[1], tuple(rows), tuple(expect))


def format_row(v: MixedVector) -> str:
    parts = [str(s) for s in v.xs] + ["|"] + [str(s) for s in v.ys]
    return " ".join(parts)


def serialize(mf: MatrixFile, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    if mf.expect:
        lines.append("# expect: " + " ".join(f"{k}={v}" for k, v in mf.expect))
    lines.append(f"{mf.alpha} {mf.beta}")
    lines += [format_row(r) for r in mf.rows]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> MatrixFile:
    return parse(Path(path).read_text())


def dump(mf: MatrixFile, path: str | Path, comments: list[str] | None = None) -> None:
    Path(path).write_text(serialize(mf, comments))
