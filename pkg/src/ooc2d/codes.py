"""One- and two-dimensional unipolar code representations.

Indexing is 0-based everywhere inside the package: rows ``0..L-1``, columns
``0..N-1`` and 1D positions ``0..n-1``. Only the text helpers at the bottom
of this module translate rows to the 1-indexed ``r'c`` display convention
(columns stay 0-indexed), so printed codes line up with hand-worked tables.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from ooc2d.errors import MalformedCodeError, ParameterError

Cell = tuple[int, int]  # (row, column)
DoprEntry = tuple[int, int]  # (row, gap)


@dataclass(frozen=True)
class CodeParams:
    L: int
    N: int
    w: int

    def __post_init__(self) -> None:
        if self.L < 1 or self.N < 1:
            raise ParameterError(f"L and N must be >= 1, got L={self.L}, N={self.N}")
        if not 1 <= self.w <= self.L * self.N:
            raise ParameterError(f"weight w={self.w} outside [1, {self.L * self.N}]")

    @property
    def n(self) -> int:
        return self.L * self.N


# ---------------------------------------------------------------------------
# 1D codes


def dop1d_to_positions(dop: Sequence[int], n: int) -> tuple[int, ...]:
    """Turn a gap sequence into the sorted positions of its weighted bits.

    The first bit sits at position 0 and each gap advances to the next bit.
    """
    if not dop:
        raise MalformedCodeError("empty gap sequence")
    if any(a < 1 for a in dop):
        raise MalformedCodeError(f"1D gaps must be >= 1: {tuple(dop)}")
    if sum(dop) != n:
        raise MalformedCodeError(f"gaps {tuple(dop)} sum to {sum(dop)}, expected n={n}")
    positions = [0]
    for a in dop[:-1]:
        positions.append((positions[-1] + a) % n)
    return tuple(sorted(positions))


def positions_to_dop1d(positions: Iterable[int], n: int) -> tuple[int, ...]:
    pos = sorted(set(positions))
    if not pos:
        raise MalformedCodeError("a code needs at least one weighted position")
    if pos[0] < 0 or pos[-1] >= n:
        raise MalformedCodeError(f"positions {pos} outside [0, {n - 1}]")
    gaps = [b - a for a, b in zip(pos, pos[1:])]
    gaps.append(n - pos[-1] + pos[0])
    return tuple(gaps)


def canonical_rotation(dop: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation of ``dop`` among those that end with a maximal gap."""
    top = max(dop)
    k = len(dop)
    rotations = (tuple(dop[i:]) + tuple(dop[:i]) for i in range(k))
    return min(r for r in rotations if r[-1] == top)


@dataclass(frozen=True)
class OneDimCode:
    """Cyclic constant-weight binary word stored as its gap (DoP) tuple."""

    dop: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dop", tuple(int(a) for a in self.dop))
        if not self.dop or any(a < 1 for a in self.dop):
            raise MalformedCodeError(f"invalid 1D gap sequence {self.dop}")

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> OneDimCode:
        return cls(positions_to_dop1d(positions, n))

    @property
    def n(self) -> int:
        return sum(self.dop)

    @property
    def w(self) -> int:
        return len(self.dop)

    @property
    def positions(self) -> tuple[int, ...]:
        return dop1d_to_positions(self.dop, self.n)

    @property
    def bits(self) -> tuple[int, ...]:
        on = set(self.positions)
        return tuple(int(i in on) for i in range(self.n))

    def canonical(self) -> OneDimCode:
        return OneDimCode(canonical_rotation(self.dop))

    def is_canonical(self) -> bool:
        return self.dop == canonical_rotation(self.dop)


# ---------------------------------------------------------------------------
# 2D codes


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically smallest column-shifted WPR, as sorted (column, row) pairs."""

    wpr0: tuple[tuple[int, int], ...]


@dataclass(frozen=True, eq=False)
class MatrixCode:
    """An ``L x N`` binary matrix code given by its set of weighted cells.

    Two codes compare equal when one is a column-wise circular shift of the
    other. Use :attr:`wpr` for literal, position-by-position comparison.
    """

    L: int
    N: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        object.__setattr__(self, "cells", cells)
        CodeParams(self.L, self.N, max(len(cells), 1))
        if not cells:
            raise MalformedCodeError("a matrix code needs at least one weighted bit")
        for r, c in cells:
            if not (0 <= r < self.L and 0 <= c < self.N):
                raise MalformedCodeError(f"cell (row={r}, col={c}) outside {self.L}x{self.N}")

    @classmethod
    def from_wpr(cls, L: int, N: int, wpr: Iterable[Cell]) -> MatrixCode:
        wpr = list(wpr)
        code = cls(L, N, frozenset(wpr))
        if len(code.cells) != len(wpr):
            raise MalformedCodeError(f"repeated weighted position in {wpr}")
        return code

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> MatrixCode:
        L = len(grid)
        N = len(grid[0]) if L else 0
        if any(len(row) != N for row in grid):
            raise MalformedCodeError("ragged grid")
        cells = frozenset((r, c) for r in range(L) for c in range(N) if grid[r][c])
        return cls(L, N, cells)

    @property
    def w(self) -> int:
        return len(self.cells)

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.L, self.N, self.w)

    @property
    def wpr(self) -> tuple[Cell, ...]:
        """Weighted cells scanned column by column, top to bottom within a column."""
        return tuple(sorted(self.cells, key=lambda rc: (rc[1], rc[0])))

    @property
    def dopr(self) -> tuple[DoprEntry, ...]:
        return wpr_to_dopr(self)

    @property
    def grid(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(int((r, c) in self.cells) for c in range(self.N)) for r in range(self.L)
        )

    @cached_property
    def canonical(self) -> CanonicalForm:
        return canonical_form(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixCode):
            return NotImplemented
        return (self.L, self.N) == (other.L, other.N) and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.L, self.N, self.canonical))

    def __str__(self) -> str:
        return format_wpr(self)


def lift_1d_to_2d(code: OneDimCode, L: int) -> MatrixCode:
    """Fold a 1D word of length ``L*N`` into an ``L x N`` matrix.

    Position ``q`` lands in row ``q mod L`` and column ``q div L``, i.e. the
    word fills the matrix column by column.
    """
    if L < 1 or code.n % L:
        raise ParameterError(f"word length {code.n} is not a multiple of L={L}")
    N = code.n // L
    return MatrixCode(L, N, frozenset((q % L, q // L) for q in code.positions))


def flatten_2d_to_1d(code: MatrixCode) -> tuple[int, ...]:
    """Column-major bit vector of a matrix code; inverse of the lift."""
    return tuple(
        int((q % code.L, q // code.L) in code.cells) for q in range(code.L * code.N)
    )


def wpr_to_dopr(code: MatrixCode) -> tuple[DoprEntry, ...]:
    """Rows paired with the column gap to the next weighted bit (circularly).

    The closing gap is ``N - c_last + c_first``, never 0, so the gaps always
    add up to ``N`` even when every bit shares one column.
    """
    wpr = code.wpr
    cols = [c for _, c in wpr]
    gaps = [b - a for a, b in zip(cols, cols[1:])]
    gaps.append(code.N - cols[-1] + cols[0])
    return tuple((r, d) for (r, _), d in zip(wpr, gaps))


def dopr_to_wpr(dopr: Sequence[DoprEntry], L: int, N: int) -> MatrixCode:
    if not dopr:
        raise MalformedCodeError("empty DoPR")
    if any(d < 0 for _, d in dopr):
        raise MalformedCodeError(f"negative gap in DoPR {tuple(dopr)}")
    total = sum(d for _, d in dopr)
    if total != N:
        raise MalformedCodeError(f"DoPR gaps sum to {total}, expected N={N}")
    col = 0
    wpr = []
    for r, d in dopr:
        wpr.append((r, col))
        col = (col + d) % N
    return MatrixCode.from_wpr(L, N, wpr)


def column_shift(code: MatrixCode, p: int) -> MatrixCode:
    """Right circular shift by ``p`` columns."""
    return MatrixCode(code.L, code.N, frozenset((r, (c + p) % code.N) for r, c in code.cells))


def row_shift(code: MatrixCode, k: int) -> MatrixCode:
    """Downward circular shift by ``k`` rows. Generally gives a different code."""
    return MatrixCode(code.L, code.N, frozenset(((r + k) % code.L, c) for r, c in code.cells))


def canonical_form(code: MatrixCode) -> CanonicalForm:
    best = None
    for p in range(code.N):
        key = tuple(sorted(((c + p) % code.N, r) for r, c in code.cells))
        if best is None or key < best:
            best = key
    return CanonicalForm(best)


# ---------------------------------------------------------------------------
# text form: "1'0 3'0 2'1" with 1-indexed rows

_TOKEN = re.compile(r"^(\d+)['’^](\d+)$")


def _format_pairs(pairs: Iterable[tuple[int, int]]) -> str:
    return " ".join(f"{r + 1}'{x}" for r, x in pairs)


def format_wpr(code: MatrixCode) -> str:
    return _format_pairs(code.wpr)


def format_dopr(dopr: Iterable[DoprEntry]) -> str:
    return _format_pairs(dopr)


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse ``r'x`` tokens (1-indexed rows) into 0-indexed ``(row, x)`` pairs."""
    pairs = []
    for token in text.replace(",", " ").replace("(", " ").replace(")", " ").split():
        m = _TOKEN.match(token)
        if not m or int(m.group(1)) < 1:
            raise MalformedCodeError(f"cannot parse token {token!r}")
        pairs.append((int(m.group(1)) - 1, int(m.group(2))))
    if not pairs:
        raise MalformedCodeError("no code tokens found")
    return pairs


def parse_code(text: str, L: int, N: int) -> MatrixCode:
    """Parse a ``wpr:`` or ``dopr:`` prefixed code; unprefixed text is WPR."""
    body = text.strip()
    kind = "wpr"
    head, sep, rest = body.partition(":")
    if sep:
        kind = head.strip().lower()
        body = rest
        if kind not in ("wpr", "dopr"):
            raise MalformedCodeError(f"unknown code prefix {head.strip()!r}")
    pairs = parse_pairs(body)
    if kind == "dopr":
        return dopr_to_wpr(pairs, L, N)
    return MatrixCode.from_wpr(L, N, pairs)
