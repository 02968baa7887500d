"""Auto- and cross-correlation of matrix codes along the time (column) axis.

Profiles are computed by intersecting weighted-position sets of a code and a
column-shifted copy. :func:`brute_force_overlap` evaluates the same quantity
directly on the binary grids and serves as the independent check.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from ooc2d.codes import MatrixCode
from ooc2d.errors import DegeneratePairError, ParameterError


@dataclass(frozen=True)
class CorrelationProfile:
    kind: Literal["auto", "cross"]
    values: tuple[int, ...]  # auto: shifts 1..N-1, cross: shifts 0..N-1

    @property
    def constraint(self) -> int:
        return max(self.values, default=0)

    @property
    def shifts(self) -> range:
        start = 1 if self.kind == "auto" else 0
        return range(start, start + len(self.values))

    def to_json(self) -> list[int]:
        return list(self.values)


def _check_same_shape(a: MatrixCode, b: MatrixCode) -> None:
    if (a.L, a.N) != (b.L, b.N):
        raise ParameterError(f"dimension mismatch: {a.L}x{a.N} vs {b.L}x{b.N}")


def intersection_count(a: MatrixCode, b: MatrixCode) -> int:
    """Number of weighted positions two codes have in common."""
    _check_same_shape(a, b)
    return len(a.cells & b.cells)


def _shifted_cells(code: MatrixCode, tau: int) -> set[tuple[int, int]]:
    # cells of column_shift(code, tau), without building a MatrixCode
    return {(r, (c + tau) % code.N) for r, c in code.cells}


def auto_profile(code: MatrixCode) -> CorrelationProfile:
    values = tuple(len(code.cells & _shifted_cells(code, tau)) for tau in range(1, code.N))
    return CorrelationProfile("auto", values)


def auto_constraint(code: MatrixCode) -> int:
    return auto_profile(code).constraint


def cross_profile(x: MatrixCode, y: MatrixCode) -> CorrelationProfile:
    """Overlap of ``x`` with ``y`` shifted right by every ``tau`` in ``0..N-1``.

    Shifting ``x`` instead only permutes the profile, so the maximum is
    symmetric in its arguments.
    """
    _check_same_shape(x, y)
    if x == y:
        raise DegeneratePairError("cross-correlation of a code with a shift of itself")
    values = tuple(len(x.cells & _shifted_cells(y, tau)) for tau in range(x.N))
    return CorrelationProfile("cross", values)


def cross_constraint(x: MatrixCode, y: MatrixCode) -> int:
    return cross_profile(x, y).constraint


def _as_grid(code: MatrixCode | Sequence[Sequence[int]]) -> Sequence[Sequence[int]]:
    return code.grid if isinstance(code, MatrixCode) else code


def brute_force_overlap(
    x: MatrixCode | Sequence[Sequence[int]],
    y: MatrixCode | Sequence[Sequence[int]],
    tau: int,
) -> int:
    """``sum_ij x[i][j] * y[i][(j + tau) mod N]`` evaluated cell by cell on grids."""
    gx, gy = _as_grid(x), _as_grid(y)
    L, N = len(gx), len(gx[0])
    if len(gy) != L or len(gy[0]) != N:
        raise ParameterError("grid dimension mismatch")
    total = 0
    for i in range(L):
        for j in range(N):
            total += gx[i][j] * gy[i][(j + tau) % N]
    return total


def set_constraints(codes: Sequence[MatrixCode]) -> tuple[int, int]:
    """Return ``(lambda_a, lambda_c)`` for a code set.

    ``lambda_a`` is the worst auto-correlation over all codes and ``lambda_c``
    the worst cross-correlation over all unordered pairs (0 for one code).
    """
    if not codes:
        raise ParameterError("a code set needs at least one code")
    lambda_a = max(auto_constraint(c) for c in codes)
    lambda_c = max(
        (cross_constraint(a, b) for a, b in itertools.combinations(codes, 2)), default=0
    )
    return lambda_a, lambda_c
