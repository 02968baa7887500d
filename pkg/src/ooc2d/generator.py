"""Candidate matrix codes: 1D enumeration, lifting to 2D, auto-correlation filter."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ooc2d.codes import (
    MatrixCode,
    OneDimCode,
    canonical_rotation,
    dopr_to_wpr,
    lift_1d_to_2d,
    row_shift,
)
from ooc2d.correlation import auto_constraint
from ooc2d.errors import MalformedCodeError, OOCError, ParameterError


def iter_1d(n: int, w: int) -> Iterator[OneDimCode]:
    """Yield one representative per cyclic class of weight-``w`` words of length ``n``.

    Gap tuples ``(a_1, ..., a_w)`` are walked in lexicographic order with
    ``a_w = n - (a_1 + ... + a_{w-1})`` forced to be a largest gap. A tuple
    is kept only if it is the smallest rotation ending with a largest gap,
    which picks exactly one member of each class.
    """
    if n < 1 or not 1 <= w <= n:
        raise ParameterError(f"need 1 <= w <= n, got n={n}, w={w}")
    if w == 1:
        yield OneDimCode((n,))
        return

    prefix: list[int] = []

    def walk(remaining: int, slots: int, top: int) -> Iterator[tuple[int, ...]]:
        # slots = free gaps still to choose before the closing gap
        if slots == 0:
            if remaining >= top:
                yield (*prefix, remaining)
            return
        for a in range(1, remaining - slots + 1):
            if remaining - a - (slots - 1) < max(top, a):
                break
            prefix.append(a)
            yield from walk(remaining - a, slots - 1, max(top, a))
            prefix.pop()

    for dop in walk(n, w - 1, 0):
        if dop == canonical_rotation(dop):
            yield OneDimCode(dop)


def enumerate_1d(n: int, w: int) -> list[OneDimCode]:
    return list(iter_1d(n, w))


def lift_and_expand(codes1d: Iterable[OneDimCode], L: int, N: int) -> list[MatrixCode]:
    """Lift each 1D code to ``L x N`` and add its ``L`` row-shifted variants.

    Variants that coincide up to a column shift are kept once, in first-seen
    order.
    """
    seen: set[MatrixCode] = set()
    out: list[MatrixCode] = []
    for code in codes1d:
        if code.n != L * N:
            raise ParameterError(f"1D code of length {code.n} cannot fill {L}x{N}")
        base = lift_1d_to_2d(code, L)
        for k in range(L):
            variant = row_shift(base, k)
            if variant not in seen:
                seen.add(variant)
                out.append(variant)
    return out


@dataclass(frozen=True)
class ScoredCode:
    code: MatrixCode
    lambda_a: int


def filter_by_auto(codes: Iterable[MatrixCode | ScoredCode], lambda_a_max: int) -> list[ScoredCode]:
    if lambda_a_max < 0:
        raise ParameterError("lambda_a_max must be >= 0")
    kept = []
    for item in codes:
        code = item.code if isinstance(item, ScoredCode) else item
        la = auto_constraint(code)
        if la <= lambda_a_max:
            kept.append(ScoredCode(code, la))
    return kept


def candidate_pool(L: int, N: int, w: int, lambda_a_max: int) -> list[ScoredCode]:
    """Enumerate, lift, expand and filter in one go."""
    return filter_by_auto(lift_and_expand(iter_1d(L * N, w), L, N), lambda_a_max)


# ---------------------------------------------------------------------------
# catalog records (JSON-lines); rows are 1-indexed on disk


def code_record(ident: int, code: MatrixCode, lambda_a: int | None = None) -> dict[str, Any]:
    if lambda_a is None:
        lambda_a = auto_constraint(code)
    return {
        "id": ident,
        "L": code.L,
        "N": code.N,
        "w": code.w,
        "wpr": [[r + 1, c] for r, c in code.wpr],
        "dopr": [[r + 1, d] for r, d in code.dopr],
        "lambda_a": lambda_a,
    }


def code_from_record(record: Mapping[str, Any]) -> MatrixCode:
    try:
        L, N = int(record["L"]), int(record["N"])
        pairs = record.get("wpr")
        if pairs is not None:
            code = MatrixCode.from_wpr(L, N, [(int(r) - 1, int(c)) for r, c in pairs])
        else:
            code = dopr_to_wpr([(int(r) - 1, int(d)) for r, d in record["dopr"]], L, N)
    except OOCError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCodeError(f"bad code record {dict(record)!r}: {exc}") from exc
    if "w" in record and int(record["w"]) != code.w:
        raise MalformedCodeError(f"record weight {record['w']} != {code.w} weighted cells")
    return code


def onedim_record(ident: int, code: OneDimCode) -> dict[str, Any]:
    return {
        "id": ident,
        "n": code.n,
        "w": code.w,
        "dop": list(code.dop),
        "positions": list(code.positions),
    }


def onedim_from_record(record: Mapping[str, Any]) -> OneDimCode:
    code = OneDimCode(tuple(record["dop"]))
    if "n" in record and int(record["n"]) != code.n:
        raise MalformedCodeError(f"record length {record['n']} != gap sum {code.n}")
    return code
