"""Code-set formation: compatibility graph, maximal cliques, Johnson bound."""

from __future__ import annotations

import itertools
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from ooc2d.codes import MatrixCode, format_wpr
from ooc2d.correlation import (
    auto_constraint,
    brute_force_overlap,
    cross_constraint,
    set_constraints,
)
from ooc2d.errors import DegeneratePairError, ParameterError
from ooc2d.generator import ScoredCode, code_record, filter_by_auto, iter_1d, lift_and_expand


def johnson_bound(L: int, N: int, w: int, lam: int) -> int:
    """Johnson bound A on the size of an ``(L x N, w, lam)`` code set.

    Evaluated innermost floor first with integer arithmetic:
    ``floor(L/w * floor((LN-1)/(w-1) * ... floor((LN-lam)/(w-lam))))``.
    For ``lam == 0`` the chain is empty and the bound is ``floor(L/w)``.
    """
    if L < 1 or N < 1 or not 1 <= w <= L * N:
        raise ParameterError(f"invalid parameters L={L}, N={N}, w={w}")
    if lam < 0 or lam >= w:
        raise ParameterError(f"need 0 <= lambda < w, got lambda={lam}, w={w}")
    n = L * N
    v = 1
    for k in range(lam, 0, -1):
        v = v * (n - k) // (w - k)
    return v * L // w


@dataclass
class CompatibilityGraph:
    """Vertices are codes; an edge joins two codes whose cross constraint fits."""

    codes: list[MatrixCode]
    ids: list[int]
    adjacency: list[int]  # bitmask of neighbours per vertex
    lambda_c_max: int
    lambda_a: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbours(self, u: int) -> list[int]:
        return _bits(self.adjacency[u])

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adjacency) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> CompatibilityGraph:
        """Bare graph on vertices ``0..n-1`` with no codes attached."""
        adjacency = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError("self-loops are not allowed")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls([], list(range(n)), adjacency, lambda_c_max=-1)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _edge_row(args: tuple[list[MatrixCode], int, int]) -> int:
    codes, u, threshold = args
    mask = 0
    for v in range(u + 1, len(codes)):
        if cross_constraint(codes[u], codes[v]) <= threshold:
            mask |= 1 << v
    return mask


def build_graph(
    codes: Sequence[MatrixCode | ScoredCode],
    lambda_c_max: int,
    ids: Sequence[int] | None = None,
    workers: int = 1,
) -> CompatibilityGraph:
    """Build the compatibility graph with vertices ordered by canonical form.

    ``ids`` label the input codes; by default a code's id is its position in
    canonical order, so the result does not depend on input order.
    """
    items = [c if isinstance(c, ScoredCode) else ScoredCode(c, auto_constraint(c)) for c in codes]
    if ids is not None and len(ids) != len(items):
        raise ParameterError("ids and codes differ in length")
    order = sorted(range(len(items)), key=lambda i: items[i].code.canonical)
    labels = list(range(len(items))) if ids is None else [ids[i] for i in order]
    vertices = [items[i] for i in order]
    for a, b in zip(vertices, vertices[1:]):
        if a.code.canonical == b.code.canonical:
            raise DegeneratePairError(f"duplicate code in pool: {format_wpr(a.code)}")

    mats = [v.code for v in vertices]
    tasks = [(mats, u, lambda_c_max) for u in range(len(mats))]
    if workers > 1 and len(mats) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            upper = list(pool.map(_edge_row, tasks, chunksize=8))
    else:
        upper = [_edge_row(t) for t in tasks]

    adjacency = list(upper)
    for u, mask in enumerate(upper):
        for v in _bits(mask):
            adjacency[v] |= 1 << u
    return CompatibilityGraph(
        mats, labels, adjacency, lambda_c_max, [v.lambda_a for v in vertices]
    )


@dataclass
class CliqueSearch:
    cliques: list[tuple[int, ...]]
    complete: bool


def enumerate_maximal_cliques(
    graph: CompatibilityGraph,
    max_cliques: int | None = None,
    time_budget_ms: int | None = None,
) -> CliqueSearch:
    """All maximal cliques (as sorted vertex-index tuples) by Bron-Kerbosch with pivoting.

    Stops early once ``max_cliques`` are found or the time budget runs out;
    the result is then flagged incomplete.
    """
    adj = graph.adjacency
    found: list[tuple[int, ...]] = []
    deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000
    stopped = False

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal stopped
        if stopped:
            return
        if not p:
            if not x:
                found.append(tuple(sorted(r)))
                if max_cliques is not None and len(found) >= max_cliques:
                    stopped = True
            return
        if deadline is not None and time.monotonic() > deadline:
            stopped = True
            return
        # Tomita pivot: the vertex of P|X covering most of P
        pivot = max(_bits(p | x), key=lambda u: (bin(p & adj[u]).count("1"), -u))
        for v in _bits(p & ~adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            if stopped:
                return
            p &= ~(1 << v)
            x |= 1 << v

    if len(graph):
        expand([], (1 << len(graph)) - 1, 0)
    return CliqueSearch(sorted(found), complete=not stopped)


def greedy_clique(graph: CompatibilityGraph) -> tuple[int, ...]:
    """Highest-degree-first greedy clique; a lower bound when search is cut short."""
    adj = graph.adjacency
    order = sorted(range(len(graph)), key=lambda u: (-bin(adj[u]).count("1"), u))
    clique: list[int] = []
    for u in order:
        if all(adj[u] >> v & 1 for v in clique):
            clique.append(u)
    return tuple(sorted(clique))


@dataclass
class CodeSet:
    ids: tuple[int, ...]
    codes: tuple[MatrixCode, ...]
    lambda_a: int
    lambda_c: int
    bound: int | None

    @property
    def size(self) -> int:
        return len(self.ids)


@dataclass
class SetSearchResult:
    sets: list[CodeSet]
    complete: bool
    bound: int | None
    candidates: int = 0
    maximal_cliques: int = 0

    @property
    def best_size(self) -> int:
        return max((s.size for s in self.sets), default=0)


def _bound_for(graph: CompatibilityGraph, lambda_a_max: int | None) -> int | None:
    if not graph.codes:
        return None
    L, N, w = graph.codes[0].L, graph.codes[0].N, graph.codes[0].w
    lam = max(graph.lambda_c_max, lambda_a_max if lambda_a_max is not None else 0)
    try:
        return johnson_bound(L, N, w, lam)
    except ParameterError:
        return None


def maximum_sets(
    graph: CompatibilityGraph,
    max_cliques: int | None = None,
    time_budget_ms: int | None = None,
    lambda_a_max: int | None = None,
) -> SetSearchResult:
    """Every clique of largest size, re-checked and annotated with the Johnson bound.

    ``lambda_a_max`` only feeds the bound, which uses ``max(lambda_a_max,
    lambda_c_max)``. When the search is truncated the sets are the largest
    found so far (plus a greedy clique), so their size is only a lower bound.
    """
    search = enumerate_maximal_cliques(graph, max_cliques, time_budget_ms)
    cliques = search.cliques
    if not search.complete:
        cliques = sorted(set(cliques) | {greedy_clique(graph)})
    bound = _bound_for(graph, lambda_a_max)
    best = max((len(c) for c in cliques), default=0)
    sets = []
    for clique in cliques:
        if len(clique) != best or not clique:
            continue
        members = tuple(graph.codes[v] for v in clique) if graph.codes else ()
        la, lc = set_constraints(members) if members else (0, 0)
        sets.append(CodeSet(tuple(graph.ids[v] for v in clique), members, la, lc, bound))
    sets.sort(key=lambda s: [c.canonical for c in s.codes] if s.codes else list(s.ids))
    return SetSearchResult(sets, search.complete, bound, len(graph), len(search.cliques))


@dataclass
class VerifyReport:
    lambda_a_max: int
    lambda_c_max: int
    codes: list[tuple[int, int, bool]] = field(default_factory=list)  # (index, lambda_a, ok)
    pairs: list[tuple[int, int, int, bool]] = field(default_factory=list)  # (i, j, lambda_c, ok)

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.codes) and all(ok for *_, ok in self.pairs)

    @property
    def failures(self) -> list[tuple[int, ...]]:
        bad: list[tuple[int, ...]] = [(i,) for i, _, ok in self.codes if not ok]
        bad += [(i, j) for i, j, _, ok in self.pairs if not ok]
        return bad


def verify_set(codes: Sequence[MatrixCode], lambda_a_max: int, lambda_c_max: int) -> VerifyReport:
    """Recheck a code set from the binary grids, shift by shift.

    Deliberately avoids the set-intersection routines and any cached values.
    """
    if not codes:
        raise ParameterError("nothing to verify")
    report = VerifyReport(lambda_a_max, lambda_c_max)
    grids = [c.grid for c in codes]
    N = codes[0].N
    for i, g in enumerate(grids):
        la = max((brute_force_overlap(g, g, t) for t in range(1, N)), default=0)
        report.codes.append((i, la, la <= lambda_a_max))
    for i, j in itertools.combinations(range(len(grids)), 2):
        lc = max(brute_force_overlap(grids[i], grids[j], t) for t in range(N))
        report.pairs.append((i, j, lc, lc <= lambda_c_max))
    return report


# ---------------------------------------------------------------------------
# end-to-end run


@dataclass
class PipelineRun:
    L: int
    N: int
    w: int
    lambda_a_max: int
    lambda_c_max: int
    pool: list[ScoredCode]
    graph: CompatibilityGraph
    result: SetSearchResult


def run_pipeline(
    L: int,
    N: int,
    w: int,
    lambda_a_max: int,
    lambda_c_max: int,
    pool: Sequence[MatrixCode] | None = None,
    max_cliques: int | None = None,
    time_budget_ms: int | None = None,
    workers: int = 1,
) -> PipelineRun:
    """Enumerate, lift, filter, connect and search; ``pool`` replaces the enumeration."""
    if lambda_a_max < 0 or lambda_c_max < 0:
        raise ParameterError("correlation thresholds must be >= 0")
    if L < 1 or N < 1 or not 1 <= w <= L * N:
        raise ParameterError(f"invalid parameters L={L}, N={N}, w={w}")
    if pool is None:
        raw = lift_and_expand(iter_1d(L * N, w), L, N)
    else:
        for code in pool:
            if (code.L, code.N, code.w) != (L, N, w):
                raise ParameterError(f"pool code {format_wpr(code)} does not match L, N, w")
        raw = list(pool)
    scored = filter_by_auto(raw, lambda_a_max)
    scored.sort(key=lambda s: s.code.canonical)
    graph = build_graph(scored, lambda_c_max, workers=workers)
    result = maximum_sets(graph, max_cliques, time_budget_ms, lambda_a_max)
    return PipelineRun(L, N, w, lambda_a_max, lambda_c_max, scored, graph, result)


def set_report(run: PipelineRun) -> dict[str, Any]:
    res = run.result
    return {
        "params": {
            "L": run.L,
            "N": run.N,
            "w": run.w,
            "lambda_a": run.lambda_a_max,
            "lambda_c": run.lambda_c_max,
        },
        "bound": res.bound,
        "candidates": res.candidates,
        "sets": [
            {
                "ids": list(s.ids),
                "size": s.size,
                "lambda_a": s.lambda_a,
                "lambda_c": s.lambda_c,
                "codes": [format_wpr(c) for c in s.codes],
            }
            for s in res.sets
        ],
        "complete": res.complete,
    }


def catalog_records(run: PipelineRun) -> list[dict[str, Any]]:
    return [
        code_record(ident, code, la)
        for ident, code, la in zip(run.graph.ids, run.graph.codes, run.graph.lambda_a)
    ]
