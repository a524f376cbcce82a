"""Exhaustive searches over small Cayley tables.

The left-Bol search fills rows in index order.  Cells inside a row are
decided left to right with forward checking against row/column candidate
sets; whenever a row completes, the Bol constraint is propagated: for
decided rows a and b, the row of a*(b*a) is forced to equal the
composite translation L_a L_b L_a, which either contradicts an existing
row (prune), or decides a new row without branching.  Every ordered pair
of decided rows is eventually processed, so a completed table satisfies
the full left Bol identity by construction.

Symmetry is broken only by normalizing the identity to element 1, so the
search counts identity-normalized tables, not isomorphism classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import SearchBudgetExceeded
from .iso import IsoClass, classify
from .loop_core import LoopTable
from .structure import check_identity, commutant, is_subloop

DEFAULT_ORDER8_BUDGET = 20_000_000


def _row_candidates(
    n: int, r: int, col_used: list[int]
) -> Iterator[tuple[int, ...]]:
    """All rows for element r consistent with column usage, 0-based values."""
    row = [r] + [0] * (n - 1)

    def rec(pos: int, used: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(row)
            return
        forbidden = used | col_used[pos]
        for v in range(n):
            if not (forbidden >> v) & 1:
                row[pos] = v
                yield from rec(pos + 1, used | (1 << v))

    yield from rec(1, 1 << r)


def _propagate(
    rows: list[tuple[int, ...] | None],
    col_used: list[int],
    pending: list[tuple[int, int]],
) -> bool:
    """Force rows implied by L_a L_b L_a = L_{a*(b*a)}; False on conflict."""
    n = len(rows)
    while pending:
        a, b = pending.pop()
        ra = rows[a]
        rb = rows[b]
        c = ra[rb[a]]  # a*(b*a)
        forced = tuple(ra[rb[ra[z]]] for z in range(n))
        rc = rows[c]
        if rc is not None:
            if rc != forced:
                return False
            continue
        for z in range(n):
            if (col_used[z] >> forced[z]) & 1:
                return False
        rows[c] = forced
        for z in range(n):
            col_used[z] |= 1 << forced[z]
        for x in range(n):
            if rows[x] is not None:
                if x:
                    pending.append((x, c))
                pending.append((c, x))
    return True


def search_left_bol(n: int, budget: int | None = None) -> list[LoopTable]:
    """Every left Bol loop of order n as an identity-normalized table.

    ``budget`` bounds the number of branching candidates tried; exceeding
    it raises SearchBudgetExceeded.
    """
    if budget is None:
        budget = DEFAULT_ORDER8_BUDGET
    identity = tuple(range(n))
    found: list[tuple[tuple[int, ...], ...]] = []
    nodes = 0

    def dfs(rows: list[tuple[int, ...] | None], col_used: list[int]) -> None:
        nonlocal nodes
        r = next((i for i in range(n) if rows[i] is None), None)
        if r is None:
            found.append(tuple(rows))  # type: ignore[arg-type]
            return
        for cand in _row_candidates(n, r, col_used):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"budget {budget} exhausted")
            rows2 = rows.copy()
            cu2 = col_used.copy()
            rows2[r] = cand
            for z in range(n):
                cu2[z] |= 1 << cand[z]
            pending = [(r, r)]
            for x in range(n):
                if x != r and rows2[x] is not None:
                    if x:
                        pending.append((x, r))
                    pending.append((r, x))
            if _propagate(rows2, cu2, pending):
                dfs(rows2, cu2)

    rows0: list[tuple[int, ...] | None] = [None] * n
    rows0[0] = identity
    col_used0 = [1 << z for z in range(n)]
    dfs(rows0, col_used0)

    tables = []
    for raw in found:
        cells = tuple(tuple(v + 1 for v in row) for row in raw)
        tables.append(LoopTable(n, cells))
    return tables


@dataclass(frozen=True)
class Order8Report:
    tables_found: int
    all_commutants_subloops: bool
    class_count: int
    associative_classes: int
    nonassociative_classes: int
    classes: tuple[IsoClass, ...]


def oracle_order8(budget: int | None = None) -> Order8Report:
    """Exhaust all left Bol loops of order 8 and summarize the findings."""
    tables = search_left_bol(8, budget=budget)
    all_sub = all(is_subloop(Q, commutant(Q)) for Q in tables)
    classes = classify(tables)
    assoc = sum(
        1 for cls in classes if check_identity(tables[cls.representative], "associative")
    )
    return Order8Report(
        tables_found=len(tables),
        all_commutants_subloops=all_sub,
        class_count=len(classes),
        associative_classes=assoc,
        nonassociative_classes=len(classes) - assoc,
        classes=tuple(classes),
    )


def enumerate_all_loops(n: int) -> list[LoopTable]:
    """All identity-normalized loops of order n by plain Latin backtracking.

    Intended for tiny n (the brute-force isomorphism oracle uses n <= 5).
    """
    cells = [[0] * n for _ in range(n)]
    cells[0] = list(range(n))
    for i in range(n):
        cells[i][0] = i
    col_used = [1 << z for z in range(n)]  # the identity row
    for i in range(n):
        col_used[0] |= 1 << i  # the identity column is preset
    out: list[LoopTable] = []

    def rec(i: int, j: int, row_used: int) -> None:
        if i == n:
            out.append(
                LoopTable(n, tuple(tuple(v + 1 for v in row) for row in cells))
            )
            return
        if j == n:
            rec(i + 1, 1, 1 << (i + 1))
            return
        for v in range(n):
            bit = 1 << v
            if (row_used | col_used[j]) & bit:
                continue
            cells[i][j] = v
            col_used[j] |= bit
            rec(i, j + 1, row_used | bit)
            col_used[j] &= ~bit

    rec(1, 1, 1 << 1)
    return out
