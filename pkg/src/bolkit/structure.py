"""Structural analysis of loop tables.

Identity checking, commutant, nuclei, generated subloops, normality,
quotients, the multiplication group, and the homomorphism test for
restricted right translations.  Element sets are returned as sorted
tuples.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ClosureCapExceeded,
    NotNormal,
    NotPartition,
    NotPeriodicThroughIdentity,
    NotSubloop,
)
from .loop_core import (
    LoopTable,
    Permutation,
    compose,
    element_order,
    identity_perm,
    mul,
    translation,
)

ElementSet = tuple[int, ...]

IDENTITY_NAMES = (
    "left_bol",
    "right_bol",
    "moufang",
    "associative",
    "commutative",
    "left_power_alternative",
)


def check_identity(Q: LoopTable, which: str) -> bool:
    """Exhaustively test a named identity on the whole table.

    left_bol:  x(y*xz) = (x*yx)z
    right_bol: ((zx)y)x = z((xy)x)
    moufang:   x(y*xz) = (xy*x)z
    left_power_alternative: L_x^m = L_{x^m} for 0 <= m <= order(x)
    """
    cells = Q.cells
    n = Q.order
    rng = range(n)
    if which == "left_bol":
        # row-composition form: L_x L_y L_x = L_{x*yx}
        for x in rng:
            rx = cells[x]
            for y in rng:
                ry = cells[y]
                c = rx[ry[x] - 1]
                rc = cells[c - 1]
                if any(rx[ry[rx[z] - 1] - 1] != rc[z] for z in rng):
                    return False
        return True
    if which == "right_bol":
        cols = [tuple(row[j] for row in cells) for j in rng]
        for x in rng:
            cx = cols[x]
            for y in rng:
                cy = cols[y]
                c = cells[cells[x][y] - 1][x]
                cc = cols[c - 1]
                if any(cx[cy[cx[z] - 1] - 1] != cc[z] for z in rng):
                    return False
        return True
    if which == "moufang":
        for x in rng:
            rx = cells[x]
            for y in rng:
                ry = cells[y]
                c = cells[rx[y] - 1][x]
                rc = cells[c - 1]
                if any(rx[ry[rx[z] - 1] - 1] != rc[z] for z in rng):
                    return False
        return True
    if which == "associative":
        for x in rng:
            rx = cells[x]
            for y in rng:
                rxy = cells[rx[y] - 1]
                ry = cells[y]
                if any(rxy[z] != rx[ry[z] - 1] for z in rng):
                    return False
        return True
    if which == "commutative":
        return all(cells[x][y] == cells[y][x] for x in rng for y in rng)
    if which == "left_power_alternative":
        for x in Q.elements():
            try:
                m = element_order(Q, x)
            except NotPeriodicThroughIdentity:
                return False
            lx = translation(Q, x, "left")
            acc = identity_perm(n)
            p = 1
            for _ in range(m + 1):
                if acc != translation(Q, p, "left"):
                    return False
                acc = compose(acc, lx)
                p = mul(Q, x, p)
        return True
    raise ValueError(f"unknown identity {which!r}")


def commutant(Q: LoopTable) -> ElementSet:
    """Elements c with L_c = R_c, i.e. commuting with everything."""
    cells = Q.cells
    n = Q.order
    return tuple(
        c + 1 for c in range(n) if all(cells[c][x] == cells[x][c] for x in range(n))
    )


@dataclass(frozen=True)
class Nuclei:
    left: ElementSet
    middle: ElementSet
    right: ElementSet
    nucleus: ElementSet
    center: ElementSet


def nuclei(Q: LoopTable) -> Nuclei:
    """Left/middle/right nuclei, their intersection, and the center."""
    cells = Q.cells
    n = Q.order
    rng = range(n)

    def left_ok(a: int) -> bool:
        ra = cells[a]
        return all(cells[ra[x] - 1][y] == ra[cells[x][y] - 1] for x in rng for y in rng)

    def middle_ok(a: int) -> bool:
        ra = cells[a]
        return all(
            cells[cells[x][a] - 1][y] == cells[x][ra[y] - 1] for x in rng for y in rng
        )

    def right_ok(a: int) -> bool:
        return all(
            cells[cells[x][y] - 1][a] == cells[x][cells[y][a] - 1]
            for x in rng
            for y in rng
        )

    left = tuple(a + 1 for a in rng if left_ok(a))
    middle = tuple(a + 1 for a in rng if middle_ok(a))
    right = tuple(a + 1 for a in rng if right_ok(a))
    nuc = tuple(sorted(set(left) & set(middle) & set(right)))
    cen = tuple(sorted(set(nuc) & set(commutant(Q))))
    return Nuclei(left, middle, right, nuc, cen)


def commutant_prime_part(Q: LoopTable, m: int) -> ElementSet:
    """Commutant elements whose order is relatively prime to m."""
    if m <= 1:
        raise ValueError("m must exceed 1")
    return tuple(c for c in commutant(Q) if math.gcd(element_order(Q, c), m) == 1)


def generated_subloop(Q: LoopTable, S: ElementSet) -> ElementSet:
    """Least subset containing S and 1, closed under * and both divisions."""
    cells = Q.cells
    n = Q.order
    members = {1} | set(S)
    changed = True
    while changed:
        changed = False
        current = sorted(members)
        for a in current:
            ra = cells[a - 1]
            col = a - 1
            for b in current:
                prod = ra[b - 1]
                ldiv = ra.index(b) + 1  # x with a*x = b
                rdiv = next(y for y in range(1, n + 1) if cells[y - 1][col] == b)
                for v in (prod, ldiv, rdiv):
                    if v not in members:
                        members.add(v)
                        changed = True
    return tuple(sorted(members))


def is_subloop(Q: LoopTable, S: ElementSet) -> bool:
    return generated_subloop(Q, S) == tuple(sorted(set(S)))


def is_normal(Q: LoopTable, S: ElementSet) -> bool:
    """Setwise normality: xS = Sx, (xS)y = x(Sy), (Sx)y = S(xy) for all x,y."""
    cells = Q.cells
    n = Q.order
    sel = [s - 1 for s in S]
    left_cos = [frozenset(cells[x][s] for s in sel) for x in range(n)]
    right_cos = [frozenset(cells[s][x] for s in sel) for x in range(n)]
    for x in range(n):
        if left_cos[x] != right_cos[x]:
            return False
    for x in range(n):
        rx = cells[x]
        for y in range(n):
            xs_y = frozenset(cells[v - 1][y] for v in left_cos[x])
            x_sy = frozenset(rx[v - 1] for v in right_cos[y])
            if xs_y != x_sy:
                return False
            sx_y = frozenset(cells[v - 1][y] for v in right_cos[x])
            s_xy = right_cos[rx[y] - 1]
            if sx_y != s_xy:
                return False
    return True


def cosets(Q: LoopTable, S: ElementSet) -> list[ElementSet]:
    """Deduplicated left cosets xS, ordered by least member.

    Raises NotPartition when two distinct cosets overlap; the partition
    property is a theorem only under extra hypotheses.
    """
    cells = Q.cells
    sel = [s - 1 for s in S]
    seen: list[frozenset[int]] = []
    for x in range(Q.order):
        cs = frozenset(cells[x][s] for s in sel)
        if cs in seen:
            continue
        for prior in seen:
            if prior & cs:
                raise NotPartition(f"cosets {sorted(prior)} and {sorted(cs)} overlap")
        seen.append(cs)
    return sorted((tuple(sorted(c)) for c in seen), key=lambda c: c[0])


def quotient(Q: LoopTable, S: ElementSet) -> LoopTable:
    """Quotient table on the cosets of a normal subloop; coset of 1 is 1."""
    if not is_normal(Q, S):
        raise NotNormal(f"{S} is not normal")
    blocks = cosets(Q, S)
    k = len(blocks)
    index = {}
    for i, block in enumerate(blocks):
        for e in block:
            index[e] = i + 1
    cells = [[0] * k for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            prods = {index[mul(Q, x, y)] for x in bi for y in bj}
            if len(prods) != 1:
                raise NotPartition("coset product is not well defined")
            cells[i][j] = prods.pop()
    tag = f"{Q.name}/{len(S)}" if Q.name else None
    return LoopTable.from_cells(cells, name=tag)


@dataclass(frozen=True)
class PermGroup:
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    order: int


def multiplication_group(Q: LoopTable, cap: int = 10**6) -> PermGroup:
    """Closure of all left and right translations under composition."""
    gens: list[Permutation] = []
    for a in Q.elements():
        for side in ("left", "right"):
            p = translation(Q, a, side)
            if p not in gens:
                gens.append(p)
    seen = {identity_perm(Q.order)}
    queue = [identity_perm(Q.order)]
    while queue:
        p = queue.pop()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                if len(seen) >= cap:
                    raise ClosureCapExceeded(f"multiplication group exceeds cap {cap}")
                seen.add(q)
                queue.append(q)
    return PermGroup(tuple(gens), tuple(sorted(seen)), len(seen))


def right_regular_is_homomorphism(Q: LoopTable, S: ElementSet) -> bool:
    """Whether R_{s*t} = R_s R_t (apply R_s first) for all s, t in S."""
    if not is_subloop(Q, S):
        raise NotSubloop(f"{S} is not a subloop")
    cells = Q.cells
    n = Q.order
    for s in S:
        for t in S:
            st = cells[s - 1][t - 1]
            if any(
                cells[cells[b][s - 1] - 1][t - 1] != cells[b][st - 1] for b in range(n)
            ):
                return False
    return True


def involution_count(Q: LoopTable) -> int:
    return sum(1 for a in range(2, Q.order + 1) if mul(Q, a, a) == 1)


def commutant_in_right_nucleus(Q: LoopTable) -> bool:
    """The predicate C(Q) <= RNuc(Q) (open in general for Bol loops)."""
    return set(commutant(Q)) <= set(nuclei(Q).right)


def generating_sequence(Q: LoopTable) -> tuple[int, ...]:
    """Small generating sequence, chosen greedily by subloop growth."""
    gens: list[int] = []
    span: ElementSet = (1,)
    while len(span) < Q.order:
        best, best_span = None, span
        for x in Q.elements():
            if x in span:
                continue
            trial = generated_subloop(Q, tuple(gens) + (x,))
            if len(trial) > len(best_span):
                best, best_span = x, trial
                if len(trial) == Q.order:
                    break
        assert best is not None
        gens.append(best)
        span = best_span
    return tuple(gens)


def subloop_table(Q: LoopTable, S: ElementSet) -> LoopTable:
    """Restriction of the table to a subloop, relabeled to 1..|S|."""
    if not is_subloop(Q, S):
        raise NotSubloop(f"{S} is not a subloop")
    order = sorted(S)
    index = {e: i + 1 for i, e in enumerate(order)}
    cells = [[index[mul(Q, a, b)] for b in order] for a in order]
    tag = f"{Q.name}|{len(S)}" if Q.name else None
    return LoopTable.from_cells(cells, name=tag)


def _fmt_set(S: ElementSet) -> str:
    return "{" + ",".join(str(x) for x in S) + "}"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def structure_report(Q: LoopTable) -> str:
    """Line-oriented report with fixed key order, stable under diffing."""
    nuc = nuclei(Q)
    com = commutant(Q)
    lines = [
        f"name: {Q.name or '-'}",
        f"order: {Q.order}",
    ]
    for ident in IDENTITY_NAMES:
        lines.append(f"{ident}: {_fmt_bool(check_identity(Q, ident))}")
    lines.extend(
        [
            f"commutant: {_fmt_set(com)}",
            f"commutant_size: {len(com)}",
            f"commutant_is_subloop: {_fmt_bool(is_subloop(Q, com))}",
            f"commutant_in_rnuc: {_fmt_bool(set(com) <= set(nuc.right))}",
            f"lnuc: {_fmt_set(nuc.left)}",
            f"mnuc: {_fmt_set(nuc.middle)}",
            f"rnuc: {_fmt_set(nuc.right)}",
            f"nucleus: {_fmt_set(nuc.nucleus)}",
            f"center: {_fmt_set(nuc.center)}",
            f"involutions: {involution_count(Q)}",
        ]
    )
    return "\n".join(lines) + "\n"
