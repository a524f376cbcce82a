"""Right-additive cocycles over elementary abelian 2-groups.

Vectors of (Z_2)^n are int bitmasks 0..2^n-1; bit i is the coefficient of
the basis vector e_{i+1}.  A CMap holds c(e, e_i) for every vector e and
basis column i; its associated cocycle extends it right-additively.

Loops built from a cocycle f live on pairs (u, a) with u in Z_2 and
a in (Z_2)^n, multiplied by (u,a)(v,b) = (u+v+f(a,b), a+b) and encoded as

    idx(u, a) = 1 + u + 2*a        (a as bitmask)

The nine-parameter order-16 family and the one exceptional order-16 loop
that no such extension produces are both constructed here with fixed
encodings, so their tables are byte-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadParams, TooLarge
from .loop_core import LoopTable

MAX_GL_DIM = 4


@dataclass(frozen=True)
class CMap:
    """Values c(e, e_i) with c(0, e_i) = 0."""

    dim: int
    values: tuple[tuple[int, ...], ...]  # (2^dim) rows x dim columns over {0,1}

    def __post_init__(self) -> None:
        size = 1 << self.dim
        if len(self.values) != size or any(len(r) != self.dim for r in self.values):
            raise BadParams("CMap must be 2^n x n")
        if any(v not in (0, 1) for row in self.values for v in row):
            raise BadParams("CMap entries must be bits")
        if any(v != 0 for v in self.values[0]):
            raise BadParams("c(0, e_i) must vanish")


@dataclass(frozen=True)
class GF2Cocycle:
    """A bit matrix f(a, b) with zero first row and column."""

    dim: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = 1 << self.dim
        if len(self.values) != size or any(len(r) != size for r in self.values):
            raise BadParams("cocycle must be 2^n x 2^n")
        if any(v not in (0, 1) for row in self.values for v in row):
            raise BadParams("cocycle entries must be bits")
        if any(self.values[0][b] for b in range(size)) or any(
            self.values[a][0] for a in range(size)
        ):
            raise BadParams("cocycle border must vanish")

    def at(self, a: int, b: int) -> int:
        return self.values[a][b]


def associated_cocycle(c: CMap) -> GF2Cocycle:
    """The unique right-additive cocycle restricting to c on basis columns."""
    n = c.dim
    size = 1 << n
    rows = []
    for a in range(size):
        ca = c.values[a]
        row = []
        for b in range(size):
            acc = 0
            m = b
            i = 0
            while m:
                if m & 1:
                    acc ^= ca[i]
                m >>= 1
                i += 1
            row.append(acc)
        rows.append(tuple(row))
    return GF2Cocycle(n, tuple(rows))


def is_right_additive(f: GF2Cocycle) -> bool:
    size = 1 << f.dim
    vals = f.values
    for a in range(size):
        fa = vals[a]
        for b in range(size):
            fab = fa[b]
            if any(fa[b ^ c] != fab ^ fa[c] for c in range(size)):
                return False
    return True


def e2k2_bol_check(f: GF2Cocycle) -> bool:
    """Condition equations for Q((Z_2), E, trivial action, f) to be left Bol."""
    size = 1 << f.dim
    vals = f.values
    for a in range(size):
        fa = vals[a]
        faa = fa[a]
        if any(fa[a ^ c] != faa ^ fa[c] for c in range(size)):
            return False
    for a in range(size):
        fa = vals[a]
        for b in range(size):
            fb = vals[b]
            if any(
                fa[b ^ c] ^ fa[b] ^ fa[c] != fb[a ^ c] ^ fb[a] ^ fb[c]
                for c in range(size)
            ):
                return False
    return True


def cocycle_loop(f: GF2Cocycle, name: str | None = None) -> LoopTable:
    """Order 2^(n+1) table on pairs (u, a): (u,a)(v,b) = (u+v+f(a,b), a+b)."""
    size = 1 << f.dim
    n = 2 * size
    cells = [[0] * n for _ in range(n)]
    for a in range(size):
        fa = f.values[a]
        for u in range(2):
            row = cells[u + 2 * a]
            for b in range(size):
                w = fa[b]
                ab = a ^ b
                for v in range(2):
                    row[v + 2 * b] = 1 + (u ^ v ^ w) + 2 * ab
    return LoopTable.from_cells(cells, name=name)


def q9_cmap(bits: tuple[int, ...]) -> CMap:
    """The constrained dim-3 CMap with the nine free bits filled in.

    Free slots: row e1 = (b1, b2, b4); row e2 columns 2,3 = (b3, b5); the
    third column of rows e3, e1+e3, e2+e3, e1+e2+e3 = (b6, b7, b8, b9).
    Determined slots: column 1 from symmetry against row e1, column 2 from
    symmetry against row e2, and c(e1+e2, e3) forced to break additivity.
    """
    if len(bits) != 9 or any(b not in (0, 1) for b in bits):
        raise BadParams("expected nine bits")
    b1, b2, b3, b4, b5, b6, b7, b8, b9 = bits
    c = [[0, 0, 0] for _ in range(8)]
    c[1] = [b1, b2, b4]  # row e1
    c[2][1], c[2][2] = b3, b5  # row e2
    c[4][2] = b6  # row e3
    c[5][2] = b7  # row e1+e3
    c[6][2] = b8  # row e2+e3
    c[7][2] = b9  # row e1+e2+e3
    for e in range(8):  # column 1: c(e, e1) = sum over support of c(e1, e_i)
        acc = 0
        for i in range(3):
            if e >> i & 1:
                acc ^= c[1][i]
        c[e][0] = acc
    for e in range(8):  # column 2: c(e, e2) likewise against row e2
        acc = 0
        for i in range(3):
            if e >> i & 1:
                acc ^= c[2][i]
        c[e][1] = acc
    c[3][2] = c[1][2] ^ c[2][2] ^ 1  # forced inequality at (e1+e2, e3)
    return CMap(3, tuple(tuple(r) for r in c))


def build_q9(bits: tuple[int, ...]) -> LoopTable:
    """Order-16 left Bol loop from the nine-bit parameter tuple."""
    f = associated_cocycle(q9_cmap(tuple(bits)))
    tag = "".join(str(b) for b in bits)
    return cocycle_loop(f, name=f"q9_{tag}")


def enumerate_q9() -> list[LoopTable]:
    """All 512 parameter tuples in lexicographic order."""
    return [build_q9(bits) for bits in itertools.product((0, 1), repeat=9)]


def gl2_matrices(n: int) -> list[tuple[int, ...]]:
    """All invertible n x n bit matrices, as tuples of row masks."""
    if n > MAX_GL_DIM:
        raise TooLarge(f"GL(n,2) materialization capped at n = {MAX_GL_DIM}")
    out = []
    for rows in itertools.product(range(1 << n), repeat=n):
        if _gf2_rank(list(rows), n) == n:
            out.append(rows)
    return out


def _gf2_rank(rows: list[int], n: int) -> int:
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r] >> col & 1:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r] >> col & 1:
                rows[r] ^= rows[rank]
        rank += 1
    return rank


def _apply_matrix(rows: tuple[int, ...], x: int) -> int:
    y = 0
    for i, row in enumerate(rows):
        y |= (bin(row & x).count("1") & 1) << i
    return y


def cocycle_equivalent(f: GF2Cocycle, g: GF2Cocycle) -> bool:
    """Whether some linear automorphism phi gives f(a,b) = g(phi(a), phi(b))."""
    if f.dim != g.dim:
        return False
    size = 1 << f.dim
    for mat in gl2_matrices(f.dim):
        phi = [_apply_matrix(mat, x) for x in range(size)]
        if all(
            f.values[a][b] == g.values[phi[a]][phi[b]]
            for a in range(size)
            for b in range(size)
        ):
            return True
    return False


def build_exceptional() -> LoopTable:
    """The one order-16 left Bol loop with non-subloop commutant that no
    left-nuclear extension produces.

    K and E are elementary abelian of order 4 (masks 0..3, k1 = 1, k2 = 2);
    pairs multiply by (u,a)(v,b) = (psi_{a,b}(u)+v, a+b) where
    psi_{0,e2} = psi_{0,e1+e2} maps k1 -> k1, k2 -> k1+k2, and
    psi_{e1,e2} = psi_{e1,e1+e2} maps k1 -> k1+k2, k2 -> k2; all other
    psi_{a,b} are the identity.  Encoding: idx(u, a) = 1 + u + 4*a.
    """
    ident = (0, 1, 2, 3)
    alpha = (0, 1, 3, 2)  # k1 -> k1, k2 -> k1k2
    beta = (0, 3, 2, 1)  # k1 -> k1k2, k2 -> k2
    e1, e2, e12 = 1, 2, 3
    psi = {(a, b): ident for a in range(4) for b in range(4)}
    psi[(0, e2)] = psi[(0, e12)] = alpha
    psi[(e1, e2)] = psi[(e1, e12)] = beta
    cells = [[0] * 16 for _ in range(16)]
    for a in range(4):
        for u in range(4):
            row = cells[u + 4 * a]
            for b in range(4):
                pu = psi[(a, b)][u]
                ab = a ^ b
                for v in range(4):
                    row[v + 4 * b] = 1 + (pu ^ v) + 4 * ab
    return LoopTable.from_cells(cells, name="exceptional16")


def count_constrained_cmaps(n: int = 3) -> int:
    """Exhaustively count dim-n CMaps satisfying the family constraints.

    Row-by-row DFS with early pruning; feasible for n = 3 where the count
    must come out to 2^9.
    """
    if n != 3:
        raise BadParams("exhaustive count implemented for n = 3 only")
    size = 1 << n
    count = 0
    rows: list[tuple[int, ...]] = [(0,) * n] * size

    def row_ok(e: int, row: tuple[int, ...]) -> bool:
        # constraints referencing rows e1/e2 only apply once those are placed;
        # at e == 1 and e == 2 the skipped checks are tautologies anyway
        if e >= 2:  # column 1 symmetry against row e1
            acc = 0
            for i in range(n):
                if e >> i & 1:
                    acc ^= rows[1][i]
            if row[0] != acc:
                return False
        if e >= 3:  # column 2 symmetry against row e2
            acc = 0
            for i in range(n):
                if e >> i & 1:
                    acc ^= rows[2][i]
            if row[1] != acc:
                return False
        if e == 3 and row[2] != rows[1][2] ^ rows[2][2] ^ 1:
            return False
        return True

    def rec(e: int) -> None:
        nonlocal count
        if e == size:
            count += 1
            return
        for bits in itertools.product((0, 1), repeat=n):
            if row_ok(e, bits):
                rows[e] = bits
                rec(e + 1)

    rec(1)
    return count


def free_parameter_count(n: int) -> int:
    """The family's free-bit count formula for dimension n."""
    return ((1 << n) - 4) * (n - 2) + 3 * n - 4
