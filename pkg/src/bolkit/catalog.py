"""The generated test catalog: every loop the verification suite touches.

Builders here are deterministic, so catalog tables are byte-stable across
runs.  The "twenty one" are the known Bol loops of order at most 16 with
non-subloop commutant: one of order 12 and twenty of order 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .extensions import (
    Cocycle,
    GroupTable,
    TauMap,
    build_extension,
    build_named_example,
    cyclic_group,
    elem_abelian_2,
    named_extension,
    trivial_cocycle,
    trivial_tau,
)
from .gf2 import build_exceptional, build_q9
from .loop_core import LoopTable, identity_perm, inverse, parse_table

# the nine-bit tuples singled out as pairwise non-isomorphic representatives
Q9_REPRESENTATIVE_TUPLES: tuple[tuple[int, ...], ...] = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, 1, 1),
    (0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0, 0, 1, 1),
    (0, 0, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 0, 1),
    (0, 0, 1, 0, 0, 0, 1, 1, 0),
    (0, 0, 1, 0, 0, 1, 1, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 1),
    (1, 0, 1, 0, 0, 0, 0, 1, 0),
    (1, 0, 1, 0, 0, 0, 0, 1, 1),
    (1, 0, 1, 0, 0, 0, 1, 1, 0),
    (1, 0, 1, 0, 0, 1, 0, 0, 1),
)

FIXTURE_ORDER8 = "order8_example.tbl"
FIXTURE_ORDER16 = "order16_exceptional.tbl"


def fixture_text(name: str) -> str:
    return (resources.files("bolkit") / "fixtures" / name).read_text(encoding="utf-8")


def load_fixture(name: str) -> LoopTable:
    return parse_table(fixture_text(name), name=name)


def q9_representatives() -> list[LoopTable]:
    return [build_q9(t) for t in Q9_REPRESENTATIVE_TUPLES]


def twenty_one() -> list[LoopTable]:
    """The 21 known small Bol loops with non-subloop commutant."""
    return [build_named_example("order12")] + q9_representatives() + [build_exceptional()]


def order16_twenty() -> list[LoopTable]:
    return q9_representatives() + [build_exceptional()]


def dihedral_inputs(n: int) -> tuple[GroupTable, LoopTable, TauMap, Cocycle]:
    """D_n as the semidirect product of Z_n by Z_2 acting by inversion."""
    K = cyclic_group(n)
    E = cyclic_group(2, name="Z2")
    inv = tuple(inverse(K, u) for u in K.elements())
    tau = TauMap(E, K, (identity_perm(n), inv))
    return K, E, tau, trivial_cocycle(K, E)


def dihedral_group(n: int) -> LoopTable:
    K, E, tau, f = dihedral_inputs(n)
    return build_extension(K, E, tau, f, name=f"D{n}")


def direct_product_inputs(
    K: GroupTable, E: LoopTable
) -> tuple[GroupTable, LoopTable, TauMap, Cocycle]:
    return K, E, trivial_tau(K, E), trivial_cocycle(K, E)


def direct_product(K: GroupTable, E: LoopTable, name: str | None = None) -> LoopTable:
    Kk, Ee, tau, f = direct_product_inputs(K, E)
    return build_extension(Kk, Ee, tau, f, name=name or f"{K.name}x{E.name}")


def small_even_order_loops() -> list[LoopTable]:
    """Left Bol loops of orders 2, 6, 10, 14 for the order-2k subloop check."""
    return [
        cyclic_group(2),
        cyclic_group(6),
        dihedral_group(3),
        cyclic_group(10),
        dihedral_group(5),
        cyclic_group(14),
        dihedral_group(7),
    ]


def direct_products() -> list[LoopTable]:
    return [
        direct_product(cyclic_group(2), cyclic_group(2)),
        direct_product(cyclic_group(3), cyclic_group(3)),
        direct_product(cyclic_group(4), elem_abelian_2(2)),
        direct_product(elem_abelian_2(2), elem_abelian_2(2)),
    ]


def order4n_family(ns: range = range(3, 9)) -> list[LoopTable]:
    return [build_named_example("order4n", n=n) for n in ns]


def property_catalog() -> list[LoopTable]:
    """Loops for the commutant structure property battery."""
    return twenty_one() + direct_products() + order4n_family()


@dataclass(frozen=True)
class CatalogExtension:
    name: str
    K: GroupTable
    E: LoopTable
    tau: TauMap
    f: Cocycle

    def build(self) -> LoopTable:
        return build_extension(self.K, self.E, self.tau, self.f, name=self.name)


def extension_catalog() -> list[CatalogExtension]:
    """Every catalog loop that is constructed as an explicit extension."""
    entries: list[CatalogExtension] = []
    for name, params in (
        ("order12", {}),
        ("order16cyclic", {}),
        ("order16elem", {}),
        ("order4n", {"n": 3}),
        ("order4n", {"n": 4}),
        ("order4n", {"n": 5}),
        ("order4n", {"n": 6}),
        ("order4n", {"n": 7}),
        ("order4n", {"n": 8}),
        ("commutant_order", {"k": 3}),
        ("commutant_order", {"k": 4}),
        ("commutant_order", {"k": 5}),
    ):
        K, E, tau, f = named_extension(name, **params)
        tag = name + "".join(f"_{k}{v}" for k, v in sorted(params.items()))
        entries.append(CatalogExtension(tag, K, E, tau, f))
    for n in (3, 5, 7):
        K, E, tau, f = dihedral_inputs(n)
        entries.append(CatalogExtension(f"D{n}", K, E, tau, f))
    for K, E in (
        (cyclic_group(2), cyclic_group(2)),
        (cyclic_group(3), cyclic_group(3)),
        (cyclic_group(4), elem_abelian_2(2)),
        (elem_abelian_2(2), elem_abelian_2(2)),
    ):
        Kk, Ee, tau, f = direct_product_inputs(K, E)
        entries.append(CatalogExtension(f"{K.name}x{E.name}", Kk, Ee, tau, f))
    return entries
