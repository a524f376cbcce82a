import random

import pytest

from bolkit import errors
from bolkit.catalog import FIXTURE_ORDER16, Q9_REPRESENTATIVE_TUPLES, load_fixture
from bolkit.gf2 import (
    CMap,
    GF2Cocycle,
    associated_cocycle,
    build_exceptional,
    build_q9,
    cocycle_equivalent,
    cocycle_loop,
    count_constrained_cmaps,
    e2k2_bol_check,
    enumerate_q9,
    free_parameter_count,
    gl2_matrices,
    is_right_additive,
    q9_cmap,
)
from bolkit.iso import find_isomorphism
from bolkit.loop_core import mul
from bolkit.structure import check_identity, commutant, generated_subloop, is_subloop, nuclei

RNG = random.Random(97)


def random_cmap(dim: int) -> CMap:
    rows = [tuple(0 for _ in range(dim))]
    rows += [
        tuple(RNG.randrange(2) for _ in range(dim)) for _ in range((1 << dim) - 1)
    ]
    return CMap(dim, tuple(rows))


def test_associated_cocycle_all_zero():
    c = CMap(2, ((0, 0),) * 4)
    f = associated_cocycle(c)
    assert all(v == 0 for row in f.values for v in row)


def test_associated_cocycle_restricts_and_is_right_additive():
    for _ in range(100):
        c = random_cmap(3)
        f = associated_cocycle(c)
        assert is_right_additive(f)
        for e in range(8):
            for i in range(3):
                assert f.values[e][1 << i] == c.values[e][i]
        # right additivity on a sum of basis vectors
        for a in range(8):
            assert f.values[a][0b011] == c.values[a][0] ^ c.values[a][1]


def test_associated_cocycle_unique():
    # any right-additive cocycle agreeing with c on basis columns is forced:
    # rebuilding a CMap from f's basis columns reproduces f
    for _ in range(100):
        c = random_cmap(3)
        f = associated_cocycle(c)
        c2 = CMap(3, tuple(tuple(f.values[e][1 << i] for i in range(3)) for e in range(8)))
        assert associated_cocycle(c2).values == f.values


def test_is_right_additive_detects_single_flip():
    c = random_cmap(3)
    f = associated_cocycle(c)
    rows = [list(r) for r in f.values]
    rows[3][5] ^= 1  # flip one interior entry
    g = GF2Cocycle(3, tuple(tuple(r) for r in rows))
    assert not is_right_additive(g)


def test_e2k2_bol_check_right_additive_and_zero():
    zero = GF2Cocycle(2, ((0,) * 4,) * 4)
    assert e2k2_bol_check(zero)
    for _ in range(20):
        f = associated_cocycle(random_cmap(3))
        assert e2k2_bol_check(f)


def test_e2k2_bol_check_cross_validation():
    # random bit matrices with zero borders: the condition equations must
    # agree with the direct Bol check of the built table
    for _ in range(50):
        size = 8
        rows = [[0] * size]
        rows += [
            [0] + [RNG.randrange(2) for _ in range(size - 1)] for _ in range(size - 1)
        ]
        f = GF2Cocycle(3, tuple(tuple(r) for r in rows))
        Q = cocycle_loop(f)
        assert e2k2_bol_check(f) == check_identity(Q, "left_bol")


def test_q9_cmap_constraints():
    bits = tuple(RNG.randrange(2) for _ in range(9))
    c = q9_cmap(bits)
    f = associated_cocycle(c)
    # rows e1, e2 are symmetric; the (e1+e2, e3) slot breaks additivity
    for e in range(8):
        assert f.values[1][e] == f.values[e][1]
        assert f.values[2][e] == f.values[e][2]
    assert c.values[3][2] == c.values[1][2] ^ c.values[2][2] ^ 1


def test_build_q9_zero():
    Q = build_q9((0,) * 9)
    assert Q.order == 16
    assert check_identity(Q, "left_bol")
    assert not check_identity(Q, "associative")
    com = commutant(Q)
    assert len(com) == 6 and not is_subloop(Q, com)


def test_build_q9_commuting_pair_breaks():
    for bits in ((0,) * 9, (1,) * 9, tuple(RNG.randrange(2) for _ in range(9))):
        Q = build_q9(bits)
        com = set(commutant(Q))
        # pairs with vector part e1 resp. e2 commute with everything
        assert {3, 4, 5, 6} <= com
        assert mul(Q, 3, 5) not in com
        assert set(commutant(Q)) <= set(nuclei(Q).right)


def test_build_q9_rejects_bad_bits():
    with pytest.raises(errors.BadParams):
        build_q9((0,) * 8)
    with pytest.raises(errors.BadParams):
        build_q9((0, 1, 2, 0, 0, 0, 0, 0, 0))


def test_enumerate_q9_order_and_tags():
    loops = enumerate_q9()
    assert len(loops) == 512
    assert loops[0].name == "q9_000000000"
    assert loops[1].name == "q9_000000001"
    assert loops[-1].name == "q9_111111111"


def test_right_nucleus_criterion_for_right_additive():
    # (w,c) lies in the right nucleus iff a -> f(a,c) is additive in a
    f = associated_cocycle(q9_cmap((0, 1, 1, 0, 1, 0, 1, 0, 1)))
    Q = cocycle_loop(f)
    rnuc = set(nuclei(Q).right)
    for cvec in range(8):
        additive = all(
            f.values[a ^ b][cvec] == f.values[a][cvec] ^ f.values[b][cvec]
            for a in range(8)
            for b in range(8)
        )
        for u in range(2):
            assert ((1 + u + 2 * cvec) in rnuc) == additive


def test_cocycle_equivalence():
    f = associated_cocycle(q9_cmap((0,) * 9))
    g = associated_cocycle(q9_cmap((0,) * 8 + (1,)))
    assert cocycle_equivalent(f, f)
    assert not cocycle_equivalent(f, g)


def test_equivalent_cocycles_give_isomorphic_loops():
    f = associated_cocycle(q9_cmap((0,) * 9))
    mats = gl2_matrices(3)
    mat = mats[5]
    from bolkit.gf2 import _apply_matrix

    phi = [_apply_matrix(mat, x) for x in range(8)]
    g_vals = [[0] * 8 for _ in range(8)]
    for a in range(8):
        for b in range(8):
            g_vals[phi[a]][phi[b]] = f.values[a][b]
    g = GF2Cocycle(3, tuple(tuple(r) for r in g_vals))
    assert cocycle_equivalent(f, g)
    assert find_isomorphism(cocycle_loop(f), cocycle_loop(g)) is not None


def test_gl2_sizes():
    assert len(gl2_matrices(2)) == 6
    assert len(gl2_matrices(3)) == 168
    with pytest.raises(errors.TooLarge):
        gl2_matrices(5)


def test_exceptional_matches_fixture_bit_for_bit():
    X = build_exceptional()
    fixture = load_fixture(FIXTURE_ORDER16)
    assert X == fixture
    assert mul(X, 5, 9) == 13
    assert mul(X, 6, 9) == 16
    # equal tables: the lex-least isomorphism is the identity
    from bolkit.loop_core import identity_perm

    assert find_isomorphism(X, fixture) == identity_perm(16)


def test_exceptional_structure():
    X = build_exceptional()
    assert check_identity(X, "left_bol")
    assert all(mul(X, a, a) == 1 for a in X.elements())  # involutory
    assert commutant(X) == (1, 2, 5, 7)
    nuc = nuclei(X)
    assert nuc.left == (1,) and nuc.center == (1,)
    assert nuc.right == tuple(range(1, 9))
    assert generated_subloop(X, commutant(X)) == nuc.right


def test_exceptional_not_in_q9_family():
    # every family member embeds K = Z_2 inside its left nucleus; the
    # exceptional loop's left nucleus is trivial
    X = build_exceptional()
    assert len(nuclei(X).left) == 1
    for bits in Q9_REPRESENTATIVE_TUPLES:
        Q = build_q9(bits)
        assert len(nuclei(Q).left) >= 2


def test_free_parameter_count():
    assert free_parameter_count(3) == 9
    assert free_parameter_count(4) == 32
    assert count_constrained_cmaps(3) == 512
    with pytest.raises(errors.BadParams):
        count_constrained_cmaps(4)


def test_dim2_right_additive_exhaustive():
    # every dim-2 CMap yields a right-additive cocycle whose loop is left Bol
    import itertools

    for bits in itertools.product((0, 1), repeat=6):
        rows = ((0, 0), bits[0:2], bits[2:4], bits[4:6])
        f = associated_cocycle(CMap(2, rows))
        assert is_right_additive(f)
        assert e2k2_bol_check(f)
        assert check_identity(cocycle_loop(f), "left_bol")


def test_gf2_conditions_agree_with_general_extension_conditions():
    # a GF(2) cocycle is also a trivial-action extension cocycle over the
    # two-element group; the two condition checkers must agree on it
    from bolkit.extensions import Cocycle, bol_conditions, cyclic_group, elem_abelian_2, trivial_tau

    K = cyclic_group(2)
    E = elem_abelian_2(3)
    for _ in range(25):
        rows = [[0] * 8]
        rows += [[0] + [RNG.randrange(2) for _ in range(7)] for _ in range(7)]
        f = GF2Cocycle(3, tuple(tuple(r) for r in rows))
        fk = Cocycle(E, K, tuple(tuple(v + 1 for v in row) for row in rows))
        general = bol_conditions(K, E, trivial_tau(K, E), fk)
        assert general == e2k2_bol_check(f)
        assert general == check_identity(cocycle_loop(f), "left_bol")
