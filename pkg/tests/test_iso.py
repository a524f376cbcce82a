import itertools

from bolkit.catalog import q9_representatives
from bolkit.extensions import build_named_example, cyclic_group, elem_abelian_2
from bolkit.gf2 import build_exceptional
from bolkit.iso import (
    brute_force_isomorphic,
    classification_report,
    classify,
    find_isomorphism,
    invariant_profile,
    isomorphic,
)
from bolkit.loop_core import identity_perm, mul, parse_table
from bolkit.oracle import enumerate_all_loops


def test_profile_z4_spectrum():
    prof = invariant_profile(cyclic_group(4))
    assert prof.order_spectrum == (1, 2, 4, 4)
    assert prof.commutant_size == 4


def test_profile_separates_semidirect_examples():
    pc = invariant_profile(build_named_example("order16cyclic"))
    pe = invariant_profile(build_named_example("order16elem"))
    assert pc.involutions == 9
    assert pe.involutions == 13
    assert pc != pe


def test_profile_exceptional_lnuc():
    assert invariant_profile(build_exceptional()).lnuc_size == 1
    for Q in q9_representatives()[:4]:
        assert invariant_profile(Q).lnuc_size >= 2


def test_self_isomorphism_is_identity():
    for Q in (cyclic_group(5), build_named_example("order12"), build_exceptional()):
        assert find_isomorphism(Q, Q) == identity_perm(Q.order)


def _relabel(Q, sigma):
    n = Q.order
    cells = [[0] * n for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            cells[sigma[a - 1] - 1][sigma[b - 1] - 1] = sigma[mul(Q, a, b) - 1]
    from bolkit.loop_core import LoopTable

    return LoopTable.from_cells(cells)


def test_isomorphism_soundness_and_symmetry():
    z6 = cyclic_group(6)
    shuffled = _relabel(z6, (1, 4, 6, 2, 5, 3))
    phi = find_isomorphism(z6, shuffled)
    assert phi is not None
    for a in z6.elements():
        for b in z6.elements():
            assert phi[mul(z6, a, b) - 1] == mul(shuffled, phi[a - 1], phi[b - 1])
    assert find_isomorphism(shuffled, z6) is not None
    # profiles of isomorphic loops agree
    assert invariant_profile(z6) == invariant_profile(shuffled)


def test_find_isomorphism_returns_lex_least():
    # compare against explicit enumeration of every isomorphism
    A = elem_abelian_2(2)
    B = elem_abelian_2(2)
    phis = []
    n = A.order
    for rest in itertools.permutations(range(2, n + 1)):
        img = (1,) + rest
        if all(
            img[mul(A, x, y) - 1] == mul(B, img[x - 1], img[y - 1])
            for x in A.elements()
            for y in A.elements()
        ):
            phis.append(img)
    assert find_isomorphism(A, B) == min(phis)
    assert len(phis) == 6  # Aut((Z2)^2)


def test_non_isomorphic():
    assert find_isomorphism(cyclic_group(4), elem_abelian_2(2)) is None
    assert not isomorphic(cyclic_group(4), elem_abelian_2(2))
    assert find_isomorphism(cyclic_group(4), cyclic_group(5)) is None


def test_classify_duplicates():
    z2 = cyclic_group(2)
    classes = classify([z2, z2])
    assert len(classes) == 1
    assert classes[0].representative == 0
    assert classes[0].members == (0, 1)


def test_classify_representatives_plus_exceptional():
    loops = q9_representatives() + [build_exceptional()]
    classes = classify(loops)
    assert len(classes) == 20


def test_classify_matches_brute_force_order4():
    loops = enumerate_all_loops(4)
    assert len(loops) == 4
    classes = classify(loops)
    fast = {frozenset(c.members) for c in classes}
    slow: list[set[int]] = []
    for i in range(len(loops)):
        for part in slow:
            if brute_force_isomorphic(loops[i], loops[min(part)]):
                part.add(i)
                break
        else:
            slow.append({i})
    assert fast == {frozenset(p) for p in slow}
    assert len(classes) == 2  # Z4 and the Klein group


def test_classification_report_format():
    loops = [cyclic_group(2), cyclic_group(2)]
    classes = classify(loops)
    text = classification_report(loops, classes)
    assert text.startswith("class 1: size 2 representative Z2 profile order=2")
    assert "flags=" in text


def test_profile_invariant_under_relabeling():
    import random

    from bolkit.gf2 import build_q9

    rng = random.Random(11)
    for Q in (cyclic_group(6), build_named_example("order12"), build_q9((1, 1, 0, 0, 1, 0, 1, 1, 0))):
        rest = list(range(2, Q.order + 1))
        rng.shuffle(rest)
        sigma = (1, *rest)
        shuffled = _relabel(Q, sigma)
        assert invariant_profile(shuffled) == invariant_profile(Q)


def test_find_isomorphism_on_relabeled_order16_loops():
    import random

    from bolkit.gf2 import build_exceptional, build_q9

    rng = random.Random(23)
    for Q in (build_q9((0,) * 9), build_exceptional()):
        rest = list(range(2, 17))
        rng.shuffle(rest)
        shuffled = _relabel(Q, (1, *rest))
        phi = find_isomorphism(Q, shuffled)
        assert phi is not None
        for a in Q.elements():
            for b in Q.elements():
                assert phi[mul(Q, a, b) - 1] == mul(shuffled, phi[a - 1], phi[b - 1])
        assert len(classify([Q, shuffled])) == 1


def test_isomorphism_existence_is_symmetric():
    reps = q9_representatives()
    pairs = [(0, 1), (3, 7), (12, 18)]
    for i, j in pairs:
        assert isomorphic(reps[i], reps[j]) == isomorphic(reps[j], reps[i]) == False
    Q12 = build_named_example("order12")
    assert not isomorphic(Q12, reps[0]) and not isomorphic(reps[0], Q12)
