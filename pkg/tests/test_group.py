import random

import pytest

from heckeforge.cyclo import CycloMatrix, root_of_unity
from heckeforge.group import (
    BudgetExceededError,
    GroupElement,
    RepKind,
    act,
    centralizer,
    centralizer_order_formula,
    coact,
    conjugacy_classes,
    conjugate,
    conjugate_in_full_group,
    cycle_type,
    diag,
    elements,
    from_cycles,
    group_order,
    identity,
    in_subgroup,
    inverse,
    matrix,
    multiply,
    three_cycle,
    transposition,
    xi,
)

F = RepKind.FAITHFUL
P = RepKind.PERMUTATION


def test_neg_transposition_squares_to_minus_identity():
    # (1,-2) = xi_2^{r/2} (1,2) acts by v_1 -> -v_2, v_2 -> v_1, so its
    # square is -I = xi_1 xi_2
    g = from_cycles(2, 2, [(1, 2)], exps=(0, 1))
    assert act(g, 1, F) == (2, root_of_unity(2, 1))
    assert act(g, 2, F) == (1, root_of_unity(2, 0))
    assert multiply(g, g) == diag(2, 2, (1, 1))


def test_identity_is_neutral():
    rng = random.Random(0)
    els = elements(3, 1, 3)
    e = identity(3, 3)
    for g in rng.sample(els, 10):
        assert multiply(g, e) == g
        assert multiply(e, g) == g


def test_multiplication_matches_matrix_product():
    rng = random.Random(1)
    els = elements(3, 1, 3)
    for _ in range(25):
        g, h = rng.choice(els), rng.choice(els)
        assert matrix(multiply(g, h)) == matrix(g) * matrix(h)


def test_inverse_matrix():
    rng = random.Random(2)
    for g in rng.sample(elements(3, 1, 3), 12):
        assert matrix(inverse(g)) * matrix(g) == CycloMatrix.identity(3, 3)


def test_actions():
    assert act(xi(3, 3, 1), 1, F) == (1, root_of_unity(3))
    assert act(xi(3, 3, 1), 1, P) == (1, root_of_unity(3, 0))
    assert coact(xi(3, 3, 1), 1, F) == (1, root_of_unity(3, 2))


def test_coact_is_contragredient():
    rng = random.Random(3)
    for g in rng.sample(elements(3, 1, 3), 12):
        gi = inverse(g)
        for i in range(1, 4):
            j, s = coact(g, i, F)
            jj, ss = act(gi, j, F)
            assert jj == i and ss == s


def test_in_subgroup():
    assert in_subgroup(diag(3, 3, (1, 2, 0)), 3)
    assert in_subgroup(identity(4, 2), 4)
    assert not in_subgroup(xi(2, 2, 1), 2)
    with pytest.raises(ValueError):
        in_subgroup(identity(3, 2), 2)


def test_cycle_type_and_full_group_conjugacy():
    g = three_cycle(3, 4, 1, 2, 3)
    assert cycle_type(g).pairs == ((0, 1, 1), (0, 3, 1))
    # xi_3^b (1,2,3) are pairwise non-conjugate for b = 0..r-1
    reps = [from_cycles(3, 3, [(1, 2, 3)], exps=(0, 0, b)) for b in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            assert not conjugate_in_full_group(reps[i], reps[j])
    # and the brute-force classes agree
    classes = conjugacy_classes(3, 1, 3)
    owners = [next(c for c in classes if rep in c.members) for rep in reps]
    assert len({id(c) for c in owners}) == 3


def test_cycle_type_conjugation_invariant():
    rng = random.Random(4)
    els = elements(2, 1, 4)
    for _ in range(25):
        g, h = rng.choice(els), rng.choice(els)
        assert cycle_type(g) == cycle_type(conjugate(g, h))
        assert conjugate_in_full_group(g, conjugate(g, h))


def test_centralizer_order_examples():
    g = three_cycle(3, 4, 1, 2, 3)
    assert centralizer_order_formula(g) == 27
    assert len(centralizer(g, 1)) == 27
    assert len(centralizer(identity(2, 3), 1)) == 48


def test_centralizer_formula_on_all_classes():
    for (r, p, n) in [(3, 1, 3), (2, 1, 4)]:
        for cls in conjugacy_classes(r, p, n):
            assert len(centralizer(cls.rep, 1)) == centralizer_order_formula(cls.rep)
            assert cls.size * centralizer_order_formula(cls.rep) == group_order(r, 1, n)


def test_enumeration_matches_order_formula():
    for (r, p, n) in [(1, 1, 4), (2, 1, 3), (2, 2, 4), (3, 3, 3), (4, 2, 3)]:
        assert len(elements(r, p, n)) == group_order(r, p, n)


def test_class_sizes_partition_the_group():
    classes = conjugacy_classes(2, 2, 4)
    assert sum(c.size for c in classes) == group_order(2, 2, 4) == 192


def test_class_reps_are_lex_minimal():
    for cls in conjugacy_classes(2, 1, 3):
        assert cls.rep == min(cls.members, key=GroupElement.sort_key)


def test_cycle_type_constant_on_classes():
    for cls in conjugacy_classes(3, 1, 3):
        assert all(cycle_type(m) == cycle_type(cls.rep) for m in cls.members)


def test_budget():
    with pytest.raises(BudgetExceededError):
        elements(10, 1, 6, budget=1000)


def test_json_round_trip():
    g = from_cycles(3, 4, [(1, 2, 3)], exps=(0, 0, 1, 0))
    assert GroupElement.from_json(g.to_json()) == g
    assert g.to_json() == {"r": 3, "n": 4, "exps": [0, 0, 1, 0], "perm": [2, 3, 1, 4]}


def test_permutation_action_factors_through_quotient():
    g = xi(3, 3, 1)
    assert matrix(g, P) == CycloMatrix.identity(3, 1)
    s = transposition(3, 3, 1, 2)
    assert matrix(multiply(g, s), P) == matrix(s, P)
