import pytest

from monact.act import (
    ActHom,
    act_hom,
    compose,
    identity_hom,
    image_subact,
    minimal_generating_set,
    power,
    quotient_by_congruence,
    rees_quotient,
    regular_act,
    subact,
    subact_as_act,
    subact_generated,
    validate_act,
)
from monact.congruence import Congruence, kernel_congruence
from monact.endo import homomorphisms
from monact.errors import (
    AssociativityAxiomFails,
    EntryOutOfRange,
    IdentityAxiomFails,
    NotACongruence,
    NotEquivariant,
    SourceTargetMismatch,
)
from monact.harness import acts_isomorphic, enumerate_acts, enumerate_monoids


def test_validate_act_accepts_a2(m2, a2):
    # oracle: exhaustive axiom check over all (a, s, t) triples
    act = a2.action
    assert all(act[a][0] == a for a in range(2))
    assert all(
        act[a][m2.table[s][t]] == act[act[a][s]][t]
        for a in range(2)
        for s in range(2)
        for t in range(2)
    )


def test_validate_act_rejects_swap(m2):
    # x*e = y, y*e = x breaks a*(ee) = (a*e)*e
    with pytest.raises(AssociativityAxiomFails):
        validate_act(m2, 2, [[0, 1], [1, 0]])


def test_validate_act_identity_axiom(m2):
    with pytest.raises(IdentityAxiomFails):
        validate_act(m2, 2, [[1, 1], [1, 1]])


def test_validate_act_entry_range(m2):
    with pytest.raises(EntryOutOfRange):
        validate_act(m2, 2, [[0, 2], [1, 1]])


def test_trivial_monoid_allows_any_carrier(trivial):
    A = validate_act(trivial, 3, [[0], [1], [2]])
    assert A.size == 3


def test_regular_act_is_table_copy(z4, trivial):
    assert regular_act(trivial).size == 1
    R = regular_act(z4)
    assert R.action == z4.table
    idx = z4.relabeling
    assert R.act(idx[2], idx[2]) == idx[0]


def test_compose_and_power(a2, reg_z4, z4):
    ident = identity_hom(a2)
    assert power(ident, 7).mapping == ident.mapping
    c_y = ActHom(a2, a2, (1, 1))
    assert power(c_y, 2).mapping == (1, 1)
    idx = z4.relabeling
    lam2 = ActHom(reg_z4, reg_z4, tuple(z4.table[idx[2]]))
    lam0 = ActHom(reg_z4, reg_z4, tuple(z4.table[idx[0]]))
    # oracle: pointwise composition table for lam2 o lam2
    expected = tuple(lam2.mapping[v] for v in lam2.mapping)
    assert power(lam2, 2).mapping == expected == lam0.mapping


def test_compose_mismatch(a2, singleton):
    f = ActHom(a2, a2, (0, 1))
    g = ActHom(singleton, singleton, (0,))
    with pytest.raises(SourceTargetMismatch):
        compose(g, f)


def test_act_hom_validates_equivariance(a2):
    with pytest.raises(NotEquivariant):
        act_hom(a2, a2, (0, 0))  # would need x*e = x
    ok = act_hom(a2, a2, (1, 1))
    assert ok.mapping == (1, 1)


def test_image_subact(a2, reg_z4, z4):
    assert image_subact(identity_hom(a2)).members == (0, 1)
    assert image_subact(ActHom(a2, a2, (1, 1))).members == (1,)
    idx = z4.relabeling
    lam2 = ActHom(reg_z4, reg_z4, tuple(z4.table[idx[2]]))
    assert image_subact(lam2).members == tuple(sorted({idx[0], idx[2]}))


def test_image_subact_closure_invariant():
    for M in enumerate_monoids(2):
        for A in enumerate_acts(M, 3):
            for f in homomorphisms(A, A):
                B = image_subact(f)  # constructor raises if not closed
                assert set(B.members) == set(f.mapping)


def test_subact_generated(a2, reg_z4, z4):
    assert subact_generated(a2, {0}).members == (0, 1)
    idx = z4.relabeling
    got = subact_generated(reg_z4, {idx[2]}).members
    assert got == tuple(sorted({idx[0], idx[2]}))


def test_minimal_generating_set(a2):
    assert minimal_generating_set(a2) == (0,)
    # oracle: exhaustive over subsets by ascending size
    covered = set(a2.action[0])
    assert covered == {0, 1}


def test_minimal_generating_set_lexicographic(trivial):
    A = validate_act(trivial, 3, [[0], [1], [2]])
    assert minimal_generating_set(A) == (0, 1, 2)


def test_rees_quotient_a2(a2):
    B = subact(a2, [1])
    Q, pi = rees_quotient(a2, B)
    assert Q.size == 2
    # collapsed class takes index 0; x keeps moving into it under e
    assert pi.mapping == (1, 0)
    assert Q.action == ((0, 0), (1, 0))


def test_rees_quotient_whole_act(a2):
    Q, pi = rees_quotient(a2, subact(a2, [0, 1]))
    assert Q.size == 1 and set(pi.mapping) == {0}


def test_rees_quotient_regular_z4(reg_z4, z4):
    idx = z4.relabeling
    B = subact(reg_z4, [idx[0], idx[2]])
    Q, pi = rees_quotient(reg_z4, B)
    assert Q.size == 3
    assert len(set(pi.mapping)) == 3


def test_quotient_by_diagonal_is_identity(a2):
    delta = Congruence(a2, ((0,), (1,)))
    Q, pi = quotient_by_congruence(a2, delta)
    assert Q.action == a2.action and pi.mapping == (0, 1)


def test_quotient_by_universal_is_singleton(a2):
    Q, pi = quotient_by_congruence(a2, Congruence(a2, ((0, 1),)))
    assert Q.size == 1


def test_quotient_by_kernel_of_translation(reg_z4, z4):
    idx = z4.relabeling
    lam2 = ActHom(reg_z4, reg_z4, tuple(z4.table[idx[2]]))
    ker = kernel_congruence(lam2)
    Q, pi = quotient_by_congruence(reg_z4, ker)
    assert Q.size == 2
    assert kernel_congruence(pi) == ker


def test_quotient_rejects_incompatible_partition(reg_z4, z4):
    idx = z4.relabeling
    bad = Congruence(reg_z4, tuple(sorted(((idx[0], idx[1]), (idx[2], idx[3])))))
    with pytest.raises(NotACongruence):
        quotient_by_congruence(reg_z4, bad)


def test_canonical_epi_round_trip():
    from monact.congruence import enumerate_congruences

    for M in enumerate_monoids(2):
        for A in enumerate_acts(M, 3):
            for rho in enumerate_congruences(A):
                Q, pi = quotient_by_congruence(A, rho)
                assert pi.is_surjective()
                act_hom(A, Q, pi.mapping)  # equivariance holds
                assert kernel_congruence(pi) == rho


def test_homomorphism_theorem_small_instances():
    # A/ker(f) is isomorphic to the act induced on im(f)
    for M in enumerate_monoids(2):
        for A in enumerate_acts(M, 4):
            for f in homomorphisms(A, A):
                Q, _ = quotient_by_congruence(A, kernel_congruence(f))
                image_act, _ = subact_as_act(image_subact(f))
                assert acts_isomorphic(Q, image_act)


def test_power_additivity(a2):
    for f in homomorphisms(a2, a2):
        for a in range(1, 4):
            for b in range(1, 4):
                assert power(f, a + b).mapping == compose(power(f, a), power(f, b)).mapping


def test_subact_as_act_relabels(reg_z4, z4):
    idx = z4.relabeling
    B = subact(reg_z4, [idx[0], idx[2]])
    sub, embedding = subact_as_act(B)
    assert sub.size == 2
    assert embedding == B.members
    for i, b in enumerate(embedding):
        for s in range(z4.size):
            assert embedding[sub.action[i][s]] == reg_z4.action[b][s]
