import pytest

from codend.coalg import CoHochCoboundary, check_coassociative
from codend.corpus import (
    bicomodule_corpus,
    dend_corpus,
    divided_power,
    group_like,
    perturb,
    zero_dendriform,
)
from codend.dendcoalg import (
    DendBicomodule,
    DendCoalgebra,
    DendCoboundary,
    DendCochain,
    LabeledCoEnd,
    S_map,
    bicomodule_defects,
    check_bicomodule,
    check_dendriform,
    dend_cohomology,
    dend_cohomology_dims,
    dend_multiplication,
    dendriform_defects,
    self_bicomodule,
    semidirect,
    split_dendriform,
    total,
    total_bicomodule,
    zero_bicomodule,
)
from codend.linalg import identity
from codend.operadcore import delta_pi, random_map

from _oracles import dense_cohomology

DEND = dend_corpus()
BIC = bicomodule_corpus()


def _random_cochain(M, n, rng):
    return DendCochain(n, [random_map(M.dim, M.base.dim**n, rng) for _ in range(n)])


@pytest.mark.parametrize("name", sorted(DEND))
def test_corpus_is_dendriform(name):
    D = DEND[name]
    assert check_dendriform(D)
    assert check_coassociative(total(D))


@pytest.mark.parametrize("name", sorted(BIC))
def test_corpus_bicomodules(name):
    assert check_bicomodule(BIC[name])


def test_mutated_coproduct_names_failing_identities():
    D = DEND["split-divided-3"]
    bad = DendCoalgebra(3, D.prec, perturb(D.succ, seed=4))
    failing = sorted(k for k, v in dendriform_defects(bad).items() if not v.is_zero())
    assert failing and set(failing) <= {"c1", "c2", "c3"}
    assert not check_dendriform(bad)


def test_mutated_coaction_names_failing_identities():
    M = BIC["split-diagonal-2-1"]
    bad = DendBicomodule(M.dim, M.base, perturb(M.l_prec, seed=1), M.l_succ, M.r_prec, M.r_succ)
    failing = {k for k, v in bicomodule_defects(bad).items() if not v.is_zero()}
    assert failing and failing <= {f"r{i}" for i in range(1, 10)}


@pytest.mark.parametrize("name", sorted(BIC))
def test_coboundary_squares_to_zero(name, rng):
    M = BIC[name]
    delta = DendCoboundary(M)
    for n in range(1, 4):
        for _ in range(4):
            f = _random_cochain(M, n, rng)
            assert delta(delta(f)).is_zero()


@pytest.mark.parametrize("name", sorted(DEND))
def test_coboundary_is_delta_pi_for_self_coefficients(name, rng):
    D = DEND[name]
    op, pi = LabeledCoEnd(D.dim), dend_multiplication(D)
    delta = DendCoboundary(self_bicomodule(D))
    for n in (1, 2, 3):
        f = op.random_element(n, rng)
        assert delta(f) == delta_pi(op, pi, f)


@pytest.mark.parametrize("name", sorted(DEND))
def test_identity_cobounds_to_the_structure(name):
    D = DEND[name]
    delta = DendCoboundary(self_bicomodule(D))
    assert delta(DendCochain(1, [identity(D.dim)])) == dend_multiplication(D)
    assert delta(dend_multiplication(D)).is_zero()


@pytest.mark.parametrize("name", sorted(BIC))
def test_S_is_a_chain_map(name, rng):
    M = BIC[name]
    dend, hoch = DendCoboundary(M), CoHochCoboundary(total_bicomodule(M))
    for n in (1, 2, 3):
        for _ in range(4):
            s = _random_cochain(M, n, rng)
            assert hoch(S_map(s)) == S_map(dend(s))


def test_zero_structure_cohomology_is_all_cochains():
    for d in (1, 2):
        assert dend_cohomology_dims(self_bicomodule(zero_dendriform(d)), 3) == [n * d ** (n + 1) for n in (1, 2, 3)]


@pytest.mark.parametrize("name", ["split-grouplike-1", "split-grouplike-2-succ", "split-divided-2-succ",
                                  "rbo-divided-2", "semidirect-grouplike-1"])
def test_dimensions_match_dense_oracle(name):
    M = self_bicomodule(DEND[name])
    delta = DendCoboundary(M)
    d, m = M.base.dim, M.dim
    oracle = dense_cohomology(
        delta, lambda n, j: DendCochain.from_vector(n, n, m, d**n, {j: 1}), delta.cochain_dim, 3)
    table = dend_cohomology(M, 3)
    assert table.h_dims == oracle
    assert table.rank_nullity_ok()


def test_split_group_like_has_no_cohomology():
    assert dend_cohomology_dims(self_bicomodule(split_dendriform(group_like(1))), 3) == [0, 0, 0]


def test_semidirect_product_is_dendriform():
    for name in ("split-diagonal-2-1", "zero-coaction-divided-3", "split-divided-3"):
        M = BIC[name]
        E = semidirect(M.base, M)
        assert E.dim == M.base.dim + M.dim
        assert check_dendriform(E)


def test_semidirect_rejects_invalid_bicomodules():
    C = split_dendriform(divided_power(2))
    M = zero_bicomodule(C, 1)
    bad = DendBicomodule(1, C, perturb(M.l_prec, seed=0), M.l_succ, M.r_prec, M.r_succ)
    with pytest.raises(ValueError, match="r"):
        semidirect(C, bad)
