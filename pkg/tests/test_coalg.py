import pytest

from codend.coalg import (
    AssocBicomodule,
    AssocCoalgebra,
    CoEnd,
    CoHochCochain,
    CoHochCoboundary,
    bicomodule_defects,
    check_bicomodule,
    check_coassociative,
    cohoch_cohomology,
    cohoch_cohomology_dims,
    self_bicomodule,
    zero_bicomodule,
)
from codend.corpus import diagonal_bicomodule, direct_sum, divided_power, group_like, perturb, zero_coalgebra
from codend.linalg import DimensionError, identity
from codend.operadcore import check_operad_axioms, delta_pi, random_map

COALGEBRAS = [group_like(1), group_like(3), divided_power(2), divided_power(4), zero_coalgebra(2),
              direct_sum(group_like(1), divided_power(2))]


@pytest.mark.parametrize("C", COALGEBRAS)
def test_fixtures_are_coassociative(C):
    assert check_coassociative(C)
    assert check_bicomodule(self_bicomodule(C))


def test_perturbed_coproduct_is_detected():
    C = divided_power(3)
    assert not check_coassociative(AssocCoalgebra(3, perturb(C.delta, seed=1)))


def test_bicomodule_defects_name_the_broken_coaction():
    C = group_like(2)
    M = diagonal_bicomodule(C, 0, 1)
    assert check_bicomodule(M)
    bad = AssocBicomodule(M.dim, C, perturb(M.delta_l, seed=2), M.delta_r)
    failing = {k for k, v in bicomodule_defects(bad).items() if not v.is_zero()}
    assert "b1" in failing
    assert "b3" not in failing


def test_shape_is_validated():
    with pytest.raises(DimensionError):
        AssocCoalgebra(2, identity(2))


def test_group_like_scalar_coboundary_ranks_alternate():
    # delta^n on Hom(K, K^n) is multiplication by 1 - 1 + ... (n + 2 terms)
    table = cohoch_cohomology(self_bicomodule(group_like(1)), 4)
    assert table.ranks == [1, 0, 1, 0]
    assert table.h_dims == [0, 0, 0, 0]
    assert table.rank_nullity_ok()


@pytest.mark.parametrize("d", [2, 3, 4])
def test_divided_power_matches_truncated_polynomial_hochschild(d):
    # HH^n(k[x]/x^d, itself) has dimension d - 1 for n >= 1 in characteristic 0
    assert cohoch_cohomology_dims(self_bicomodule(divided_power(d)), 3) == [d - 1] * 3


def test_zero_coalgebra_has_full_cohomology():
    assert cohoch_cohomology_dims(zero_bicomodule(zero_coalgebra(2), 2), 3) == [2 * 2, 2 * 4, 2 * 8]


@pytest.mark.parametrize("C", COALGEBRAS)
def test_coboundary_squares_to_zero(C, rng):
    delta = CoHochCoboundary(self_bicomodule(C))
    for n in range(1, 4):
        for _ in range(5):
            f = CoHochCochain(n, random_map(C.dim, C.dim**n, rng))
            assert delta(delta(f)).is_zero()


@pytest.mark.parametrize("C", COALGEBRAS)
def test_coboundary_is_delta_pi_in_coend(C, rng):
    op = CoEnd(C.dim)
    pi = CoHochCochain(2, C.delta)
    delta = CoHochCoboundary(self_bicomodule(C))
    for n in range(1, 4):
        f = op.random_element(n, rng)
        assert delta(f) == delta_pi(op, pi, f)


def test_coend_operad_axioms():
    assert check_operad_axioms(CoEnd(2), max_arity=3, count=2, seed=3).ok
