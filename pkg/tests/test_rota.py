from fractions import Fraction

import pytest

from codend.coalg import CoHochCochain, CoHochCoboundary, check_bicomodule, check_coassociative, self_bicomodule
from codend.corpus import diagonal_bicomodule, divided_power, group_like, integration_operator, perturb, zero_dendriform
from codend.dendcoalg import check_dendriform
from codend.linalg import LinearMap, zero_map
from codend.operadcore import random_map
from codend.rota import (
    RelRBO,
    check_maurer_cartan,
    check_rbo,
    derived_bracket,
    explicit_derived_bracket,
    induced_bicomodule_on_C,
    induced_coalgebra_on_M,
    induced_dendriform,
    maurer_cartan_element,
    rbo_coboundary,
    rbo_cohomology_dims,
    theta_bracket_defect,
)


def divided(d, scale=1):
    C = divided_power(d)
    return RelRBO(C, self_bicomodule(C), integration_operator(d, scale))


def diagonal(alpha, beta):
    # over group-like(2) with delta^l = e_0 (x) -, delta^r = - (x) e_1 the identity reads alpha * beta = 0
    C = group_like(2)
    return RelRBO(C, diagonal_bicomodule(C, 0, 1), LinearMap.from_dense([[alpha, beta]]))


def _fixtures():
    out = {
        "divided-2": divided(2),
        "divided-3": divided(3),
        "divided-4": divided(4),
        "divided-3-scaled": divided(3, Fraction(-2, 3)),
        "divided-3-zero": RelRBO(divided_power(3), self_bicomodule(divided_power(3)), zero_map(3, 3)),
        "diagonal-1-0": diagonal(1, 0),
        "diagonal-0-2": diagonal(0, 2),
        "diagonal-1-1": diagonal(1, 1),
    }
    for name in ("divided-3", "divided-4"):
        R = out[name]
        out[name + "-mutated"] = RelRBO(R.base, R.comodule, perturb(R.T, seed=3))
    return out


FIXTURES = _fixtures()
VALID = [k for k, R in FIXTURES.items() if check_rbo(R)]


def test_expected_fixtures_are_operators():
    assert set(VALID) == {"divided-2", "divided-3", "divided-4", "divided-3-scaled", "divided-3-zero",
                          "diagonal-1-0", "diagonal-0-2"}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_derived_bracket_maurer_cartan_iff_operator(name):
    R = FIXTURES[name]
    T = CoHochCochain(1, R.T)
    assert derived_bracket(R, T, T).is_zero() == check_rbo(R)


@pytest.mark.parametrize("name", VALID)
def test_induced_structures(name):
    R = FIXTURES[name]
    assert check_dendriform(induced_dendriform(R))
    assert check_coassociative(induced_coalgebra_on_M(R))
    assert check_bicomodule(induced_bicomodule_on_C(R))


def test_induce_refuses_non_operators():
    with pytest.raises(ValueError):
        induced_dendriform(FIXTURES["divided-4-mutated"])


def test_zero_operator_induces_zero_structure():
    D = induced_dendriform(FIXTURES["divided-3-zero"])
    Z = zero_dendriform(3)
    assert (D.prec, D.succ) == (Z.prec, Z.succ)


def test_maurer_cartan_element_of_a_bicomodule():
    for C in (divided_power(3), group_like(2)):
        assert check_maurer_cartan(C, self_bicomodule(C))
    C = group_like(2)
    assert check_maurer_cartan(C, diagonal_bicomodule(C, 0, 1))
    assert maurer_cartan_element(C, diagonal_bicomodule(C, 0, 1)).arity == 2


@pytest.mark.parametrize("name", VALID)
def test_derived_bracket_with_T_is_signed_cohochschild(name, rng):
    R = FIXTURES[name]
    T = CoHochCochain(1, R.T)
    for n in (1, 2, 3):
        f = CoHochCochain(n, random_map(R.d, R.m**n, rng))
        expected = rbo_coboundary(R, f)
        assert derived_bracket(R, T, f) == (expected if n % 2 == 0 else -expected)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_explicit_formula_matches_ambient_bracket(name, rng):
    R = FIXTURES[name]
    for n in (1, 2, 3):
        P = CoHochCochain(1, random_map(R.d, R.m, rng))
        Q = CoHochCochain(n, random_map(R.d, R.m**n, rng))
        assert explicit_derived_bracket(R, P, Q) == derived_bracket(R, P, Q)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_theta_intertwines_brackets(name, rng):
    R = FIXTURES[name]
    for n in (1, 2):
        P = CoHochCochain(1, random_map(R.d, R.m, rng))
        Q = CoHochCochain(n, random_map(R.d, R.m**n, rng))
        assert theta_bracket_defect(R, P, Q).is_zero()


@pytest.mark.parametrize("name", VALID)
def test_rbo_coboundary_squares_to_zero(name, rng):
    R = FIXTURES[name]
    delta = CoHochCoboundary(induced_bicomodule_on_C(R))
    for n in (1, 2, 3):
        f = CoHochCochain(n, random_map(R.d, R.m**n, rng))
        assert delta(delta(f)).is_zero()


def test_zero_operator_cohomology_is_all_cochains():
    # T = 0 makes d_T vanish: dim H^n = d * m^n
    assert rbo_cohomology_dims(FIXTURES["divided-3-zero"], 3) == [9, 27, 81]


def test_integration_operator_cohomology():
    assert rbo_cohomology_dims(FIXTURES["divided-4"], 3) == [4, 4, 4]
