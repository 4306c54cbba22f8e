import random

import pytest

from codend.coalg import self_bicomodule
from codend.corpus import dend_corpus, divided_power, integration_operator, perturb
from codend.dendcoalg import DendCoalgebra, dendriform_defects
from codend.homotopy import (
    TRUNCATED,
    AInfCoalgebra,
    DegreeError,
    DendInfCoalgebra,
    Diass,
    GradedMap,
    GradedSpace,
    RBOInf,
    check_ainf,
    check_D_squared,
    check_dendinf,
    check_dendinf1,
    check_rbo_inf,
    from_dendriform,
    induce_dendinf,
    pad_graded,
    random_graded_map,
    shift_from_dendinf1,
    shift_to_dendinf1,
    split,
)
from codend.homotopy.dendinf import total_matches
from codend.homotopy.fixtures import (
    divided_power_ainf,
    divided_power_rbo,
    interval_chains,
    split_dg,
    triangle_chains,
)
from codend.linalg import LinearMap, flat_index
from codend.rota import RelRBO, induced_dendriform

DEND = dend_corpus()


# graded spaces and maps

def test_graded_space_basis_order():
    V = GradedSpace([(0, 2), (1, 1)])
    assert V.dim == 3
    assert V.degrees == (0, 0, 1)
    assert V.offset(1) == 2
    assert V.shifted(-1).degrees == (-1, -1, 0)


def test_degree_is_validated():
    V = GradedSpace([(0, 1), (1, 1)])
    with pytest.raises(DegreeError):
        GradedMap(V, 1, 0, LinearMap.from_triplets(2, 2, [(0, 1, 1)]))
    GradedMap(V, 1, 1, LinearMap.from_triplets(2, 2, [(0, 1, 1)]))


def test_koszul_sign_of_padding():
    # id (x) f with |f| = 1 on x (x) y picks up (-1)^{|x|}
    V = GradedSpace([(0, 1), (1, 1)])
    f = GradedMap(V, 1, 1, LinearMap.from_triplets(2, 2, [(0, 1, 1)]))
    p = pad_graded(f, 1, 0)
    assert p.image(flat_index((0, 0), 2)) == {flat_index((0, 1), 2): 1}
    assert p.image(flat_index((1, 0), 2)) == {flat_index((1, 1), 2): -1}


def test_random_graded_maps_respect_degree():
    V = GradedSpace([(0, 2), (1, 1), (2, 1)])
    rng = random.Random(1)
    for k, s in ((1, -1), (2, 0), (3, 1)):
        random_graded_map(V, k, s, rng).check_degree()


# A-infinity

@pytest.mark.parametrize("C", [interval_chains(), triangle_chains(), divided_power_ainf()],
                         ids=["interval", "triangle", "divided-power"])
def test_fixtures_are_ainf(C):
    assert check_ainf(C, 4).ok


def test_truncation_is_explicit():
    report = check_ainf(interval_chains(max_arity=3), 5)
    assert report.verdicts()[(4, None)] == TRUNCATED
    assert report.verdicts()[(3, None)] == "pass"
    assert report.checked == 3


def test_random_structure_fails_and_names_arity():
    V = GradedSpace([(0, 2), (1, 1)])
    rng = random.Random(3)
    ops = {k: random_graded_map(V, k, k - 2, rng, density=0.8) for k in (1, 2, 3)}
    report = check_ainf(AInfCoalgebra(V, ops, 3), 3)
    assert not report.ok
    assert all(label is None for _, label in report.failures)


def test_rota_baxter_on_ainf():
    C, R = divided_power_ainf(), divided_power_rbo()
    assert check_rbo_inf(C, R).ok
    bad = RBOInf(GradedMap(R.R.space, 1, 0, perturb(R.R.map, seed=2)))
    assert not check_rbo_inf(C, bad).ok


# Dend-infinity

@pytest.mark.parametrize("name", sorted(DEND))
def test_degree_zero_embedding_reduces_to_dendriform_identities(name):
    D = DEND[name]
    for seed in (None, 0, 1):
        B = D if seed is None else DendCoalgebra(D.dim, D.prec, perturb(D.succ, seed))
        failing_c = sorted(int(k[1]) for k, v in dendriform_defects(B).items() if not v.is_zero())
        report = check_dendinf(from_dendriform(B), 4)
        assert sorted(lab for n, lab in report.failures) == failing_c
        assert all(n == 3 for n, _ in report.failures)


@pytest.mark.parametrize("name", sorted(DEND))
def test_split_of_embedded_structure_is_total(name):
    D = DEND[name]
    S = split(from_dendriform(D))
    assert total_matches(D, S)
    assert check_ainf(S, 4).ok


@pytest.mark.parametrize("side", [1, 2])
def test_split_chain_complexes(side):
    D = split_dg(triangle_chains(), side)
    assert check_dendinf(D, 4).ok
    assert check_ainf(split(D), 4).ok


def test_induced_structure_from_rota_baxter():
    C, R = divided_power_ainf(), divided_power_rbo()
    D = induce_dendinf(C, R)
    assert check_dendinf(D, 4).ok
    assert check_ainf(split(D), 4).ok
    ref = induced_dendriform(RelRBO(divided_power(4), self_bicomodule(divided_power(4)), integration_operator(4)))
    assert (D.op(2, 1).map, D.op(2, 2).map) == (ref.prec, ref.succ)


def _structures():
    out = {
        "split-dg-triangle": split_dg(triangle_chains()),
        "split-dg-interval-2": split_dg(interval_chains(), 2),
        "induced-divided": induce_dendinf(divided_power_ainf(), divided_power_rbo()),
        "embedded-rbo-3": from_dendriform(DEND["rbo-divided-3"]),
    }
    V = GradedSpace([(0, 1), (1, 1)])
    rng = random.Random(11)
    ops = {(k, r): random_graded_map(V, k, k - 2, rng, density=0.6) for k in (1, 2, 3) for r in range(1, k + 1)}
    out["random"] = DendInfCoalgebra(V, ops, 3)
    return out


STRUCTURES = _structures()


@pytest.mark.parametrize("name", sorted(STRUCTURES))
def test_shift_preserves_verdicts(name):
    D = STRUCTURES[name]
    V = shift_to_dendinf1(D)
    assert V.shifted and all(op.shift == -1 for op in V.ops.values())
    assert check_dendinf1(V, 4).verdicts() == check_dendinf(D, 4).verdicts()
    back = shift_from_dendinf1(V)
    assert back.ops.keys() == D.ops.keys()
    assert all(back.ops[k] == D.ops[k] for k in D.ops)


@pytest.mark.parametrize("name", sorted(STRUCTURES))
def test_D_squared_agrees_with_direct_check(name):
    V = shift_to_dendinf1(STRUCTURES[name])
    dd = check_D_squared(V, 4)
    assert dd.lemma_ok, dd.mismatches[:3]
    direct = check_dendinf1(V, 4).verdicts()
    for key, status in dd.identities.verdicts().items():
        if status != TRUNCATED:
            assert status == direct[key]


def test_random_structure_is_rejected():
    assert not check_dendinf(STRUCTURES["random"], 3).ok


def test_D_squared_truncation_entries():
    V = shift_to_dendinf1(STRUCTURES["split-dg-triangle"])
    dd = check_D_squared(V, 2, n_max=4)
    assert dd.identities.verdicts()[(3, 1)] == TRUNCATED
    assert dd.identities.verdicts()[(2, 2)] == "pass"


def test_diass_products():
    alg = Diass(GradedSpace.concentrated(3), 4)
    u, v = alg.generator(0), alg.generator(1)
    assert alg.left(u, v) == {((), 0, (1,)): 1}
    assert alg.right(u, v) == {((0,), 1, ()): 1}
    # diassociative: (u -| v) -| w = u -| (v |- w)
    w = alg.generator(2)
    assert alg.left(alg.left(u, v), w) == alg.left(u, alg.right(v, w))
    assert Diass.pi(2, (4, 5, 6)) == ((4,), 5, (6,))
