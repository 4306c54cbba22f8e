import random

import pytest

from codend.corpus import dend_corpus, perturb, zero_dendriform
from codend.dendcoalg import DendCoboundary, DendCochain, LabeledCoEnd, dend_multiplication, self_bicomodule
from codend.deform import (
    CocycleError,
    FormalIso,
    TruncDeformation,
    apply_equivalence,
    check_deformation,
    check_equivalence,
    deformation_defects,
    extend,
    infinitesimal,
    infinitesimal_deformation_from_cocycle,
    invert,
    obstruction,
    random_formal_iso,
    trivial_deformation,
)
from codend.linalg import compose, identity, zero_map
from codend.operadcore import dot

DEND = dend_corpus()
BASES = ["split-divided-3", "rbo-divided-3", "rbo-divided-2", "dual-trunc-poly-2", "split-grouplike-2-succ"]


def transformed(name, order, seed):
    D = DEND[name]
    Phi = random_formal_iso(D.dim, order, random.Random(seed))
    return Phi, apply_equivalence(Phi, trivial_deformation(D, order))


@pytest.mark.parametrize("name", sorted(DEND))
def test_trivial_deformation_passes(name):
    assert check_deformation(trivial_deformation(DEND[name], 2))


@pytest.mark.parametrize("name", BASES)
@pytest.mark.parametrize("order", [1, 2, 3])
def test_transformed_trivial_pipeline(name, order):
    Phi, D = transformed(name, order, seed=order)
    assert check_deformation(D)
    assert check_equivalence(Phi, trivial_deformation(D.base, order), D)
    x, is_cocycle = infinitesimal(D)
    assert is_cocycle
    delta = DendCoboundary(self_bicomodule(D.base))
    assert x == delta(DendCochain(1, [Phi.term(1, D.dim)]))
    ob, ob_cocycle = obstruction(D)
    assert ob_cocycle
    E = extend(D)
    assert E is not None and E.order == order + 1 and check_deformation(E)
    assert E.terms[:order] == D.terms


def test_inverse_is_a_two_sided_inverse():
    d, N = 3, 3
    Phi = random_formal_iso(d, N, random.Random(9))
    Psi = invert(Phi, d)
    for n in range(1, N + 1):
        left, right = zero_map(d, d), zero_map(d, d)
        for i in range(n + 1):
            left = left + compose(Phi.term(i, d), Psi.term(n - i, d))
            right = right + compose(Psi.term(i, d), Phi.term(n - i, d))
        assert left.is_zero() and right.is_zero()


def test_broken_term_is_reported_by_order():
    _, D = transformed("split-divided-3", 2, seed=5)
    t = D.terms[1]
    bad = TruncDeformation(D.base, 2, (D.terms[0], DendCochain(2, [perturb(t[1], seed=1), t[2]])))
    assert [n for n, _ in deformation_defects(bad)] == [2]
    with pytest.raises(ValueError, match="order 2"):
        obstruction(bad)


def test_infinitesimal_from_cocycle():
    D = DEND["rbo-divided-3"]
    z = dend_multiplication(D)  # delta_c(Delta) = 0
    assert check_deformation(infinitesimal_deformation_from_cocycle(D, z))
    rng = random.Random(2)
    with pytest.raises(CocycleError) as err:
        infinitesimal_deformation_from_cocycle(D, LabeledCoEnd(3).random_element(2, rng))
    assert err.value.labels


def test_nonzero_obstruction_class_blocks_extension():
    # on the zero structure delta_c = 0, so Ob = -z . z is a coboundary only if it vanishes
    C = zero_dendriform(2)
    rng = random.Random(0)
    op = LabeledCoEnd(2)
    z = op.random_element(2, rng)
    assert not dot(op, z, z).is_zero()
    D = infinitesimal_deformation_from_cocycle(C, z)
    ob, is_cocycle = obstruction(D)
    assert is_cocycle and not ob.is_zero()
    assert extend(D) is None


def test_order_mismatch_is_rejected():
    D = trivial_deformation(DEND["split-divided-3"], 2)
    with pytest.raises(ValueError):
        apply_equivalence(FormalIso(1, (identity(3),)), D)
