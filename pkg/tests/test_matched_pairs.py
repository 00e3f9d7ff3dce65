import itertools
import random

import numpy as np
import pytest

from lyalg import (
    GF,
    QQ,
    Inclusion,
    MatchedPair,
    StructureError,
    adjoint,
    bicrossed,
    canonical_matched_pair,
    check_consequences,
    check_factorization,
    check_ly_axioms,
    check_matched_pair,
    check_mp_equivalence,
    linalg,
    make_action_pair,
    zero_algebra,
)
from lyalg.matched_pairs import MP_CONDITIONS, zero_pair
from lyalg.deformation import rota_baxter0_pair, derivation_pair
from conftest import nonabelian2, sl2
from oracle import PairOps, ly_violations


def oracle_pair_ok(mp):
    """A candidate is a matched pair exactly when the displayed bicrossed brackets satisfy the axioms."""
    c, t = PairOps.of(mp).bicrossed_tensors()
    return not ly_violations(mp.F, c, t)


def test_exhaustive_one_dimensional_gf2():
    F = GF(2)
    z = zero_algebra(F, 1)
    n_ok = 0
    for bits in itertools.product(range(2), repeat=4):
        R, Mu, Psi, Nu = (np.array([b]).reshape(s) for b, s in zip(bits, [(1, 1, 1), (1, 1, 1, 1)] * 2))
        mp = MatchedPair(z, z, R, Mu, Psi, Nu)
        ok = check_matched_pair(mp, full=True).passed
        assert ok == oracle_pair_ok(mp)
        n_ok += ok
    assert 0 < n_ok < 16


def test_random_candidates_dims_2_1_gf2():
    F = GF(2)
    rng = np.random.default_rng(11)
    gs = [zero_algebra(F, 2), nonabelian2(F), nonabelian2(F, "zero")]
    h = zero_algebra(F, 1)
    seen = set()
    for _ in range(250):
        g = gs[rng.integers(len(gs))]
        keep = rng.random(4) < 0.6
        R = rng.integers(0, 2, (2, 1, 1)) * keep[0]
        Mu = rng.integers(0, 2, (2, 2, 1, 1)) * keep[1]
        Psi = rng.integers(0, 2, (1, 2, 2)) * keep[2]
        Nu = rng.integers(0, 2, (1, 1, 2, 2)) * keep[3]
        mp = MatchedPair(g, h, R, Mu, Psi, Nu)
        ok = check_matched_pair(mp, full=True).passed
        assert ok == oracle_pair_ok(mp)
        seen.add(ok)
    assert seen == {True, False}


@pytest.mark.parametrize("F", [QQ, GF(3)])
def test_bicrossed_matches_displayed_formula(F):
    for mp in (rota_baxter0_pair(adjoint(sl2(F))), derivation_pair(adjoint(nonabelian2(F))),
               zero_pair(sl2(F), nonabelian2(F)).validate()):
        E = bicrossed(mp)
        c, t = PairOps.of(mp).bicrossed_tensors()
        assert F.equal(E.c, c) and F.equal(E.t, t)
        assert check_ly_axioms(E)


def test_invalid_representation_raises_unless_full():
    F = QQ
    g = sl2(F)
    h = zero_algebra(F, 3)
    ad = adjoint(g)
    mp = MatchedPair(g, h, ad.R, F.zeros((3, 3, 3, 3)), F.zeros((3, 3, 3)), F.zeros((3, 3, 3, 3)))
    with pytest.raises(StructureError):
        check_matched_pair(mp)
    rep = check_matched_pair(mp, full=True)
    assert any(n.startswith("rho-mu:") for n in rep.failed_names())
    with pytest.raises(StructureError):
        bicrossed(mp)


def test_condition_names_and_symmetry():
    F = GF(3)
    mp = rota_baxter0_pair(adjoint(nonabelian2(F)))
    rep = check_matched_pair(mp)
    assert rep.checked == list(MP_CONDITIONS) and len(MP_CONDITIONS) == 18
    assert check_matched_pair(mp.swapped())
    assert check_consequences(mp) and check_consequences(mp.swapped())


def test_sl2_factorizes_but_not_strongly():
    F = QQ
    E = sl2(F)
    g = [F.array([1, 0, 0]), F.array([0, 1, 0])]  # span{h, e}
    h = [F.array([0, 0, 1])]  # span{f}
    assert check_factorization(E, g, h)
    assert not check_factorization(E, g, h, strong=True)
    with pytest.raises(StructureError):
        canonical_matched_pair(Inclusion(E, g, h))


def test_canonical_pair_of_bicrossed_recovers_the_pair():
    F = GF(3)
    mp = rota_baxter0_pair(adjoint(nonabelian2(F)))
    E = bicrossed(mp)
    eye = F.eye(4)
    mp2 = canonical_matched_pair(Inclusion(E, eye[:, :2], eye[:, 2:]))
    for a, b in ((mp.R, mp2.R), (mp.Mu, mp2.Mu), (mp.Psi, mp2.Psi), (mp.Nu, mp2.Nu)):
        assert F.equal(a, b)


def test_equivalence_by_conjugating_the_module():
    F = GF(3)
    g = zero_algebra(F, 1)
    V = zero_algebra(F, 2)
    R = F.array([[[1, 1], [0, 1]]])  # rho(e1) as a (source, target) array
    Mu = F.zeros((1, 1, 2, 2))
    mp = make_action_pair(g, V, R, Mu)
    v = F.array([[1, 1], [0, 2]])  # automorphism of V as a (target, source) matrix
    vinv = linalg.inverse(F, v)
    # rho'(x) = v rho(x) v^{-1}; stored argument-first, output-last
    Rm = F.normalize(v.dot(R[0].T).dot(vinv))
    mp2 = make_action_pair(g, V, F.array([Rm.T]), Mu)
    assert check_mp_equivalence(mp, mp2, F.eye(1), v)
    assert not check_mp_equivalence(mp, mp2, F.eye(1), F.eye(2))


def test_action_pair_rejects_non_action():
    F = QQ
    g = sl2(F)
    ad = adjoint(g)
    with pytest.raises(StructureError):
        make_action_pair(g, g, ad.R, ad.Mu)  # adjoint is not an action on the nonabelian sl2
