import itertools

import numpy as np
import pytest

from lyalg import GF, QQ, LieTripleSystem, LtsMatchedPair, StructureError, adjoint, check_lts
from lyalg import check_lts_deformation_map, check_lts_matched_pair
from lyalg.lts import (
    LTS_MP_CONDITIONS,
    lts_bicrossed,
    lts_classify_complements,
    lts_enumerate_deformation_maps,
    lts_graph_is_subsystem,
    lts_induced_nu,
    lts_induced_representation,
    lts_induced_system,
    check_lts_representation,
)
from conftest import all_maps
from oracle import LtsPairOps, PairOps, lts_ok


def random_triple(F, rng, n, density=0.5):
    t = np.zeros((n, n, n, n), dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        for k in range(n):
            t[i, j, k] = rng.integers(0, F.p, n) * (rng.random(n) < density)
            t[j, i, k] = -t[i, j, k]
    return F.normalize(t)


def small_lts(F):
    """[[e1, e2, e1]] = e2 on a plane."""
    t = np.zeros((2, 2, 2, 2), dtype=np.int64)
    t[0, 1, 0, 1], t[1, 0, 0, 1] = 1, -1
    return LieTripleSystem(F, F.array(t)).validate()


def rb0_pair(F):
    s = small_lts(F)
    z = LieTripleSystem(F, F.zeros((2, 2, 2, 2)))
    return LtsMatchedPair(s, z, adjoint(s.as_ly()).Mu, F.zeros((2, 2, 2, 2))).validate()


def violating_pair(F):
    g = LieTripleSystem(F, F.zeros((1, 1, 1, 1)))
    th = np.zeros((2, 2, 2, 2), dtype=np.int64)
    th[0, 1] = [[2, 2], [1, 1]]
    th[1, 0] = -th[0, 1]
    Mu = np.zeros((1, 1, 2, 2), dtype=np.int64)
    Mu[0, 0] = [[1, 1], [0, 0]]
    return g, LieTripleSystem(F, F.array(th)), F.array(Mu), F.zeros((2, 2, 1, 1))


@pytest.mark.parametrize("p,n", [(3, 2), (2, 3), (5, 2)])
def test_lts_axioms_against_oracle(p, n):
    F = GF(p)
    rng = np.random.default_rng(p + n)
    seen = set()
    for _ in range(60):
        t = random_triple(F, rng, n, density=0.3)
        ok = check_lts(LieTripleSystem(F, t)).passed
        assert ok == lts_ok(F, t)
        seen.add(ok)
    assert True in seen


def test_small_lts_is_an_ly_algebra_with_zero_bracket():
    for F in (QQ, GF(3)):
        s = small_lts(F)
        A = s.as_ly()
        assert F.is_zero(A.c)
        assert check_lts(s)


def test_rb0_pair_deformation_maps_against_oracle():
    F = GF(3)
    pair = rb0_pair(F)
    ops = LtsPairOps(F, pair.g.t, pair.h.t, pair.Mu, pair.Nu)
    assert ops.pair_ok()
    expected = [r for r in all_maps(F, 2, 2) if ops.defmap_ok(r)]
    assert len(expected) == 21
    for r in all_maps(F, 2, 2):
        assert check_lts_deformation_map(pair, r).passed == ops.defmap_ok(r)
        assert lts_graph_is_subsystem(pair, r) == ops.defmap_ok(r)
    got = [d.r for d in lts_enumerate_deformation_maps(pair)]
    assert len(got) == 21 and all(F.equal(a, b) for a, b in zip(got, expected))


def test_bicrossed_triple_against_oracle():
    F = GF(3)
    pair = rb0_pair(F)
    ops = LtsPairOps(F, pair.g.t, pair.h.t, pair.Mu, pair.Nu)
    E = lts_bicrossed(pair)
    assert F.equal(E.t, ops.bicrossed())
    assert check_lts(E)


def test_violating_pair_names_the_failing_condition():
    F = GF(3)
    g, h, Mu, Nu = violating_pair(F)
    assert check_lts(g) and check_lts(h)
    ops = LtsPairOps(F, g.t, h.t, Mu, Nu)
    conds = ops.conditions()
    rep = check_lts_matched_pair(g, h, Mu, Nu)
    for k, name in enumerate(LTS_MP_CONDITIONS):
        oracle_ok = all(F.is_zero(F.normalize(v)) for v in conds[k])
        assert (rep.get(name) is None) == oracle_ok
    assert "mu-on-ternary" in rep.failed_names()
    assert rep.get("mu-on-ternary").where == (0, 0, 0, 1, 0)
    with pytest.raises(StructureError):
        LtsMatchedPair(g, h, Mu, Nu).validate()


def test_random_lts_pairs_against_oracle():
    F = GF(3)
    rng = np.random.default_rng(9)
    g = LieTripleSystem(F, F.zeros((1, 1, 1, 1)))
    hs = [small_lts(F), LieTripleSystem(F, F.zeros((2, 2, 2, 2)))]
    seen = set()
    for _ in range(80):
        h = hs[rng.integers(2)]
        Mu = F.array(rng.integers(0, 3, (1, 1, 2, 2)) * (rng.random((1, 1, 2, 2)) < 0.4))
        Nu = F.array(rng.integers(0, 3, (2, 2, 1, 1)) * (rng.random((2, 2, 1, 1)) < 0.4))
        ok = check_lts_matched_pair(g, h, Mu, Nu).passed
        assert ok == LtsPairOps(F, g.t, h.t, Mu, Nu).pair_ok()
        seen.add(ok)
    assert seen == {True, False}


def test_induced_structures_match_the_ly_formulas():
    F = GF(3)
    pair = rb0_pair(F)
    ops = PairOps.of(pair.as_ly())
    for d in lts_enumerate_deformation_maps(pair):
        ch, th, Psi, Nu, _ = ops.induced(d.r)
        hr = lts_induced_system(pair, d.r)
        assert F.is_zero(ch) and F.is_zero(Psi)
        assert F.equal(hr.t, th) and F.equal(lts_induced_nu(pair, d.r), Nu)
        assert check_lts(hr)
        assert check_lts_representation(lts_induced_representation(pair, d.r))


def test_complements_of_the_bicrossed_system():
    F = GF(3)
    pair = rb0_pair(F)
    E = lts_bicrossed(pair)
    census = lts_classify_complements(E, F.eye(4)[:, :2], F.eye(4)[:, 2:])
    assert len(census.maps) == 21
    assert sum(len(c) for c in census.classes) == 21
