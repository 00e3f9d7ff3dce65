import itertools
import math

import numpy as np
import pytest

from lyalg import (
    GF,
    QQ,
    CharacteristicError,
    MatchedPair,
    VData,
    adjoint,
    bicrossed,
    check_deformation_map,
    coboundary,
    defmap_cohomology_dims,
    derived_brackets,
    enumerate_deformation_maps,
    mc_check_pi,
    mc_equation,
    twist,
    twisted_complex_dims,
    zero_algebra,
)
from lyalg.algebra import LieYamagutiAlgebra
from lyalg.cohomology import cochain_dim, unflatten
from lyalg.deformation import derivation_pair, rota_baxter0_pair
from lyalg.linfty import CochainAlgebra, delta_pi, koszul_sign, linfty_identity, perm_sign, shuffles
from conftest import all_maps, heisenberg, lie_table, nonabelian2, sl2
from oracle import PairOps, ly_violations


def test_shuffles_are_counted_and_signed():
    for p, q in [(0, 3), (1, 1), (2, 1), (2, 2), (1, 3)]:
        sh = list(shuffles(p, q))
        assert len(sh) == math.comb(p + q, p)
        for S, T, s in sh:
            assert list(S) == sorted(S) and list(T) == sorted(T)
            assert s == perm_sign(S + T)
    assert perm_sign((1, 0, 2)) == -1 and perm_sign((2, 0, 1)) == 1


def test_koszul_sign_only_counts_odd_swaps():
    assert koszul_sign((1, 0), [1, 1]) == -1
    assert koszul_sign((1, 0), [0, 1]) == 1
    assert koszul_sign((2, 1, 0), [1, 1, 1]) == -1
    assert koszul_sign((2, 1, 0), [1, 2, 1]) == -1
    assert koszul_sign((2, 1, 0), [2, 2, 1]) == 1


def random_ly_candidate(F, rng, n):
    c = np.zeros((n, n, n), dtype=np.int64)
    t = np.zeros((n, n, n, n), dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        c[i, j] = rng.integers(0, F.p, n)
        c[j, i] = -c[i, j]
        for k in range(n):
            t[i, j, k] = rng.integers(0, F.p, n) * (rng.random() < 0.4)
            t[j, i, k] = -t[i, j, k]
    return F.normalize(c), F.normalize(t)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_pi_squares_to_zero_exactly_for_ly_algebras_in_dimension_two(p):
    F = GF(p)
    rng = np.random.default_rng(p)
    seen = set()
    for _ in range(150):
        c, t = random_ly_candidate(F, rng, 2)
        ok = not ly_violations(F, c, t)
        assert mc_check_pi(F, c, t) == ok
        seen.add(ok)
    assert seen == {True, False}


@pytest.mark.parametrize("p", [2, 3])
def test_pi_square_encodes_the_two_derivation_identities(p):
    # the cyclic identities are not seen by pi ⋄ pi; they vanish trivially in dimension 2
    F = GF(p)
    rng = np.random.default_rng(100 + p)
    for _ in range(150):
        c, t = random_ly_candidate(F, rng, 3)
        bad = ly_violations(F, c, t)
        assert mc_check_pi(F, c, t) == ("ternary-on-binary" not in bad and "ternary-on-ternary" not in bad)
        if not bad:
            assert mc_check_pi(F, c, t)


def test_dimension_three_counterexample():
    F = GF(2)
    c = lie_table(F, 3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (0, 2): [1, 0, 0]})
    t = F.zeros((3, 3, 3, 3))
    assert set(ly_violations(F, c, t)) == {"cyclic"}
    G = CochainAlgebra(F, 3)
    pi = G.pi(c, t)
    assert G.is_zero(G.bracket(pi, pi))  # [pi, pi] = 2 pi ⋄ pi vanishes in characteristic 2
    assert mc_check_pi(F, c, t)
    # over Q the same table still fails only the cyclic identity and still squares to zero
    cq = lie_table(QQ, 3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (0, 2): [1, 0, 0]})
    assert set(ly_violations(QQ, cq, QQ.zeros((3, 3, 3, 3)))) == {"cyclic"}
    assert mc_check_pi(QQ, cq, QQ.zeros((3, 3, 3, 3)))


def test_known_algebras_satisfy_mc():
    for F in (QQ, GF(3)):
        for A in (sl2(F), heisenberg(F), nonabelian2(F), sl2(F, "zero")):
            assert mc_check_pi(A)
        assert mc_check_pi(bicrossed(rota_baxter0_pair(adjoint(nonabelian2(F)))))


@pytest.mark.parametrize("F", [QQ, GF(5)], ids=str)
@pytest.mark.parametrize("n", [1, 2])
def test_delta_pi_is_the_adjoint_coboundary(F, n, rng):
    for A in (sl2(F), heisenberg(F), bicrossed(rota_baxter0_pair(adjoint(nonabelian2(F))))):
        d = A.dim
        P = unflatten(F, d, d, n, [F.random_element(rng) for _ in range(cochain_dim(d, d, n))])
        assert F.equal(delta_pi(A, P).flat(), coboundary(A, adjoint(A), P).flat())


def pairs_gf7():
    F = GF(7)
    return [rota_baxter0_pair(adjoint(nonabelian2(F))), derivation_pair(adjoint(nonabelian2(F)))]


def test_vdata_conditions_hold():
    for mp in pairs_gf7():
        rep = VData(mp).report(max_degree=1)
        assert rep.passed
        assert "pi-square" in rep.checked and "abelian-1-1" in rep.checked


def basis_sample(vd, rng, degrees):
    out = []
    for p in degrees:
        B = list(vd.basis(p))
        out.append(B[rng.randrange(len(B))])
    return out


@pytest.mark.parametrize("degrees", [(0,), (1,), (0, 0), (0, 1), (1, 1), (0, 0, 0), (0, 0, 1), (0, 0, 0, 0)])
def test_linfty_relations_on_basis_elements(degrees, rng):
    for mp in pairs_gf7():
        ls = derived_brackets(VData(mp))
        for _ in range(3):
            xs = basis_sample(ls.vd, rng, degrees)
            res = linfty_identity(ls, xs)
            assert not np.any(res.flat() != 0)


def test_higher_brackets_vanish():
    mp = pairs_gf7()[0]
    ls = derived_brackets(VData(mp))
    x = ls.vd.from_map(ls.F.array([[1, 2], [3, 4]]))
    assert not np.any(ls.lk(x, x, x, x).flat() != 0)


def test_mc_elements_are_deformation_maps():
    F = GF(7)
    rng = np.random.default_rng(3)
    for mp in pairs_gf7():
        ls = derived_brackets(VData(mp))
        ops = PairOps.of(mp)
        dms = [d.r for d in enumerate_deformation_maps(mp)]
        sample = dms + [F.array(rng.integers(0, 7, (2, 2))) for _ in range(40)]
        for r in sample:
            zero = not np.any(mc_equation(ls, r).flat() != 0)
            assert zero == ops.defmap_ok(r)


def test_twist_characterizes_nearby_deformation_maps():
    F = GF(7)
    rng = np.random.default_rng(5)
    mp = pairs_gf7()[0]
    ls = derived_brackets(VData(mp))
    dms = enumerate_deformation_maps(mp)
    for d in dms[:: max(1, len(dms) // 4)]:
        tw = twist(ls, d.r)
        candidates = [F.normalize(e.r - d.r) for e in dms] + [F.array(rng.integers(0, 7, (2, 2))) for _ in range(15)]
        for s in candidates:
            zero = not np.any(mc_equation(tw, s).flat() != 0)
            assert zero == check_deformation_map(mp, F.normalize(d.r + s)).passed


def test_mc_needs_characteristic_above_three():
    for p in (2, 3):
        F = GF(p)
        mp = rota_baxter0_pair(adjoint(nonabelian2(F)))
        ls = derived_brackets(VData(mp))
        with pytest.raises(CharacteristicError):
            mc_equation(ls, F.zeros((2, 2)))
        with pytest.raises(CharacteristicError):
            twist(ls, F.zeros((2, 2)))


def test_twisted_complex_agrees_with_defmap_complex_above_degree_one():
    mp = pairs_gf7()[0]
    ls = derived_brackets(VData(mp))
    for d in enumerate_deformation_maps(mp)[:3]:
        tw = twisted_complex_dims(twist(ls, d.r), max_n=3)
        dm = dict(defmap_cohomology_dims(mp, d.r, max_n=3))
        assert tw[1:] == [(2, dm[2]), (3, dm[3])]
        assert tw[0][1] >= dm[1]


def random_element(G, rng, p):
    F = G.F
    n = G.N
    return unflatten(F, n, n, p + 1, [F.random_element(rng) for _ in range(cochain_dim(n, n, p + 1))])


@pytest.mark.parametrize("F", [QQ, GF(7)], ids=str)
@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (1, 1), (1, 2)])
def test_graded_antisymmetry(F, p, q, rng):
    G = CochainAlgebra(F, 2)
    P, Q = random_element(G, rng, p), random_element(G, rng, q)
    lhs = G.bracket(P, Q)
    rhs = G.scale(G.bracket(Q, P), -1 if (p * q) % 2 == 0 else 1)
    assert F.equal(lhs.flat(), rhs.flat())


@pytest.mark.parametrize("F", [QQ, GF(7)], ids=str)
@pytest.mark.parametrize("degs", [(0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 0), (1, 0, 1)])
def test_graded_jacobi(F, degs, rng):
    G = CochainAlgebra(F, 2)
    p, q, _ = degs
    P, Q, R = (random_element(G, rng, d) for d in degs)
    lhs = G.bracket(P, G.bracket(Q, R))
    rhs = G.add(G.bracket(G.bracket(P, Q), R), G.bracket(Q, G.bracket(P, R)), 1, -1 if (p * q) % 2 else 1)
    assert F.equal(lhs.flat(), rhs.flat())


def test_diamond_of_linear_maps_is_composition(rng):
    F = GF(7)
    G = CochainAlgebra(F, 2)
    f, g = random_element(G, rng, 0), random_element(G, rng, 0)
    # f ⋄ g is the composition f∘g; II[x, o] stores f(e_x)_o
    assert F.equal(G.diamond(f, g).matrix, F.normalize(f.matrix.dot(g.matrix)))
