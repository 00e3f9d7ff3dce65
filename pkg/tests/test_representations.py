import itertools
import random

import numpy as np
import pytest

from lyalg import GF, QQ, Representation, StructureError, adjoint, check_ly_axioms, check_representation, derived_D, semidirect
from lyalg.representations import REP_CONDITIONS, lie_representation, zero_representation
from conftest import heisenberg, nonabelian2, sl2
from oracle import rep_ok


@pytest.mark.parametrize("F", [QQ, GF(2), GF(5)])
def test_adjoint_is_representation(F):
    for A in (nonabelian2(F), sl2(F), heisenberg(F, "zero")):
        rep = adjoint(A)
        assert check_representation(rep)
        assert rep_ok(F, A.c, A.t, rep.R, rep.Mu)
        # the derived operator of the adjoint representation is the ternary bracket
        assert F.equal(derived_D(rep), A.t)


def test_random_candidates_agree_with_direct_expansion():
    F = GF(2)
    A = nonabelian2(F)
    rng = np.random.default_rng(5)
    seen = {True: 0, False: 0}
    for _ in range(150):
        R = rng.integers(0, 2, (2, 1, 1)) * (rng.random() < 0.7)
        Mu = rng.integers(0, 2, (2, 2, 1, 1))
        rep = Representation(A, R, Mu)
        ok = check_representation(rep).passed
        assert ok == rep_ok(F, A.c, A.t, R, Mu)
        seen[ok] += 1
    assert seen[True] and seen[False]


def test_exhaustive_dim2_module_gf2():
    F = GF(2)
    A = nonabelian2(F)
    count = 0
    for bits in itertools.product(range(2), repeat=4):
        R = np.array(bits[:2]).reshape(2, 1, 1)
        for mbits in itertools.product(range(2), repeat=4):
            Mu = np.array(mbits).reshape(2, 2, 1, 1)
            ok = check_representation(Representation(A, R, Mu)).passed
            assert ok == rep_ok(F, A.c, A.t, R, Mu)
            count += ok
    assert count > 0


def test_violation_names_and_validate():
    F = QQ
    A = sl2(F)
    R = adjoint(A).R
    bad = Representation(A, R, F.zeros((3, 3, 3, 3)))
    rep = check_representation(bad)
    assert not rep and set(rep.failed_names()) <= set(REP_CONDITIONS)
    with pytest.raises(StructureError):
        bad.validate()


def test_lie_module_induced():
    F = QQ
    A = sl2(F)
    rep = lie_representation(A, adjoint(A).R)
    assert check_representation(rep)
    assert zero_representation(A, 2).validate()


def test_semidirect_product():
    F = GF(3)
    A = sl2(F)
    E = semidirect(A, adjoint(A))
    assert check_ly_axioms(E) and E.dim == 6
