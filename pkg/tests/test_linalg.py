import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lyalg import GF, QQ, kernels, linalg
from oracle import rank_mod_p


def rand_matrix(F, rng, r, c, density=0.6):
    M = F.zeros((r, c))
    for i in range(r):
        for j in range(c):
            if rng.random() < density:
                M[i, j] = F.random_element(rng)
    return F.normalize(M)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10 ** 6), p=st.sampled_from([2, 3, 5, 7]), r=st.integers(0, 6), c=st.integers(1, 6))
def test_rank_matches_plain_elimination(seed, p, r, c):
    F = GF(p)
    M = rand_matrix(F, random.Random(seed), r, c)
    assert linalg.rank(F, M) == (rank_mod_p(M.tolist(), p) if r else 0)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6), r=st.integers(1, 5), c=st.integers(1, 5))
def test_rational_kernel(seed, r, c):
    F = QQ
    M = rand_matrix(F, random.Random(seed), r, c)
    K = linalg.kernel_basis(F, M)
    assert len(K) + linalg.rank(F, M) == c
    for v in K:
        assert F.is_zero(linalg.matmul(F, M, v))
    if K:
        assert linalg.rank(F, np.stack(K, axis=1)) == len(K)


def test_rational_rank_by_integer_bound():
    # rank over Q of an integer matrix is at least its rank mod any prime
    rng = random.Random(3)
    for _ in range(30):
        M = np.array([[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)])
        rq = linalg.rank(QQ, QQ.array(M))
        assert rq >= rank_mod_p(M.tolist(), 7)
        assert rq == np.linalg.matrix_rank(M.astype(float))


def test_solve_inverse():
    F = GF(7)
    rng = random.Random(1)
    for _ in range(30):
        M = rand_matrix(F, rng, 3, 3, density=1.0)
        b = rand_matrix(F, rng, 3, 1, density=1.0)[:, 0]
        if linalg.is_invertible(F, M):
            Minv = linalg.inverse(F, M)
            assert F.equal(linalg.matmul(F, M, Minv), F.eye(3))
            x = linalg.solve(F, M, b)
            assert F.equal(linalg.matmul(F, M, x), b)
        else:
            with pytest.raises(ZeroDivisionError):
                linalg.inverse(F, M)
    assert linalg.solve(QQ, QQ.array([[1, 1], [1, 1]]), QQ.array([0, 1])) is None


def test_span_queries():
    F = QQ
    S = F.array([[1, 0], [0, 1], [1, 1]])
    assert linalg.in_span(F, S, F.array([2, 3, 5]))
    assert not linalg.in_span(F, S, F.array([0, 0, 1]))
    assert linalg.span_contains_all(F, S, F.zeros((3, 0)))


@pytest.mark.parametrize("p,n,k", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (2, 4, 0)])
def test_all_subspaces_counts(p, n, k):
    # Gaussian binomial coefficient
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    subs = list(linalg.all_subspaces(GF(p), n, k))
    assert len(subs) == num // den
    F = GF(p)
    keys = {linalg.rref(F, S.T)[0].tobytes() for S in subs}
    assert len(keys) == len(subs)
    assert all(linalg.rank(F, S) == k for S in subs if k)


@pytest.mark.skipif("compiled" not in kernels.available(), reason="extension not built")
def test_backends_agree_on_rref():
    rng = np.random.default_rng(0)
    for p in (2, 3, 7, 8191):
        for _ in range(20):
            M = rng.integers(0, p, size=(rng.integers(1, 8), rng.integers(1, 8)))
            prev = kernels.use_backend("python")
            a = kernels.rref_modp(M, p)
            kernels.use_backend("compiled")
            b = kernels.rref_modp(M, p)
            kernels.use_backend(prev)
            assert np.array_equal(a[0], b[0]) and list(a[1]) == list(b[1])


def test_backend_switch_errors():
    with pytest.raises(ValueError):
        kernels.use_backend("gpu")
    assert kernels.backend() in ("compiled", "python")


def test_benchmark_script_reports_agreement(capsys):
    import os
    import runpy

    path = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    mod = runpy.run_path(path)
    assert mod["main"](["--repeat", "1"]) == 0
    assert "MISMATCH" not in capsys.readouterr().out
