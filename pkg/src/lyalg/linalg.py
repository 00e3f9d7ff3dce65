"""Dense exact linear algebra over Q and GF(p).

Matrices are numpy arrays in the field's storage dtype (see ``fields``).
Over GF(p) row reduction runs in the selected kernel backend; over Q it is a
sparse Gauss-Jordan on dict rows of Fractions, which keeps the mostly-zero
coboundary matrices cheap.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import kernels
from .fields import Field, PrimeField


def _rref_q(M):
    rows, cols = M.shape
    work = []
    for i in range(rows):
        row = {j: Fraction(v) for j, v in enumerate(M[i]) if v != 0}
        if row:
            work.append(row)
    pivots = []
    done = []  # reduced rows, parallel to pivots
    for row in work:
        for pc, prow in zip(pivots, done):
            f = row.get(pc)
            if f:
                for j, v in prow.items():
                    nv = row.get(j, 0) - f * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {j: v * inv for j, v in row.items()}
        # clear the new pivot column from the earlier rows
        for k, prow in enumerate(done):
            f = prow.get(pc)
            if f:
                for j, v in row.items():
                    nv = prow.get(j, 0) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        pivots.append(pc)
        done.append(row)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    R = np.empty((rows, cols), dtype=object)
    R.fill(Fraction(0))
    for i, k in enumerate(order):
        for j, v in done[k].items():
            R[i, j] = v
    return R, [pivots[k] for k in order]


def rref(F: Field, M):
    """Reduced row-echelon form and pivot columns of ``M``."""
    M = F.array(M)
    if M.ndim != 2:
        raise ValueError("rref expects a matrix")
    if M.size == 0:
        return M.copy(), []
    if isinstance(F, PrimeField):
        R, piv = kernels.rref_modp(M, F.p)
        return np.asarray(R, dtype=np.int64), list(piv)
    return _rref_q(M)


def rank(F: Field, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def kernel_basis(F: Field, M):
    """Basis of the right null space, as a list of vectors."""
    M = F.array(M)
    cols = M.shape[1]
    R, piv = rref(F, M)
    free = [j for j in range(cols) if j not in set(piv)]
    out = []
    for fj in free:
        v = F.zeros(cols)
        v[fj] = F(1)
        for i, pc in enumerate(piv):
            v[pc] = -R[i, fj]
        out.append(F.normalize(v))
    return out


def solve(F: Field, M, b):
    """A particular solution of ``M x = b``, or None when inconsistent."""
    M, b = F.array(M), F.array(b)
    rows, cols = M.shape
    aug = np.concatenate([M, b.reshape(rows, 1)], axis=1)
    R, piv = rref(F, aug)
    if cols in piv:
        return None
    x = F.zeros(cols)
    for i, pc in enumerate(piv):
        x[pc] = R[i, cols]
    return x


def inverse(F: Field, M):
    M = F.array(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, piv = rref(F, np.concatenate([M, F.eye(n)], axis=1))
    if piv[:n] != list(range(n)) or (len(piv) > n and piv[n] < n):
        raise ZeroDivisionError("matrix is singular")
    return F.normalize(R[:, n:].copy())


def is_invertible(F: Field, M) -> bool:
    M = np.asarray(M)
    return M.ndim == 2 and M.shape[0] == M.shape[1] and rank(F, M) == M.shape[0]


def in_span(F: Field, S, v) -> bool:
    """Whether ``v`` lies in the column span of ``S``."""
    S = F.array(S)
    if S.size == 0:
        return F.is_zero(v)
    return solve(F, S, v) is not None


def span_contains_all(F: Field, S, V) -> bool:
    """Whether every column of ``V`` lies in the column span of ``S``."""
    S, V = F.array(S), F.array(V)
    if V.size == 0:
        return True
    if S.size == 0:
        return F.is_zero(V)
    return rank(F, np.concatenate([S, V], axis=1)) == rank(F, S)


def matmul(F: Field, A, B):
    return F.normalize(np.asarray(A).dot(np.asarray(B)))


def all_subspaces(F: PrimeField, n: int, k: int):
    """Every k-dimensional subspace of F^n, as an n x k basis matrix (RREF rows transposed)."""
    p = F.p
    for piv in itertools.combinations(range(n), k):
        # free positions: in row i, columns > piv[i] that are not pivots
        free = [(i, j) for i in range(k) for j in range(piv[i] + 1, n) if j not in piv]
        for vals in itertools.product(range(p), repeat=len(free)):
            R = np.zeros((k, n), dtype=np.int64)
            for i, c in enumerate(piv):
                R[i, c] = 1
            for (i, j), v in zip(free, vals):
                R[i, j] = v
            yield R.T.copy()
