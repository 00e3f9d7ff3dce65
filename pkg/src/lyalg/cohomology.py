"""The Yamaguti cochain complex C^n(g, V) and the complex of a deformation map.

The wedge square of g uses the basis e_i ∧ e_j with i < j, numbered in
lexicographic order.  A cochain of degree n >= 2 is a pair

    FI[w_1, ..., w_{n-1}, o]          F_I(X_1, ..., X_{n-1})_o
    FII[w_1, ..., w_{n-1}, x, o]      F_II(X_1, ..., X_{n-1}, e_x)_o

and a 1-cochain is f[x, o] = f(e_x)_o (stored as FII with no wedge slots).
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass

import numpy as np

from . import linalg
from .representations import derived_tensor


def wedge_pairs(d):
    return list(itertools.combinations(range(d), 2))


def wedge_projector(F, d):
    """Wp[a, b, w]: coefficient of the w-th basis wedge in e_a ∧ e_b."""
    pairs = wedge_pairs(d)
    Wp = np.zeros((d, d, len(pairs)), dtype=np.int64)
    for w, (a, b) in enumerate(pairs):
        Wp[a, b, w] = 1
        Wp[b, a, w] = -1
    return F.array(Wp)


@dataclass
class Cochain:
    n: int
    I: object  # None for n = 1
    II: object

    @property
    def matrix(self):
        """A 1-cochain as a (target, source) matrix."""
        if self.n != 1:
            raise ValueError("only 1-cochains are linear maps")
        return np.asarray(self.II).T.copy()

    def flat(self):
        if self.n == 1:
            return np.asarray(self.II).ravel()
        return np.concatenate([np.asarray(self.I).ravel(), np.asarray(self.II).ravel()])


def cochain_dim(d, m, n):
    W = d * (d - 1) // 2
    if n == 1:
        return d * m
    return W ** (n - 1) * m + W ** (n - 1) * d * m


def zero_cochain(F, d, m, n):
    W = d * (d - 1) // 2
    if n == 1:
        return Cochain(1, None, F.zeros((d, m)))
    return Cochain(n, F.zeros((W,) * (n - 1) + (m,)), F.zeros((W,) * (n - 1) + (d, m)))


def unflatten(F, d, m, n, v):
    v = F.array(v)
    W = d * (d - 1) // 2
    if n == 1:
        return Cochain(1, None, v.reshape(d, m))
    k = W ** (n - 1) * m
    return Cochain(n, v[:k].reshape((W,) * (n - 1) + (m,)), v[k:].reshape((W,) * (n - 1) + (d, m)))


class Coefficients:
    """Everything the differential needs: an LY structure (c, t) and an action (R, Mu) on V."""

    def __init__(self, F, c, t, R, Mu):
        self.F = F
        self.c, self.t, self.R, self.Mu = (F.array(T) for T in (c, t, R, Mu))
        self.d = self.c.shape[0]
        self.m = self.R.shape[1]
        d, m = self.d, self.m
        pairs = wedge_pairs(d)
        self.W = len(pairs)
        PA = np.array([a for a, _ in pairs], dtype=np.int64)
        PB = np.array([b for _, b in pairs], dtype=np.int64)
        self.PA, self.PB = PA, PB
        D = derived_tensor(F, self.c, self.R, self.Mu)
        self.Dw = D[PA, PB]  # [w, s, o]
        Wp = wedge_projector(F, d)
        tw = self.t[PA, PB]  # [u, z, l]
        self.Tw = tw  # [w, x, z] = [[x_w, y_w, e_x]]
        # Mw[u, w, w'] = coefficient of the basis wedge w' in
        # [[x_u, y_u, x_w]] ∧ y_w + x_w ∧ [[x_u, y_u, y_w]]
        self.Mw = F.normalize(
            np.einsum("uwl,lwv->uwv", tw[:, PA, :], Wp[:, PB, :])
            + np.einsum("uwl,wlv->uwv", tw[:, PB, :], Wp[PA, :, :])
        )
        eye_d, eye_m = F.eye(d), F.eye(m)
        # first-slot operator of (delta F)_I, acting on F_II(..., e_z)_s
        self.Aop = F.normalize(
            np.einsum("wz,wso->wzso", eye_d[PB], self.R[PA])
            - np.einsum("wz,wso->wzso", eye_d[PA], self.R[PB])
            - np.einsum("wz,so->wzso", self.c[PA, PB], eye_m)
        )
        self.Bop = F.normalize(
            np.einsum("wz,wxso->wxzso", eye_d[PA], self.Mu[PB])
            - np.einsum("wz,wxso->wxzso", eye_d[PB], self.Mu[PA])
        )

    def dim(self, n):
        return cochain_dim(self.d, self.m, n)


def coefficients(A, rep):
    return Coefficients(A.F, A.c, A.t, rep.R, rep.Mu)


_SLOT = string.ascii_lowercase[:12]  # wedge slot letters; x, o, s, z are not among them


def _delta_batched(K: Coefficients, n, FI, FII):
    """Apply delta to a batch of n-cochains (leading axis B); returns (GI, GII)."""
    F = K.F
    ein = np.einsum
    out = _SLOT[:n]
    head = out[:-1]
    last = out[-1]
    # (-1)^{n-1} rho / bracket terms on the last wedge
    sgn = -1 if (n - 1) % 2 else 1
    GI = sgn * ein(f"B{head}zs,{last}zso->B{out}o", FII, K.Aop)
    GII = sgn * ein(f"B{head}zs,{last}xzso->B{out}xo", FII, K.Bop)
    # D terms
    for k in range(n):
        rest = out[:k] + out[k + 1:]
        s = 1 if k % 2 == 0 else -1  # (-1)^{k+1} with k counted from 1
        if k < n - 1 and FI is not None:
            GI = GI + s * ein(f"B{rest}s,{out[k]}so->B{out}o", FI, K.Dw)
        GII = GII + s * ein(f"B{rest}xs,{out[k]}so->B{out}xo", FII, K.Dw)
    # ternary action on a later wedge
    for i in range(n):
        for j in range(i + 1, n):
            s = -1 if (i + 1) % 2 else 1  # (-1)^i with i counted from 1
            args = "".join("v" if q == j else out[q] for q in range(n) if q != i)
            if FI is not None:
                GI = GI + s * ein(f"B{args}o,{out[i]}{out[j]}v->B{out}o", FI, K.Mw)
            GII = GII + s * ein(f"B{args}xo,{out[i]}{out[j]}v->B{out}xo", FII, K.Mw)
    # ternary action on the trailing argument
    for k in range(n):
        rest = out[:k] + out[k + 1:]
        s = 1 if (k + 1) % 2 == 0 else -1  # (-1)^k
        GII = GII + s * ein(f"B{rest}zo,{out[k]}xz->B{out}xo", FII, K.Tw)
    return F.normalize(GI), F.normalize(GII)


def coboundary_of(K: Coefficients, F_: Cochain) -> Cochain:
    n = F_.n
    FI = None if n == 1 else np.asarray(F_.I)[None]
    FII = np.asarray(F_.II)[None]
    GI, GII = _delta_batched(K, n, FI, FII)
    return Cochain(n + 1, GI[0], GII[0])


def coboundary(A, rep, F_: Cochain) -> Cochain:
    return coboundary_of(coefficients(A, rep), F_)


def delta_matrix(K: Coefficients, n):
    """Matrix of delta: C^n -> C^{n+1} (columns = basis cochains in flat order)."""
    F = K.F
    dim = K.dim(n)
    W, d, m = K.W, K.d, K.m
    if dim == 0:
        return F.zeros((K.dim(n + 1), 0))
    basis = F.eye(dim)
    if n == 1:
        FI, FII = None, basis.reshape(dim, d, m)
    else:
        k = W ** (n - 1) * m
        FI = basis[:, :k].reshape((dim,) + (W,) * (n - 1) + (m,))
        FII = basis[:, k:].reshape((dim,) + (W,) * (n - 1) + (d, m))
    GI, GII = _delta_batched(K, n, FI, FII)
    cols = np.concatenate([GI.reshape(dim, -1), GII.reshape(dim, -1)], axis=1)
    return F.array(cols.T)


def _ranks(K, max_n):
    return {n: linalg.rank(K.F, delta_matrix(K, n)) for n in range(1, max_n + 1)}


def dims_from_ranks(K, ranks, max_n, incoming1=0):
    out = []
    for n in range(1, max_n + 1):
        prev = incoming1 if n == 1 else ranks[n - 1]
        out.append((n, K.dim(n) - ranks[n] - prev))
    return out


def cohomology_dims(A, rep, max_n=3):
    """[(n, dim H^n)] for n = 1..max_n; the complex starts at C^1."""
    K = coefficients(A, rep)
    return dims_from_ranks(K, _ranks(K, max_n), max_n)


# the complex of a deformation map


def _defmap_coefficients(mp, r):
    from .deformation import induced_action, induced_brackets

    ch, th = induced_brackets(mp, r)
    Psi, Nu = induced_action(mp, r)
    return Coefficients(mp.F, ch, th, Psi, Nu)


def defmap_d_tensor(mp, r):
    """d[w, a, o] = d(X_w)(eps_a)_o for the basis wedges X_w of g."""
    F = mp.F
    r = F.array(r)
    rv = r.T
    pairs = wedge_pairs(mp.g.dim)
    PA = np.array([a for a, _ in pairs], dtype=np.int64)
    PB = np.array([b for _, b in pairs], dtype=np.int64)
    if not pairs:
        return F.zeros((0, mp.h.dim, mp.g.dim))
    Drm = mp.Drm[PA, PB]
    tg = mp.g.t[PA, PB]
    return F.normalize(np.einsum("was,so->wao", Drm, rv) - np.einsum("ai,wio->wao", rv, tg))


def defmap_d(mp, r, X) -> Cochain:
    """The 1-cochain d(X): alpha -> r(D(x, y) alpha) - [[x, y, r(alpha)]] for X in the wedge square."""
    from .deformation import _require_dm

    r = _require_dm(mp, r)
    F = mp.F
    X = F.array(X)
    return Cochain(1, None, F.einsum("w,wao->ao", X, defmap_d_tensor(mp, r)))


def defmap_complex(mp, r):
    from .deformation import _require_dm

    r = _require_dm(mp, r)
    return _defmap_coefficients(mp, r), defmap_d_tensor(mp, r)


def defmap_cohomology_dims(mp, r, max_n=3):
    """[(n, dim H^n_r)] for n = 0..max_n, with C^0_r the wedge square of g."""
    K, dt = defmap_complex(mp, r)
    F = mp.F
    W0 = dt.shape[0]
    d0 = F.array(dt.reshape(W0, -1).T) if W0 else F.zeros((K.dim(1), 0))
    r0 = linalg.rank(F, d0)
    ranks = _ranks(K, max_n)
    return [(0, W0 - r0)] + dims_from_ranks(K, ranks, max_n, incoming1=r0)
