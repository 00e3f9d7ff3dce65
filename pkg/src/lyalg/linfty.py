"""The graded Lie algebra C^{*+1}(V, V), derived brackets and Maurer-Cartan equations.

An element of C^{p+1}(V, V) has graded degree p and is stored as a
:class:`~lyalg.cohomology.Cochain` with ``n = p + 1``.  Degree 0 elements are
linear maps stored argument-first as ``II[x, o]`` with no I part.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .cohomology import Cochain, cochain_dim, unflatten, wedge_pairs, wedge_projector
from .fields import CharacteristicError
from .report import Report, StructureError

_OUT = "abcdefghijklmn"  # wedge slot letters; never x, o, z, v, u


def degree(P: Cochain):
    return P.n - 1


def perm_sign(seq):
    s = 1
    for i, j in itertools.combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            s = -s
    return s


def shuffles(p, q):
    """(p, q)-shuffles of 0..p+q-1 as (first block, second block, sign)."""
    for S in itertools.combinations(range(p + q), p):
        T = tuple(i for i in range(p + q) if i not in S)
        yield S, T, perm_sign(S + T)


class CochainAlgebra:
    """(C^{*+1}(V, V), diamond, [ , ]) for a vector space V of dimension N."""

    def __init__(self, F, N):
        self.F, self.N = F, N
        pairs = wedge_pairs(N)
        self.W = len(pairs)
        self.PA = np.array([a for a, _ in pairs], dtype=np.int64)
        self.PB = np.array([b for _, b in pairs], dtype=np.int64)
        self.Wp = wedge_projector(F, N)

    # construction

    def zero(self, p):
        F, N, W = self.F, self.N, self.W
        if p == 0:
            return Cochain(1, None, F.zeros((N, N)))
        return Cochain(p + 1, F.zeros((W,) * p + (N,)), F.zeros((W,) * p + (N, N)))

    def dim(self, p):
        return cochain_dim(self.N, self.N, p + 1)

    def linear(self, M):
        """Degree 0 element from a (target, source) matrix."""
        return Cochain(1, None, self.F.array(M).T.copy())

    def pi(self, c, t):
        """The element pi = (bracket, ternary bracket) of C^2(V, V)."""
        F = self.F
        c, t = F.array(c), F.array(t)
        return Cochain(2, c[self.PA, self.PB], t[self.PA, self.PB])

    def add(self, P, Q, a=1, b=1):
        F = self.F
        if P.n != Q.n:
            raise ValueError(f"degrees differ: {P.n - 1} and {Q.n - 1}")
        I = None if P.I is None else F.normalize(a * P.I + b * Q.I)
        return Cochain(P.n, I, F.normalize(a * P.II + b * Q.II))

    def scale(self, P, a):
        F = self.F
        return Cochain(P.n, None if P.I is None else F.normalize(a * P.I), F.normalize(a * P.II))

    def is_zero(self, P):
        return not np.any(P.II != 0) and (P.I is None or not np.any(P.I != 0))

    # products

    def _wedge_action(self, QII):
        """Z[w_Q..., u, v]: coefficient of basis wedge v in Q(w_Q, x_u) ∧ y_u + x_u ∧ Q(w_Q, y_u)."""
        F, PA, PB, Wp = self.F, self.PA, self.PB, self.Wp
        a = QII[..., PA, :]
        b = QII[..., PB, :]
        return F.normalize(
            np.einsum("...ul,luv->...uv", a, Wp[:, PB, :]) + np.einsum("...ul,ulv->...uv", b, Wp[PA, :, :])
        )

    def diamond(self, P: Cochain, Q: Cochain) -> Cochain:
        F = self.F
        p, q = degree(P), degree(Q)
        n = p + q
        L = _OUT[:n]
        ein = np.einsum
        N, W = self.N, self.W
        GI = F.zeros((W,) * n + (N,)) if n >= 1 else None
        GII = F.zeros((W,) * n + (N, N))
        e = -1 if (p * q) % 2 else 1
        # insertion of Q into the trailing argument of P
        for S, T, s in shuffles(p, q):
            sp = "".join(L[i] for i in S)
            sq = "".join(L[i] for i in T)
            if Q.I is not None and (q == 0 or T[-1] == n - 1):
                GI = GI + (e * s) * ein(f"{sp}zo,{sq}z->{L}o", P.II, Q.I)
            GII = GII + (e * s) * ein(f"{sp}zo,{sq}xz->{L}xo", P.II, Q.II)
        # insertion of Q into the k-th wedge of P
        if p >= 1:
            Z = self._wedge_action(Q.II)
            for k in range(1, p + 1):
                ek = -1 if ((k - 1) * q) % 2 else 1
                u = L[k + q - 1]
                tail = L[k + q:]
                for S, T, s in shuffles(k - 1, q):
                    sp = "".join(L[i] for i in S) + "v" + tail
                    sq = "".join(L[i] for i in T)
                    GI = GI + (ek * s) * ein(f"{sp}o,{sq}{u}v->{L}o", P.I, Z)
                    GII = GII + (ek * s) * ein(f"{sp}xo,{sq}{u}v->{L}xo", P.II, Z)
        return Cochain(n + 1, None if GI is None else F.normalize(GI), F.normalize(GII))

    def bracket(self, P, Q):
        p, q = degree(P), degree(Q)
        sign = -1 if (p * q) % 2 else 1
        return self.add(self.diamond(P, Q), self.diamond(Q, P), 1, -sign)


def pi_self_product(A_or_F, c=None, t=None):
    """pi ⋄ pi for the brackets (c, t); half of [pi, pi] away from characteristic 2."""
    if c is None:
        F, c, t = A_or_F.F, A_or_F.c, A_or_F.t
    else:
        F = A_or_F
    G = CochainAlgebra(F, F.array(c).shape[0])
    p = G.pi(c, t)
    return G, G.diamond(p, p)


def mc_check_pi(A_or_F, c=None, t=None) -> bool:
    """True iff pi ⋄ pi = 0, i.e. [pi, pi] = 0 (computed without the factor 2)."""
    G, pp = pi_self_product(A_or_F, c, t)
    return G.is_zero(pp)


def delta_pi(A, P: Cochain) -> Cochain:
    """delta_pi(f) = [pi, f] and delta_pi(P) = (-1)^{n-1} [pi, P] for P in C^n, n >= 2."""
    G = CochainAlgebra(A.F, A.dim)
    pi = G.pi(A.c, A.t)
    out = G.bracket(pi, P)
    if P.n >= 2 and (P.n - 1) % 2:
        out = G.scale(out, -1)
    return out


# V-data from a matched pair


class VData:
    """Ambient C^{*+1}(g ⊕ h, g ⊕ h), the abelian subalgebra C^{*+1}(h, g) and Pi."""

    def __init__(self, mp, check=True):
        from .matched_pairs import bicrossed

        self.mp = mp
        self.F = F = mp.F
        self.dg, self.dh = mp.g.dim, mp.h.dim
        self.N = self.dg + self.dh
        self.G = CochainAlgebra(F, self.N)
        E = bicrossed(mp, check=check)
        self.Pi = self.G.pi(E.c, E.t)
        hpairs = wedge_pairs(self.dh)
        full = {pq: w for w, pq in enumerate(wedge_pairs(self.N))}
        self.hw = np.array([full[(self.dg + a, self.dg + b)] for a, b in hpairs], dtype=np.int64)
        self.Wh = len(hpairs)
        if check:
            rep = self.report()
            if not rep:
                raise StructureError("V-data conditions fail: " + "; ".join(rep.failed_names()), rep)

    def embed(self, P: Cochain) -> Cochain:
        """Zero extension of an element of C^{p+1}(h, g) to g ⊕ h."""
        F, dg, N = self.F, self.dg, self.N
        p = degree(P)
        hs = slice(dg, N)
        Z = self.G.zero(p)
        II = Z.II.copy()
        idx = np.ix_(*([self.hw] * p))
        if p == 0:
            II[hs, :dg] = P.II
            return Cochain(1, None, II)
        I = Z.I.copy()
        I[idx + (slice(0, dg),)] = P.I
        II[idx + (hs, slice(0, dg))] = P.II
        return Cochain(p + 1, I, II)

    def project(self, X: Cochain) -> Cochain:
        """The projection p onto C^{p+1}(h, g): restrict inputs to h, keep the g-part of outputs."""
        dg, N = self.dg, self.N
        p = degree(X)
        if p == 0:
            return Cochain(1, None, X.II[dg:N, :dg].copy())
        idx = np.ix_(*([self.hw] * p))
        return Cochain(p + 1, X.I[idx][..., :dg].copy(), X.II[idx][..., dg:N, :dg].copy())

    def zero(self, p):
        F = self.F
        if p == 0:
            return Cochain(1, None, F.zeros((self.dh, self.dg)))
        return Cochain(p + 1, F.zeros((self.Wh,) * p + (self.dg,)), F.zeros((self.Wh,) * p + (self.dh, self.dg)))

    def dim(self, p):
        return cochain_dim(self.dh, self.dg, p + 1)

    def basis(self, p):
        F = self.F
        for i in range(self.dim(p)):
            v = [0] * self.dim(p)
            v[i] = 1
            yield unflatten(F, self.dh, self.dg, p + 1, v)

    def from_map(self, r):
        """r: h -> g as a (dim g, dim h) matrix, viewed in degree 0."""
        return Cochain(1, None, self.F.array(r).T.copy())

    def report(self, max_degree=1) -> Report:
        G = self.G
        out = Report()
        out.add("pi-square", G.diamond(self.Pi, self.Pi).flat())
        out.add("pi-in-kernel", self.project(self.Pi).flat())
        for p in range(max_degree + 1):
            for q in range(p, max_degree + 1):
                for P in self.basis(p):
                    for Q in self.basis(q):
                        br = G.bracket(self.embed(P), self.embed(Q))
                        out.add(f"abelian-{p}-{q}", br.flat())
        return out


def build_vdata(mp, check=True):
    return VData(mp, check=check)


class LInftyStructure:
    """Derived brackets l_k(a_1, ..., a_k) = p[...[[Pi, a_1], a_2], ..., a_k] on C^{*+1}(h, g)."""

    def __init__(self, vd: VData, twist=None):
        self.vd = vd
        self.F = vd.F
        self.r = twist

    def lk_base(self, *args):
        vd = self.vd
        G = vd.G
        X = vd.Pi
        for a in args:
            X = G.bracket(X, vd.embed(a))
        return vd.project(X)

    def _add(self, A, B, b=1):
        F = self.F
        I = None if A.I is None else F.normalize(A.I + b * B.I)
        return Cochain(A.n, I, F.normalize(A.II + b * B.II))

    def _scale(self, A, a):
        F = self.F
        return Cochain(A.n, None if A.I is None else F.normalize(a * A.I), F.normalize(a * A.II))

    def lk(self, *args):
        k = len(args)
        if self.r is None:
            return self.lk_base(*args)
        if k >= 4:
            return self._scale(self.lk_base(*args), 0)
        r = self.r
        out = self.lk_base(*args)
        if k <= 2:
            out = self._add(out, self.lk_base(r, *args))
        if k == 1:
            half = self.F.inv(2)
            out = self._add(out, self._scale(self.lk_base(r, r, *args), half))
        return out

    def l1(self, P):
        return self.lk(P)

    def l2(self, P, Q):
        return self.lk(P, Q)

    def l3(self, P, Q, R):
        return self.lk(P, Q, R)

    def l1_matrix(self, p):
        """Matrix of l_1: C^{p+1}(h, g) -> C^{p+2}(h, g)."""
        F = self.F
        cols = [self.l1(B).flat() for B in self.vd.basis(p)]
        if not cols:
            return F.zeros((self.vd.dim(p + 1), 0))
        return F.array(np.stack(cols, axis=1))


def derived_brackets(vd: VData) -> LInftyStructure:
    return LInftyStructure(vd)


def _require_char(F):
    if F.char in (2, 3):
        raise CharacteristicError(f"the factors 1/2 and 1/6 need characteristic 0 or > 3, not {F.char}")


def mc_equation(ls: LInftyStructure, r) -> Cochain:
    """l_1(r) + l_2(r, r)/2 + l_3(r, r, r)/6 for r: h -> g."""
    F = ls.F
    _require_char(F)
    R = ls.vd.from_map(r) if not isinstance(r, Cochain) else r
    out = ls.l1(R)
    out = ls._add(out, ls._scale(ls.l2(R, R), F.inv(2)))
    out = ls._add(out, ls._scale(ls.l3(R, R, R), F.inv(6)))
    return out


def twist(ls: LInftyStructure, r, check=True) -> LInftyStructure:
    """The L-infinity structure twisted by a deformation map r."""
    from .deformation import _require_dm

    _require_char(ls.F)
    if ls.r is not None:
        raise ValueError("twisting an already twisted structure is not supported")
    if check:
        r = _require_dm(ls.vd.mp, r)
    return LInftyStructure(ls.vd, twist=ls.vd.from_map(r))


def twisted_complex_dims(ls: LInftyStructure, max_n=3, check=True):
    """[(n, dim H^n)] of the complex (C^n(h, g), l_1), n = 1..max_n, starting at C^1."""
    F = ls.F
    mats = {p: ls.l1_matrix(p) for p in range(0, max_n)}
    if check:
        for p in range(0, max_n - 1):
            sq = F.normalize(mats[p + 1].dot(mats[p]))
            if np.any(sq != 0):
                raise StructureError(f"l1 does not square to zero on degree {p}", None)
    ranks = {p: linalg.rank(F, M) for p, M in mats.items()}
    out = []
    for n in range(1, max_n + 1):
        prev = ranks[n - 2] if n >= 2 else 0
        out.append((n, ls.vd.dim(n - 1) - ranks[n - 1] - prev))
    return out


def koszul_sign(perm, degrees):
    """Koszul sign of permuting homogeneous elements of the given degrees into the order perm."""
    s = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j] and (degrees[perm[i]] * degrees[perm[j]]) % 2:
            s = -s
    return s


def linfty_identity(ls: LInftyStructure, xs):
    """The N-th L-infinity relation evaluated on homogeneous xs; zero when the relation holds."""
    N = len(xs)
    degs = [degree(x) for x in xs]
    total = None
    for i in range(1, N + 1):
        for S, T, _ in shuffles(i, N - i):
            eps = koszul_sign(S + T, degs)
            inner = ls.lk(*[xs[j] for j in S])
            term = ls.lk(inner, *[xs[j] for j in T])
            term = ls._scale(term, eps)
            total = term if total is None else ls._add(total, term)
    return total
