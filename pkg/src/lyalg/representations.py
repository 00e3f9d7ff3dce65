"""Representations (V; rho, mu) of an LY algebra.

``R[x, v, :]`` is rho_{e_x}(v_v) and ``Mu[x, y, v, :]`` is mu(e_x, e_y) v_v, so
the operator product A B (apply B first) of two such matrices is
``einsum('vs,so->vo', B, A)``.
"""
from __future__ import annotations

import numpy as np

from .algebra import LieYamagutiAlgebra, zero_algebra
from .report import Report, StructureError

REP_CONDITIONS = ("mu-binary-left", "mu-binary-right", "rho-ternary", "mu-mu", "mu-ternary")


def derived_tensor(F, c, R, Mu):
    """D(x, y) = rho_x rho_y − rho_y rho_x − rho_[x,y] − mu(x, y) + mu(y, x)."""
    ein = np.einsum
    D = ein("yvs,xso->xyvo", R, R) - ein("xvs,yso->xyvo", R, R) - ein("xyk,kvo->xyvo", c, R)
    return F.normalize(D - Mu + Mu.transpose(1, 0, 2, 3))


class Representation:
    def __init__(self, algebra: LieYamagutiAlgebra, R, Mu, validated=False):
        F = algebra.F
        R, Mu = F.array(R), F.array(Mu)
        n = algebra.dim
        m = R.shape[1] if R.ndim == 3 else -1
        if R.shape != (n, m, m) or Mu.shape != (n, n, m, m):
            raise ValueError(f"action tensors have shapes {R.shape}, {Mu.shape} for dim {n}")
        self.algebra, self.R, self.Mu = algebra, R, Mu
        self.validated = validated

    @property
    def F(self):
        return self.algebra.F

    @property
    def dim(self):
        return self.R.shape[1]

    def rho(self, i):
        """Matrix (target, source) of rho_{e_i}."""
        return self.R[i].T.copy()

    def mu(self, i, j):
        return self.Mu[i, j].T.copy()

    def validate(self):
        rep = check_representation(self)
        if not rep:
            raise StructureError("representation conditions fail: " + "; ".join(rep.failed_names()), rep)
        return Representation(self.algebra, self.R, self.Mu, validated=True)


def derived_D(rep: Representation):
    """D tensor with ``D[x, y, v, :] = D(e_x, e_y) v_v``."""
    return derived_tensor(rep.F, rep.algebra.c, rep.R, rep.Mu)


def representation_residuals(F, c, t, R, Mu, D=None):
    ein = np.einsum
    if D is None:
        D = derived_tensor(F, c, R, Mu)
    r1 = ein("xyk,kzvo->xyzvo", c, Mu) - ein("yvs,xzso->xyzvo", R, Mu) + ein("xvs,yzso->xyzvo", R, Mu)
    r2 = ein("yzk,xkvo->xyzvo", c, Mu) - ein("xzvs,yso->xyzvo", Mu, R) + ein("xyvs,zso->xyzvo", Mu, R)
    r3 = ein("xyzk,kvo->xyzvo", t, R) - ein("zvs,xyso->xyzvo", R, D) + ein("xyvs,zso->xyzvo", D, R)
    r4 = (
        ein("xyvs,zwso->xyzwvo", Mu, Mu)
        - ein("xzvs,ywso->xyzwvo", Mu, Mu)
        - ein("yzwk,xkvo->xyzwvo", t, Mu)
        + ein("xwvs,yzso->xyzwvo", Mu, D)
    )
    r5 = (
        ein("xyzk,kwvo->xyzwvo", t, Mu)
        + ein("xywk,zkvo->xyzwvo", t, Mu)
        - ein("zwvs,xyso->xyzwvo", Mu, D)
        + ein("xyvs,zwso->xyzwvo", D, Mu)
    )
    return dict(zip(REP_CONDITIONS, (F.normalize(r) for r in (r1, r2, r3, r4, r5))))


def check_representation(rep: Representation) -> Report:
    A = rep.algebra
    out = Report()
    for name, res in representation_residuals(A.F, A.c, A.t, rep.R, rep.Mu).items():
        out.add(name, res, out_axes=2)
    return out


def adjoint(A: LieYamagutiAlgebra) -> Representation:
    """rho_x y = [x, y] and mu(x, y) z = [[z, x, y]]."""
    F = A.F
    R = A.c.copy()
    Mu = F.normalize(np.einsum("zxyo->xyzo", A.t))
    return Representation(A, R, Mu, validated=A.validated)


def zero_representation(A: LieYamagutiAlgebra, m: int) -> Representation:
    F = A.F
    n = A.dim
    return Representation(A, F.zeros((n, m, m)), F.zeros((n, n, m, m)), validated=True)


def lie_representation(A: LieYamagutiAlgebra, R, mode="iterated") -> Representation:
    """Representation induced by a Lie module rho of the Lie algebra underlying A.

    With the iterated ternary bracket the induced mu is mu(x, y) = rho_y rho_x;
    with the zero ternary bracket mu = 0.
    """
    F = A.F
    R = F.array(R)
    if mode in ("iterated", "iterated-bracket"):
        Mu = F.einsum("xvs,yso->xyvo", R, R)
    else:
        n, m = A.dim, R.shape[1]
        Mu = F.zeros((n, n, m, m))
    return Representation(A, R, Mu).validate()


def semidirect(A: LieYamagutiAlgebra, rep: Representation) -> LieYamagutiAlgebra:
    """LY structure on A ⊕ V from a representation (V regarded as a trivial algebra)."""
    from .matched_pairs import MatchedPair, bicrossed

    if not rep.validated:
        rep = rep.validate()
    F, m = A.F, rep.dim
    V = zero_algebra(F, m)
    n = A.dim
    mp = MatchedPair(A, V, rep.R, rep.Mu, F.zeros((m, n, n)), F.zeros((m, m, n, n)))
    return bicrossed(mp, check=False)
