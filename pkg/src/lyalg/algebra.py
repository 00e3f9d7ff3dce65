"""Lie-Yamaguti algebras given by structure constants.

Layout: ``c[i, j, k]`` is the e_k coefficient of [e_i, e_j] and
``t[i, j, k, l]`` is the e_l coefficient of [[e_i, e_j, e_k]].  Linear maps
are matrices of shape (target, source) whose column j is the image of e_j.
"""
from __future__ import annotations

import numpy as np

from . import linalg
from .fields import Field
from .report import Report, StructureError

AXIOMS = ("cyclic", "ternary-cyclic", "ternary-on-binary", "ternary-on-ternary")


class LieYamagutiAlgebra:
    """Binary bracket ``c`` and ternary bracket ``t`` over the field ``F``.

    Antisymmetry of ``c`` and of ``t`` in its first two slots is checked here
    and violations are rejected rather than symmetrized.
    """

    def __init__(self, F: Field, c, t, validated=False, name=""):
        c, t = F.array(c), F.array(t)
        n = c.shape[0] if c.ndim == 3 else -1
        if c.shape != (n, n, n):
            raise ValueError(f"binary bracket has shape {c.shape}, expected (n, n, n)")
        if t.shape != (n, n, n, n):
            raise ValueError(f"ternary bracket has shape {t.shape}, expected {(n,) * 4}")
        bad = np.argwhere(F.normalize(c + c.transpose(1, 0, 2)) != 0)
        if len(bad):
            i, j, k = bad[0]
            raise StructureError(f"binary bracket not antisymmetric at ({i + 1},{j + 1},{k + 1})")
        bad = np.argwhere(F.normalize(t + t.transpose(1, 0, 2, 3)) != 0)
        if len(bad):
            i, j, k, l = bad[0]
            raise StructureError(f"ternary bracket not antisymmetric in its first two slots at ({i + 1},{j + 1},{k + 1},{l + 1})")
        self.F, self.c, self.t = F, c, t
        self.validated = validated
        self.name = name

    @property
    def dim(self):
        return self.c.shape[0]

    def bracket(self, u, v):
        return self.F.einsum("i,j,ijk->k", u, v, self.c)

    def triple(self, u, v, w):
        return self.F.einsum("i,j,k,ijkl->l", u, v, w, self.t)

    def __eq__(self, other):
        return (
            isinstance(other, LieYamagutiAlgebra)
            and self.F == other.F
            and self.F.equal(self.c, other.c)
            and self.F.equal(self.t, other.t)
        )

    __hash__ = None

    def __repr__(self):
        tag = " validated" if self.validated else ""
        return f"<LieYamagutiAlgebra dim={self.dim} over {self.F}{tag}>"

    def validate(self):
        """Return a validated copy, or raise StructureError with the axiom report."""
        rep = check_ly_axioms(self)
        if not rep:
            raise StructureError("Lie-Yamaguti axioms fail: " + "; ".join(rep.failed_names()), rep)
        return LieYamagutiAlgebra(self.F, self.c, self.t, validated=True, name=self.name)


def zero_algebra(F: Field, n: int) -> LieYamagutiAlgebra:
    return LieYamagutiAlgebra(F, F.zeros((n, n, n)), F.zeros((n, n, n, n)), validated=True)


def _cyc3(F, T, spec):
    """Sum of T over the three cyclic rotations of its first three indices."""
    return F.normalize(T + np.einsum(spec[0], T) + np.einsum(spec[1], T))


def ly_residuals(F, c, t):
    """Residual tensors of the four defining identities, keyed by name."""
    ein = np.einsum
    jac = ein("xyk,kzl->xyzl", c, c) + t
    # value at (x,y,z) of the rotations (y,z,x) and (z,x,y)
    r1 = _cyc3(F, jac, ("yzxl->xyzl", "zxyl->xyzl"))
    a2 = ein("xyk,kzwm->xyzwm", c, t)
    r2 = _cyc3(F, a2, ("yzxwm->xyzwm", "zxywm->xyzwm"))
    r3 = ein("zwk,xykm->xyzwm", c, t) - ein("xyzk,kwm->xyzwm", t, c) - ein("xywk,zkm->xyzwm", t, c)
    r4 = (
        ein("zwuk,xykm->xyzwum", t, t)
        - ein("xyzk,kwum->xyzwum", t, t)
        - ein("xywk,zkum->xyzwum", t, t)
        - ein("xyuk,zwkm->xyzwum", t, t)
    )
    return dict(zip(AXIOMS, (r1, F.normalize(r2), F.normalize(r3), F.normalize(r4))))


def check_ly_axioms(A: LieYamagutiAlgebra) -> Report:
    rep = Report()
    for name, res in ly_residuals(A.F, A.c, A.t).items():
        rep.add(name, res)
    return rep


def jacobi_residual(F, c):
    J = np.einsum("xyk,kzl->xyzl", c, c)
    return _cyc3(F, J, ("yzxl->xyzl", "zxyl->xyzl"))


def from_lie(F: Field, c, mode="iterated") -> LieYamagutiAlgebra:
    """LY algebra of a Lie algebra: zero ternary, or [[x, y, z]] = [[x, y], z]."""
    c = F.array(c)
    n = c.shape[0]
    probe = LieYamagutiAlgebra(F, c, F.zeros((n,) * 4))
    rep = Report()
    rep.add("jacobi", jacobi_residual(F, probe.c))
    if not rep:
        raise StructureError("bracket does not satisfy the Jacobi identity", rep)
    if mode in ("zero", "zero-ternary"):
        t = F.zeros((n,) * 4)
    elif mode in ("iterated", "iterated-bracket"):
        t = F.einsum("ijm,mkl->ijkl", c, c)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return LieYamagutiAlgebra(F, c, t).validate()


def leibniz_residual(F, l):
    # x(yz) - (xy)z - y(xz)
    ein = np.einsum
    return F.normalize(
        ein("yzk,xkl->xyzl", l, l) - ein("xyk,kzl->xyzl", l, l) - ein("xzk,ykl->xyzl", l, l)
    )


def from_leibniz(F: Field, l) -> LieYamagutiAlgebra:
    """[x, y] = x∘y − y∘x and [[x, y, z]] = −(x∘y)∘z for a left Leibniz product."""
    l = F.array(l)
    rep = Report()
    rep.add("left-leibniz", leibniz_residual(F, l))
    if not rep:
        raise StructureError("product is not left Leibniz", rep)
    c = F.normalize(l - l.transpose(1, 0, 2))
    t = F.normalize(-np.einsum("ijm,mkl->ijkl", l, l))
    return LieYamagutiAlgebra(F, c, t).validate()


def from_lts(F: Field, t) -> LieYamagutiAlgebra:
    """A Lie triple system as an LY algebra with zero binary bracket."""
    t = F.array(t)
    n = t.shape[0]
    A = LieYamagutiAlgebra(F, F.zeros((n, n, n)), t)
    res = ly_residuals(F, A.c, A.t)
    rep = Report()
    rep.add("cyclic", res["cyclic"])
    rep.add("ternary-on-ternary", res["ternary-on-ternary"])
    if not rep:
        raise StructureError("not a Lie triple system", rep)
    return A.validate()


def _as_matrix(F, n, span):
    if isinstance(span, (list, tuple)):
        if not span:
            return F.zeros((n, 0))
        return F.array(np.stack([F.array(v) for v in span], axis=1))
    S = F.array(span)
    return S.reshape(n, -1)


def is_subalgebra(A: LieYamagutiAlgebra, span) -> bool:
    """Whether the span (list of vectors or matrix of columns) is closed under both brackets."""
    F = A.F
    S = _as_matrix(F, A.dim, span)
    k = S.shape[1]
    if k == 0:
        return True
    B = F.einsum("ia,jb,ijk->kab", S, S, A.c).reshape(A.dim, -1)
    T = F.einsum("ia,jb,kc,ijkl->labc", S, S, S, A.t).reshape(A.dim, -1)
    return linalg.span_contains_all(F, S, np.concatenate([B, T], axis=1))


def homomorphism_report(A: LieYamagutiAlgebra, B: LieYamagutiAlgebra, phi) -> Report:
    F = A.F
    phi = F.array(phi)
    if phi.shape != (B.dim, A.dim):
        raise ValueError(f"map has shape {phi.shape}, expected {(B.dim, A.dim)}")
    rep = Report()
    lhs = F.einsum("ijk,ok->ijo", A.c, phi)
    rhs = F.einsum("ai,bj,abo->ijo", phi, phi, B.c)
    rep.add("binary", F.normalize(lhs - rhs))
    lhs = F.einsum("ijkl,ol->ijko", A.t, phi)
    rhs = F.einsum("ai,bj,ck,abco->ijko", phi, phi, phi, B.t)
    rep.add("ternary", F.normalize(lhs - rhs))
    return rep


def check_homomorphism(A, B, phi) -> bool:
    return homomorphism_report(A, B, phi).passed


def direct_sum(A: LieYamagutiAlgebra, B: LieYamagutiAlgebra) -> LieYamagutiAlgebra:
    if A.F != B.F:
        raise ValueError("direct sum of algebras over different fields")
    F, n, m = A.F, A.dim, B.dim
    N = n + m
    c, t = F.zeros((N, N, N)), F.zeros((N,) * 4)
    c[:n, :n, :n], c[n:, n:, n:] = A.c, B.c
    t[:n, :n, :n, :n], t[n:, n:, n:, n:] = A.t, B.t
    return LieYamagutiAlgebra(F, c, t, validated=A.validated and B.validated)


def change_basis(A: LieYamagutiAlgebra, P) -> LieYamagutiAlgebra:
    """Structure constants with respect to the basis given by the columns of ``P``."""
    F = A.F
    P = F.array(P)
    Q = linalg.inverse(F, P)
    c = F.einsum("ia,jb,ijk,ok->abo", P, P, A.c, Q)
    t = F.einsum("ia,jb,kc,ijkl,ol->abco", P, P, P, A.t, Q)
    return LieYamagutiAlgebra(F, c, t, validated=A.validated)
