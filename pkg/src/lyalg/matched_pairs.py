"""Matched pairs of LY algebras, bicrossed products and factorizations.

Cross-action layout (arguments first, output last):

    R[x, a, :]      rho_{e_x}(eps_a)          Psi[a, x, :]    psi_{eps_a}(e_x)
    Mu[x, y, a, :]  mu(e_x, e_y) eps_a        Nu[a, b, x, :]  nu(eps_a, eps_b) e_x

In g ⊕ h the basis of g comes first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import LieYamagutiAlgebra, _as_matrix, change_basis, check_homomorphism, is_subalgebra
from .report import Report, StructureError
from .representations import derived_tensor, representation_residuals

MP_CONDITIONS = (
    "rho-bracket", "rho-triple", "rho-triple-skew", "rho-nu-sym", "mu-bracket",
    "mu-triple", "mu-psi", "mu-nu-left", "mu-nu-right",
    "psi-bracket", "psi-triple", "psi-triple-skew", "psi-mu-sym", "nu-bracket",
    "nu-triple", "nu-rho", "nu-mu-left", "nu-mu-right",
)
CONSEQUENCES = (
    "D-rho-mu-bracket", "D-rho-mu-triple", "D-rho-mu-psi",
    "D-psi-nu-bracket", "D-psi-nu-triple", "D-psi-nu-rho",
)
ACTION_CONDITIONS = (
    "rho-derivation", "rho-triple", "rho-triple-skew", "mu-kills-bracket",
    "mu-kills-triple", "mu-bracket-zero", "mu-triple-first-zero", "mu-triple-last-zero",
)


class MatchedPair:
    def __init__(self, g: LieYamagutiAlgebra, h: LieYamagutiAlgebra, R, Mu, Psi, Nu, validated=False):
        if g.F != h.F:
            raise ValueError("matched pair of algebras over different fields")
        F = g.F
        n, m = g.dim, h.dim
        self.g, self.h = g, h
        self.R, self.Mu, self.Psi, self.Nu = (F.array(T) for T in (R, Mu, Psi, Nu))
        want = {"rho": (n, m, m), "mu": (n, n, m, m), "psi": (m, n, n), "nu": (m, m, n, n)}
        for (name, shape), T in zip(want.items(), (self.R, self.Mu, self.Psi, self.Nu)):
            if T.shape != shape:
                raise ValueError(f"{name} has shape {T.shape}, expected {shape}")
        self.validated = validated

    @property
    def F(self):
        return self.g.F

    @property
    def Drm(self):
        """D_{rho,mu}(e_x, e_y) eps_a at ``[x, y, a, :]``."""
        return derived_tensor(self.F, self.g.c, self.R, self.Mu)

    @property
    def Dpn(self):
        return derived_tensor(self.F, self.h.c, self.Psi, self.Nu)

    def swapped(self):
        """The same data read as a matched pair (h, g, (psi, nu), (rho, mu))."""
        return MatchedPair(self.h, self.g, self.Psi, self.Nu, self.R, self.Mu, validated=self.validated)

    def validate(self):
        rep = check_matched_pair(self, full=True)
        if not rep:
            raise StructureError("matched pair conditions fail: " + "; ".join(rep.failed_names()), rep)
        return MatchedPair(self.g, self.h, self.R, self.Mu, self.Psi, self.Nu, validated=True)

    def __repr__(self):
        return f"<MatchedPair dims=({self.g.dim},{self.h.dim}) over {self.F}>"


def zero_pair(g, h) -> MatchedPair:
    F, n, m = g.F, g.dim, h.dim
    return MatchedPair(g, h, F.zeros((n, m, m)), F.zeros((n, n, m, m)),
                       F.zeros((m, n, n)), F.zeros((m, m, n, n)))


def _half(F, c, t, ch, th, R, Mu, Psi, Nu, Drm, Dpn):
    """Nine of the compatibility residuals; the other nine are this with the roles swapped."""
    ein = np.einsum
    out = [
        ein("abs,xso->xabo", ch, R) - ein("xas,sbo->xabo", R, ch) - ein("xbs,aso->xabo", R, ch)
        - ein("bxi,iao->xabo", Psi, R) + ein("axi,ibo->xabo", Psi, R),
        ein("abcs,xso->xabco", th, R) - ein("xcs,abso->xabco", R, th) + ein("abxi,ico->xabco", Dpn, R),
        ein("xas,sbco->xabco", R, th) + ein("xbs,asco->xabco", R, th),
        ein("abxi,ico->xabco", Nu, R) - ein("acxi,ibo->xabco", Nu, R),
        ein("abs,xyso->xyabo", ch, Mu) - ein("bxi,iyao->xyabo", Psi, Mu) + ein("axi,iybo->xyabo", Psi, Mu),
        ein("abcs,xyso->xyabco", th, Mu) - ein("xycs,abso->xyabco", Mu, th)
        + ein("abxi,iyco->xyabco", Dpn, Mu) + ein("abyi,xico->xyabco", Dpn, Mu),
        ein("ayi,xibo->xyabo", Psi, Mu) - ein("xybs,aso->xyabo", Mu, ch),
        ein("abxi,iyco->xyabco", Nu, Mu) - ein("acxi,iybo->xyabco", Nu, Mu)
        - ein("bcyi,xiao->xyabco", Dpn, Mu) + ein("xyas,bcso->xyabco", Mu, th),
        ein("abyi,xico->xyabco", Nu, Mu) - ein("xycs,sabo->xyabco", Mu, th)
        + ein("caxi,yibo->xyabco", Nu, Drm) - ein("cbxi,yiao->xyabco", Nu, Mu),
    ]
    return [F.normalize(r) for r in out]


def _consequence_half(F, ch, th, Psi, Drm):
    ein = np.einsum
    out = [
        ein("abs,xyso->xyabo", ch, Drm) - ein("xyas,sbo->xyabo", Drm, ch) - ein("xybs,aso->xyabo", Drm, ch),
        ein("abcs,xyso->xyabco", th, Drm) - ein("xyas,sbco->xyabco", Drm, th)
        - ein("xybs,asco->xyabco", Drm, th) - ein("xycs,abso->xyabco", Drm, th),
        ein("axi,iybo->axybo", Psi, Drm) + ein("ayi,xibo->axybo", Psi, Drm),
    ]
    return [F.normalize(r) for r in out]


def matched_pair_residuals(mp: MatchedPair):
    F, g, h = mp.F, mp.g, mp.h
    Drm, Dpn = mp.Drm, mp.Dpn
    first = _half(F, g.c, g.t, h.c, h.t, mp.R, mp.Mu, mp.Psi, mp.Nu, Drm, Dpn)
    second = _half(F, h.c, h.t, g.c, g.t, mp.Psi, mp.Nu, mp.R, mp.Mu, Dpn, Drm)
    return dict(zip(MP_CONDITIONS, first + second))


def check_matched_pair(mp: MatchedPair, full=False) -> Report:
    """The eighteen compatibility conditions.

    Both representation structures must already hold; if they do not, this
    raises StructureError, unless ``full`` is set, in which case their
    conditions are reported alongside (prefixed ``rho-mu:`` / ``psi-nu:``).
    """
    F, g, h = mp.F, mp.g, mp.h
    reps = Report()
    for name, res in representation_residuals(F, g.c, g.t, mp.R, mp.Mu).items():
        reps.add("rho-mu:" + name, res, out_axes=2)
    for name, res in representation_residuals(F, h.c, h.t, mp.Psi, mp.Nu).items():
        reps.add("psi-nu:" + name, res, out_axes=2)
    if not reps and not full:
        raise StructureError("representation substructure invalid: " + "; ".join(reps.failed_names()), reps)
    out = reps if full else Report()
    for name, res in matched_pair_residuals(mp).items():
        out.add(name, res)
    return out


def check_consequences(mp: MatchedPair) -> Report:
    F, g, h = mp.F, mp.g, mp.h
    Drm, Dpn = mp.Drm, mp.Dpn
    res = _consequence_half(F, h.c, h.t, mp.Psi, Drm) + _consequence_half(F, g.c, g.t, mp.R, Dpn)
    out = Report()
    for name, r in zip(CONSEQUENCES, res):
        out.add(name, r, out_axes=2 if name.endswith(("psi", "rho")) else 1)
    return out


def bicrossed_tensors(F, g, h, R, Mu, Psi, Nu, Drm, Dpn):
    n, m = g.dim, h.dim
    N = n + m
    G, H = slice(0, n), slice(n, N)
    C = F.zeros((N, N, N))
    C[G, G, G] = g.c
    C[H, H, H] = h.c
    C[G, H, G] = -Psi.transpose(1, 0, 2)
    C[G, H, H] = R
    C[H, G, G] = Psi
    C[H, G, H] = -R.transpose(1, 0, 2)
    T = F.zeros((N,) * 4)
    T[G, G, G, G] = g.t
    T[H, H, H, H] = h.t
    T[G, G, H, H] = Drm
    T[G, H, G, H] = -Mu.transpose(0, 2, 1, 3)
    T[H, G, G, H] = Mu.transpose(2, 0, 1, 3)
    T[G, H, H, G] = Nu.transpose(2, 0, 1, 3)
    T[H, G, H, G] = -Nu.transpose(0, 2, 1, 3)
    T[H, H, G, G] = Dpn
    return F.normalize(C), F.normalize(T)


def bicrossed(mp: MatchedPair, check=True) -> LieYamagutiAlgebra:
    """The bicrossed product g ⋈ h on g ⊕ h."""
    if check and not mp.validated:
        mp = mp.validate()
    F = mp.F
    C, T = bicrossed_tensors(F, mp.g, mp.h, mp.R, mp.Mu, mp.Psi, mp.Nu, mp.Drm, mp.Dpn)
    return LieYamagutiAlgebra(F, C, T, validated=mp.validated and mp.g.validated and mp.h.validated)


def action_report(g, h, R, Mu) -> Report:
    F = g.F
    R, Mu = F.array(R), F.array(Mu)
    ch, th = h.c, h.t
    ein = np.einsum
    res = [
        ein("abs,xso->xabo", ch, R) - ein("xas,sbo->xabo", R, ch) - ein("xbs,aso->xabo", R, ch),
        ein("abcs,xso->xabco", th, R) - ein("xcs,abso->xabco", R, th),
        ein("xas,sbco->xabco", R, th) + ein("xbs,asco->xabco", R, th),
        ein("abs,xyso->xyabo", ch, Mu),
        ein("abcs,xyso->xyabco", th, Mu),
        ein("xyas,sbo->xyabo", Mu, ch),
        ein("xyas,sbco->xyabco", Mu, th),
        ein("xycs,abso->xyabco", Mu, th),
    ]
    out = Report()
    for name, r in zip(ACTION_CONDITIONS, res):
        out.add(name, F.normalize(r))
    return out


def make_action_pair(g, h, R, Mu) -> MatchedPair:
    """Matched pair (g, h, (rho, mu), (0, 0)) from an LY action of g on h."""
    F = g.F
    n, m = g.dim, h.dim
    mp = MatchedPair(g, h, R, Mu, F.zeros((m, n, n)), F.zeros((m, m, n, n)))
    rep = Report()
    for name, res in representation_residuals(F, g.c, g.t, mp.R, mp.Mu).items():
        rep.add(name, res, out_axes=2)
    rep.extend(action_report(g, h, mp.R, mp.Mu))
    if not rep:
        raise StructureError("not a Lie-Yamaguti action: " + "; ".join(rep.failed_names()), rep)
    return mp.validate()


@dataclass
class Inclusion:
    """A subalgebra g of E together with a complement h, both as column-basis matrices."""

    E: LieYamagutiAlgebra
    g_span: object
    h_span: object

    def __post_init__(self):
        F, N = self.E.F, self.E.dim
        self.g_span = _as_matrix(F, N, self.g_span)
        self.h_span = _as_matrix(F, N, self.h_span)


def _ternary_image(A, S1, S2, S3):
    F = A.F
    if 0 in (S1.shape[1], S2.shape[1], S3.shape[1]):
        return F.zeros((A.dim, 0))
    return F.einsum("ia,jb,kc,ijkl->labc", S1, S2, S3, A.t).reshape(A.dim, -1)


def check_factorization(E: LieYamagutiAlgebra, g_span, h_span, strong=False) -> bool:
    F, N = E.F, E.dim
    G, H = _as_matrix(F, N, g_span), _as_matrix(F, N, h_span)
    rg, rh = linalg.rank(F, G), linalg.rank(F, H)
    if rg != G.shape[1] or rh != H.shape[1]:
        return False
    if rg + rh != N or linalg.rank(F, np.concatenate([G, H], axis=1)) != N:
        return False
    if not (is_subalgebra(E, G) and is_subalgebra(E, H)):
        return False
    if strong:
        if not linalg.span_contains_all(F, G, _ternary_image(E, G, H, H)):
            return False
        if not linalg.span_contains_all(F, H, _ternary_image(E, H, G, G)):
            return False
    return True


def canonical_matched_pair(inc: Inclusion) -> MatchedPair:
    """Read (rho, mu, psi, nu) off E in a basis adapted to E = g ⊕ h."""
    E, G, H = inc.E, inc.g_span, inc.h_span
    F = E.F
    if not check_factorization(E, G, H, strong=True):
        raise StructureError("E does not strongly factorize through the given spans")
    n, m = G.shape[1], H.shape[1]
    N = n + m
    A = change_basis(E, np.concatenate([G, H], axis=1))
    gs, hs = slice(0, n), slice(n, N)
    g = LieYamagutiAlgebra(F, A.c[gs, gs, gs], A.t[gs, gs, gs, gs]).validate()
    h = LieYamagutiAlgebra(F, A.c[hs, hs, hs], A.t[hs, hs, hs, hs]).validate()
    R = A.c[gs, hs, hs]
    Psi = F.normalize(-A.c[gs, hs, gs].transpose(1, 0, 2))
    Mu = A.t[hs, gs, gs, hs].transpose(1, 2, 0, 3)
    Nu = A.t[gs, hs, hs, gs].transpose(1, 2, 0, 3)
    forbidden = Report()
    forbidden.add("mu-has-g-component", A.t[hs, gs, gs, gs])
    forbidden.add("nu-has-h-component", A.t[gs, hs, hs, hs])
    if not forbidden:
        raise StructureError("decomposition has a forbidden component", forbidden)
    mp = MatchedPair(g, h, R, Mu, Psi, Nu)
    B = bicrossed(mp, check=False)
    same = Report()
    same.add("binary", F.normalize(B.c - A.c))
    same.add("ternary", F.normalize(B.t - A.t))
    if not same:
        raise StructureError("E in the adapted basis differs from the bicrossed product", same)
    return mp.validate()


def mp_equivalence_report(mp: MatchedPair, mp2: MatchedPair, u, v) -> Report:
    F = mp.F
    u, v = F.array(u), F.array(v)
    for name, phi, A in (("u", u, mp.g), ("v", v, mp.h)):
        if not (linalg.is_invertible(F, phi) and check_homomorphism(A, A, phi)):
            raise StructureError(f"{name} is not an automorphism")
    ein = F.einsum
    out = Report()
    out.add("rho", F.normalize(ein("xas,os->xao", mp.R, v) - ein("ix,ja,ijo->xao", u, v, mp2.R)))
    out.add("mu", F.normalize(ein("xyas,os->xyao", mp.Mu, v) - ein("ix,jy,ka,ijko->xyao", u, u, v, mp2.Mu)))
    out.add("psi", F.normalize(ein("axs,os->axo", mp.Psi, u) - ein("ia,jx,ijo->axo", v, u, mp2.Psi)))
    out.add("nu", F.normalize(ein("abxs,os->abxo", mp.Nu, u) - ein("ia,jb,kx,ijko->abxo", v, v, u, mp2.Nu)))
    return out


def check_mp_equivalence(mp, mp2, u, v) -> bool:
    return mp_equivalence_report(mp, mp2, u, v).passed
