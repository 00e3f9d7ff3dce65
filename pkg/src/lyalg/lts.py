"""Lie triple systems, their matched pairs and deformation maps.

A Lie triple system is an LY algebra with zero binary bracket.  The checks
here evaluate the triple-system conditions directly; every public check is
also run through the LY embedding and the two answers must agree.
"""
from __future__ import annotations

import numpy as np

from .algebra import LieYamagutiAlgebra, check_ly_axioms
from .report import Report, StructureError

LTS_AXIOMS = ("cyclic", "ternary-derivation")
LTS_REP_CONDITIONS = ("mu-mu", "mu-ternary")
LTS_MP_CONDITIONS = (
    "mu-on-ternary",
    "mu-nu-exchange",
    "mu-through-nu",
    "nu-on-ternary",
    "nu-mu-exchange",
    "nu-through-mu",
)


class LieTripleSystem:
    def __init__(self, F, t, validated=False, name=""):
        t = F.array(t)
        n = t.shape[0] if t.ndim == 4 else -1
        if t.shape != (n,) * 4:
            raise ValueError(f"ternary bracket has shape {t.shape}, expected (n, n, n, n)")
        self.F, self.t = F, t
        self.validated = validated
        self.name = name
        self.as_ly()  # antisymmetry check

    @property
    def dim(self):
        return self.t.shape[0]

    def as_ly(self):
        n = self.dim
        return LieYamagutiAlgebra(self.F, self.F.zeros((n, n, n)), self.t, validated=self.validated)

    def validate(self):
        rep = check_lts(self)
        if not rep:
            raise StructureError("Lie triple system axioms fail: " + "; ".join(rep.failed_names()), rep)
        return LieTripleSystem(self.F, self.t, validated=True, name=self.name)

    def __repr__(self):
        return f"<LieTripleSystem dim={self.dim} over {self.F}>"


def lts_residuals(F, t):
    ein = np.einsum
    cyc = t + ein("yzxo->xyzo", t) + ein("zxyo->xyzo", t)
    der = (
        ein("zwuk,xyko->xyzwuo", t, t)
        - ein("xyzk,kwuo->xyzwuo", t, t)
        - ein("xywk,zkuo->xyzwuo", t, t)
        - ein("xyuk,zwko->xyzwuo", t, t)
    )
    return dict(zip(LTS_AXIOMS, (F.normalize(cyc), F.normalize(der))))


def check_lts(s: LieTripleSystem) -> Report:
    out = Report()
    for name, res in lts_residuals(s.F, s.t).items():
        out.add(name, res)
    if out.passed != check_ly_axioms(s.as_ly()).passed:
        raise AssertionError("triple-system check disagrees with the LY axioms on the embedding")
    return out


def D_mu(Mu):
    """D_mu(x, y) = mu(y, x) - mu(x, y)."""
    return Mu.transpose(1, 0, 2, 3) - Mu


def lts_rep_residuals(F, t, Mu):
    ein = np.einsum
    D = D_mu(Mu)
    r1 = (
        ein("xyvs,zwso->xyzwvo", Mu, Mu)
        - ein("xzvs,ywso->xyzwvo", Mu, Mu)
        - ein("yzwk,xkvo->xyzwvo", t, Mu)
        + ein("xwvs,yzso->xyzwvo", Mu, D)
    )
    r2 = (
        ein("xyzk,kwvo->xyzwvo", t, Mu)
        + ein("xywk,zkvo->xyzwvo", t, Mu)
        - ein("zwvs,xyso->xyzwvo", Mu, D)
        + ein("xyvs,zwso->xyzwvo", D, Mu)
    )
    return dict(zip(LTS_REP_CONDITIONS, (F.normalize(r1), F.normalize(r2))))


class LtsRepresentation:
    def __init__(self, system: LieTripleSystem, Mu, validated=False):
        F = system.F
        Mu = F.array(Mu)
        n = system.dim
        m = Mu.shape[2] if Mu.ndim == 4 else -1
        if Mu.shape != (n, n, m, m):
            raise ValueError(f"action tensor has shape {Mu.shape} for dim {n}")
        self.system, self.Mu, self.validated = system, Mu, validated

    @property
    def dim(self):
        return self.Mu.shape[2]

    @property
    def D(self):
        return D_mu(self.Mu)

    def as_ly(self):
        from .representations import Representation

        F = self.system.F
        n, m = self.system.dim, self.dim
        return Representation(self.system.as_ly(), F.zeros((n, m, m)), self.Mu)


def check_lts_representation(rep: LtsRepresentation) -> Report:
    from .representations import check_representation

    s = rep.system
    out = Report()
    for name, res in lts_rep_residuals(s.F, s.t, rep.Mu).items():
        out.add(name, res, out_axes=2)
    if out.passed != check_representation(rep.as_ly()).passed:
        raise AssertionError("triple-system representation check disagrees with the LY embedding")
    return out


class LtsMatchedPair:
    """(g, h, mu, nu) with ``Mu[x, y, a, :]`` = mu(x, y) eps_a and ``Nu[a, b, x, :]`` = nu(a, b) e_x."""

    def __init__(self, g: LieTripleSystem, h: LieTripleSystem, Mu, Nu, validated=False):
        F = g.F
        self.g, self.h = g, h
        self.Mu, self.Nu = F.array(Mu), F.array(Nu)
        n, m = g.dim, h.dim
        if self.Mu.shape != (n, n, m, m) or self.Nu.shape != (m, m, n, n):
            raise ValueError(f"action tensors have shapes {self.Mu.shape}, {self.Nu.shape} for dims ({n}, {m})")
        self.validated = validated

    @property
    def F(self):
        return self.g.F

    def as_ly(self):
        from .matched_pairs import MatchedPair

        F = self.F
        n, m = self.g.dim, self.h.dim
        return MatchedPair(
            self.g.as_ly(), self.h.as_ly(), F.zeros((n, m, m)), self.Mu, F.zeros((m, n, n)), self.Nu,
            validated=self.validated,
        )

    def validate(self):
        rep = check_lts_matched_pair(self.g, self.h, self.Mu, self.Nu)
        if not rep:
            raise StructureError("matched pair conditions fail: " + "; ".join(rep.failed_names()), rep)
        return LtsMatchedPair(self.g, self.h, self.Mu, self.Nu, validated=True)


def _lts_half(F, th, Mu, Nu):
    """The three conditions in which (x, y) act on the module side; outputs in that side."""
    ein = np.einsum
    Dn = D_mu(Nu)
    Dm = D_mu(Mu)
    c1 = (
        ein("abcd,xydo->xyabco", th, Mu)
        - ein("xycd,abdo->xyabco", Mu, th)
        + ein("abxz,zyco->xyabco", Dn, Mu)
        + ein("abyz,xzco->xyabco", Dn, Mu)
    )
    c2 = (
        ein("abxz,zyco->xyabco", Nu, Mu)
        - ein("acxz,zybo->xyabco", Nu, Mu)
        - ein("bcyz,xzao->xyabco", Dn, Mu)
        + ein("xyad,bcdo->xyabco", Mu, th)
    )
    c3 = (
        ein("abyz,xzco->xyabco", Nu, Mu)
        - ein("xycd,dabo->xyabco", Mu, th)
        + ein("caxz,yzbo->xyabco", Nu, Dm)
        - ein("cbxz,yzao->xyabco", Nu, Mu)
    )
    return [F.normalize(c) for c in (c1, c2, c3)]


def lts_matched_pair_residuals(g, h, Mu, Nu):
    F = g.F
    Mu, Nu = F.array(Mu), F.array(Nu)
    res = _lts_half(F, h.t, Mu, Nu) + _lts_half(F, g.t, Nu, Mu)
    return dict(zip(LTS_MP_CONDITIONS, res))


def check_lts_matched_pair(g, h, Mu, Nu) -> Report:
    """Both representation conditions and the six compatibility conditions."""
    from .matched_pairs import check_matched_pair

    F = g.F
    out = Report()
    out.extend(check_lts_representation(LtsRepresentation(g, Mu)), "mu:")
    out.extend(check_lts_representation(LtsRepresentation(h, Nu)), "nu:")
    for name, res in lts_matched_pair_residuals(g, h, Mu, Nu).items():
        out.add(name, res)
    ly = check_matched_pair(LtsMatchedPair(g, h, Mu, Nu).as_ly(), full=True)
    if out.passed != ly.passed:
        raise AssertionError("triple-system matched pair check disagrees with the LY embedding")
    return out


def lts_bicrossed_tensor(F, tg, th, Mu, Nu):
    n, m = tg.shape[0], th.shape[0]
    N = n + m
    G, H = slice(0, n), slice(n, N)
    T = F.zeros((N,) * 4)
    T[G, G, G, G] = tg
    T[H, H, G, G] = D_mu(Nu)
    T[G, H, H, G] = Nu.transpose(2, 0, 1, 3)
    T[H, G, H, G] = -Nu.transpose(0, 2, 1, 3)
    T[H, H, H, H] = th
    T[G, G, H, H] = D_mu(Mu)
    T[H, G, G, H] = Mu.transpose(2, 0, 1, 3)
    T[G, H, G, H] = -Mu.transpose(0, 2, 1, 3)
    return F.normalize(T)


def lts_bicrossed(pair: LtsMatchedPair, check=True) -> LieTripleSystem:
    from .matched_pairs import bicrossed

    if check and not pair.validated:
        pair = pair.validate()
    F = pair.F
    T = lts_bicrossed_tensor(F, pair.g.t, pair.h.t, pair.Mu, pair.Nu)
    E = bicrossed(pair.as_ly(), check=False)
    if not F.equal(T, E.t) or not F.is_zero(E.c):
        raise AssertionError("triple-system bicrossed product disagrees with the LY bicrossed product")
    return LieTripleSystem(F, T, validated=pair.validated)


def _lts_map(pair, r):
    r = pair.F.array(r)
    if r.shape != (pair.g.dim, pair.h.dim):
        raise ValueError(f"map has shape {r.shape}, expected {(pair.g.dim, pair.h.dim)}")
    return r


def lts_induced_ternary(pair: LtsMatchedPair, r):
    F = pair.F
    rv = _lts_map(pair, r).T
    ein = np.einsum
    th = (
        pair.h.t
        + ein("ai,bj,ijcd->abcd", rv, rv, D_mu(pair.Mu))
        + ein("bj,ck,jkad->abcd", rv, rv, pair.Mu)
        - ein("ai,ck,ikbd->abcd", rv, rv, pair.Mu)
    )
    return F.normalize(th)


def lts_deformation_residual(pair: LtsMatchedPair, r):
    F = pair.F
    rv = _lts_map(pair, r).T
    ein = np.einsum
    lhs = (
        ein("ai,bj,ck,ijko->abco", rv, rv, rv, pair.g.t)
        + ein("cz,abzo->abco", rv, D_mu(pair.Nu))
        + ein("az,bczo->abco", rv, pair.Nu)
        - ein("bz,aczo->abco", rv, pair.Nu)
    )
    rhs = ein("abcd,do->abco", lts_induced_ternary(pair, r), rv)
    return F.normalize(lhs - rhs)


def check_lts_deformation_map(pair: LtsMatchedPair, r) -> Report:
    from .deformation import check_deformation_map

    out = Report()
    out.add("defor-triple", lts_deformation_residual(pair, r))
    if out.passed != check_deformation_map(pair.as_ly(), r).passed:
        raise AssertionError("triple-system deformation check disagrees with the LY embedding")
    return out


def _require_lts_dm(pair, r):
    rep = check_lts_deformation_map(pair, r)
    if not rep:
        raise StructureError("not a deformation map", rep)
    return _lts_map(pair, r)


def lts_induced_system(pair: LtsMatchedPair, r) -> LieTripleSystem:
    r = _require_lts_dm(pair, r)
    return LieTripleSystem(pair.F, lts_induced_ternary(pair, r))


def lts_induced_nu(pair: LtsMatchedPair, r):
    """nu_r(a, b) x = nu(a, b) x + [[x, r a, r b]] - r(D_mu(x, r a) b - mu(x, r b) a)."""
    F = pair.F
    r = _require_lts_dm(pair, r)
    rv = r.T
    ein = np.einsum
    Nu = (
        pair.Nu
        + ein("ai,bj,xijo->abxo", rv, rv, pair.g.t)
        - ein("ai,xibs,so->abxo", rv, D_mu(pair.Mu), rv)
        + ein("bj,xjas,so->abxo", rv, pair.Mu, rv)
    )
    return F.normalize(Nu)


def lts_induced_representation(pair: LtsMatchedPair, r) -> LtsRepresentation:
    return LtsRepresentation(lts_induced_system(pair, r), lts_induced_nu(pair, r))


def lts_graph_is_subsystem(pair: LtsMatchedPair, r) -> bool:
    """Graph(r) is a subsystem of the bicrossed product."""
    from .algebra import is_subalgebra
    from .deformation import graph_span

    E = lts_bicrossed(pair, check=False)
    return is_subalgebra(E.as_ly(), graph_span(pair.as_ly(), r))


def lts_enumerate_deformation_maps(pair: LtsMatchedPair, budget=None):
    from .deformation import DEFAULT_BUDGET, enumerate_deformation_maps

    return enumerate_deformation_maps(pair.as_ly(), DEFAULT_BUDGET if budget is None else budget)


def check_lts_dm_equivalence(pair: LtsMatchedPair, r, r2, sigma) -> bool:
    from .deformation import check_dm_equivalence

    return check_dm_equivalence(pair.as_ly(), r, r2, sigma)


def lts_classify_complements(E: LieTripleSystem, g_span, h_span, budget=None):
    from .deformation import DEFAULT_BUDGET, classify_complements
    from .matched_pairs import Inclusion

    return classify_complements(Inclusion(E.as_ly(), g_span, h_span), DEFAULT_BUDGET if budget is None else budget)
