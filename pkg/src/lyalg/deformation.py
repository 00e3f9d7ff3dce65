"""Deformation maps r: h -> g of a matched pair, and classifying complements.

A map r is stored as a (dim g, dim h) matrix; ``rv = r.T`` so that
``rv[a, :]`` is r(eps_a).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels, linalg
from .algebra import LieYamagutiAlgebra, _as_matrix, check_ly_axioms, homomorphism_report, is_subalgebra, zero_algebra
from .fields import FieldError, PrimeField
from .matched_pairs import (
    Inclusion,
    MatchedPair,
    bicrossed,
    canonical_matched_pair,
    check_factorization,
    make_action_pair,
    zero_pair,
)
from .report import Report, StructureError
from .representations import Representation, check_representation, derived_tensor

DEFAULT_BUDGET = 2 ** 20


def _map(mp, r):
    F = mp.F
    r = F.array(r)
    if r.shape != (mp.g.dim, mp.h.dim):
        raise ValueError(f"map has shape {r.shape}, expected {(mp.g.dim, mp.h.dim)}")
    return r


class DeformationMap:
    def __init__(self, mp: MatchedPair, r, validated=False):
        self.mp = mp
        self.r = _map(mp, r)
        self.validated = validated

    def __repr__(self):
        rows = "; ".join(" ".join(self.mp.F.format(v) for v in row) for row in self.r)
        return f"<DeformationMap [{rows}]>"


def induced_brackets(mp: MatchedPair, r):
    """Twisted brackets [,]'_r and [[,,]]'_r on h, for any linear r."""
    F = mp.F
    rv = _map(mp, r).T
    ein = np.einsum
    ch = mp.h.c + ein("ai,ibo->abo", rv, mp.R) - ein("bi,iao->abo", rv, mp.R)
    th = (
        mp.h.t
        + ein("ai,bj,ijco->abco", rv, rv, mp.Drm)
        + ein("bi,cj,ijao->abco", rv, rv, mp.Mu)
        - ein("ai,cj,ijbo->abco", rv, rv, mp.Mu)
    )
    return F.normalize(ch), F.normalize(th)


def deformation_residuals(mp: MatchedPair, r):
    F = mp.F
    r = _map(mp, r)
    rv = r.T
    ein = np.einsum
    ch_r, th_r = induced_brackets(mp, r)
    d1 = (
        ein("ai,bj,ijo->abo", rv, rv, mp.g.c)
        + ein("bj,ajo->abo", rv, mp.Psi)
        - ein("aj,bjo->abo", rv, mp.Psi)
        - ein("abs,so->abo", ch_r, rv)
    )
    d2 = (
        ein("ai,bj,ck,ijko->abco", rv, rv, rv, mp.g.t)
        + ein("ck,abko->abco", rv, mp.Dpn)
        + ein("ak,bcko->abco", rv, mp.Nu)
        - ein("bk,acko->abco", rv, mp.Nu)
        - ein("abcs,so->abco", th_r, rv)
    )
    return {"defor-bracket": F.normalize(d1), "defor-triple": F.normalize(d2)}


def check_deformation_map(mp: MatchedPair, r) -> Report:
    out = Report()
    for name, res in deformation_residuals(mp, r).items():
        out.add(name, res)
    return out


def _require_dm(mp, r):
    if isinstance(r, DeformationMap):
        if r.validated:
            return r.r
        r = r.r
    rep = check_deformation_map(mp, r)
    if not rep:
        raise StructureError("not a deformation map: " + "; ".join(rep.failed_names()), rep)
    return _map(mp, r)


def graph_span(mp: MatchedPair, r):
    """Columns (r(eps_a), eps_a) spanning Graph(r) inside g ⊕ h."""
    F = mp.F
    r = _map(mp, r)
    return F.array(np.concatenate([r, F.eye(mp.h.dim)], axis=0))


def graph_algebra(mp: MatchedPair, r, E=None) -> LieYamagutiAlgebra:
    """Graph(r) as an algebra, coordinatized by its h-components.

    Valid only when the graph is closed in the bicrossed product; the
    h-component of a bracket of graph elements then determines it.
    """
    F = mp.F
    E = bicrossed(mp, check=False) if E is None else E
    S = graph_span(mp, r)
    n = mp.g.dim
    c = F.einsum("ia,jb,ijk->abk", S, S, E.c)[..., n:]
    t = F.einsum("ia,jb,kc,ijkl->abcl", S, S, S, E.t)[..., n:]
    return LieYamagutiAlgebra(F, c, t)


def induced_algebra(mp: MatchedPair, r) -> LieYamagutiAlgebra:
    """h_r, the LY structure on h induced by a deformation map."""
    r = _require_dm(mp, r)
    ch, th = induced_brackets(mp, r)
    return LieYamagutiAlgebra(mp.F, ch, th)


def induced_action(mp: MatchedPair, r):
    """(psi_r, nu_r) as tensors ``Psi_r[a, x, :]`` and ``Nu_r[a, b, x, :]``."""
    F = mp.F
    rv = _map(mp, r).T
    ein = np.einsum
    Psi = mp.Psi + ein("ai,ixo->axo", rv, mp.g.c) + ein("xas,so->axo", mp.R, rv)
    Nu = (
        mp.Nu
        + ein("ai,bj,xijo->abxo", rv, rv, mp.g.t)
        - ein("ai,xibs,so->abxo", rv, mp.Drm, rv)
        + ein("bi,xias,so->abxo", rv, mp.Mu, rv)
    )
    return F.normalize(Psi), F.normalize(Nu)


def induced_D_closed_form(mp: MatchedPair, r):
    """D_{psi_r, nu_r} from its closed formula, without going through psi_r and nu_r."""
    F = mp.F
    rv = _map(mp, r).T
    ein = np.einsum
    D = (
        mp.Dpn
        + ein("ai,bj,ijxo->abxo", rv, rv, mp.g.t)
        + ein("ai,ixbs,so->abxo", rv, mp.Mu, rv)
        - ein("bi,ixas,so->abxo", rv, mp.Mu, rv)
    )
    return F.normalize(D)


def induced_representation(mp: MatchedPair, r) -> Representation:
    """(g; psi_r, nu_r) as a representation of h_r."""
    r = _require_dm(mp, r)
    hr = induced_algebra(mp, r)
    Psi, Nu = induced_action(mp, r)
    rep = Representation(hr, Psi, Nu)
    if not mp.F.equal(derived_tensor(mp.F, hr.c, Psi, Nu), induced_D_closed_form(mp, r)):
        raise AssertionError("derived operator of the induced representation disagrees with its closed form")
    return rep


def dm_equivalence_report(mp: MatchedPair, r, r2, sigma) -> Report:
    """The two sigma-identities relating deformation maps r and r2, term by term."""
    F = mp.F
    r, r2 = _map(mp, r), _map(mp, r2)
    sigma = F.array(sigma)
    if not linalg.is_invertible(F, sigma):
        raise StructureError("sigma is not invertible")
    ein = np.einsum
    sv = sigma.T  # sv[a, :] = sigma(eps_a)
    w = ein("as,si->ai", sv, r2.T)  # w[a, :] = r2(sigma(eps_a))
    rv = r.T
    ch, th, R, Mu, Drm = mp.h.c, mp.h.t, mp.R, mp.Mu, mp.Drm
    lhs = ein("abs,so->abo", ch, sv) - ein("ai,bj,ijo->abo", sv, sv, ch)
    rhs = (
        ein("ai,bj,ijo->abo", w, sv, R) - ein("bi,aj,ijo->abo", w, sv, R)
        - ein("ai,ibs,so->abo", rv, R, sv) + ein("bi,ias,so->abo", rv, R, sv)
    )
    out = Report()
    out.add("sigma-bracket", F.normalize(lhs - rhs))
    lhs = ein("abcs,so->abco", th, sv) - ein("ai,bj,ck,ijko->abco", sv, sv, sv, th)
    rhs = (
        ein("ai,bj,ck,ijko->abco", w, w, sv, Drm)
        + ein("bi,cj,ak,ijko->abco", w, w, sv, Mu)
        - ein("ai,cj,bk,ijko->abco", w, w, sv, Mu)
        - ein("ai,bj,ijcs,so->abco", rv, rv, Drm, sv)
        - ein("bi,cj,ijas,so->abco", rv, rv, Mu, sv)
        + ein("ai,cj,ijbs,so->abco", rv, rv, Mu, sv)
    )
    out.add("sigma-triple", F.normalize(lhs - rhs))
    return out


def graph_isomorphism_report(mp: MatchedPair, r, r2, sigma, E=None) -> Report:
    """Whether (r(a), a) -> (r2(sigma a), sigma a) is an isomorphism Graph(r) -> Graph(r2)."""
    E = bicrossed(mp, check=False) if E is None else E
    A, B = graph_algebra(mp, r, E), graph_algebra(mp, r2, E)
    return homomorphism_report(A, B, sigma)


def check_dm_equivalence(mp: MatchedPair, r, r2, sigma) -> bool:
    ok = dm_equivalence_report(mp, r, r2, sigma).passed
    if ok != graph_isomorphism_report(mp, r, r2, sigma).passed:
        raise AssertionError("sigma-identities disagree with the graph isomorphism criterion")
    return ok


def _require_finite(F):
    if not isinstance(F, PrimeField):
        raise FieldError(f"enumeration needs a finite field, got {F}")


def enumerate_deformation_maps(mp: MatchedPair, budget=DEFAULT_BUDGET):
    """Every deformation map of a matched pair over GF(p), in lexicographic order of entries."""
    F = mp.F
    _require_finite(F)
    dg, dh = mp.g.dim, mp.h.dim
    total = F.p ** (dg * dh)
    if total > budget:
        raise FieldError(f"{total} candidate maps exceed the budget of {budget}")
    found = kernels.scan_defmaps_modp(
        F.p, dg, dh, mp.g.c, mp.g.t, mp.h.c, mp.h.t, mp.R, mp.Mu, mp.Psi, mp.Nu, mp.Drm, mp.Dpn, 0, total
    )
    out = []
    for idx in found:
        digits = np.zeros(dg * dh, dtype=np.int64)
        rest = idx
        for pos in range(dg * dh - 1, -1, -1):
            digits[pos] = rest % F.p
            rest //= F.p
        out.append(DeformationMap(mp, digits.reshape(dg, dh), validated=True))
    return out


def general_linear_group(F, n):
    _require_finite(F)
    for entries in itertools.product(F.elements(), repeat=n * n):
        M = F.array(np.array(entries, dtype=np.int64).reshape(n, n))
        if linalg.is_invertible(F, M):
            yield M


def _key(A):
    return np.asarray(A.c).tobytes() + b"|" + np.asarray(A.t).tobytes()


def _subspace_key(F, S):
    """Canonical form of the column span of S (RREF of its transpose)."""
    R, piv = linalg.rref(F, np.asarray(S).T)
    return np.asarray(R[: len(piv)]).tobytes()


@dataclass
class ComplementCensus:
    inclusion: Inclusion
    matched_pair: MatchedPair
    maps: list
    relation: np.ndarray
    classes: list
    graphs: list = field(default_factory=list)

    @property
    def factorization_index(self):
        return len(self.classes)


def _transport(A, P):
    """Structure constants of A carried along by sigma = P^{-1} (i.e. sigma.A)."""
    F = A.F
    Q = linalg.inverse(F, P)
    c = F.einsum("ia,jb,ijk,ok->abo", P, P, A.c, Q)
    t = F.einsum("ia,jb,kc,ijkl,ol->abco", P, P, P, A.t, Q)
    return c, t


def equivalence_relation(mp: MatchedPair, maps, witnesses=True):
    """Relation matrix of the deformation-map equivalence over all invertible sigma.

    r ~ r' exactly when some sigma is an isomorphism h_r -> h_r' (the two
    sigma-identities say precisely this), so each induced algebra is carried
    around its GL(h) orbit once.  A witness sigma for every related pair is
    re-checked against the displayed identities when ``witnesses`` is set.
    """
    F = mp.F
    m = mp.h.dim
    algs = [LieYamagutiAlgebra(F, *induced_brackets(mp, d.r)) for d in maps]
    index = {}
    for j, A in enumerate(algs):
        index.setdefault(_key(A), []).append(j)
    group = list(general_linear_group(F, m))
    k = len(maps)
    rel = np.zeros((k, k), dtype=bool)
    wit = {}
    for i, A in enumerate(algs):
        for P in group:
            c, t = _transport(A, P)
            for j in index.get(c.tobytes() + b"|" + t.tobytes(), ()):
                if not rel[i, j]:
                    rel[i, j] = True
                    wit[i, j] = linalg.inverse(F, P)
    if witnesses:
        for (i, j), sigma in wit.items():
            if not dm_equivalence_report(mp, maps[i].r, maps[j].r, sigma):
                raise AssertionError(f"witness for maps {i} ~ {j} fails the sigma-identities")
    return rel, wit


def partition_from_relation(rel):
    """Classes of an equivalence relation; raises if rel is not one."""
    k = rel.shape[0]
    if not rel[np.arange(k), np.arange(k)].all():
        raise AssertionError("relation is not reflexive")
    if not (rel == rel.T).all():
        raise AssertionError("relation is not symmetric")
    sq = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    if (sq & ~rel).any():
        raise AssertionError("relation is not transitive")
    classes, seen = [], set()
    for i in range(k):
        if i not in seen:
            cls = [j for j in range(k) if rel[i, j]]
            seen.update(cls)
            classes.append(cls)
    return classes


def graph_in_E(inc: Inclusion, r):
    """Graph(r) expressed in the coordinates of E."""
    F = inc.E.F
    return F.normalize(np.asarray(inc.g_span).dot(r) + inc.h_span)


def classify_complements(inc: Inclusion, budget=DEFAULT_BUDGET) -> ComplementCensus:
    E, G = inc.E, inc.g_span
    if not check_factorization(E, G, inc.h_span, strong=True):
        raise StructureError("h is not a strong g-complement in E")
    mp = canonical_matched_pair(inc)
    maps = enumerate_deformation_maps(mp, budget)
    graphs = []
    for d in maps:
        S = graph_in_E(inc, d.r)
        if not check_factorization(E, G, S):
            raise AssertionError(f"graph of {d} is not a g-complement")
        graphs.append(S)
    rel, _ = equivalence_relation(mp, maps)
    classes = partition_from_relation(rel)
    return ComplementCensus(inc, mp, maps, rel, classes, graphs)


def scan_complements(inc: Inclusion):
    """All g-complements in E, found by scanning every subspace of the right dimension."""
    E, G = inc.E, inc.g_span
    F = E.F
    _require_finite(F)
    k = inc.h_span.shape[1]
    out = []
    for S in linalg.all_subspaces(F, E.dim, k):
        if linalg.rank(F, np.concatenate([G, S], axis=1)) == E.dim and is_subalgebra(E, S):
            out.append(S)
    return out


# matched pairs realizing the classical operators as deformation maps


def homomorphism_pair(A: LieYamagutiAlgebra, B: LieYamagutiAlgebra) -> MatchedPair:
    """Pair (B, A, 0, 0): its deformation maps A -> B are the homomorphisms."""
    return zero_pair(B, A).validate()


def derivation_pair(rep: Representation) -> MatchedPair:
    """Pair (V, A, (0, 0), (rho, mu)): deformation maps A -> V are derivations."""
    A, F, m = rep.algebra, rep.F, rep.dim
    n = A.dim
    V = zero_algebra(F, m)
    return MatchedPair(V, A, F.zeros((m, n, n)), F.zeros((m, m, n, n)), rep.R, rep.Mu).validate()


def rota_baxter0_pair(rep: Representation) -> MatchedPair:
    """Pair (A, V, (rho, mu), (0, 0)): deformation maps V -> A are the weight-0 relative RB operators."""
    A, F, m = rep.algebra, rep.F, rep.dim
    n = A.dim
    V = zero_algebra(F, m)
    return MatchedPair(A, V, rep.R, rep.Mu, F.zeros((m, n, n)), F.zeros((m, m, n, n))).validate()


def crossed_homomorphism_pair(g, h, R, Mu) -> MatchedPair:
    """Pair (h, g, (0, 0), (rho, mu)) for an action of g on h: deformation maps are crossed homomorphisms."""
    return make_action_pair(g, h, R, Mu).swapped()


def rota_baxter1_pair(g, h, R, Mu) -> MatchedPair:
    """Pair (g, h, (rho, mu), (0, 0)) for an action: deformation maps are weight-1 relative RB operators."""
    return make_action_pair(g, h, R, Mu)


def lie_matched_pair(F, cg, ch, R, Psi) -> MatchedPair:
    """A matched pair of Lie algebras seen with zero ternary brackets and mu = nu = 0."""
    from .algebra import from_lie

    g, h = from_lie(F, cg, "zero"), from_lie(F, ch, "zero")
    n, m = g.dim, h.dim
    return MatchedPair(g, h, R, F.zeros((n, n, m, m)), Psi, F.zeros((m, m, n, n))).validate()


def induced_structure_report(mp: MatchedPair, r) -> Report:
    """Axioms of h_r, representation conditions of (g; psi_r, nu_r), and the closed-form D check."""
    out = Report()
    out.extend(check_ly_axioms(induced_algebra(mp, r)), "h_r:")
    rep = induced_representation(mp, r)
    out.extend(check_representation(rep), "psi_r,nu_r:")
    return out
