"""Regenerate the bundled fixture files under src/lyalg/fixtures."""
import os

import numpy as np

from lyalg import GF, QQ, from_lie, zero_algebra
from lyalg.algebra import LieYamagutiAlgebra
from lyalg.deformation import rota_baxter0_pair
from lyalg.io import parse_algebra, serialize_algebra, serialize_bundle, serialize_matched_pair
from lyalg.matched_pairs import bicrossed, zero_pair
from lyalg.lts import LieTripleSystem, LtsMatchedPair, lts_enumerate_deformation_maps
from lyalg.representations import adjoint

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "lyalg", "fixtures")


def nonabelian(F):
    c = F.zeros((2, 2, 2))
    c[0, 1, 0], c[1, 0, 0] = 1, -1
    return from_lie(F, F.normalize(c), "iterated")


def sl2(F):
    # basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    c = np.zeros((3, 3, 3), dtype=np.int64)
    for i, j, k, v in ((0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)):
        c[i, j, k], c[j, i, k] = v, -v
    return from_lie(F, F.array(c), "iterated")


def write(name, text):
    with open(os.path.join(OUT, name), "w") as fh:
        fh.write(text)


def main():
    write("zero2.alg", serialize_algebra(zero_algebra(QQ, 2)))
    write("failing2.alg", "# [e1, e2] = e1 with [[e1, e2, e1]] = e2\n" + serialize_algebra(
        parse_algebra("format algebra 1\nfield Q\ndim 2\nb 1 2 1 1\nt 1 2 1 2 1\n")))
    write("nonabelian2.alg", serialize_algebra(nonabelian(QQ)))
    write("sl2.alg", serialize_algebra(sl2(QQ)))

    z = zero_algebra(GF(2), 1)
    write("zero11_gf2.bundle", serialize_matched_pair(zero_pair(z, z)))

    for F, tag in ((GF(2), "gf2"), (QQ, "q"), (GF(7), "gf7")):
        A = nonabelian(F)
        mp = rota_baxter0_pair(adjoint(A))
        maps = {}
        if F == QQ or F == GF(7):
            maps = {"r": F.array([[0, 0], [0, 1]]), "r2": F.array([[1, 0], [0, 0]])}
        write(f"rb0_{tag}.bundle", serialize_matched_pair(mp, maps))
    mp = rota_baxter0_pair(adjoint(nonabelian(GF(2))))
    E = bicrossed(mp)
    eye = GF(2).eye(4)
    write("rb0_gf2_inclusion.bundle", serialize_bundle(
        GF(2), {"E": E}, maps={"g_span": eye[:, :2], "h_span": eye[:, 2:]}))
    write("adjoint_rep.bundle", serialize_bundle(
        QQ, {"g": nonabelian(QQ)}, {"rho": adjoint(nonabelian(QQ)).R, "mu": adjoint(nonabelian(QQ)).Mu},
        module_dim=2))
    write("rb0_gf2_bad.bundle", serialize_matched_pair(mp, {"r": GF(2).array([[1, 0], [0, 0]])}))

    # Lie triple systems over GF(3)
    F = GF(3)
    t = np.zeros((2, 2, 2, 2), dtype=np.int64)
    t[0, 1, 0, 1], t[1, 0, 0, 1] = 1, -1
    s = LieTripleSystem(F, F.array(t)).validate()
    write("lts2_gf3.alg", serialize_algebra(s.as_ly()))
    zero2 = LieTripleSystem(F, F.zeros((2, 2, 2, 2)))
    pair = LtsMatchedPair(s, zero2, adjoint(s.as_ly()).Mu, F.zeros((2, 2, 2, 2))).validate()
    good = [d.r for d in lts_enumerate_deformation_maps(pair)]
    bad = next(r for r in (F.array(np.array(v).reshape(2, 2)) for v in np.ndindex(3, 3, 3, 3))
               if not any(np.array_equal(r, g) for g in good))
    acts = {"mu": pair.Mu, "nu": pair.Nu}
    algs = {"g": s.as_ly(), "h": zero2.as_ly()}
    write("lts_rb0_gf3.bundle", serialize_bundle(F, algs, acts, {"r": good[-1]}))
    write("lts_rb0_gf3_bad.bundle", serialize_bundle(F, algs, acts, {"r": bad}))
    # fails the first compatibility condition (mu against the ternary bracket of h)
    th = np.zeros((2, 2, 2, 2), dtype=np.int64)
    th[0, 1] = [[2, 2], [1, 1]]
    th[1, 0] = -th[0, 1]
    Mu = np.zeros((1, 1, 2, 2), dtype=np.int64)
    Mu[0, 0] = [[1, 1], [0, 0]]
    write("lts_mp_violating_gf3.bundle", serialize_bundle(
        F, {"g": zero_algebra(F, 1), "h": LieTripleSystem(F, F.array(th)).as_ly()},
        {"mu": F.array(Mu), "nu": F.zeros((2, 2, 1, 1))}))


if __name__ == "__main__":
    main()
