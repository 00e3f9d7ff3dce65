# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) hot loops: modular row reduction and the deformation-map scan.

Mirrors ``_pykernels`` exactly; see there for the tensor layout.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

BACKEND = "compiled"


cdef inline int64_t _inv(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_modp(M, int64_t p):
    cdef cnp.ndarray[int64_t, ndim=2] R = np.mod(np.array(M, dtype=np.int64), p)
    cdef Py_ssize_t rows = R.shape[0], cols = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef int64_t inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                tmp = R[r, j]
                R[r, j] = R[k, j]
                R[k, j] = tmp
        inv = _inv(R[r, c], p)
        for j in range(cols):
            R[r, j] = (R[r, j] * inv) % p
        for i in range(rows):
            if i != r and R[i, c] != 0:
                f = R[i, c]
                for j in range(cols):
                    R[i, j] = (R[i, j] - f * R[r, j]) % p
                    if R[i, j] < 0:
                        R[i, j] += p
        pivots.append(c)
        r += 1
    return R, pivots


def scan_defmaps_modp(int64_t p, int dg, int dh,
                      cg_, tg_, ch_, th_, R_, Mu_, Psi_, Nu_, Drm_, Dpn_,
                      int64_t start, int64_t stop):
    cdef int64_t[:, :, ::1] cg = np.ascontiguousarray(cg_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] tg = np.ascontiguousarray(tg_, dtype=np.int64)
    cdef int64_t[:, :, ::1] ch = np.ascontiguousarray(ch_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] th = np.ascontiguousarray(th_, dtype=np.int64)
    cdef int64_t[:, :, ::1] R = np.ascontiguousarray(R_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] Mu = np.ascontiguousarray(Mu_, dtype=np.int64)
    cdef int64_t[:, :, ::1] Psi = np.ascontiguousarray(Psi_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] Nu = np.ascontiguousarray(Nu_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] Drm = np.ascontiguousarray(Drm_, dtype=np.int64)
    cdef int64_t[:, :, :, ::1] Dpn = np.ascontiguousarray(Dpn_, dtype=np.int64)

    cdef int size = dg * dh
    cdef int64_t[::1] digits = np.zeros(size, dtype=np.int64)
    cdef int64_t[:, ::1] rv = np.zeros((dh, dg), dtype=np.int64)  # rv[a, i] = r(eps_a)_i
    cdef int64_t[::1] inner = np.zeros(dh, dtype=np.int64)
    cdef int64_t[::1] out = np.zeros(dg, dtype=np.int64)
    cdef int64_t[:, ::1] rr = np.zeros((dg, dg), dtype=np.int64)
    cdef int64_t idx, rest, s, v, w
    cdef int a, b, c, i, j, k, l, pos
    cdef bint good
    found = []

    for idx in range(start, stop):
        rest = idx
        for pos in range(size - 1, -1, -1):
            digits[pos] = rest % p
            rest //= p
        for i in range(dg):
            for a in range(dh):
                rv[a, i] = digits[i * dh + a]
        good = True

        # [r a, r b] + psi_a r b - psi_b r a - r([a,b]' + rho_{r a} b - rho_{r b} a)
        for a in range(dh):
            if not good:
                break
            for b in range(dh):
                for s in range(dh):
                    v = ch[a, b, s]
                    for i in range(dg):
                        v += rv[a, i] * R[i, b, s] - rv[b, i] * R[i, a, s]
                    inner[s] = v % p
                for k in range(dg):
                    v = 0
                    for i in range(dg):
                        if rv[a, i] != 0:
                            for j in range(dg):
                                v += rv[a, i] * rv[b, j] * cg[i, j, k]
                    for j in range(dg):
                        v += rv[b, j] * Psi[a, j, k] - rv[a, j] * Psi[b, j, k]
                    for s in range(dh):
                        v -= rv[s, k] * inner[s]
                    if v % p != 0:
                        good = False
                        break
                if not good:
                    break
        if not good:
            continue

        for a in range(dh):
            if not good:
                break
            for b in range(dh):
                if not good:
                    break
                for i in range(dg):
                    for j in range(dg):
                        rr[i, j] = (rv[a, i] * rv[b, j]) % p
                for c in range(dh):
                    for s in range(dh):
                        v = th[a, b, c, s]
                        for i in range(dg):
                            for j in range(dg):
                                w = rr[i, j]
                                if w != 0:
                                    v += w * Drm[i, j, c, s]
                                v += rv[b, i] * rv[c, j] * Mu[i, j, a, s] - rv[a, i] * rv[c, j] * Mu[i, j, b, s]
                        inner[s] = v % p
                    for l in range(dg):
                        v = 0
                        for i in range(dg):
                            for j in range(dg):
                                w = rr[i, j]
                                if w != 0:
                                    for k in range(dg):
                                        v += w * rv[c, k] * tg[i, j, k, l]
                        for k in range(dg):
                            v += rv[c, k] * Dpn[a, b, k, l] + rv[a, k] * Nu[b, c, k, l] - rv[b, k] * Nu[a, c, k, l]
                        for s in range(dh):
                            v -= rv[s, l] * inner[s]
                        if v % p != 0:
                            good = False
                            break
                    if not good:
                        break
        if good:
            found.append(idx)
    return found
