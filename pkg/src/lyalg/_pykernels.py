"""Pure numpy versions of the GF(p) hot loops.

Same signatures and results as the compiled ``_ckernels`` module.
"""
import numpy as np

BACKEND = "python"


def rref_modp(M, p):
    """Reduced row-echelon form of an int64 matrix over GF(p)."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit] = (R[hit] - np.outer(col[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def _decode(indices, p, size):
    digits = np.empty((len(indices), size), dtype=np.int64)
    rest = np.asarray(indices, dtype=np.int64).copy()
    for pos in range(size - 1, -1, -1):
        digits[:, pos] = rest % p
        rest //= p
    return digits


def scan_defmaps_modp(p, dg, dh, cg, tg, ch, th, R, Mu, Psi, Nu, Drm, Dpn, start, stop, batch=4096):
    """Indices in [start, stop) of the maps r: h -> g satisfying both deformation identities.

    A map is encoded by its dg*dh matrix entries r[i, a] (row-major, first
    entry most significant) read as a base-p integer.  All structure tensors
    use the argument-first layout ``T[args..., out]``.
    """
    found = []
    for lo in range(start, stop, batch):
        hi = min(stop, lo + batch)
        idx = np.arange(lo, hi, dtype=np.int64)
        r = _decode(idx, p, dg * dh).reshape(-1, dg, dh)
        rv = np.transpose(r, (0, 2, 1))  # rv[b, a, :] = r(eps_a)
        ok = _defor_zero(p, rv, r, cg, tg, ch, th, R, Mu, Psi, Nu, Drm, Dpn)
        found.extend(int(i) for i in idx[ok])
    return found


def _defor_zero(p, rv, r, cg, tg, ch, th, R, Mu, Psi, Nu, Drm, Dpn):
    ein = np.einsum
    # first identity, for every (alpha, beta)
    lhs = ein("bai,bcj,ijk->back", rv, rv, cg)
    lhs += ein("bcj,ajk->back", rv, Psi)
    lhs -= ein("bai,cik->back", rv, Psi)
    inner = np.broadcast_to(ch, (rv.shape[0],) + ch.shape).copy()
    inner += ein("bai,ics->bacs", rv, R)
    inner -= ein("bci,ias->bacs", rv, R)
    lhs -= ein("bacs,bks->back", inner % p, r)
    ok = ~np.any((lhs % p).reshape(len(rv), -1), axis=1)
    if not ok.any():
        return ok
    rv2, r2 = rv[ok], r[ok]
    # second identity, for every (alpha, beta, gamma)
    lhs = ein("bai,bcj,bdk,ijkl->bacdl", rv2, rv2, rv2, tg)
    lhs += ein("bdk,ackl->bacdl", rv2, Dpn)
    lhs += ein("bak,cdkl->bacdl", rv2, Nu)
    lhs -= ein("bck,adkl->bacdl", rv2, Nu)
    inner = np.broadcast_to(th, (len(rv2),) + th.shape).copy()
    inner += ein("bai,bcj,ijds->bacds", rv2, rv2, Drm)
    inner += ein("bci,bdj,ijas->bacds", rv2, rv2, Mu)
    inner -= ein("bai,bdj,ijcs->bacds", rv2, rv2, Mu)
    lhs -= ein("bacds,bls->bacdl", inner % p, r2)
    ok2 = ~np.any((lhs % p).reshape(len(rv2), -1), axis=1)
    out = np.zeros(len(rv), dtype=bool)
    out[np.nonzero(ok)[0][ok2]] = True
    return out
