"""Compiled inner loops of the orbit census.

The universe is a list of ``m`` points (2n dihedral elements or n residues).
A subset is keyed by two int64 words ``(hi, lo)`` compared lexicographically;
``img_hi[g, i] | img_lo[g, i]`` are the bits contributed by the image of point
``i`` under group element ``g``.  ``intv[i, j]`` is the interval index of the
ordered pair ``(i, j)``.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _canonical(c, p, img_hi, img_lo, hi, lo):
    # returns the stabilizer order, or 0 when some image is smaller
    stab = 0
    for g in range(img_hi.shape[0]):
        h = 0
        w = 0
        for t in range(p):
            h |= img_hi[g, c[t]]
            w |= img_lo[g, c[t]]
        if h < hi or (h == hi and w < lo):
            return 0
        if h == hi and w == lo:
            stab += 1
    return stab


@njit(cache=True)
def _scan(m, p, first, pt_hi, pt_lo, img_hi, img_lo, intv, n_int, mixed_only, fill,
          out_hi, out_lo, out_stab, out_iv):
    """Visit every p-subset whose smallest point is ``first``.

    With ``fill`` false only the number of canonical subsets is returned;
    otherwise their keys, stabilizer orders and interval vectors are written.
    """
    c = np.empty(p, dtype=np.int64)
    c[0] = first
    for t in range(1, p):
        c[t] = first + t
    if p > 0 and c[p - 1] >= m:
        return 0
    count = 0
    while True:
        hi = 0
        lo = 0
        for t in range(p):
            hi |= pt_hi[c[t]]
            lo |= pt_lo[c[t]]
        if not mixed_only or (hi != 0 and lo != 0):
            stab = _canonical(c, p, img_hi, img_lo, hi, lo)
            if stab > 0:
                if fill:
                    out_hi[count] = hi
                    out_lo[count] = lo
                    out_stab[count] = stab
                    for k in range(n_int):
                        out_iv[count, k] = 0
                    for a in range(p):
                        for b in range(p):
                            out_iv[count, intv[c[a], c[b]]] += 1
                count += 1
        # next combination with c[0] fixed
        t = p - 1
        while t >= 1 and c[t] == m - p + t:
            t -= 1
        if t < 1:
            break
        c[t] += 1
        for u in range(t + 1, p):
            c[u] = c[u - 1] + 1
    return count
