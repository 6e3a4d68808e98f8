"""Numba-compiled kernels for run-length encoded free-group words.

Same contract as ``_kernels_numpy``: words are (gens, exps) int64 pairs,
reduced means no zero exponents and no adjacent equal generators.  Both
kernels run in nopython mode with the GIL released, so relator sweeps can
fan out across threads.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def reduce_word(gens, exps):
    n = gens.shape[0]
    og = np.empty(n, dtype=np.int64)
    oe = np.empty(n, dtype=np.int64)
    top = 0
    for i in range(n):
        g = gens[i]
        e = exps[i]
        if e == 0:
            continue
        if top > 0 and og[top - 1] == g:
            s = oe[top - 1] + e
            if s == 0:
                top -= 1
            else:
                oe[top - 1] = s
        else:
            og[top] = g
            oe[top] = e
            top += 1
    return og[:top].copy(), oe[:top].copy()


@njit(cache=True, nogil=True)
def substitute(ug, ue, off, ig, ie):
    n = ug.shape[0]
    bound = 0
    for i in range(n):
        lo = off[ug[i]]
        hi = off[ug[i] + 1]
        sl = hi - lo
        if sl == 1:
            bound += 1
        else:
            e = ue[i]
            bound += (e if e > 0 else -e) * sl
    og = np.empty(bound, dtype=np.int64)
    oe = np.empty(bound, dtype=np.int64)
    top = 0
    for i in range(n):
        lo = off[ug[i]]
        hi = off[ug[i] + 1]
        sl = hi - lo
        e = ue[i]
        if sl == 0:
            continue
        if sl == 1:
            gg = ig[lo]
            ee = ie[lo] * e
            if ee != 0:
                if top > 0 and og[top - 1] == gg:
                    s = oe[top - 1] + ee
                    if s == 0:
                        top -= 1
                    else:
                        oe[top - 1] = s
                else:
                    og[top] = gg
                    oe[top] = ee
                    top += 1
            continue
        reps = e if e > 0 else -e
        for _ in range(reps):
            for k in range(sl):
                if e > 0:
                    j = lo + k
                    gg = ig[j]
                    ee = ie[j]
                else:
                    j = hi - 1 - k
                    gg = ig[j]
                    ee = -ie[j]
                if top > 0 and og[top - 1] == gg:
                    s = oe[top - 1] + ee
                    if s == 0:
                        top -= 1
                    else:
                        oe[top - 1] = s
                else:
                    og[top] = gg
                    oe[top] = ee
                    top += 1
    return og[:top].copy(), oe[:top].copy()
