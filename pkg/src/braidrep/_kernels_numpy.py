"""Pure-numpy kernels for run-length encoded free-group words.

A word is a pair of equal-length int64 arrays ``(gens, exps)``: ``gens``
holds 0-based generator ids and ``exps`` nonzero exponents, with no two
adjacent entries sharing a generator once reduced.

This backend is fully vectorized (no per-letter Python loop) and serves as
the reference implementation for differential tests against the numba
backend.  Reduction iterates merge passes to a fixed point, which is linear
per pass but can need several passes for deeply nested cancellation; the
numba backend does the whole job in one pass.
"""

import numpy as np

_EMPTY = np.empty(0, dtype=np.int64)


def reduce_word(gens, exps):
    """Freely reduce a run-length letter sequence.

    Merges adjacent runs with equal generator, drops zero exponents, and
    repeats until stable.  Returns fresh arrays.
    """
    gens = np.asarray(gens, dtype=np.int64)
    exps = np.asarray(exps, dtype=np.int64)
    while True:
        keep = exps != 0
        if not keep.all():
            gens = gens[keep]
            exps = exps[keep]
        if gens.shape[0] <= 1:
            break
        starts_mask = np.empty(gens.shape[0], dtype=np.bool_)
        starts_mask[0] = True
        np.not_equal(gens[1:], gens[:-1], out=starts_mask[1:])
        if starts_mask.all():
            break
        starts = np.flatnonzero(starts_mask)
        exps = np.add.reduceat(exps, starts)
        gens = gens[starts]
    return gens.copy(), exps.copy()


def substitute(ug, ue, off, ig, ie):
    """Apply a generator substitution to the word ``(ug, ue)``.

    The images are packed flat: generator ``k`` maps to the run-length word
    ``ig[off[k]:off[k+1]], ie[off[k]:off[k+1]]``.  Negative exponents read
    the image segment right to left with negated exponents.  The result is
    freely reduced.
    """
    ug = np.asarray(ug, dtype=np.int64)
    ue = np.asarray(ue, dtype=np.int64)
    if ug.shape[0] == 0:
        return _EMPTY.copy(), _EMPTY.copy()
    seglen = off[ug + 1] - off[ug]
    block = np.abs(ue) * seglen
    total = int(block.sum())
    if total == 0:
        return _EMPTY.copy(), _EMPTY.copy()
    starts = np.zeros(ug.shape[0], dtype=np.int64)
    np.cumsum(block[:-1], out=starts[1:])
    owner = np.repeat(np.arange(ug.shape[0]), block)
    pos = np.arange(total, dtype=np.int64) - np.repeat(starts, block)
    seg = np.repeat(seglen, block)
    inseg = pos % seg
    neg = (ue < 0)[owner]
    inseg = np.where(neg, seg - 1 - inseg, inseg)
    idx = np.repeat(off[ug], block) + inseg
    out_g = ig[idx]
    out_e = np.where(neg, -ie[idx], ie[idx])
    return reduce_word(out_g, out_e)
