"""Differential tests between the numba and numpy kernels.

Both backends must agree bit for bit on reduction and substitution, and both
must agree with a slow letter-by-letter reference implementation.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep import _backend
from braidrep._kernels_numpy import reduce_word as np_reduce
from braidrep._kernels_numpy import substitute as np_subst

if _backend.HAS_NUMBA:
    from braidrep._kernels_numba import reduce_word as nb_reduce
    from braidrep._kernels_numba import substitute as nb_subst

needs_numba = pytest.mark.skipif(not _backend.HAS_NUMBA, reason="numba not installed")

RANK = 4


def reference_reduce(gens, exps):
    stack = []
    for g, e in zip(gens.tolist(), exps.tolist()):
        for letter in [np.sign(e)] * abs(e):
            if stack and stack[-1][0] == g and stack[-1][1] == -letter:
                stack.pop()
            else:
                stack.append((g, letter))
    out_g, out_e = [], []
    for g, letter in stack:
        if out_g and out_g[-1] == g:
            out_e[-1] += letter
        else:
            out_g.append(g)
            out_e.append(letter)
    return np.array(out_g, dtype=np.int64), np.array(out_e, dtype=np.int64)


@st.composite
def raw_arrays(draw, max_len=30):
    n = draw(st.integers(min_value=0, max_value=max_len))
    gens = draw(
        st.lists(st.integers(0, RANK - 1), min_size=n, max_size=n)
    )
    exps = draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    return (
        np.array(gens, dtype=np.int64),
        np.array(exps, dtype=np.int64),
    )


@st.composite
def packed_images(draw):
    """Flat (off, ig, ie) arrays mapping RANK generators to short words."""
    off = [0]
    ig, ie = [], []
    for _ in range(RANK):
        seg = draw(st.integers(0, 3))
        for _ in range(seg):
            ig.append(draw(st.integers(0, RANK - 1)))
            ie.append(draw(st.integers(-2, 2).filter(lambda e: e != 0)))
        off.append(len(ig))
    return (
        np.array(off, dtype=np.int64),
        np.array(ig, dtype=np.int64),
        np.array(ie, dtype=np.int64),
    )


def assert_same(a, b):
    ag, ae = a
    bg, be = b
    assert ag.tolist() == bg.tolist()
    assert ae.tolist() == be.tolist()


@given(raw_arrays())
def test_numpy_reduce_matches_reference(raw):
    assert_same(np_reduce(*raw), reference_reduce(*raw))


@needs_numba
@given(raw_arrays())
def test_backends_reduce_identically(raw):
    assert_same(nb_reduce(*raw), np_reduce(*raw))


@needs_numba
@given(raw_arrays(), packed_images())
@settings(max_examples=150)
def test_backends_substitute_identically(raw, packed):
    gens, exps = raw
    off, ig, ie = packed
    a = nb_subst(gens, exps, off, ig, ie)
    b = np_subst(gens, exps, off, ig, ie)
    assert_same(a, b)


@given(raw_arrays(), packed_images())
def test_substitute_output_is_reduced(raw, packed):
    gens, exps = raw
    out_g, out_e = np_subst(gens, exps, *packed)
    assert not (out_e == 0).any()
    if out_g.shape[0] > 1:
        assert (out_g[1:] != out_g[:-1]).all()


def test_identity_substitution_reduces_word():
    off = np.arange(RANK + 1, dtype=np.int64)
    ig = np.arange(RANK, dtype=np.int64)
    ie = np.ones(RANK, dtype=np.int64)
    gens = np.array([0, 1, 1, 0], dtype=np.int64)
    exps = np.array([2, 3, -3, 1], dtype=np.int64)
    out_g, out_e = np_subst(gens, exps, off, ig, ie)
    assert out_g.tolist() == [0]
    assert out_e.tolist() == [3]


def test_backend_switching():
    current = _backend.backend_name()
    try:
        _backend.set_backend("numpy")
        assert _backend.backend_name() == "numpy"
        if _backend.HAS_NUMBA:
            _backend.set_backend("numba")
            assert _backend.backend_name() == "numba"
    finally:
        _backend.set_backend(current)
    with pytest.raises(ValueError):
        _backend.set_backend("fortran")


def test_words_work_on_numpy_backend():
    from braidrep.presentations import verify_representation
    from braidrep.representations import artin_rep

    current = _backend.backend_name()
    try:
        _backend.set_backend("numpy")
        assert verify_representation(artin_rep(4)).passed
    finally:
        _backend.set_backend(current)
