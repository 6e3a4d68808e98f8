"""Word arithmetic: reduction, inversion, parsing, permutations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep.words import (
    Alphabet,
    Permutation,
    Word,
    commutator,
    concat,
    conjugate,
    cyclic_reduce,
    generator,
    identity_word,
    invert,
    multiply,
    parse_word,
    perm_compose,
    perm_of_transposition,
    random_word,
    word_from_letters,
)

AB = Alphabet([("sigma", 3), ("x", 2), ("z", 1)])


def letters(w):
    return list(w.letters())


@st.composite
def raw_words(draw, alphabet=AB, max_len=24):
    n = draw(st.integers(min_value=0, max_value=max_len))
    gens = st.integers(min_value=0, max_value=alphabet.rank - 1)
    exps = st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0)
    pairs = draw(st.lists(st.tuples(gens, exps), min_size=n, max_size=n))
    return word_from_letters(
        alphabet, [(alphabet.gen_info(g) + (e,)) for g, e in pairs]
    )


def test_empty_word():
    e = identity_word(AB)
    assert len(e) == 0
    assert str(e) == ""
    assert e == multiply(e, e)


def test_reduction_cancels_adjacent_inverses():
    s1 = generator(AB, "sigma", 1)
    w = multiply(s1, invert(s1))
    assert len(w) == 0
    w = concat(s1, s1, invert(s1))
    assert w == s1


def test_reduction_merges_runs():
    s2 = generator(AB, "sigma", 2)
    w = multiply(s2, s2)
    assert letters(w) == [("sigma", 2, 2)]
    assert len(w) == 2


def test_parse_round_trip():
    w = parse_word("s1 x2^-3 z1 s2^2", AB)
    assert str(w) == "s1 x2^-3 z1 s2^2"
    assert parse_word(str(w), AB) == w


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("s0", AB)
    with pytest.raises(ValueError):
        parse_word("q1", AB)
    with pytest.raises(ValueError):
        parse_word("s1^0", AB)
    with pytest.raises(ValueError):
        parse_word("x3", AB)


def test_long_family_names_accepted():
    assert generator(AB, "sigma", 2) == parse_word("s2", AB)
    assert AB.gid("sigma", 1) == AB.gid("s", 1)


def test_pow_and_invert():
    s1 = generator(AB, "sigma", 1)
    x1 = generator(AB, "x", 1)
    w = multiply(s1, x1)
    assert w ** 0 == identity_word(AB)
    assert w ** 2 == concat(w, w)
    assert w ** -1 == invert(w)
    assert multiply(w, invert(w)) == identity_word(AB)


@given(raw_words())
def test_invert_is_involution(w):
    assert invert(invert(w)) == w


@given(raw_words(), raw_words())
def test_product_inverse_reverses(u, v):
    assert invert(multiply(u, v)) == multiply(invert(v), invert(u))


@given(raw_words(), raw_words(), raw_words())
@settings(max_examples=60)
def test_multiply_associative(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


@given(raw_words())
def test_reduction_idempotent(w):
    again = Word(AB, w.gens, w.exps)
    assert again == w


@given(raw_words(), raw_words())
def test_conjugate_by_product(u, c):
    # (u^c) is u conjugated by c; conjugating twice by c, then c^-1 returns u
    v = conjugate(u, c)
    assert conjugate(v, invert(c)) == u


@given(raw_words())
def test_cyclic_reduce_conjugacy_witness(w):
    core, stripped = cyclic_reduce(w)
    assert conjugate(core, stripped) == w
    if len(core) >= 2:
        first = letters(core)[0]
        last = letters(core)[-1]
        assert not (first[0] == last[0] and first[1] == last[1] and first[2] * last[2] < 0)


@given(raw_words(), raw_words())
def test_commutator_vanishes_iff_commute(u, v):
    c = commutator(u, v)
    assert (len(c) == 0) == (multiply(u, v) == multiply(v, u))


def test_random_word_is_reduced_and_seeded():
    rng = random.Random(5)
    w1 = random_word(AB, 40, rng)
    w2 = random_word(AB, 40, random.Random(5))
    assert w1 == w2
    assert len(w1) <= 40
    again = Word(AB, w1.gens, w1.exps)
    assert again == w1


def test_words_hash_and_compare():
    u = parse_word("s1 s2", AB)
    v = multiply(generator(AB, "sigma", 1), generator(AB, "sigma", 2))
    assert u == v
    assert hash(u) == hash(v)
    assert u != parse_word("s2 s1", AB)


def test_alphabet_json_round_trip():
    data = AB.to_json()
    assert Alphabet.from_json(data) == AB


def test_alphabet_custom_start_index():
    tau = Alphabet([("tau", 3, 2)])
    assert tuple(tau.family_indices("tau")) == (2, 3, 4)
    w = parse_word("t2 t4", tau)
    assert letters(w) == [("tau", 2, 1), ("tau", 4, 1)]


def test_permutation_basics():
    p = perm_of_transposition(1, 4)
    assert p.apply(1) == 2 and p.apply(2) == 1 and p.apply(3) == 3
    q = perm_of_transposition(2, 4)
    pq = perm_compose(p, q)
    # apply p first, then q
    assert pq.apply(1) == 3
    assert perm_compose(pq, pq.inverse()) == Permutation.identity(4)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
