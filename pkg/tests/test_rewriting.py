"""Coset rewriting into the stabilizer of the last strand."""

import random

import pytest

from braidrep.automorphisms import is_identity
from braidrep.presentations import (
    dn_orientable_presentation,
    permutation_image,
    surface_braid_presentation,
)
from braidrep.representations import artin_rep, rho_u
from braidrep.rewriting import (
    Transversal,
    coset_representative,
    expand,
    induced_witness_endo,
    relator_rewrite_report,
    rewrite,
    roundtrip_check,
    subgroup_generators,
)
from braidrep.words import concat, generator, invert, multiply, parse_word, random_word


def disk(n):
    return Transversal(surface_braid_presentation(n, 0, 1))


def stab_word(t, u):
    """Project an arbitrary word into the subgroup via its coset."""
    return multiply(u, invert(coset_representative(t, u)))


def test_representatives_are_descending_runs():
    t = disk(4)
    ab = t.presentation.alphabet
    assert [str(r) for r in t.reps] == ["s3 s2 s1", "s3 s2", "s3", ""]
    # pairwise distinct cosets: the permutations move the last strand to
    # pairwise distinct positions
    seen = {permutation_image(t.presentation, r).apply(4) for r in t.reps}
    assert seen == {1, 2, 3, 4}


def test_representative_depends_only_on_permutation():
    t = disk(4)
    ab = t.presentation.alphabet
    rng = random.Random(11)
    u = random_word(ab, 10, rng)
    rep = coset_representative(t, u)
    for _ in range(5):
        d = random_word(ab, 8, rng)
        d = stab_word(t, d)  # now lies in the subgroup
        assert coset_representative(t, multiply(d, u)) == rep


def test_rewrite_requires_subgroup_membership():
    t = disk(3)
    u = generator(t.presentation.alphabet, "sigma", 2)
    with pytest.raises(ValueError):
        rewrite(t, u)


def test_rewrite_of_last_twist_is_single_symbol():
    t = disk(4)
    u = parse_word("s3 s3", t.presentation.alphabet)
    seq = rewrite(t, u)
    assert len(seq) == 1
    sym, sign = seq[0]
    assert sym.name == "t3"
    assert sign == 1
    assert expand(seq) == u


def test_rewrite_never_emits_trivial_symbols():
    t = disk(5)
    rng = random.Random(23)
    for _ in range(25):
        u = stab_word(t, random_word(t.presentation.alphabet, 14, rng))
        for sym, _ in rewrite(t, u):
            assert not sym.trivial


def test_expand_rewrite_returns_input_verbatim():
    # expansion telescopes: only trivial symbols are dropped, and those
    # expand to the empty word, so the product is the input itself
    t = disk(4)
    rng = random.Random(5)
    for _ in range(30):
        u = stab_word(t, random_word(t.presentation.alphabet, 16, rng))
        assert expand(rewrite(t, u)) == u


def test_case_normal_forms_disk():
    t = disk(4)
    ab = t.presentation.alphabet
    named = {s.name: s.expansion for s in subgroup_generators(t) if s.name}
    assert named["t3"] == parse_word("s3^2", ab)
    assert named["t2"] == parse_word("s3 s2^2 s3^-1", ab)
    assert named["t1"] == parse_word("s3 s2 s1^2 s2^-1 s3^-1", ab)
    assert named["s1"] == parse_word("s1", ab)
    assert named["s2"] == parse_word("s2", ab)


def test_case_normal_forms_surface():
    pres = surface_braid_presentation(3, 1, 2)
    t = Transversal(pres)
    ab = pres.alphabet
    named = {s.name: s.expansion for s in subgroup_generators(t) if s.name}
    assert named["w1"] == parse_word("s2 s1 x1 s1^-1 s2^-1", ab)
    assert named["w2"] == parse_word("s2 s1 x2 s1^-1 s2^-1", ab)
    assert named["xi1"] == parse_word("s2 s1 z1 s1^-1 s2^-1", ab)


def test_trivial_symbols_are_exactly_the_shortening_ones():
    t = disk(4)
    trivial = [(s.lam, s.gen_name) for s in subgroup_generators(t) if s.trivial]
    assert trivial == [(2, "s1"), (3, "s2"), (4, "s3")]


def test_roundtrip_disk():
    t = disk(4)
    asgn = artin_rep(4)
    rng = random.Random(9)
    for _ in range(25):
        u = stab_word(t, random_word(t.presentation.alphabet, 12, rng))
        assert roundtrip_check(t, asgn, u)


def test_roundtrip_surface():
    pres = surface_braid_presentation(3, 1, 1)
    t = Transversal(pres)
    asgn = rho_u(4, 1, 1)
    rng = random.Random(10)
    for _ in range(15):
        u = stab_word(t, random_word(pres.alphabet, 10, rng))
        assert roundtrip_check(t, asgn, u)


def test_relator_conjugates_induce_identity():
    pres = surface_braid_presentation(3, 1, 1)
    t = Transversal(pres)
    asgn = rho_u(4, 1, 1)
    for lam in t.reps:
        for rel in pres.relators:
            conj = concat(lam, rel.word, invert(lam))
            seq = rewrite(t, conj)
            assert is_identity(induced_witness_endo(seq, asgn)), rel.rid


def test_relator_report_shape():
    pres = surface_braid_presentation(3, 1, 1)
    t = Transversal(pres)
    sub = dn_orientable_presentation(3, 1, 1)
    rows = relator_rewrite_report(t, sub)
    assert len(rows) == 3 * len(pres.relators)
    for row in rows:
        assert set(row) == {"relator", "coset", "symbols", "named", "induced", "matches"}
    assert any(row["matches"] for row in rows)


def test_transversal_needs_strand_data():
    from braidrep.presentations import braid_presentation

    # plain braid presentations carry strand permutations too, so they work
    t = Transversal(braid_presentation(3))
    assert len(t.reps) == 3

    from braidrep.representations import iota_d

    with pytest.raises(ValueError):
        Transversal(iota_d(3).source)
