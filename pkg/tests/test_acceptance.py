"""End-to-end acceptance sweep.

Each test exercises one advertised guarantee across its full parameter grid
and registers exactly one PASS/FAIL line with the terminal summary hook in
conftest.  The grids here are the product's contract; trimming them weakens
the guarantee, so they stay verbatim even though smaller unit tests overlap.
"""

import random
import time

from conftest import record_criterion

from braidrep.automorphisms import FreeEndo, apply, endo_equal, inner, is_identity
from braidrep.presentations import (
    evaluate,
    permutation_image,
    surface_braid_presentation,
    verify_representation,
)
from braidrep.representations import (
    artin_condition_check,
    artin_rep,
    fixed_product_nonorientable,
    fixed_product_orientable,
    iota_d,
    lambda_words,
    perturb_assignment,
    pi_d_word,
    rho_d,
    rho_u,
    rho_v,
    rho_v_outer_check,
    rho_w,
    s_d_word,
)
from braidrep.rewriting import (
    Transversal,
    coset_representative,
    expand,
    induced_witness_endo,
    rewrite,
    roundtrip_check,
    subgroup_generators,
)
from braidrep.words import (
    concat,
    generator,
    identity_word,
    invert,
    multiply,
    random_word,
    word_from_letters,
)

RHO_U_GRID = [(n, g, p) for n in (3, 4, 5) for g in (0, 1, 2) for p in (1, 2, 3)]
RHO_W_GRID = [(n, g, p) for n in (3, 4, 5) for g in (1, 2) for p in (1, 2, 3)]


def setup_module():
    # trigger jit compilation once so the timed sweep measures the sweep
    verify_representation(artin_rep(2))


def test_well_definedness_sweeps():
    ok = False
    try:
        start = time.perf_counter()
        for n in range(2, 7):
            assert verify_representation(artin_rep(n)).passed, "artin n=%d" % n
        for n, g, p in RHO_U_GRID:
            assert verify_representation(rho_u(n, g, p)).passed, (n, g, p)
        for n, g, p in RHO_W_GRID:
            assert verify_representation(rho_w(n, g, p)).passed, (n, g, p)
        for n in range(2, 7):
            assert verify_representation(rho_d(n)).passed, "rho-d n=%d" % n
        for n in range(2, 9):
            assert verify_representation(iota_d(n)).passed, "iota-d n=%d" % n
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, "sweep took %.1fs" % elapsed
        ok = True
    finally:
        record_criterion("1 relation sweeps pass across all parameter grids", ok)


def test_outer_well_definedness():
    ok = False
    try:
        for n, g in ((3, 1), (4, 1), (3, 2), (4, 2)):
            report = rho_v_outer_check(n, g)
            assert report.passed, (n, g, [r.rid for r in report.relators if not r.passed])
        ok = True
    finally:
        record_criterion("2 closed-surface action well defined up to inner maps", ok)


def test_fixed_products():
    ok = False
    try:
        for n, g, p in RHO_U_GRID:
            asgn = rho_u(n, g, p)
            prod = fixed_product_orientable(n, g, p)
            for f in asgn.images:
                assert apply(f, prod) == prod, (n, g, p)
        for n, g, p in RHO_W_GRID:
            asgn = rho_w(n, g, p)
            prod = fixed_product_nonorientable(n, g, p)
            for f in asgn.images:
                assert apply(f, prod) == prod, (n, g, p)
        ok = True
    finally:
        record_criterion("3 boundary products fixed by every generator image", ok)


def test_artin_characterization():
    ok = False
    try:
        for n in range(2, 7):
            asgn = artin_rep(n)
            ab = asgn.source.alphabet
            rng = random.Random(1000 + n)
            accepted = 0
            rejected = 0
            for _ in range(100):
                w = random_word(ab, rng.randint(0, 30), rng)
                f = evaluate(asgn, w)
                cert = artin_condition_check(f)
                if cert is not None and cert.permutation == permutation_image(
                    asgn.source, w
                ):
                    accepted += 1
                # single-letter mutation of one image must be rejected
                slot = rng.randrange(n)
                letter = generator(
                    asgn.target, "x", rng.randint(1, n), rng.choice((1, -1))
                )
                images = list(f.images)
                images[slot] = multiply(images[slot], letter)
                if artin_condition_check(FreeEndo(asgn.target, images)) is None:
                    rejected += 1
            assert accepted == 100, "n=%d accepted %d" % (n, accepted)
            assert rejected >= 99, "n=%d rejected %d" % (n, rejected)
        ok = True
    finally:
        record_criterion("4 certificates accept genuine braid images, reject mutants", ok)


def _reversed_word(w):
    return word_from_letters(w.alphabet, list(w.letters())[::-1])


def test_artin_tits_d_structure():
    # evaluate() composes left to right, so a word acts in reading order while
    # the classical operator order is the reversed word.  Both readings of
    # lambda_i are pinned here: the reversed word conjugates by x_i exactly,
    # and the word itself conjugates by x_1 transported along the descending
    # product d_{i+1} ... d_3 (which is empty for i = 1, giving x_1 back).
    ok = False
    try:
        for n in range(2, 9):
            asgn = iota_d(n)
            target = asgn.target
            src = asgn.source.alphabet
            lams = lambda_words(n)
            assert len(lams) == n - 1
            braid = artin_rep(n)
            for i, lam in enumerate(lams, start=1):
                x_i = generator(target, "x", i)
                assert endo_equal(
                    evaluate(asgn, _reversed_word(lam)),
                    inner(target, invert(x_i)),
                ), (n, i)
                descent = identity_word(src)
                for k in range(i + 1, 2, -1):
                    descent = multiply(descent, generator(src, "d", k))
                c_i = apply(
                    evaluate(asgn, invert(descent)), generator(target, "x", 1)
                )
                assert endo_equal(
                    evaluate(asgn, lam), inner(target, invert(c_i))
                ), (n, i)
                proj = pi_d_word(lam)
                assert is_identity(evaluate(braid, proj)), (n, i)
        # the section followed by the projection is the identity substitution
        for n in range(2, 7):
            braid = artin_rep(n)
            ab = braid.source.alphabet
            rng = random.Random(2000 + n)
            for _ in range(20):
                u = random_word(ab, rng.randint(0, 30), rng)
                v = pi_d_word(s_d_word(u))
                assert endo_equal(evaluate(braid, v), evaluate(braid, u)), n
        ok = True
    finally:
        record_criterion("5 type D kernel elements act by the expected conjugations", ok)


def test_full_twist_center():
    ok = False
    try:
        for n in range(2, 6):
            asgn = artin_rep(n)
            ab = asgn.source.alphabet
            half = concat(*(generator(ab, "sigma", i) for i in range(1, n)))
            twist = half ** n
            f = evaluate(asgn, twist)
            prod = concat(*(generator(asgn.target, "x", i) for i in range(1, n + 1)))
            assert endo_equal(f, inner(asgn.target, invert(prod))), n
        ok = True
    finally:
        record_criterion("6 full twist acts as conjugation by the generator product", ok)


def _stab_word(t, u):
    return multiply(u, invert(coset_representative(t, u)))


def _mountain(ab, k, n):
    parts = [generator(ab, "sigma", i) for i in range(n - 1, k, -1)]
    parts.append(generator(ab, "sigma", k, 2))
    parts.extend(generator(ab, "sigma", i, -1) for i in range(k + 1, n))
    return concat(*parts)


def test_reidemeister_schreier():
    ok = False
    try:
        # named subgroup generators carry their stated normal forms verbatim
        for n in (3, 4, 5):
            pres = surface_braid_presentation(n, 1, 2)
            t = Transversal(pres)
            ab = pres.alphabet
            named = {s.name: s.expansion for s in subgroup_generators(t) if s.name}
            m1 = concat(*(generator(ab, "sigma", i) for i in range(n - 1, 0, -1)))
            for k in range(1, n):
                assert named["t%d" % k] == _mountain(ab, k, n), (n, k)
            for r in (1, 2):
                xw = generator(ab, "x", r)
                assert named["w%d" % r] == concat(m1, xw, invert(m1)), (n, r)
            zw = generator(ab, "z", 1)
            assert named["xi1"] == concat(m1, zw, invert(m1)), n

        # round trips through the subgroup alphabet preserve the element
        settings = [(n, 0, 1, artin_rep(n)) for n in (3, 4, 5)]
        settings += [(4, g, p, rho_u(5, g, p)) for g, p in ((1, 1), (0, 2))]
        for n, g, p, witness in settings:
            pres = surface_braid_presentation(n, g, p)
            t = Transversal(pres)
            rng = random.Random(100 * n + 10 * g + p)
            for _ in range(100):
                u = _stab_word(t, random_word(pres.alphabet, rng.randint(0, 14), rng))
                assert roundtrip_check(t, witness, u), (n, g, p)

        # rewritten relator conjugates induce the identity on the witness side
        for n, g, p, witness in settings:
            pres = surface_braid_presentation(n, g, p)
            t = Transversal(pres)
            for lam in t.reps:
                for rel in pres.relators:
                    conj = concat(lam, rel.word, invert(lam))
                    seq = rewrite(t, conj)
                    assert expand(seq) == conj
                    assert is_identity(induced_witness_endo(seq, witness)), rel.rid
        ok = True
    finally:
        record_criterion("7 coset rewriting round-trips and rebuilds relations", ok)


def _is_d2_last_generator_twist(base, mutant):
    """Recognize the one single-letter mutation no relator sweep can flag.

    Appending x1 to the image of the last free generator under d2 yields a
    different assignment that still satisfies every defining relation (and is
    still invertible), so it is a genuinely distinct representation rather
    than a missed error.  Exhaustive enumeration of all single-letter appends
    over the family grid below finds exactly this one surviving mutation.
    """
    src = base.source.alphabet
    target = base.target
    changed = [
        i for i in range(src.rank) if not endo_equal(mutant.images[i], base.images[i])
    ]
    if changed != [src.gid("d", 2)]:
        return False
    f0 = base.images[changed[0]]
    f1 = mutant.images[changed[0]]
    slots = [j for j in range(target.rank) if f0.images[j] != f1.images[j]]
    last = target.rank - 1
    if slots != [last]:
        return False
    return f1.images[last] == multiply(f0.images[last], generator(target, "x", 1))


def test_mutation_sensitivity():
    ok = False
    try:
        families = [
            ("artin", 1, lambda: artin_rep(4), None),
            ("rho-u", 2, lambda: rho_u(4, 1, 2), None),
            ("rho-w", 3, lambda: rho_w(4, 1, 2), None),
            ("rho-v", 4, lambda: rho_v(4, 1), (4, 1)),
            ("rho-d", 5, lambda: rho_d(4), None),
            ("iota-d", 6, lambda: iota_d(5), None),
        ]
        for label, seed, build, outer in families:
            base = build()
            rng = random.Random(seed)
            failures = 0
            for _ in range(100):
                mutant = perturb_assignment(base, rng)
                if outer is None:
                    passed = verify_representation(mutant).passed
                else:
                    passed = rho_v_outer_check(*outer, asgn=mutant).passed
                if not passed:
                    failures += 1
                else:
                    # a survivor is only acceptable if it is the known twist,
                    # which exists in the iota-d family alone
                    assert label == "iota-d", label
                    assert _is_d2_last_generator_twist(base, mutant)
            assert failures >= 99, "%s caught %d/100" % (label, failures)
        ok = True
    finally:
        record_criterion("8 single-image perturbations break verification", ok)
