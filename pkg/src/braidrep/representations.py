"""Actions of braid-like groups on free groups, as certified assignments.

Every builder returns an :class:`~braidrep.presentations.Assignment` whose
generator images are explicit free-group automorphisms with symbolically
derived inverses; construction fails loudly if any pair does not compose to
the identity both ways.

Target bases by family:

* ``artin_rep(n)``: rank ``n``, generated by x.
* ``rho_u(n, g, p)``: rank ``n + p + 2g - 2``, basis tau, w, xi (strand
  loops, genus loops pushed across the distinguished strand, boundary loops
  pushed likewise).
* ``rho_w(n, g, p)``: rank ``n + g + p - 2``, basis tau, w, xi.
* ``rho_v(n, g)``: rank ``n - 2 + 2g``, basis tau_2.. and w; the lowest
  twist is not a basis element and only enters through ``tau1_word``.
* ``rho_d(n)``: rank ``n - 1``.
* ``iota_d(n)``: rank ``n``.
"""

from dataclasses import dataclass

from .automorphisms import FreeEndo, apply, endo_equal, inner
from .presentations import (
    Assignment,
    RelatorResult,
    Report,
    _endo_lines,
    _sigma_mountain,
    artin_tits_d_presentation,
    braid_presentation,
    closed_surface_presentation,
    evaluate,
    nonorientable_presentation,
    surface_braid_presentation,
)
from .words import (
    Alphabet,
    Permutation,
    commutator,
    concat,
    cyclic_reduce,
    generator,
    invert,
    multiply,
    word_from_letters,
)

__all__ = [
    "artin_rep",
    "rho_u",
    "rho_w",
    "rho_v",
    "rho_v_outer_check",
    "rho_d",
    "iota_d",
    "tau1_word",
    "lambda_words",
    "pi_d_word",
    "s_d_word",
    "fixed_product_orientable",
    "fixed_product_nonorientable",
    "artin_condition_check",
    "ArtinCertificate",
    "RepFamily",
    "FAMILIES",
    "perturb_assignment",
]


def _endo(alphabet, overrides):
    """Endomorphism fixing every generator except the listed overrides."""
    images = [
        generator(alphabet, *alphabet.gen_info(gid)) for gid in range(alphabet.rank)
    ]
    for (fam, idx), word in overrides.items():
        images[alphabet.gid(fam, idx)] = word
    return FreeEndo(alphabet, images)


def _swap_pair(t, i):
    """The standard two-generator action of a half twist on letters i, i+1."""
    fwd = {("tau", i): concat(t(i), t(i + 1), t(i, -1)), ("tau", i + 1): t(i)}
    bwd = {("tau", i): t(i + 1), ("tau", i + 1): concat(t(i + 1, -1), t(i), t(i + 1))}
    return fwd, bwd


def artin_rep(n):
    """The braid group acting on the free group of rank ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    src = braid_presentation(n)
    T = Alphabet([("x", n)])
    x = lambda i, e=1: generator(T, "x", i, e)
    images, invs = [], []
    for i in range(1, n):
        images.append(
            _endo(T, {("x", i): concat(x(i), x(i + 1), x(i, -1)), ("x", i + 1): x(i)})
        )
        invs.append(
            _endo(T, {("x", i): x(i + 1), ("x", i + 1): concat(x(i + 1, -1), x(i), x(i + 1))})
        )
    return Assignment("artin(n=%d)" % n, src, T, images, invs)


def _partner(r):
    return r + 1 if r % 2 == 1 else r - 1


def _boundary_images(t, xi, j, p):
    """Forward and inverse images for the j-th boundary generator acting on
    the pushed basis (shared by the orientable and nonorientable cases)."""
    X = xi(j)
    Xinv = xi(j, -1)
    Tt = t(1)
    Ti = t(1, -1)
    cz = concat(X, Ti, Xinv, Tt)
    czinv = concat(Ti, X, Tt, Xinv)
    fwd = {
        ("tau", 1): concat(Ti, X, Tt, Xinv, Tt),
        ("xi", j): concat(Ti, X, Tt),
    }
    for l in range(1, j):
        fwd[("xi", l)] = concat(czinv, xi(l), cz)
    bwd = {
        ("tau", 1): concat(Xinv, Tt, X),
        ("xi", j): concat(Xinv, Tt, X, Ti, X),
    }
    conj = concat(Xinv, Tt, X, Ti)
    conj_inv = concat(Tt, Xinv, Ti, X)
    for l in range(1, j):
        bwd[("xi", l)] = concat(conj, xi(l), conj_inv)
    return fwd, bwd


def rho_u(n, g, p):
    """Braids of the orientable surface with boundary, acting on the free
    group generated by the loops around the ``n - 1`` remaining punctures
    and the pushed genus/boundary loops."""
    if n < 3 or g < 0 or p < 1:
        raise ValueError("need n >= 3, g >= 0, p >= 1")
    src = surface_braid_presentation(n - 1, g, p)
    T = Alphabet([("tau", n - 1), ("w", 2 * g), ("xi", p - 1)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    xi = lambda j, e=1: generator(T, "xi", j, e)
    images, invs = [], []
    for i in range(1, n - 1):
        fwd, bwd = _swap_pair(t, i)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    for r in range(1, 2 * g + 1):
        W = w(r)
        Winv = w(r, -1)
        Tt = t(1)
        Ti = t(1, -1)
        c = concat(W, Ti, Winv, Tt)
        cinv = concat(Ti, W, Tt, Winv)
        fwd = {
            ("tau", 1): concat(Ti, W, Tt, Winv, Tt),
            ("w", r): concat(Ti, W, Tt),
        }
        for q in range(1, 2 * g + 1):
            if q == r:
                continue
            if q == _partner(r):
                if r % 2 == 0:
                    fwd[("w", q)] = concat(cinv, w(q), Tt)
                else:
                    fwd[("w", q)] = concat(Ti, w(q))
            elif q < r:
                fwd[("w", q)] = concat(cinv, w(q), c)
        for j in range(1, p):
            fwd[("xi", j)] = concat(cinv, xi(j), c)
        bwd = {
            ("tau", 1): concat(Winv, Tt, W),
            ("w", r): concat(Winv, Tt, W, Ti, W),
        }
        conj = concat(Winv, Tt, W, Ti)
        conj_inv = concat(Tt, Winv, Ti, W)
        for q in range(1, 2 * g + 1):
            if q == r:
                continue
            if q == _partner(r):
                if r % 2 == 0:
                    bwd[("w", q)] = concat(conj, w(q), Winv, Ti, W)
                else:
                    bwd[("w", q)] = concat(Winv, Tt, W, w(q))
            elif q < r:
                bwd[("w", q)] = concat(conj, w(q), conj_inv)
        for j in range(1, p):
            bwd[("xi", j)] = concat(conj, xi(j), conj_inv)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    for j in range(1, p):
        fwd, bwd = _boundary_images(t, xi, j, p)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    return Assignment("rho-u(n=%d,g=%d,p=%d)" % (n, g, p), src, T, images, invs)


def rho_w(n, g, p):
    """Braids of the nonorientable surface with boundary acting on the free
    group of the remaining punctures and pushed crosscap/boundary loops."""
    if n < 2 or g < 1 or p < 1:
        raise ValueError("need n >= 2, g >= 1, p >= 1")
    src = nonorientable_presentation(n - 1, g, p)
    T = Alphabet([("tau", n - 1), ("w", g), ("xi", p - 1)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    xi = lambda j, e=1: generator(T, "xi", j, e)
    images, invs = [], []
    for i in range(1, n - 1):
        fwd, bwd = _swap_pair(t, i)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    for r in range(1, g + 1):
        W = w(r)
        Winv = w(r, -1)
        Tt = t(1)
        Ti = t(1, -1)
        e = concat(W, Tt, Winv, Tt)
        einv = concat(Ti, W, Ti, Winv)
        fwd = {
            ("tau", 1): concat(Ti, W, Ti, Winv, Tt),
            ("w", r): concat(Ti, W),
        }
        for q in range(1, r):
            fwd[("w", q)] = concat(einv, w(q), e)
        for j in range(1, p):
            fwd[("xi", j)] = concat(einv, xi(j), e)
        bwd = {
            ("tau", 1): concat(Winv, Ti, W),
            ("w", r): concat(Winv, Ti, w(r, 2)),
        }
        conj = concat(Winv, Ti, W, Ti)
        conj_inv = concat(Tt, Winv, Tt, W)
        for q in range(1, r):
            bwd[("w", q)] = concat(conj, w(q), conj_inv)
        for j in range(1, p):
            bwd[("xi", j)] = concat(conj, xi(j), conj_inv)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    for j in range(1, p):
        fwd, bwd = _boundary_images(t, xi, j, p)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    return Assignment("rho-w(n=%d,g=%d,p=%d)" % (n, g, p), src, T, images, invs)


def tau1_word(n, g):
    """Expansion of the lowest twist in the closed-surface basis: the
    product of genus commutators followed by the descending inverse twists."""
    T = Alphabet([("tau", n - 2, 2), ("w", 2 * g)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    block = concat(*[commutator(invert(w(2 * m - 1)), w(2 * m)) for m in range(1, g + 1)])
    tail = concat(*[t(l, -1) for l in range(n - 1, 1, -1)])
    return multiply(block, tail)


def rho_v(n, g):
    """Braids of the closed orientable surface acting on the free group with
    the lowest twist eliminated; well defined only up to inner
    automorphisms, which is what :func:`rho_v_outer_check` verifies."""
    if n < 3 or g < 1:
        raise ValueError("need n >= 3, g >= 1")
    src = closed_surface_presentation(n - 1, g)
    T = Alphabet([("tau", n - 2, 2), ("w", 2 * g)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    that = tau1_word(n, g)
    images, invs = [], []
    images.append(_endo(T, {("tau", 2): that}))
    invs.append(_endo(T, {("tau", 2): concat(t(2, -1), that, t(2))}))
    for k in range(2, n - 1):
        fwd, bwd = _swap_pair(t, k)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    for r in range(1, 2 * g + 1):
        W = w(r)
        Winv = w(r, -1)
        Tt = that
        Ti = invert(that)
        c = concat(W, Ti, Winv, Tt)
        cinv = concat(Ti, W, Tt, Winv)
        fwd = {("w", r): concat(Ti, W, Tt)}
        for q in range(1, 2 * g + 1):
            if q == r:
                continue
            if q == _partner(r):
                if r % 2 == 0:
                    fwd[("w", q)] = concat(cinv, w(q), Tt)
                else:
                    fwd[("w", q)] = concat(Ti, w(q))
            elif q < r:
                fwd[("w", q)] = concat(cinv, w(q), c)
        bwd = {("w", r): concat(Winv, Tt, W, Ti, W)}
        conj = concat(Winv, Tt, W, Ti)
        conj_inv = concat(Tt, Winv, Ti, W)
        for q in range(1, 2 * g + 1):
            if q == r:
                continue
            if q == _partner(r):
                if r % 2 == 0:
                    bwd[("w", q)] = concat(conj, w(q), Winv, Ti, W)
                else:
                    bwd[("w", q)] = concat(Winv, Tt, W, w(q))
            elif q < r:
                bwd[("w", q)] = concat(conj, w(q), conj_inv)
        images.append(_endo(T, fwd))
        invs.append(_endo(T, bwd))
    return Assignment("rho-v(n=%d,g=%d)" % (n, g), src, T, images, invs)


def rho_v_outer_check(n, g, asgn=None):
    """Well-definedness of the closed-surface action.

    Every relator except the global surface relation must hold exactly; the
    surface relation holds up to conjugation, checked as: the word
    ``mountain^-1 * commutator-block`` acts as conjugation by the expanded
    lowest twist.  Pass ``asgn`` to run the same check against a perturbed
    assignment.
    """
    if asgn is None:
        asgn = rho_v(n, g)
    src = asgn.source
    rows = []
    for rel in src.relators:
        if rel.schema == "surface-relation":
            continue
        fl = evaluate(asgn, rel.lhs)
        fr = evaluate(asgn, rel.rhs)
        rows.append(
            RelatorResult(
                rel.rid, rel.schema, rel.instance, endo_equal(fl, fr), _endo_lines(fl), _endo_lines(fr)
            )
        )
    s = lambda i, e=1: generator(src.alphabet, "sigma", i, e)
    x = lambda r, e=1: generator(src.alphabet, "x", r, e)
    mountain = _sigma_mountain(s, n - 2)
    xblock = concat(*[commutator(invert(x(2 * m - 1)), x(2 * m)) for m in range(1, g + 1)])
    word = multiply(invert(mountain), xblock)
    lhs = evaluate(asgn, word)
    rhs = inner(asgn.target, tau1_word(n, g))
    rows.append(
        RelatorResult(
            "surface-relation-outer",
            "surface-relation-outer",
            "",
            endo_equal(lhs, rhs),
            _endo_lines(lhs),
            _endo_lines(rhs),
        )
    )
    rows.sort(key=lambda r: r.rid)
    return Report(
        presentation=src.name,
        assignment=asgn.name,
        relators=tuple(rows),
        passed=all(r.passed for r in rows),
        degenerate=src.degenerate,
    )


def rho_d(n):
    """The reduced degree ``n - 1`` action of the braid group used as braid
    monodromy of the type D embedding."""
    if n < 2:
        raise ValueError("need n >= 2")
    src = braid_presentation(n)
    T = Alphabet([("x", n - 1)])
    x = lambda i, e=1: generator(T, "x", i, e)
    images, invs = [], []
    fwd = {("x", j): concat(x(1, -1), x(j)) for j in range(2, n)}
    bwd = {("x", j): concat(x(1), x(j)) for j in range(2, n)}
    images.append(_endo(T, fwd))
    invs.append(_endo(T, bwd))
    for i in range(2, n):
        images.append(
            _endo(T, {("x", i - 1): x(i), ("x", i): concat(x(i), x(i - 1, -1), x(i))})
        )
        invs.append(
            _endo(T, {("x", i - 1): concat(x(i - 1), x(i, -1), x(i - 1)), ("x", i): x(i - 1)})
        )
    return Assignment("rho-d(n=%d)" % n, src, T, images, invs)


def iota_d(n):
    """Faithful action of the type D Artin-Tits group on rank ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    src = artin_tits_d_presentation(n)
    T = Alphabet([("x", n)])
    x = lambda i, e=1: generator(T, "x", i, e)
    fwd1 = {("x", j): concat(x(j), x(1, -1)) for j in range(2, n)}
    fwd1[("x", n)] = concat(x(1), x(n), x(1, -1))
    bwd1 = {("x", j): concat(x(j), x(1)) for j in range(2, n)}
    bwd1[("x", n)] = concat(x(1, -1), x(n), x(1))
    fwd2 = {("x", j): concat(x(1, -1), x(j)) for j in range(2, n)}
    bwd2 = {("x", j): concat(x(1), x(j)) for j in range(2, n)}
    images = [_endo(T, fwd1), _endo(T, fwd2)]
    invs = [_endo(T, bwd1), _endo(T, bwd2)]
    for i in range(3, n + 1):
        images.append(
            _endo(T, {("x", i - 2): x(i - 1), ("x", i - 1): concat(x(i - 1), x(i - 2, -1), x(i - 1))})
        )
        invs.append(
            _endo(T, {("x", i - 2): concat(x(i - 2), x(i - 1, -1), x(i - 2)), ("x", i - 1): x(i - 2)})
        )
    return Assignment("iota-d(n=%d)" % n, src, T, images, invs)


def lambda_words(n):
    """The free generators of the kernel of the projection that folds the
    two low type D generators together, as words over the delta alphabet."""
    if n < 2:
        raise ValueError("need n >= 2")
    A = Alphabet([("delta", n)])
    d = lambda i, e=1: generator(A, "delta", i, e)
    lam1 = multiply(d(1), d(2, -1))
    out = [lam1]
    for i in range(2, n):
        head = concat(*[d(k) for k in range(i + 1, 2, -1)])
        out.append(concat(head, lam1, invert(head)))
    return out


def pi_d_word(u):
    """Fold a type D word onto the braid group: both low generators map to
    the first half twist, higher ones shift down by one."""
    A = u.alphabet
    if len(A.families) != 1 or not A.has_family("delta"):
        raise ValueError("expected a word over a delta alphabet")
    n = A.family_count("delta")
    B = Alphabet([("sigma", n - 1)])
    letters = [
        ("sigma", 1 if idx <= 2 else idx - 1, e) for _, idx, e in u.letters()
    ]
    return word_from_letters(B, letters)


def s_d_word(u):
    """Section of the fold: the i-th half twist maps to the (i+1)-st type D
    generator."""
    A = u.alphabet
    if len(A.families) != 1 or not A.has_family("sigma"):
        raise ValueError("expected a word over a sigma alphabet")
    n = A.family_count("sigma") + 1
    D = Alphabet([("delta", n)])
    letters = [("delta", idx + 1, e) for _, idx, e in u.letters()]
    return word_from_letters(D, letters)


def fixed_product_orientable(n, g, p):
    """The boundary word every rho_u generator image fixes verbatim."""
    T = Alphabet([("tau", n - 1), ("w", 2 * g), ("xi", p - 1)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    xi = lambda j, e=1: generator(T, "xi", j, e)
    parts = [t(l, -1) for l in range(n - 1, 0, -1)]
    parts.extend(xi(j) for j in range(1, p))
    parts.extend(
        commutator(invert(w(2 * m - 1)), w(2 * m)) for m in range(1, g + 1)
    )
    return concat(*parts)


def fixed_product_nonorientable(n, g, p):
    """The boundary word every rho_w generator image fixes verbatim."""
    T = Alphabet([("tau", n - 1), ("w", g), ("xi", p - 1)])
    t = lambda l, e=1: generator(T, "tau", l, e)
    w = lambda r, e=1: generator(T, "w", r, e)
    xi = lambda j, e=1: generator(T, "xi", j, e)
    parts = [t(l, -1) for l in range(n - 1, 0, -1)]
    parts.extend(xi(j) for j in range(1, p))
    parts.extend(w(r, 2) for r in range(1, g + 1))
    return concat(*parts)


@dataclass(frozen=True)
class ArtinCertificate:
    """Witness that an endomorphism permutes the generators up to
    conjugation and fixes the reference product."""

    permutation: Permutation
    conjugators: tuple

    def reconstruct(self, alphabet):
        images = []
        for i in range(1, alphabet.rank + 1):
            target_gid = self.permutation.apply(i) - 1
            base = generator(alphabet, *alphabet.gen_info(target_gid))
            conj = self.conjugators[i - 1]
            images.append(concat(invert(conj), base, conj))
        return FreeEndo(alphabet, images)


def artin_condition_check(f, product=None):
    """Certificate that ``f`` is an Artin-shaped automorphism, or None.

    Requires every generator image to be a conjugate ``a^-1 g a`` of a
    single generator with exponent +1, the induced generator map to be a
    permutation, and ``f`` to fix the reference ``product`` (by default the
    ordered product of all generators) verbatim.
    """
    A = f.alphabet
    if product is None:
        product = concat(
            *[generator(A, *A.gen_info(gid)) for gid in range(A.rank)]
        )
    if apply(f, product) != product:
        return None
    targets = []
    conjs = []
    for gid in range(A.rank):
        core, conj = cyclic_reduce(f.images[gid])
        if core.gens.shape[0] != 1 or int(core.exps[0]) != 1:
            return None
        targets.append(int(core.gens[0]) + 1)
        conjs.append(conj)
    try:
        perm = Permutation(targets)
    except ValueError:
        return None
    cert = ArtinCertificate(perm, tuple(conjs))
    if not endo_equal(cert.reconstruct(A), f):
        return None
    return cert


FAMILIES = ("artin", "rho-u", "rho-w", "rho-v", "rho-d", "iota-d")


@dataclass(frozen=True)
class RepFamily:
    """A representation family with its parameters, before construction."""

    family: str
    n: int
    g: int = 0
    p: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))

    @property
    def target_rank(self):
        if self.family == "artin":
            return self.n
        if self.family == "rho-u":
            return self.n + self.p + 2 * self.g - 2
        if self.family == "rho-w":
            return self.n + self.g + self.p - 2
        if self.family == "rho-v":
            return self.n - 2 + 2 * self.g
        if self.family == "rho-d":
            return self.n - 1
        return self.n

    def build(self):
        if self.family == "artin":
            return artin_rep(self.n)
        if self.family == "rho-u":
            return rho_u(self.n, self.g, self.p)
        if self.family == "rho-w":
            return rho_w(self.n, self.g, self.p)
        if self.family == "rho-v":
            return rho_v(self.n, self.g)
        if self.family == "rho-d":
            return rho_d(self.n)
        return iota_d(self.n)


def perturb_assignment(asgn, rng):
    """A copy with one random letter appended to one generator image.

    The appended letter is drawn among letters that do not freely cancel
    against the image's tail, so the image really gains a letter instead of
    losing one.  (A cancelling draw would act as a deletion; deleting the
    whole image of a fixed generator yields a collapse endomorphism that
    satisfies every relation and is invisible to relator sweeps.)

    The inverse images are left stale and certification is skipped, so the
    result is a deliberately broken assignment for sensitivity tests.
    """
    src_gid = rng.randrange(len(asgn.images))
    f = asgn.images[src_gid]
    T = asgn.target
    slot = rng.randrange(T.rank)
    old = f.images[slot]
    while True:
        exp = 1 if rng.random() < 0.5 else -1
        letter = generator(T, *T.gen_info(rng.randrange(T.rank)), exp)
        appended = multiply(old, letter)
        if len(appended) == len(old) + 1:
            break
    new_images = list(f.images)
    new_images[slot] = appended
    endos = list(asgn.images)
    endos[src_gid] = FreeEndo(T, new_images)
    return Assignment(
        asgn.name + "+mutation",
        asgn.source,
        T,
        endos,
        asgn.inverse_images,
        certify=False,
    )
