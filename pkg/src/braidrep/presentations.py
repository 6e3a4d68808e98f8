"""Finite presentations of braid-like groups and generator assignments.

Builders produce :class:`Presentation` objects for the braid group, braid
groups of orientable, nonorientable and closed surfaces, the corresponding
subgroups of braids whose last strand is fixed (the "stabilizer"
presentations, whose extra tau/w/xi generators are the pushed copies of the
ambient ones), and the Artin-Tits group of type D.

Relators are stored two-sided: a relator is lhs = rhs with the single word
``lhs * rhs^-1`` derived once.  Every builder also attaches the permutation
induced on strands by each generator, and the constructor refuses relators
whose permutation image is not the identity, which catches most
transcription mistakes immediately.

An :class:`Assignment` maps the generators of a source presentation to
automorphisms of a free group (with explicit inverses, certified at
construction unless switched off for sensitivity experiments).
``verify_representation`` then checks every relator of the source under
``evaluate`` and collects the outcome in a :class:`Report`.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .automorphisms import FreeEndo, compose, endo_equal, identity_endo, verify_inverse
from .words import (
    Alphabet,
    Permutation,
    Word,
    commutator,
    concat,
    generator,
    invert,
    multiply,
    perm_compose,
    perm_of_transposition,
)

__all__ = [
    "Relator",
    "Presentation",
    "Assignment",
    "RelatorResult",
    "Report",
    "braid_presentation",
    "surface_braid_presentation",
    "nonorientable_presentation",
    "closed_surface_presentation",
    "dn_orientable_presentation",
    "dn_nonorientable_presentation",
    "dn_closed_presentation",
    "artin_tits_d_presentation",
    "evaluate",
    "verify_representation",
    "permutation_image",
]


@dataclass(frozen=True)
class Relator:
    rid: str
    schema: str
    instance: str
    lhs: Word
    rhs: Word
    word: Word


def _rel(schema, instance, lhs, rhs):
    rid = "%s[%s]" % (schema, instance) if instance else schema
    return Relator(rid, schema, instance, lhs, rhs, multiply(lhs, invert(rhs)))


class Presentation:
    """Generators with relators and per-generator strand permutations."""

    __slots__ = ("name", "alphabet", "relators", "n", "perm_images", "degenerate")

    def __init__(self, name, alphabet, relators, n, perm_images, degenerate=False):
        perm_images = tuple(perm_images)
        if len(perm_images) != alphabet.rank:
            raise ValueError("one permutation per generator required")
        for p in perm_images:
            if p.degree != n:
                raise ValueError("permutation degree must equal strand count")
        relators = tuple(relators)
        seen = set()
        for rel in relators:
            if rel.rid in seen:
                raise ValueError("duplicate relator id %r" % (rel.rid,))
            seen.add(rel.rid)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "relators", relators)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "perm_images", perm_images)
        object.__setattr__(self, "degenerate", degenerate)
        for rel in relators:
            if not permutation_image(self, rel.word).is_identity():
                raise ValueError(
                    "relator %s of %s does not respect strand permutations"
                    % (rel.rid, name)
                )

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def relator(self, rid):
        for rel in self.relators:
            if rel.rid == rid:
                return rel
        raise KeyError(rid)

    def __repr__(self):
        return "Presentation(%s: %d generators, %d relators)" % (
            self.name,
            self.alphabet.rank,
            len(self.relators),
        )


def permutation_image(pres, u):
    """Strand permutation induced by the word ``u``."""
    if u.alphabet != pres.alphabet:
        raise ValueError("word alphabet does not match presentation")
    p = Permutation.identity(pres.n)
    for g, e in zip(u.gens, u.exps):
        q = pres.perm_images[int(g)]
        if e < 0:
            q = q.inverse()
        for _ in range(abs(int(e))):
            p = perm_compose(p, q)
    return p


def _braid_rows(s, n):
    rows = []
    for i in range(1, n - 1):
        rows.append(
            (
                "braid",
                "i=%d" % i,
                concat(s(i), s(i + 1), s(i)),
                concat(s(i + 1), s(i), s(i + 1)),
            )
        )
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            rows.append(
                ("far-commute", "i=%d,j=%d" % (i, j), concat(s(i), s(j)), concat(s(j), s(i)))
            )
    return rows


def _strand_perms(alphabet, n):
    """Transpositions for the sigma family, identity for everything else."""
    perms = []
    for gid in range(alphabet.rank):
        fam, idx = alphabet.gen_info(gid)
        if fam == "sigma":
            perms.append(perm_of_transposition(idx, n))
        else:
            perms.append(Permutation.identity(n))
    return perms


def braid_presentation(n):
    """The braid group on ``n`` strands (disk case)."""
    if n < 2:
        raise ValueError("braid presentation needs n >= 2")
    A = Alphabet([("sigma", n - 1)])
    s = lambda i, e=1: generator(A, "sigma", i, e)
    rels = [_rel(*row) for row in _braid_rows(s, n)]
    return Presentation("braid(n=%d)" % n, A, rels, n, _strand_perms(A, n))


def _is_partner_pair(small, large):
    return large % 2 == 0 and small == large - 1


def surface_braid_presentation(n, g, p):
    """Braids on an orientable genus ``g`` surface with ``p`` boundary curves.

    ``n = 1`` gives a free group (no sigma generators, no relators).
    """
    if n < 1 or g < 0 or p < 1:
        raise ValueError("need n >= 1, g >= 0, p >= 1")
    A = Alphabet([("sigma", n - 1), ("x", 2 * g), ("z", p - 1)])
    s = lambda i, e=1: generator(A, "sigma", i, e)
    x = lambda r, e=1: generator(A, "x", r, e)
    z = lambda j, e=1: generator(A, "z", j, e)
    rows = _braid_rows(s, n)
    for r in range(1, 2 * g + 1):
        for i in range(2, n):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(x(r), s(i)), concat(s(i), x(r))))
    for j in range(1, p):
        for i in range(2, n):
            rows.append(("boundary-far-sigma", "j=%d,i=%d" % (j, i), concat(z(j), s(i)), concat(s(i), z(j))))
    if n >= 2:
        for r in range(1, 2 * g + 1):
            t = concat(s(1, -1), x(r), s(1, -1))
            rows.append(("loop-self", "r=%d" % r, concat(t, x(r)), concat(x(r), t)))
        for r in range(1, 2 * g + 1):
            for q in range(1, r):
                if _is_partner_pair(q, r):
                    continue
                t = concat(s(1, -1), x(q), s(1))
                rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(t, x(r)), concat(x(r), t)))
        for m in range(1, g + 1):
            t1 = concat(s(1, -1), x(2 * m - 1), s(1, -1))
            t2 = concat(s(1, -1), x(2 * m - 1), s(1))
            rows.append(("loop-partners", "m=%d" % m, concat(t1, x(2 * m)), concat(x(2 * m), t2)))
        for j in range(1, p):
            for r in range(1, 2 * g + 1):
                t = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-loop", "j=%d,r=%d" % (j, r), concat(t, x(r)), concat(x(r), t)))
        for j in range(1, p):
            for l in range(j + 1, p):
                t = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-pair", "j=%d,l=%d" % (j, l), concat(t, z(l)), concat(z(l), t)))
        for j in range(1, p):
            t = concat(s(1, -1), z(j), s(1, -1))
            rows.append(("boundary-self", "j=%d" % j, concat(t, z(j)), concat(z(j), t)))
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "surface(n=%d,g=%d,p=%d)" % (n, g, p), A, rels, n, _strand_perms(A, n)
    )


def nonorientable_presentation(n, g, p):
    """Braids on a nonorientable genus ``g`` surface with ``p`` boundary curves."""
    if n < 1 or g < 1 or p < 1:
        raise ValueError("need n >= 1, g >= 1, p >= 1")
    A = Alphabet([("sigma", n - 1), ("a", g), ("z", p - 1)])
    s = lambda i, e=1: generator(A, "sigma", i, e)
    a = lambda r, e=1: generator(A, "a", r, e)
    z = lambda j, e=1: generator(A, "z", j, e)
    rows = _braid_rows(s, n)
    for r in range(1, g + 1):
        for i in range(2, n):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(a(r), s(i)), concat(s(i), a(r))))
    for j in range(1, p):
        for i in range(2, n):
            rows.append(("boundary-far-sigma", "j=%d,i=%d" % (j, i), concat(z(j), s(i)), concat(s(i), z(j))))
    if n >= 2:
        for r in range(1, g + 1):
            rows.append(
                (
                    "loop-self",
                    "r=%d" % r,
                    concat(s(1, -1), a(r), s(1, -1), a(r)),
                    concat(a(r), s(1, -1), a(r), s(1)),
                )
            )
        for r in range(1, g + 1):
            for q in range(1, r):
                t = concat(s(1, -1), a(q), s(1))
                rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(t, a(r)), concat(a(r), t)))
        for j in range(1, p):
            for r in range(1, g + 1):
                t = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-loop", "j=%d,r=%d" % (j, r), concat(t, a(r)), concat(a(r), t)))
        for j in range(1, p):
            for l in range(j + 1, p):
                t = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-pair", "j=%d,l=%d" % (j, l), concat(t, z(l)), concat(z(l), t)))
        for j in range(1, p):
            t = concat(s(1, -1), z(j), s(1, -1))
            rows.append(("boundary-self", "j=%d" % j, concat(t, z(j)), concat(z(j), t)))
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "nonorientable(n=%d,g=%d,p=%d)" % (n, g, p),
        A,
        rels,
        n,
        _strand_perms(A, n),
    )


def _sigma_mountain(s, peak):
    parts = [s(i) for i in range(1, peak)]
    parts.append(s(peak, 2))
    parts.extend(s(i) for i in range(peak - 1, 0, -1))
    return concat(*parts)


def closed_surface_presentation(n, g):
    """Braids on a closed orientable surface of genus ``g >= 1``."""
    if n < 2 or g < 1:
        raise ValueError("need n >= 2, g >= 1")
    A = Alphabet([("sigma", n - 1), ("x", 2 * g)])
    s = lambda i, e=1: generator(A, "sigma", i, e)
    x = lambda r, e=1: generator(A, "x", r, e)
    rows = _braid_rows(s, n)
    for r in range(1, 2 * g + 1):
        for i in range(2, n):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(x(r), s(i)), concat(s(i), x(r))))
    for r in range(1, 2 * g + 1):
        t = concat(s(1, -1), x(r), s(1, -1))
        rows.append(("loop-self", "r=%d" % r, concat(t, x(r)), concat(x(r), t)))
    for r in range(1, 2 * g + 1):
        for q in range(1, r):
            if _is_partner_pair(q, r):
                continue
            t = concat(s(1, -1), x(q), s(1))
            rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(t, x(r)), concat(x(r), t)))
    for m in range(1, g + 1):
        t1 = concat(s(1, -1), x(2 * m - 1), s(1, -1))
        t2 = concat(s(1, -1), x(2 * m - 1), s(1))
        rows.append(("loop-partners", "m=%d" % m, concat(t1, x(2 * m)), concat(x(2 * m), t2)))
    xblock = concat(*[commutator(invert(x(2 * m - 1)), x(2 * m)) for m in range(1, g + 1)])
    rows.append(("surface-relation", "", xblock, _sigma_mountain(s, n - 1)))
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "closed(n=%d,g=%d)" % (n, g), A, rels, n, _strand_perms(A, n)
    )


def _stabilizer_braid_rows(s, t, n):
    """Rows shared by all three stabilizer presentations (sigma/tau part)."""
    rows = []
    for i in range(1, n - 2):
        rows.append(
            (
                "braid",
                "i=%d" % i,
                concat(s(i), s(i + 1), s(i)),
                concat(s(i + 1), s(i), s(i + 1)),
            )
        )
    for i in range(1, n - 2):
        for j in range(i + 2, n - 1):
            rows.append(
                ("far-commute", "i=%d,j=%d" % (i, j), concat(s(i), s(j)), concat(s(j), s(i)))
            )
    for k in range(1, n - 1):
        for l in range(1, n):
            if k == l - 1 or k == l:
                continue
            rows.append(
                ("twist-far-sigma", "k=%d,l=%d" % (k, l), concat(s(k, -1), t(l), s(k)), t(l))
            )
    for l in range(2, n):
        rows.append(("twist-down", "l=%d" % l, concat(s(l - 1, -1), t(l), s(l - 1)), t(l - 1)))
    for l in range(1, n - 1):
        rows.append(
            (
                "twist-up",
                "l=%d" % l,
                concat(s(l, -1), t(l), s(l)),
                concat(t(l), t(l + 1), t(l, -1)),
            )
        )
    return rows


def dn_orientable_presentation(n, g, p):
    """Stabilizer of a puncture in the ``n``-strand orientable surface braid
    group: braids of ``B_n`` over the genus ``g``, ``p``-boundary surface
    whose strand ``n`` ends where it starts.

    Full relator schema needs ``n >= 3``; ``n = 2`` drops every row that
    mentions a sigma generator and the result is flagged degenerate.
    """
    if n < 2 or g < 0 or p < 1:
        raise ValueError("need n >= 2, g >= 0, p >= 1")
    A = Alphabet(
        [("sigma", n - 2), ("x", 2 * g), ("z", p - 1), ("tau", n - 1), ("w", 2 * g), ("xi", p - 1)]
    )
    s = lambda i, e=1: generator(A, "sigma", i, e)
    x = lambda r, e=1: generator(A, "x", r, e)
    z = lambda j, e=1: generator(A, "z", j, e)
    t = lambda l, e=1: generator(A, "tau", l, e)
    w = lambda r, e=1: generator(A, "w", r, e)
    xi = lambda j, e=1: generator(A, "xi", j, e)
    rows = _stabilizer_braid_rows(s, t, n)
    for r in range(1, 2 * g + 1):
        for i in range(2, n - 1):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(x(r), s(i)), concat(s(i), x(r))))
        for i in range(2, n):
            rows.append(("loop-far-twist", "r=%d,i=%d" % (r, i), concat(x(r), t(i)), concat(t(i), x(r))))
        for i in range(1, n - 1):
            rows.append(("w-far-sigma", "r=%d,i=%d" % (r, i), concat(w(r), s(i)), concat(s(i), w(r))))
    for j in range(1, p):
        for i in range(2, n - 1):
            rows.append(("boundary-far-sigma", "j=%d,i=%d" % (j, i), concat(z(j), s(i)), concat(s(i), z(j))))
        for i in range(2, n):
            rows.append(("boundary-far-twist", "j=%d,i=%d" % (j, i), concat(z(j), t(i)), concat(t(i), z(j))))
        for i in range(1, n - 1):
            rows.append(("xi-far-sigma", "j=%d,i=%d" % (j, i), concat(xi(j), s(i)), concat(s(i), xi(j))))
    if n >= 3:
        for r in range(1, 2 * g + 1):
            u = concat(s(1, -1), x(r), s(1, -1))
            rows.append(("loop-self", "r=%d" % r, concat(u, x(r)), concat(x(r), u)))
        for r in range(1, 2 * g + 1):
            for q in range(1, r):
                if _is_partner_pair(q, r):
                    continue
                u = concat(s(1, -1), x(q), s(1))
                rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(u, x(r)), concat(x(r), u)))
        for m in range(1, g + 1):
            u1 = concat(s(1, -1), x(2 * m - 1), s(1, -1))
            u2 = concat(s(1, -1), x(2 * m - 1), s(1))
            rows.append(("loop-partners", "m=%d" % m, concat(u1, x(2 * m)), concat(x(2 * m), u2)))
        for j in range(1, p):
            for r in range(1, 2 * g + 1):
                u = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-loop", "j=%d,r=%d" % (j, r), concat(u, x(r)), concat(x(r), u)))
        for j in range(1, p):
            for l in range(j + 1, p):
                u = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-pair", "j=%d,l=%d" % (j, l), concat(u, z(l)), concat(z(l), u)))
        for j in range(1, p):
            u = concat(s(1, -1), z(j), s(1, -1))
            rows.append(("boundary-self", "j=%d" % j, concat(u, z(j)), concat(z(j), u)))
    for r in range(1, 2 * g + 1):
        rows.append(
            (
                "loop-w-conj",
                "r=%d" % r,
                concat(x(r, -1), w(r), x(r)),
                concat(t(1, -1), w(r), t(1)),
            )
        )
        rows.append(
            (
                "loop-twist-conj",
                "r=%d" % r,
                concat(x(r, -1), t(1), x(r)),
                concat(t(1, -1), w(r), t(1), w(r, -1), t(1)),
            )
        )
    for r in range(1, 2 * g + 1):
        for q in range(1, r):
            if _is_partner_pair(q, r):
                continue
            rows.append(
                (
                    "loop-w-pair-conj",
                    "s=%d,r=%d" % (q, r),
                    concat(x(r, -1), t(1, -1), w(q), t(1), x(r)),
                    concat(t(1, -1), w(q), t(1)),
                )
            )
            rows.append(
                ("loop-w-commute", "s=%d,r=%d" % (q, r), concat(x(q), w(r)), concat(w(r), x(q)))
            )
    for m in range(1, g + 1):
        rows.append(
            (
                "loop-w-partner-conj",
                "m=%d" % m,
                concat(x(2 * m, -1), t(1, -1), w(2 * m - 1), x(2 * m)),
                concat(t(1, -1), w(2 * m - 1), t(1)),
            )
        )
        rows.append(
            (
                "loop-w-partner-shift",
                "m=%d" % m,
                concat(x(2 * m - 1, -1), w(2 * m), x(2 * m - 1)),
                concat(t(1, -1), w(2 * m)),
            )
        )
    for j in range(1, p):
        for r in range(1, 2 * g + 1):
            rows.append(
                (
                    "loop-xi-conj",
                    "j=%d,r=%d" % (j, r),
                    concat(x(r, -1), t(1, -1), xi(j), t(1), x(r)),
                    concat(t(1, -1), xi(j), t(1)),
                )
            )
            rows.append(
                ("boundary-w-commute", "j=%d,r=%d" % (j, r), concat(z(j), w(r)), concat(w(r), z(j)))
            )
    for j in range(1, p):
        for l in range(j + 1, p):
            rows.append(
                (
                    "boundary-xi-pair-conj",
                    "j=%d,l=%d" % (j, l),
                    concat(z(l, -1), t(1, -1), xi(j), t(1), z(l)),
                    concat(t(1, -1), xi(j), t(1)),
                )
            )
            rows.append(
                ("boundary-xi-commute", "j=%d,l=%d" % (j, l), concat(z(j), xi(l)), concat(xi(l), z(j)))
            )
    for j in range(1, p):
        rows.append(
            (
                "boundary-xi-conj",
                "j=%d" % j,
                concat(z(j, -1), t(1, -1), xi(j), z(j)),
                concat(t(1, -1), xi(j)),
            )
        )
        rows.append(
            (
                "boundary-xi-twist",
                "j=%d" % j,
                concat(z(j, -1), xi(j), z(j)),
                concat(t(1, -1), xi(j), t(1)),
            )
        )
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "stabilizer-orientable(n=%d,g=%d,p=%d)" % (n, g, p),
        A,
        rels,
        n,
        _strand_perms(A, n),
        degenerate=(n == 2),
    )


def dn_nonorientable_presentation(n, g, p):
    """Stabilizer of a puncture in the nonorientable surface braid group."""
    if n < 2 or g < 1 or p < 1:
        raise ValueError("need n >= 2, g >= 1, p >= 1")
    A = Alphabet(
        [("sigma", n - 2), ("a", g), ("z", p - 1), ("tau", n - 1), ("w", g), ("xi", p - 1)]
    )
    s = lambda i, e=1: generator(A, "sigma", i, e)
    a = lambda r, e=1: generator(A, "a", r, e)
    z = lambda j, e=1: generator(A, "z", j, e)
    t = lambda l, e=1: generator(A, "tau", l, e)
    w = lambda r, e=1: generator(A, "w", r, e)
    xi = lambda j, e=1: generator(A, "xi", j, e)
    rows = _stabilizer_braid_rows(s, t, n)
    for r in range(1, g + 1):
        for i in range(2, n - 1):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(a(r), s(i)), concat(s(i), a(r))))
        for i in range(2, n):
            rows.append(("loop-far-twist", "r=%d,i=%d" % (r, i), concat(a(r), t(i)), concat(t(i), a(r))))
        for i in range(1, n - 1):
            rows.append(("w-far-sigma", "r=%d,i=%d" % (r, i), concat(w(r), s(i)), concat(s(i), w(r))))
    for j in range(1, p):
        for i in range(2, n - 1):
            rows.append(("boundary-far-sigma", "j=%d,i=%d" % (j, i), concat(z(j), s(i)), concat(s(i), z(j))))
        for i in range(2, n):
            rows.append(("boundary-far-twist", "j=%d,i=%d" % (j, i), concat(z(j), t(i)), concat(t(i), z(j))))
        for i in range(1, n - 1):
            rows.append(("xi-far-sigma", "j=%d,i=%d" % (j, i), concat(xi(j), s(i)), concat(s(i), xi(j))))
    if n >= 3:
        for r in range(1, g + 1):
            rows.append(
                (
                    "loop-self",
                    "r=%d" % r,
                    concat(s(1, -1), a(r), s(1, -1), a(r)),
                    concat(a(r), s(1, -1), a(r), s(1)),
                )
            )
        for r in range(1, g + 1):
            for q in range(1, r):
                u = concat(s(1, -1), a(q), s(1))
                rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(u, a(r)), concat(a(r), u)))
        for j in range(1, p):
            for r in range(1, g + 1):
                u = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-loop", "j=%d,r=%d" % (j, r), concat(u, a(r)), concat(a(r), u)))
        for j in range(1, p):
            for l in range(j + 1, p):
                u = concat(s(1, -1), z(j), s(1))
                rows.append(("boundary-pair", "j=%d,l=%d" % (j, l), concat(u, z(l)), concat(z(l), u)))
        for j in range(1, p):
            u = concat(s(1, -1), z(j), s(1, -1))
            rows.append(("boundary-self", "j=%d" % j, concat(u, z(j)), concat(z(j), u)))
    for r in range(1, g + 1):
        rows.append(
            (
                "loop-w-conj",
                "r=%d" % r,
                concat(a(r, -1), t(1, -1), w(r), a(r)),
                concat(t(1, -1), w(r), t(1)),
            )
        )
        rows.append(
            (
                "loop-w-shift",
                "r=%d" % r,
                concat(a(r, -1), w(r), a(r)),
                concat(t(1, -1), w(r)),
            )
        )
    for r in range(1, g + 1):
        for q in range(1, r):
            rows.append(
                (
                    "loop-w-pair-conj",
                    "s=%d,r=%d" % (q, r),
                    concat(a(r, -1), t(1, -1), w(q), t(1), a(r)),
                    concat(t(1, -1), w(q), t(1)),
                )
            )
            rows.append(
                ("loop-w-commute", "s=%d,r=%d" % (q, r), concat(a(q), w(r)), concat(w(r), a(q)))
            )
    for j in range(1, p):
        for r in range(1, g + 1):
            rows.append(
                (
                    "loop-xi-conj",
                    "j=%d,r=%d" % (j, r),
                    concat(a(r, -1), t(1, -1), xi(j), t(1), a(r)),
                    concat(t(1, -1), xi(j), t(1)),
                )
            )
            rows.append(
                ("boundary-w-commute", "j=%d,r=%d" % (j, r), concat(z(j), w(r)), concat(w(r), z(j)))
            )
    for j in range(1, p):
        for l in range(j + 1, p):
            rows.append(
                (
                    "boundary-xi-pair-conj",
                    "j=%d,l=%d" % (j, l),
                    concat(z(l, -1), t(1, -1), xi(j), t(1), z(l)),
                    concat(t(1, -1), xi(j), t(1)),
                )
            )
            rows.append(
                ("boundary-xi-commute", "j=%d,l=%d" % (j, l), concat(z(j), xi(l)), concat(xi(l), z(j)))
            )
    for j in range(1, p):
        rows.append(
            (
                "boundary-xi-conj",
                "j=%d" % j,
                concat(z(j, -1), t(1, -1), xi(j), z(j)),
                concat(t(1, -1), xi(j)),
            )
        )
        rows.append(
            (
                "boundary-xi-twist",
                "j=%d" % j,
                concat(z(j, -1), xi(j), z(j)),
                concat(t(1, -1), xi(j), t(1)),
            )
        )
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "stabilizer-nonorientable(n=%d,g=%d,p=%d)" % (n, g, p),
        A,
        rels,
        n,
        _strand_perms(A, n),
        degenerate=(n == 2),
    )


def dn_closed_presentation(n, g):
    """Stabilizer of a puncture in the closed-surface braid group."""
    if n < 2 or g < 1:
        raise ValueError("need n >= 2, g >= 1")
    A = Alphabet([("sigma", n - 2), ("x", 2 * g), ("tau", n - 1), ("w", 2 * g)])
    s = lambda i, e=1: generator(A, "sigma", i, e)
    x = lambda r, e=1: generator(A, "x", r, e)
    t = lambda l, e=1: generator(A, "tau", l, e)
    w = lambda r, e=1: generator(A, "w", r, e)
    rows = _stabilizer_braid_rows(s, t, n)
    for r in range(1, 2 * g + 1):
        for i in range(2, n - 1):
            rows.append(("loop-far-sigma", "r=%d,i=%d" % (r, i), concat(x(r), s(i)), concat(s(i), x(r))))
        for i in range(2, n):
            rows.append(("loop-far-twist", "r=%d,i=%d" % (r, i), concat(x(r), t(i)), concat(t(i), x(r))))
        for i in range(1, n - 1):
            rows.append(("w-far-sigma", "r=%d,i=%d" % (r, i), concat(w(r), s(i)), concat(s(i), w(r))))
    if n >= 3:
        for r in range(1, 2 * g + 1):
            u = concat(s(1, -1), x(r), s(1, -1))
            rows.append(("loop-self", "r=%d" % r, concat(u, x(r)), concat(x(r), u)))
        for r in range(1, 2 * g + 1):
            for q in range(1, r):
                if _is_partner_pair(q, r):
                    continue
                u = concat(s(1, -1), x(q), s(1))
                rows.append(("loop-pair", "s=%d,r=%d" % (q, r), concat(u, x(r)), concat(x(r), u)))
        for m in range(1, g + 1):
            u1 = concat(s(1, -1), x(2 * m - 1), s(1, -1))
            u2 = concat(s(1, -1), x(2 * m - 1), s(1))
            rows.append(("loop-partners", "m=%d" % m, concat(u1, x(2 * m)), concat(x(2 * m), u2)))
    for r in range(1, 2 * g + 1):
        rows.append(
            (
                "loop-w-conj",
                "r=%d" % r,
                concat(x(r, -1), w(r), x(r)),
                concat(t(1, -1), w(r), t(1)),
            )
        )
        rows.append(
            (
                "loop-twist-conj",
                "r=%d" % r,
                concat(x(r, -1), t(1), x(r)),
                concat(t(1, -1), w(r), t(1), w(r, -1), t(1)),
            )
        )
    for r in range(1, 2 * g + 1):
        for q in range(1, r):
            if _is_partner_pair(q, r):
                continue
            rows.append(
                (
                    "loop-w-pair-conj",
                    "s=%d,r=%d" % (q, r),
                    concat(x(r, -1), t(1, -1), w(q), t(1), x(r)),
                    concat(t(1, -1), w(q), t(1)),
                )
            )
            rows.append(
                ("loop-w-commute", "s=%d,r=%d" % (q, r), concat(x(q), w(r)), concat(w(r), x(q)))
            )
    for m in range(1, g + 1):
        rows.append(
            (
                "loop-w-partner-conj",
                "m=%d" % m,
                concat(x(2 * m, -1), t(1, -1), w(2 * m - 1), x(2 * m)),
                concat(t(1, -1), w(2 * m - 1), t(1)),
            )
        )
        rows.append(
            (
                "loop-w-partner-shift",
                "m=%d" % m,
                concat(x(2 * m - 1, -1), w(2 * m), x(2 * m - 1)),
                concat(t(1, -1), w(2 * m)),
            )
        )
    xblock = concat(*[commutator(invert(x(2 * m - 1)), x(2 * m)) for m in range(1, g + 1)])
    if n >= 3:
        rhs1 = multiply(_sigma_mountain(s, n - 2), t(1))
    else:
        rhs1 = t(1)
    rows.append(("surface-relation-sigma", "", xblock, rhs1))
    wblock = concat(*[commutator(invert(w(2 * m - 1)), w(2 * m)) for m in range(1, g + 1)])
    rows.append(("surface-relation-twist", "", wblock, concat(*[t(l) for l in range(1, n)])))
    rels = [_rel(*row) for row in rows]
    return Presentation(
        "stabilizer-closed(n=%d,g=%d)" % (n, g),
        A,
        rels,
        n,
        _strand_perms(A, n),
        degenerate=(n == 2),
    )


def artin_tits_d_presentation(n):
    """The Artin-Tits group whose Coxeter graph is the type D diagram on
    ``n`` nodes: nodes 1 and 2 both join node 3, nodes ``i`` and ``i + 1``
    join for ``i >= 3``, and every other pair commutes."""
    if n < 2:
        raise ValueError("need n >= 2")
    A = Alphabet([("delta", n)])
    d = lambda i, e=1: generator(A, "delta", i, e)
    edges = set()
    if n >= 3:
        edges.add((1, 3))
        edges.add((2, 3))
    for i in range(3, n):
        edges.add((i, i + 1))
    rows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) in edges:
                rows.append(
                    (
                        "braid",
                        "i=%d,j=%d" % (i, j),
                        concat(d(i), d(j), d(i)),
                        concat(d(j), d(i), d(j)),
                    )
                )
            else:
                rows.append(
                    ("commute", "i=%d,j=%d" % (i, j), concat(d(i), d(j)), concat(d(j), d(i)))
                )
    rels = [_rel(*row) for row in rows]
    perms = []
    for i in range(1, n + 1):
        perms.append(perm_of_transposition(1 if i <= 2 else i - 1, n))
    return Presentation("artin-tits-d(n=%d)" % n, A, rels, n, perms)


class Assignment:
    """Generator images (with certified inverses) for a presentation.

    ``certify=False`` skips the inverse check and marks the result
    uncertified; the sensitivity tests use that path to inject deliberately
    broken images.
    """

    __slots__ = ("name", "source", "target", "images", "inverse_images", "certified")

    def __init__(self, name, source, target, images, inverse_images, certify=True):
        images = tuple(images)
        inverse_images = tuple(inverse_images)
        if len(images) != source.alphabet.rank or len(inverse_images) != len(images):
            raise ValueError("need one image and one inverse image per generator")
        for f in images + inverse_images:
            if not isinstance(f, FreeEndo) or f.alphabet != target:
                raise ValueError("images must be endomorphisms of the target alphabet")
        if certify:
            for gid, (f, fi) in enumerate(zip(images, inverse_images)):
                if not verify_inverse(f, fi):
                    raise ValueError(
                        "image of %s generator %s is not invertible by the "
                        "supplied inverse"
                        % (name, source.alphabet.generator_name(gid))
                    )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "inverse_images", inverse_images)
        object.__setattr__(self, "certified", certify)

    def __setattr__(self, name, value):
        raise AttributeError("Assignment is immutable")

    def image_of(self, family, index):
        return self.images[self.source.alphabet.gid(family, index)]

    def __repr__(self):
        return "Assignment(%s: %s -> free group of rank %d)" % (
            self.name,
            self.source.name,
            self.target.rank,
        )


def evaluate(asgn, u):
    """Endomorphism assigned to the word ``u``, one factor per letter."""
    if u.alphabet != asgn.source.alphabet:
        raise ValueError("word alphabet does not match assignment source")
    acc = identity_endo(asgn.target)
    for g, e in zip(u.gens, u.exps):
        f = asgn.images[int(g)] if e > 0 else asgn.inverse_images[int(g)]
        for _ in range(abs(int(e))):
            acc = compose(acc, f)
    return acc


@dataclass(frozen=True)
class RelatorResult:
    rid: str
    schema: str
    instance: str
    passed: bool
    lhs_image: str
    rhs_image: str


def _endo_lines(f):
    return "; ".join(
        "%s -> %s" % (f.alphabet.generator_name(i), str(img) or "1")
        for i, img in enumerate(f.images)
    )


@dataclass(frozen=True)
class Report:
    presentation: str
    assignment: str
    relators: tuple
    passed: bool
    degenerate: bool = False

    def to_json(self):
        return {
            "presentation": self.presentation,
            "assignment": self.assignment,
            "relators": [
                {
                    "id": r.rid,
                    "schema": r.schema,
                    "instance": r.instance,
                    "pass": r.passed,
                }
                for r in self.relators
            ],
            "pass": self.passed,
            "degenerate": self.degenerate,
        }

    def render(self, verbose=False):
        lines = []
        lines.append(
            "%s under %s: %s%s"
            % (
                self.presentation,
                self.assignment,
                "PASS" if self.passed else "FAIL",
                " (degenerate)" if self.degenerate else "",
            )
        )
        for r in self.relators:
            if verbose or not r.passed:
                lines.append("  %s %s" % ("ok  " if r.passed else "FAIL", r.rid))
                if not r.passed or verbose:
                    lines.append("       lhs: %s" % r.lhs_image)
                    lines.append("       rhs: %s" % r.rhs_image)
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def _thread_count():
    raw = os.environ.get("BRAIDREP_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _relator_result(asgn, rel):
    fl = evaluate(asgn, rel.lhs)
    fr = evaluate(asgn, rel.rhs)
    return RelatorResult(
        rel.rid, rel.schema, rel.instance, endo_equal(fl, fr), _endo_lines(fl), _endo_lines(fr)
    )


def verify_representation(asgn):
    """Check every relator of the assignment's source presentation."""
    rels = asgn.source.relators
    workers = _thread_count()
    if workers > 1 and len(rels) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda rel: _relator_result(asgn, rel), rels))
    else:
        results = [_relator_result(asgn, rel) for rel in rels]
    results.sort(key=lambda r: r.rid)
    return Report(
        presentation=asgn.source.name,
        assignment=asgn.name,
        relators=tuple(results),
        passed=all(r.passed for r in results),
        degenerate=asgn.source.degenerate,
    )
