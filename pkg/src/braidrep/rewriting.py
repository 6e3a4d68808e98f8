"""Rewriting ambient braid words into the puncture-stabilizer subgroup.

The subgroup of an ``n``-strand (surface) braid group consisting of words
whose strand permutation fixes ``n`` has index ``n``; a Schreier transversal
is ``m_l = s_{n-1} s_{n-2} .. s_l`` (and the empty word for coset ``n``),
where the coset of a word ``u`` is read off as the image of ``n`` under its
strand permutation.

:func:`subgroup_generators` enumerates one symbol per (coset, generator)
pair, with its expansion ``m_k a rep(m_k a)^-1`` as an ambient word; symbols
whose expansion reduces to the identity are marked trivial and dropped from
rewriting output.  A symbol is named when its expansion equals one of the
recognizable normal forms: an ambient generator itself, a twist of the last
strand about strand ``k``, or a loop generator pushed across the whole
transversal.  :func:`rewrite` turns a subgroup word into a symbol sequence
and :func:`expand` maps it back; the two compose to the identity verbatim
on reduced words, which :func:`roundtrip_check` verifies through a faithful
witness assignment as well.
"""

from .automorphisms import compose, endo_equal, identity_endo
from .presentations import evaluate, permutation_image
from .words import (
    Permutation,
    concat,
    generator,
    identity_word,
    invert,
    multiply,
    parse_word,
    perm_compose,
)

__all__ = [
    "Transversal",
    "RewriteSymbol",
    "RewriteSequence",
    "coset_representative",
    "subgroup_generators",
    "rewrite",
    "expand",
    "roundtrip_check",
    "induced_witness_endo",
    "relator_rewrite_report",
]


class RewriteSymbol:
    """One Schreier generator: coset index, ambient generator, expansion."""

    __slots__ = ("lam", "gid", "gen_name", "name", "expansion", "trivial")

    def __init__(self, lam, gid, gen_name, name, expansion, trivial):
        self.lam = lam
        self.gid = gid
        self.gen_name = gen_name
        self.name = name
        self.expansion = expansion
        self.trivial = trivial

    def display(self):
        return "s(m%d,%s)" % (self.lam, self.gen_name)

    def __repr__(self):
        tag = self.name if self.name else self.display()
        if self.trivial:
            tag += " (trivial)"
        return "RewriteSymbol(%s = %s)" % (tag, str(self.expansion) or "1")


class Transversal:
    """Schreier transversal for the last-strand stabilizer."""

    def __init__(self, presentation):
        n = presentation.n
        if n < 2 or presentation.alphabet.family_count("sigma") != n - 1:
            raise ValueError(
                "transversal needs the full ambient sigma family and n >= 2"
            )
        self.presentation = presentation
        A = presentation.alphabet
        s = lambda i, e=1: generator(A, "sigma", i, e)
        reps = []
        for l in range(1, n):
            reps.append(concat(*[s(i) for i in range(n - 1, l - 1, -1)]))
        reps.append(identity_word(A))
        self.reps = tuple(reps)
        self._symbols = None
        self._table = None

    def __repr__(self):
        return "Transversal(%s)" % (self.presentation.name,)


def coset_representative(t, u):
    """The transversal word in the same right coset as ``u``."""
    l = permutation_image(t.presentation, u).apply(t.presentation.n)
    return t.reps[l - 1]


def _named_forms(t):
    pres = t.presentation
    A = pres.alphabet
    n = pres.n
    s = lambda i, e=1: generator(A, "sigma", i, e)
    named = {}
    for gid in range(A.rank):
        fam, idx = A.gen_info(gid)
        if fam == "sigma" and idx == n - 1:
            continue
        named[generator(A, fam, idx)] = A.generator_name(gid)
    for k in range(1, n):
        parts = [s(i) for i in range(n - 1, k, -1)]
        parts.append(s(k, 2))
        parts.extend(s(i, -1) for i in range(k + 1, n))
        named[concat(*parts)] = "t%d" % k
    m1 = t.reps[0]
    for fam, pushed in (("x", "w"), ("a", "w"), ("z", "xi")):
        for idx in A.family_indices(fam):
            named[concat(m1, generator(A, fam, idx), invert(m1))] = "%s%d" % (pushed, idx)
    return named


def subgroup_generators(t):
    """All Schreier symbols, coset-major then generator order."""
    if t._symbols is None:
        pres = t.presentation
        A = pres.alphabet
        named = _named_forms(t)
        out = []
        for k in range(1, pres.n + 1):
            mk = t.reps[k - 1]
            for gid in range(A.rank):
                a = generator(A, *A.gen_info(gid))
                prod = multiply(mk, a)
                expansion = multiply(prod, invert(coset_representative(t, prod)))
                trivial = expansion.is_identity()
                name = None if trivial else named.get(expansion)
                out.append(
                    RewriteSymbol(k, gid, A.generator_name(gid), name, expansion, trivial)
                )
        t._symbols = tuple(out)
    return list(t._symbols)


def _symbol_table(t):
    if t._table is None:
        t._table = {(sym.lam, sym.gid): sym for sym in subgroup_generators(t)}
    return t._table


class RewriteSequence:
    """A word in Schreier symbols, tied to its transversal."""

    __slots__ = ("transversal", "items")

    def __init__(self, transversal, items):
        self.transversal = transversal
        self.items = tuple(items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __repr__(self):
        parts = []
        for sym, sign in self.items:
            tag = sym.name if sym.name else sym.display()
            parts.append(tag if sign > 0 else tag + "^-1")
        return "RewriteSequence[%s]" % ", ".join(parts)


def rewrite(t, u):
    """Express a subgroup word as a sequence of nontrivial symbols.

    Raises ValueError when the strand permutation of ``u`` moves the last
    strand.  Exponents are unrolled letter by letter: a positive letter is
    tagged with the coset of the prefix before it, a negative letter with
    the coset of the prefix including it.
    """
    pres = t.presentation
    if u.alphabet != pres.alphabet:
        raise ValueError("word alphabet does not match transversal")
    n = pres.n
    if permutation_image(pres, u).apply(n) != n:
        raise ValueError("word does not stabilize the last strand")
    table = _symbol_table(t)
    items = []
    p = Permutation.identity(n)
    for g, e in zip(u.gens, u.exps):
        g = int(g)
        e = int(e)
        q = pres.perm_images[g]
        if e > 0:
            for _ in range(e):
                sym = table[(p.apply(n), g)]
                if not sym.trivial:
                    items.append((sym, 1))
                p = perm_compose(p, q)
        else:
            qi = q.inverse()
            for _ in range(-e):
                p = perm_compose(p, qi)
                sym = table[(p.apply(n), g)]
                if not sym.trivial:
                    items.append((sym, -1))
    return RewriteSequence(t, items)


def expand(seq):
    """Multiply out the expansions of a symbol sequence."""
    out = identity_word(seq.transversal.presentation.alphabet)
    for sym, sign in seq.items:
        out = multiply(out, sym.expansion if sign > 0 else invert(sym.expansion))
    return out


def roundtrip_check(t, asgn, u):
    """True iff rewriting and expanding preserves ``u`` in the witness
    assignment and keeps the strand permutation."""
    if asgn.source.alphabet != t.presentation.alphabet:
        raise ValueError("witness assignment source does not match transversal")
    v = expand(rewrite(t, u))
    if not endo_equal(evaluate(asgn, v), evaluate(asgn, u)):
        return False
    return permutation_image(t.presentation, v) == permutation_image(t.presentation, u)


def induced_witness_endo(seq, asgn):
    """Ordered product of the witness images of the symbol expansions."""
    acc = identity_endo(asgn.target)
    for sym, sign in seq.items:
        word = sym.expansion if sign > 0 else invert(sym.expansion)
        acc = compose(acc, evaluate(asgn, word))
    return acc


def relator_rewrite_report(t, sub_pres=None):
    """Rewrite every transversal conjugate of every ambient relator.

    Returns one row per (relator, coset) pair.  When all emitted symbols
    are named and ``sub_pres`` is given, the row carries the induced word
    over the stabilizer alphabet and the id of the stabilizer relator it
    equals (up to free reduction and inversion only), if any.
    """
    pres = t.presentation
    rows = []
    for k in range(1, pres.n + 1):
        mk = t.reps[k - 1]
        for rel in pres.relators:
            seq = rewrite(t, concat(mk, rel.word, invert(mk)))
            named = all(sym.name is not None for sym, _ in seq.items)
            symbols = []
            for sym, sign in seq.items:
                tag = sym.name if sym.name else sym.display()
                symbols.append(tag if sign > 0 else tag + "^-1")
            row = {
                "relator": rel.rid,
                "coset": k,
                "symbols": symbols,
                "named": named,
                "induced": None,
                "matches": None,
            }
            if named and sub_pres is not None:
                text = " ".join(
                    sym.name if sign > 0 else sym.name + "^-1"
                    for sym, sign in seq.items
                )
                try:
                    induced = parse_word(text, sub_pres.alphabet)
                except ValueError:
                    induced = None
                if induced is not None:
                    row["induced"] = str(induced)
                    if induced.is_identity():
                        row["matches"] = "(free reduction)"
                    else:
                        for srel in sub_pres.relators:
                            if srel.word == induced or srel.word == invert(induced):
                                row["matches"] = srel.rid
                                break
            rows.append(row)
    return rows
