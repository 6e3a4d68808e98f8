"""Free-group words over indexed generator alphabets, plus permutations.

Words are immutable and always freely reduced.  The letter sequence is
run-length encoded as a pair of int64 arrays (generator ids, nonzero
exponents) with no two adjacent runs sharing a generator, so equality,
hashing and printing all act on a canonical form and equal group elements
compare equal.

Conventions used throughout the package:

* ``conjugate(a, b)`` is ``b^-1 a b``.
* ``commutator(a, b)`` is ``a^-1 b^-1 a b``.
* ``perm_compose(p, q)`` applies ``p`` first, then ``q``.

Token grammar, shared by :func:`parse_word` and ``str()``::

    word  := token*
    token := name index ("^" signed-int)?

where ``name`` is one of ``s x z a t w xi d l``, short for the families
sigma, x, z, a, tau, w, xi, delta, lambda.  Tokens are separated by
whitespace and the empty string is the identity, so printing and parsing
round-trip exactly.
"""

import re

import numpy as np

from ._backend import kernels

__all__ = [
    "Alphabet",
    "Word",
    "Permutation",
    "parse_word",
    "multiply",
    "invert",
    "conjugate",
    "commutator",
    "cyclic_reduce",
    "generator",
    "identity_word",
    "word_from_letters",
    "random_word",
    "perm_compose",
    "perm_of_transposition",
]

_FAMILY_SHORT = {
    "sigma": "s",
    "x": "x",
    "z": "z",
    "a": "a",
    "tau": "t",
    "w": "w",
    "xi": "xi",
    "delta": "d",
    "lambda": "l",
}
_SHORT_FAMILY = {v: k for k, v in _FAMILY_SHORT.items()}

_TOKEN_RE = re.compile(r"(xi|[sxzatwdl])(\d+)(?:\^(-?\d+))?\Z")

_EMPTY = np.empty(0, dtype=np.int64)
_EMPTY.setflags(write=False)


class Alphabet:
    """An ordered list of generator families with contiguous index ranges.

    Each family is ``(name, count)`` or ``(name, count, start)``; indices
    run from ``start`` (default 1) through ``start + count - 1``.  Families
    with count 0 are dropped.  Generator ids are 0-based positions in the
    concatenation of the families, in the order given.
    """

    __slots__ = ("families", "rank", "_spans", "_names")

    def __init__(self, families):
        norm = []
        for fam in families:
            if len(fam) == 2:
                name, count = fam
                start = 1
            else:
                name, count, start = fam
            if name not in _FAMILY_SHORT:
                raise ValueError("unknown family name %r" % (name,))
            if count < 0:
                raise ValueError("family count must be nonnegative")
            if count == 0:
                continue
            norm.append((name, int(count), int(start)))
        if len({f[0] for f in norm}) != len(norm):
            raise ValueError("family names must be distinct")
        self.families = tuple(norm)
        spans = {}
        total = 0
        for name, count, start in self.families:
            spans[name] = (total, count, start)
            total += count
        self.rank = total
        self._spans = spans
        names = []
        for name, count, start in self.families:
            short = _FAMILY_SHORT[name]
            names.extend("%s%d" % (short, start + i) for i in range(count))
        self._names = tuple(names)

    def gid(self, family, index):
        """0-based generator id of ``family`` generator number ``index``."""
        if family in _SHORT_FAMILY:
            family = _SHORT_FAMILY[family]
        span = self._spans.get(family)
        if span is None:
            raise KeyError("alphabet has no %r family" % (family,))
        base, count, start = span
        if not start <= index < start + count:
            raise IndexError(
                "index %d out of range for family %r (%d..%d)"
                % (index, family, start, start + count - 1)
            )
        return base + (index - start)

    def gen_info(self, gid):
        """Return (family, index) for a generator id."""
        for name, count, start in self.families:
            if gid < count:
                return name, start + gid
            gid -= count
        raise IndexError("generator id out of range")

    def generator_name(self, gid):
        return self._names[gid]

    def generator_names(self):
        return list(self._names)

    def has_family(self, name):
        if name in _SHORT_FAMILY:
            name = _SHORT_FAMILY[name]
        return name in self._spans

    def family_count(self, name):
        if name in _SHORT_FAMILY:
            name = _SHORT_FAMILY[name]
        span = self._spans.get(name)
        return 0 if span is None else span[1]

    def family_indices(self, name):
        """All generator indices of a family, as a range (empty if absent)."""
        if name in _SHORT_FAMILY:
            name = _SHORT_FAMILY[name]
        span = self._spans.get(name)
        if span is None:
            return range(0)
        return range(span[2], span[2] + span[1])

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.families == other.families

    def __hash__(self):
        return hash(self.families)

    def __repr__(self):
        return "Alphabet(%r)" % (list(self.families),)

    def to_json(self):
        out = []
        for name, count, start in self.families:
            out.append([name, count] if start == 1 else [name, count, start])
        return {"families": out}

    @staticmethod
    def from_json(obj):
        try:
            return Alphabet([tuple(f) for f in obj["families"]])
        except (TypeError, KeyError, IndexError) as err:
            raise ValueError("malformed alphabet data: %s" % err) from None


class Word:
    """An immutable, freely reduced word over an :class:`Alphabet`.

    Do not call the constructor with raw arrays from outside this module;
    use :func:`parse_word`, :func:`generator`, :func:`word_from_letters` or
    the algebra operations.
    """

    __slots__ = ("alphabet", "gens", "exps", "_hash")

    def __init__(self, alphabet, gens=_EMPTY, exps=_EMPTY, *, _reduced=False):
        if not _reduced:
            gens, exps = kernels().reduce_word(
                np.asarray(gens, dtype=np.int64), np.asarray(exps, dtype=np.int64)
            )
        gens = np.asarray(gens, dtype=np.int64)
        exps = np.asarray(exps, dtype=np.int64)
        gens.setflags(write=False)
        exps.setflags(write=False)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        """Letter length (sum of absolute exponents)."""
        return int(np.abs(self.exps).sum())

    def runs(self):
        """Number of run-length blocks."""
        return int(self.gens.shape[0])

    def __bool__(self):
        return self.gens.shape[0] > 0

    def is_identity(self):
        return self.gens.shape[0] == 0

    def letters(self):
        """Iterate runs as (family, index, exponent) triples."""
        for g, e in zip(self.gens, self.exps):
            fam, idx = self.alphabet.gen_info(int(g))
            yield fam, idx, int(e)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.gens.shape == other.gens.shape
            and bool(np.array_equal(self.gens, other.gens))
            and bool(np.array_equal(self.exps, other.exps))
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.alphabet, self.gens.tobytes(), self.exps.tobytes()))
            object.__setattr__(self, "_hash", h)
        return h

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def inv(self):
        return invert(self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Word(self.alphabet, _reduced=True)
        base = self if k > 0 else invert(self)
        reps = abs(k)
        if base.gens.shape[0] == 1:
            return Word(
                base.alphabet, base.gens.copy(), base.exps * reps, _reduced=False
            )
        gens = np.concatenate([base.gens] * reps)
        exps = np.concatenate([base.exps] * reps)
        return Word(self.alphabet, gens, exps)

    def __str__(self):
        parts = []
        names = self.alphabet._names
        for g, e in zip(self.gens, self.exps):
            if e == 1:
                parts.append(names[g])
            else:
                parts.append("%s^%d" % (names[g], e))
        return " ".join(parts)

    def __repr__(self):
        return "Word(%s)" % (str(self) or "identity",)


def identity_word(alphabet):
    return Word(alphabet, _reduced=True)


def generator(alphabet, family, index, exp=1):
    """Single-letter word ``family_index ^ exp``."""
    if exp == 0:
        return Word(alphabet, _reduced=True)
    gid = alphabet.gid(family, index)
    return Word(
        alphabet,
        np.array([gid], dtype=np.int64),
        np.array([exp], dtype=np.int64),
        _reduced=True,
    )


def word_from_letters(alphabet, letters):
    """Build a word from (family, index, exponent) triples, then reduce."""
    gens = []
    exps = []
    for family, index, exp in letters:
        gens.append(alphabet.gid(family, index))
        exps.append(exp)
    return Word(
        alphabet, np.array(gens, dtype=np.int64), np.array(exps, dtype=np.int64)
    )


def parse_word(text, alphabet):
    """Parse the token grammar; raises ValueError on malformed input."""
    gens = []
    exps = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise ValueError("malformed token %r" % (tok,))
        short, idx, exp = m.group(1), int(m.group(2)), m.group(3)
        family = _SHORT_FAMILY[short]
        try:
            gid = alphabet.gid(family, idx)
        except (KeyError, IndexError) as err:
            raise ValueError("unknown generator %r: %s" % (tok, err)) from None
        e = 1 if exp is None else int(exp)
        if e == 0:
            raise ValueError("zero exponent in token %r" % (tok,))
        gens.append(gid)
        exps.append(e)
    return Word(
        alphabet, np.array(gens, dtype=np.int64), np.array(exps, dtype=np.int64)
    )


def _check_same_alphabet(u, v):
    if u.alphabet != v.alphabet:
        raise ValueError("words live over different alphabets")


def multiply(u, v):
    _check_same_alphabet(u, v)
    if not u:
        return v
    if not v:
        return u
    gens = np.concatenate([u.gens, v.gens])
    exps = np.concatenate([u.exps, v.exps])
    return Word(u.alphabet, gens, exps)


def invert(u):
    return Word(u.alphabet, u.gens[::-1].copy(), -u.exps[::-1], _reduced=True)


def conjugate(a, b):
    """``b^-1 a b``."""
    return multiply(multiply(invert(b), a), b)


def commutator(a, b):
    """``a^-1 b^-1 a b``."""
    return multiply(multiply(invert(a), invert(b)), multiply(a, b))


def concat(*words):
    """Product of any number of words over one alphabet."""
    if not words:
        raise ValueError("concat needs at least one word")
    alph = words[0].alphabet
    for w in words[1:]:
        if w.alphabet != alph:
            raise ValueError("words live over different alphabets")
    gens = np.concatenate([w.gens for w in words]) if words else _EMPTY
    exps = np.concatenate([w.exps for w in words]) if words else _EMPTY
    return Word(alph, gens, exps)


def cyclic_reduce(u):
    """Split ``u`` into a cyclically reduced core and a conjugator.

    Returns ``(core, conjugator)`` with ``u == conjugate(core, conjugator)``
    and ``core`` cyclically reduced.  For ``x1 x2 x1^-1`` the core is ``x2``
    and the conjugator ``x1^-1``; a word like ``x1 x1`` is its own core with
    identity conjugator.
    """
    gs = [int(g) for g in u.gens]
    es = [int(e) for e in u.exps]
    pre_g = []
    pre_e = []
    while len(gs) >= 2 and gs[0] == gs[-1] and es[0] * es[-1] < 0:
        s0 = 1 if es[0] > 0 else -1
        t = min(abs(es[0]), abs(es[-1]))
        pre_g.append(gs[0])
        pre_e.append(s0 * t)
        es[0] -= s0 * t
        es[-1] += s0 * t
        if es[-1] == 0:
            gs.pop()
            es.pop()
        if es[0] == 0:
            gs.pop(0)
            es.pop(0)
    core = Word(
        u.alphabet,
        np.array(gs, dtype=np.int64),
        np.array(es, dtype=np.int64),
        _reduced=True,
    )
    stripped = Word(
        u.alphabet,
        np.array(pre_g, dtype=np.int64),
        np.array(pre_e, dtype=np.int64),
        _reduced=True,
    )
    return core, invert(stripped)


def random_word(alphabet, length, rng, families=None):
    """Uniform random letters (reduced afterwards, so possibly shorter).

    ``rng`` is a ``random.Random`` or anything with ``randrange``/``random``.
    ``families`` optionally restricts the letter pool to the named families.
    """
    if families is None:
        pool = list(range(alphabet.rank))
    else:
        pool = []
        for name in families:
            for idx in alphabet.family_indices(name):
                pool.append(alphabet.gid(name, idx))
    if not pool and length > 0:
        raise ValueError("empty letter pool")
    gens = []
    exps = []
    for _ in range(length):
        gens.append(pool[rng.randrange(len(pool))])
        exps.append(1 if rng.random() < 0.5 else -1)
    return Word(
        alphabet, np.array(gens, dtype=np.int64), np.array(exps, dtype=np.int64)
    )


class Permutation:
    """A permutation of ``{1, .., n}`` stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (len(images), images))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @property
    def degree(self):
        return len(self.images)

    def apply(self, i):
        return self.images[i - 1]

    def is_identity(self):
        return all(v == i + 1 for i, v in enumerate(self.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)


def perm_compose(p, q):
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError("permutation degrees differ")
    return Permutation(q.images[v - 1] for v in p.images)


def perm_of_transposition(i, n):
    """The transposition swapping ``i`` and ``i + 1`` in degree ``n``."""
    if not 1 <= i <= n - 1:
        raise ValueError("transposition index out of range")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(images)
