"""Endomorphisms of free groups given by generator images.

A :class:`FreeEndo` stores one image word per generator of its alphabet.
Composition order: ``compose(f, g)`` applies ``f`` first, then ``g``, so
``apply(compose(f, g), u) == apply(g, apply(f, u))``.  Inner automorphisms
follow the conjugation convention of :mod:`.words`:
``apply(inner(A, w), u) == conjugate(u, w) == w^-1 u w``.

Nothing here decides whether an endomorphism is invertible; callers that
need automorphisms supply the inverse and certify it with
:func:`verify_inverse`.
"""

import numpy as np

from ._backend import kernels
from .words import Word, conjugate, parse_word

__all__ = [
    "FreeEndo",
    "apply",
    "compose",
    "inner",
    "identity_endo",
    "is_identity",
    "endo_equal",
    "verify_inverse",
    "equal_mod_inner_by",
    "endo_to_json",
    "endo_from_json",
]


class FreeEndo:
    """A generator-image table over a fixed alphabet."""

    __slots__ = ("alphabet", "images", "_packed")

    def __init__(self, alphabet, images):
        images = tuple(images)
        if len(images) != alphabet.rank:
            raise ValueError(
                "expected %d images, got %d" % (alphabet.rank, len(images))
            )
        for img in images:
            if not isinstance(img, Word) or img.alphabet != alphabet:
                raise ValueError("images must be words over the same alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_packed", None)

    def __setattr__(self, name, value):
        raise AttributeError("FreeEndo is immutable")

    def packed(self):
        """Flat (offsets, gens, exps) arrays for the substitution kernel."""
        packed = self._packed
        if packed is None:
            off = np.zeros(self.alphabet.rank + 1, dtype=np.int64)
            for i, img in enumerate(self.images):
                off[i + 1] = off[i] + img.gens.shape[0]
            total = int(off[-1])
            ig = np.empty(total, dtype=np.int64)
            ie = np.empty(total, dtype=np.int64)
            for i, img in enumerate(self.images):
                ig[off[i] : off[i + 1]] = img.gens
                ie[off[i] : off[i + 1]] = img.exps
            packed = (off, ig, ie)
            object.__setattr__(self, "_packed", packed)
        return packed

    def image_of(self, family, index):
        return self.images[self.alphabet.gid(family, index)]

    def __eq__(self, other):
        if not isinstance(other, FreeEndo):
            return NotImplemented
        return self.alphabet == other.alphabet and self.images == other.images

    def __hash__(self):
        return hash((self.alphabet, self.images))

    def __repr__(self):
        rows = ", ".join(
            "%s -> %s" % (self.alphabet.generator_name(i), str(img) or "1")
            for i, img in enumerate(self.images)
        )
        return "FreeEndo(%s)" % rows


def apply(f, u):
    """Image of the word ``u`` under ``f``."""
    if u.alphabet != f.alphabet:
        raise ValueError("word alphabet does not match endomorphism alphabet")
    off, ig, ie = f.packed()
    gens, exps = kernels().substitute(u.gens, u.exps, off, ig, ie)
    return Word(f.alphabet, gens, exps, _reduced=True)


def compose(f, g):
    """``f`` then ``g``."""
    if f.alphabet != g.alphabet:
        raise ValueError("cannot compose over different alphabets")
    return FreeEndo(f.alphabet, [apply(g, img) for img in f.images])


def identity_endo(alphabet):
    from .words import generator

    return FreeEndo(
        alphabet,
        [
            generator(alphabet, *alphabet.gen_info(gid))
            for gid in range(alphabet.rank)
        ],
    )


def inner(alphabet, w):
    """Conjugation by ``w``: every generator ``g`` maps to ``w^-1 g w``."""
    from .words import generator

    if w.alphabet != alphabet:
        raise ValueError("conjugator alphabet mismatch")
    images = []
    for gid in range(alphabet.rank):
        g = generator(alphabet, *alphabet.gen_info(gid))
        images.append(conjugate(g, w))
    return FreeEndo(alphabet, images)


def is_identity(f):
    for gid, img in enumerate(f.images):
        if img.gens.shape[0] != 1:
            return False
        if int(img.gens[0]) != gid or int(img.exps[0]) != 1:
            return False
    return True


def endo_equal(f, g):
    if f.alphabet != g.alphabet:
        return False
    return f.images == g.images


def verify_inverse(f, g):
    """True iff ``f`` and ``g`` compose to the identity both ways."""
    return is_identity(compose(f, g)) and is_identity(compose(g, f))


def equal_mod_inner_by(f, g, c):
    """True iff ``f`` followed by conjugation by ``c`` equals ``g``."""
    return endo_equal(compose(f, inner(f.alphabet, c)), g)


def endo_to_json(f):
    images = {}
    for gid, img in enumerate(f.images):
        images[f.alphabet.generator_name(gid)] = str(img)
    return {"alphabet": f.alphabet.to_json(), "images": images}


def endo_from_json(obj):
    from .words import Alphabet

    alphabet = Alphabet.from_json(obj["alphabet"])
    by_name = {alphabet.generator_name(g): g for g in range(alphabet.rank)}
    images = [None] * alphabet.rank
    for name, text in obj["images"].items():
        gid = by_name.get(name)
        if gid is None:
            raise ValueError("unknown generator %r in images" % (name,))
        images[gid] = parse_word(text, alphabet)
    for gid, img in enumerate(images):
        if img is None:
            raise ValueError(
                "missing image for generator %r"
                % (alphabet.generator_name(gid),)
            )
    return FreeEndo(alphabet, images)
