"""Braid-like groups acting on free groups.

Words over a generating alphabet, free-group endomorphisms, finite
presentations with relation checking, concrete representation families, and
coset rewriting into the stabilizer of the last strand.
"""

from ._backend import backend_name, set_backend
from .automorphisms import (
    FreeEndo,
    apply,
    compose,
    endo_equal,
    endo_from_json,
    endo_to_json,
    equal_mod_inner_by,
    identity_endo,
    inner,
    is_identity,
    verify_inverse,
)
from .presentations import (
    Assignment,
    Presentation,
    Relator,
    Report,
    artin_tits_d_presentation,
    braid_presentation,
    closed_surface_presentation,
    dn_closed_presentation,
    dn_nonorientable_presentation,
    dn_orientable_presentation,
    evaluate,
    nonorientable_presentation,
    permutation_image,
    surface_braid_presentation,
    verify_representation,
)
from .representations import (
    FAMILIES,
    ArtinCertificate,
    RepFamily,
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
    tau1_word,
)
from .rewriting import (
    RewriteSequence,
    RewriteSymbol,
    Transversal,
    coset_representative,
    expand,
    induced_witness_endo,
    relator_rewrite_report,
    rewrite,
    roundtrip_check,
    subgroup_generators,
)
from .words import (
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

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ArtinCertificate",
    "Assignment",
    "FAMILIES",
    "FreeEndo",
    "Permutation",
    "Presentation",
    "Relator",
    "Report",
    "RepFamily",
    "RewriteSequence",
    "RewriteSymbol",
    "Transversal",
    "Word",
    "apply",
    "artin_condition_check",
    "artin_rep",
    "artin_tits_d_presentation",
    "backend_name",
    "braid_presentation",
    "closed_surface_presentation",
    "commutator",
    "compose",
    "concat",
    "conjugate",
    "coset_representative",
    "cyclic_reduce",
    "dn_closed_presentation",
    "dn_nonorientable_presentation",
    "dn_orientable_presentation",
    "endo_equal",
    "endo_from_json",
    "endo_to_json",
    "equal_mod_inner_by",
    "evaluate",
    "expand",
    "fixed_product_nonorientable",
    "fixed_product_orientable",
    "generator",
    "identity_endo",
    "identity_word",
    "induced_witness_endo",
    "inner",
    "invert",
    "iota_d",
    "is_identity",
    "lambda_words",
    "multiply",
    "nonorientable_presentation",
    "parse_word",
    "perm_compose",
    "perm_of_transposition",
    "permutation_image",
    "perturb_assignment",
    "pi_d_word",
    "random_word",
    "relator_rewrite_report",
    "rewrite",
    "rho_d",
    "rho_u",
    "rho_v",
    "rho_v_outer_check",
    "rho_w",
    "roundtrip_check",
    "s_d_word",
    "set_backend",
    "subgroup_generators",
    "surface_braid_presentation",
    "tau1_word",
    "verify_inverse",
    "verify_representation",
    "word_from_letters",
]
