"""Command line front end.

Exit codes: 0 for success/pass, 1 for a failed verification, 2 for usage or
input errors.  BRAIDREP_BACKEND selects the kernel backend and
BRAIDREP_THREADS caps the relator-sweep worker count.
"""

import argparse
import json
import random
import sys

from .automorphisms import apply, endo_from_json, endo_to_json
from .presentations import (
    artin_tits_d_presentation,
    braid_presentation,
    closed_surface_presentation,
    dn_closed_presentation,
    dn_nonorientable_presentation,
    dn_orientable_presentation,
    evaluate,
    nonorientable_presentation,
    surface_braid_presentation,
    verify_representation,
)
from .representations import (
    FAMILIES,
    RepFamily,
    artin_condition_check,
    artin_rep,
    fixed_product_nonorientable,
    fixed_product_orientable,
    perturb_assignment,
    rho_u,
    rho_v,
    rho_v_outer_check,
    rho_w,
)
from .rewriting import (
    Transversal,
    coset_representative,
    expand,
    relator_rewrite_report,
    rewrite,
    roundtrip_check,
)
from .words import invert, multiply, parse_word, random_word


def _add_params(sub, rep=True):
    if rep:
        sub.add_argument("--rep", required=True, choices=FAMILIES)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--g", type=int, default=0)
    sub.add_argument("--p", type=int, default=1)
    sub.add_argument("--format", choices=("text", "json"), default="text")


def _build(args):
    return RepFamily(args.rep, args.n, args.g, args.p).build()


def _cmd_eval(args):
    asgn = _build(args)
    u = parse_word(args.word, asgn.source.alphabet)
    f = evaluate(asgn, u)
    if args.format == "json":
        print(json.dumps(endo_to_json(f), indent=2))
    else:
        for gid, img in enumerate(f.images):
            print("%s -> %s" % (f.alphabet.generator_name(gid), str(img) or "1"))
    return 0


def _cmd_verify(args):
    asgn = _build(args)
    if args.mutate_seed is not None:
        asgn = perturb_assignment(asgn, random.Random(args.mutate_seed))
    if args.rep == "rho-v":
        report = rho_v_outer_check(args.n, args.g, asgn=asgn)
    else:
        report = verify_representation(asgn)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render(verbose=args.verbose))
    return 0 if report.passed else 1


def _cmd_fixed(args):
    if args.rep not in ("rho-u", "rho-w"):
        print("fixed products exist for rho-u and rho-w only", file=sys.stderr)
        return 2
    asgn = _build(args)
    if args.rep == "rho-u":
        prod = fixed_product_orientable(args.n, args.g, args.p)
    else:
        prod = fixed_product_nonorientable(args.n, args.g, args.p)
    rows = []
    for gid, f in enumerate(asgn.images):
        ok = apply(f, prod) == prod
        rows.append((asgn.source.alphabet.generator_name(gid), ok))
    passed = all(ok for _, ok in rows)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "assignment": asgn.name,
                    "product": str(prod),
                    "generators": [{"generator": g, "pass": ok} for g, ok in rows],
                    "pass": passed,
                },
                indent=2,
            )
        )
    else:
        print("fixed word: %s" % prod)
        for gname, ok in rows:
            print("  %s %s" % ("ok  " if ok else "FAIL", gname))
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def _cmd_artin_check(args):
    with open(args.endo_file) as fh:
        f = endo_from_json(json.load(fh))
    if args.n is not None and f.alphabet.rank != args.n:
        print(
            "endomorphism rank %d does not match --n %d" % (f.alphabet.rank, args.n),
            file=sys.stderr,
        )
        return 2
    product = None
    if args.word:
        product = parse_word(args.word, f.alphabet)
    cert = artin_condition_check(f, product)
    if cert is None:
        if args.format == "json":
            print(json.dumps({"pass": False}))
        else:
            print("REJECT: not a conjugated permutation of generators fixing the product")
        return 1
    if args.format == "json":
        print(
            json.dumps(
                {
                    "pass": True,
                    "permutation": list(cert.permutation.images),
                    "conjugators": {
                        f.alphabet.generator_name(i): str(c)
                        for i, c in enumerate(cert.conjugators)
                    },
                },
                indent=2,
            )
        )
    else:
        print("permutation: %s" % (list(cert.permutation.images),))
        for i, c in enumerate(cert.conjugators):
            print("  %s: %s" % (f.alphabet.generator_name(i), str(c) or "1"))
    return 0


def _ambient_presentation(args):
    if args.surface == "orientable":
        return surface_braid_presentation(args.n, args.g, args.p)
    if args.surface == "nonorientable":
        return nonorientable_presentation(args.n, args.g, args.p)
    return closed_surface_presentation(args.n, args.g)


def _stabilizer_presentation(args):
    if args.surface == "orientable":
        return dn_orientable_presentation(args.n, args.g, args.p)
    if args.surface == "nonorientable":
        return dn_nonorientable_presentation(args.n, args.g, args.p)
    return dn_closed_presentation(args.n, args.g)


def _rewrite_witness(args):
    if args.surface == "orientable":
        if args.g == 0 and args.p == 1:
            return artin_rep(args.n)
        return rho_u(args.n + 1, args.g, args.p)
    if args.surface == "nonorientable":
        return rho_w(args.n + 1, args.g, args.p)
    return rho_v(args.n + 1, args.g)


def _cmd_rewrite(args):
    pres = _ambient_presentation(args)
    t = Transversal(pres)
    if args.relators:
        rows = relator_rewrite_report(t, _stabilizer_presentation(args))
        if args.format == "json":
            print(json.dumps(rows, indent=2))
        else:
            for row in rows:
                match = row["matches"] if row["matches"] else "-"
                print(
                    "m%d * %s: [%s]  %s"
                    % (row["coset"], row["relator"], ", ".join(row["symbols"]), match)
                )
        return 0
    if args.roundtrip:
        rng = random.Random(args.seed)
        asgn = _rewrite_witness(args)
        good = 0
        for _ in range(args.samples):
            u = random_word(pres.alphabet, args.length, rng)
            u = multiply(u, invert(coset_representative(t, u)))
            if roundtrip_check(t, asgn, u):
                good += 1
        print("roundtrip: %d/%d" % (good, args.samples))
        return 0 if good == args.samples else 1
    if not args.word:
        print("rewrite needs --word, --relators or --roundtrip", file=sys.stderr)
        return 2
    u = parse_word(args.word, pres.alphabet)
    seq = rewrite(t, u)
    if args.format == "json":
        out = [
            {
                "symbol": sym.name if sym.name else sym.display(),
                "sign": sign,
                "expansion": str(sym.expansion),
            }
            for sym, sign in seq
        ]
        print(json.dumps({"symbols": out, "expansion": str(expand(seq))}, indent=2))
    else:
        tags = [
            (sym.name if sym.name else sym.display()) + ("" if sign > 0 else "^-1")
            for sym, sign in seq
        ]
        print("[%s]" % ", ".join(tags))
        print("expansion: %s" % (str(expand(seq)) or "1"))
    return 0


def _cmd_list(args):
    rows = []
    n, g, p = args.n, args.g, args.p
    builders = [
        ("braid", lambda: braid_presentation(n)),
        ("surface", lambda: surface_braid_presentation(n, g, p)),
        ("closed", lambda: closed_surface_presentation(n, g)),
        ("nonorientable", lambda: nonorientable_presentation(n, max(g, 1), p)),
        ("stabilizer-orientable", lambda: dn_orientable_presentation(n, g, p)),
        ("stabilizer-nonorientable", lambda: dn_nonorientable_presentation(n, max(g, 1), p)),
        ("stabilizer-closed", lambda: dn_closed_presentation(n, g)),
        ("artin-tits-d", lambda: artin_tits_d_presentation(n)),
    ]
    for label, build in builders:
        try:
            pres = build()
        except ValueError as err:
            rows.append({"family": label, "error": str(err)})
            continue
        rows.append(
            {
                "family": label,
                "name": pres.name,
                "generators": pres.alphabet.rank,
                "relators": len(pres.relators),
            }
        )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        for row in rows:
            if "error" in row:
                print("%-24s (not defined here: %s)" % (row["family"], row["error"]))
            else:
                print(
                    "%-24s %s: %d generators, %d relators"
                    % (row["family"], row["name"], row["generators"], row["relators"])
                )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Braid-like groups acting on free groups, with verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="image of a word under a representation")
    _add_params(p_eval)
    p_eval.add_argument("--word", required=True)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = subs.add_parser("verify", help="check all defining relations")
    _add_params(p_verify)
    p_verify.add_argument("--mutate-seed", type=int, default=None)
    p_verify.add_argument("--verbose", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_fixed = subs.add_parser("fixed", help="check the fixed boundary word")
    _add_params(p_fixed)
    p_fixed.set_defaults(func=_cmd_fixed)

    p_artin = subs.add_parser(
        "artin-check", help="certify an endomorphism from a JSON file"
    )
    p_artin.add_argument("--endo-file", required=True)
    p_artin.add_argument("--n", type=int, default=None)
    p_artin.add_argument("--word", default=None, help="override the fixed product")
    p_artin.add_argument("--format", choices=("text", "json"), default="text")
    p_artin.set_defaults(func=_cmd_artin_check)

    p_rw = subs.add_parser("rewrite", help="rewrite into the last-strand stabilizer")
    p_rw.add_argument("--n", type=int, required=True)
    p_rw.add_argument("--g", type=int, default=0)
    p_rw.add_argument("--p", type=int, default=1)
    p_rw.add_argument(
        "--surface",
        choices=("orientable", "nonorientable", "closed"),
        default="orientable",
    )
    p_rw.add_argument("--word", default=None)
    p_rw.add_argument("--relators", action="store_true")
    p_rw.add_argument("--roundtrip", action="store_true")
    p_rw.add_argument("--seed", type=int, default=7)
    p_rw.add_argument("--samples", type=int, default=25)
    p_rw.add_argument("--length", type=int, default=16)
    p_rw.add_argument("--format", choices=("text", "json"), default="text")
    p_rw.set_defaults(func=_cmd_rewrite)

    p_list = subs.add_parser("list-presentations", help="available presentations")
    p_list.add_argument("--n", type=int, default=3)
    p_list.add_argument("--g", type=int, default=1)
    p_list.add_argument("--p", type=int, default=2)
    p_list.add_argument("--format", choices=("text", "json"), default="text")
    p_list.set_defaults(func=_cmd_list)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
