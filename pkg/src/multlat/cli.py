"""Command-line driver.

Exit status: 0 when every check passes (or is vacuous / not applicable),
1 when a theorem or predicate check fails, 2 on bad input.
"""

import argparse
import sys

from .catalog import builtin, search_multiplications
from .errors import LimitExceeded, MultLatError
from .families import (
    FAMILY_KINDS,
    ElementFamily,
    build_named_family,
    is_s_ako,
    is_s_oka,
    max_complement,
    structural_flags,
)
from .mult import (
    FLAG_NAMES,
    MULTIPLICATIVE,
    classify_multiplication,
    element_predicates,
    is_reduced,
    lattice_class_flags,
)
from .principle import (
    FAIL,
    check_s_pep,
    exhaustive_audit,
    label_witness,
    report_line,
    reports_to_json,
    reports_to_text,
    run_theorem_suite,
    sampled_audit,
)
from .sprime import is_sprime, trivial_set, validate_mclosed
from .textformat import dump, load
from .zn import crosscheck, residue_sets


class UsageError(MultLatError):
    pass


def _split_labels(text):
    return [x for part in text.split(",") for x in part.split()]


def _indices(M, labels):
    out = []
    for lab in labels:
        try:
            out.append(M.lattice.index(lab))
        except (KeyError, ValueError, MultLatError):
            raise UsageError(f"unknown element {lab!r}") from None
    return out


def _s_set(M, args_s, file_s):
    labels = _split_labels(args_s) if args_s is not None else file_s
    if labels is None:
        return trivial_set(M)
    return validate_mclosed(M, _indices(M, labels))


def _fmt_witness(M, witness):
    w = label_witness(M, witness)
    return "\t".join(f"{k}={v}" for k, v in w.items())


def _violation_text(M, v):
    w = label_witness(M, v.witness)
    if set(w) == {"a", "x", "y"}:
        at = f"({w['a']}; {w['x']},{w['y']})"
    else:
        at = "(" + ",".join(str(x) for x in w.values()) + ")"
    return f"{v.reason} at {at}"


def _out(text):
    sys.stdout.write(text)


# --- subcommands ----------------------------------------------------------


def cmd_gen(args):
    kind = args.kind
    if kind in ("zn", "chain", "boolean"):
        if args.arg is None:
            raise UsageError(f"gen {kind} needs a size argument")
        name = {"zn": "idzn", "chain": "chain", "boolean": "boolean"}[kind] + f"({args.arg})"
    elif kind == "n5":
        name = "n5_meet"
    elif kind == "k":
        name = "figure3_K"
    else:
        name = kind
    M = builtin(name)
    _out(dump(M, _split_labels(args.s) if args.s else None))
    return 0


def cmd_check(args):
    M = load(args.file).host
    if M.violation is None:
        _out(f"class: {M.kind}\n")
    else:
        _out(f"class: {M.kind}; violation: {_violation_text(M, M.violation)}\n")
    if M.kind == "invalid":
        return 1
    L = M.lattice
    flags = lattice_class_flags(M)
    _out(f"modular: {_yn(L.is_modular())}\n")
    _out(f"distributive: {_yn(L.is_distributive())}\n")
    _out(f"c-lattice: {_yn(flags['c_lattice'])}\n")
    _out(f"r-lattice: {_yn(flags['r_lattice'])}\n")
    if M.kind == MULTIPLICATIVE:
        _out(f"reduced: {_yn(is_reduced(M))}\n")
        _out("element\t" + "\t".join(FLAG_NAMES) + "\n")
        for a in M.elements:
            f = element_predicates(M, a)
            _out(M.label(a) + "\t" + "\t".join(_yn(f[k]) for k in FLAG_NAMES) + "\n")
    return 0


def _yn(v):
    return "yes" if v else "no"


def cmd_sprimes(args):
    doc = load(args.file)
    M = doc.host
    S = _s_set(M, args.s, doc.s)
    verdicts = [(p, is_sprime(M, S, p)) for p in M.elements]
    _out(" ".join(M.label(p) for p, v in verdicts if v) + "\n")
    for p, v in verdicts:
        status = "s-prime" if v else v.reason
        _out(f"{M.label(p)}\t{status}\t{_fmt_witness(M, v.witness)}".rstrip("\t") + "\n")
    return 0


def _family(M, args, S):
    if args.members is not None:
        return ElementFamily(M, _indices(M, _split_labels(args.members)))
    if args.kind is None:
        raise UsageError("give --members or --kind")
    params = _indices(M, _split_labels(args.params)) if args.params else None
    return build_named_family(
        M, args.kind, S=S, primes=params if args.kind == "avoiding_primes" else None,
        generators=params if args.kind == "product_closure" else None,
    )


def cmd_family(args):
    doc = load(args.file)
    M = doc.host
    S = _s_set(M, args.s, doc.s)
    F = _family(M, args, S)
    _out("family: " + " ".join(F.labels) + "\n")
    if M.one in F:
        for name, v in structural_flags(F).items():
            _out(f"{name}: {_yn(v)}\t{_fmt_witness(M, v.witness)}".rstrip("\t") + "\n")
    ako, oka = is_s_ako(F, S), is_s_oka(F, S)
    _out(f"s-ako: {_yn(ako)}\t{_fmt_witness(M, ako.witness)}".rstrip("\t") + "\n")
    _out(f"s-oka: {_yn(oka)}\t{_fmt_witness(M, oka.witness)}".rstrip("\t") + "\n")
    _out("max-complement: " + " ".join(M.labels_of(sorted(max_complement(F)))) + "\n")
    return 0 if ako and oka else 1


def cmd_pep(args):
    doc = load(args.file)
    M = doc.host
    S = _s_set(M, args.s, doc.s)
    F = _family(M, args, S)
    r = check_s_pep(M, S, F, args.variant)
    _out(reports_to_json([r]) if args.json else report_line(r) + "\n")
    return 1 if r.status == FAIL else 0


def cmd_audit(args):
    M = load(args.file).host
    try:
        if args.sample:
            res = sampled_audit(M, sample=args.sample, seed=args.seed, supplement=args.supplement)
        else:
            res = exhaustive_audit(M, limit_n=args.limit, supplement=args.supplement)
    except LimitExceeded:
        raise UsageError(
            f"{M.name} has {M.n} elements, above the exhaustive limit {args.limit}; pass --sample N"
        ) from None
    failures = res.failures
    if args.json:
        _out(reports_to_json(failures))
    else:
        _out(reports_to_text(failures))
        _out(
            f"pairs: {res.pairs}; reports: {len(res)}; failures: {len(failures)}; "
            f"vacuous: {res.vacuous}; not-applicable: {res.not_applicable}\n"
        )
    return 1 if failures else 0


def cmd_suite(args):
    M = load(args.file).host
    reports = run_theorem_suite(M)
    _out(reports_to_json(reports) if args.json else reports_to_text(reports))
    return 1 if any(r.status == FAIL for r in reports) else 0


def cmd_crosscheck(args):
    if args.s is not None:
        try:
            sets = [tuple(int(x) for x in _split_labels(args.s))]
        except ValueError:
            raise UsageError("--s takes comma-separated residues") from None
    else:
        sets = residue_sets(args.n)
    reports = [crosscheck(args.n, S, n_families=args.families, seed=args.seed) for S in sets]
    _out(reports_to_json(reports) if args.json else reports_to_text(reports))
    return 1 if any(r.status == FAIL for r in reports) else 0


def cmd_search(args):
    M = load(args.file).host
    res = search_multiplications(M.lattice, args.level, budget=args.budget, max_examples=args.examples)
    _out(f"count: {res.count}\n")
    _out(f"complete: {_yn(res.complete)}\n")
    _out(f"nodes: {res.nodes}\n")
    for k, T in enumerate(res.examples, start=1):
        _out(f"# example {k}\n")
        _out(dump(classify_multiplication(M.lattice, T)))
    return 0


# --- parser ---------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="multlat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a builtin structure as a lattice file")
    g.add_argument("kind", choices=["n5", "zn", "k", "chain", "boolean"])
    g.add_argument("arg", nargs="?", type=int)
    g.add_argument("--s", help="labels for an 's:' line")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="classify the multiplication and print flags")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sprimes", help="list S-prime elements with witnesses")
    s.add_argument("file")
    s.add_argument("--s")
    s.set_defaults(func=cmd_sprimes)

    def family_args(q):
        q.add_argument("file")
        q.add_argument("--s")
        grp = q.add_mutually_exclusive_group()
        grp.add_argument("--members")
        grp.add_argument("--kind", choices=FAMILY_KINDS)
        q.add_argument("--params", help="primes (avoiding_primes) or generators (product_closure)")

    f = sub.add_parser("family", help="structural, S-Ako and S-Oka checks for one family")
    family_args(f)
    f.set_defaults(func=cmd_family)

    pe = sub.add_parser("pep", help="run the S-prime element principle on one family")
    family_args(pe)
    pe.add_argument("--variant", choices=["ako", "oka", "spr_oka"], default="ako")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_pep)

    a = sub.add_parser("audit", help="S-PEP over every valid S and family")
    a.add_argument("file")
    a.add_argument("--limit", type=int, default=7, help="largest lattice audited exhaustively")
    a.add_argument("--sample", type=int, help="random families per S instead of all")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--supplement", action="store_true", help="also check the supplement on every semi-filter")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit)

    su = sub.add_parser("suite", help="run the theorem registry")
    su.add_argument("file")
    su.add_argument("--json", action="store_true")
    su.set_defaults(func=cmd_suite)

    x = sub.add_parser("crosscheck", help="compare Id(Z_n) against ring-side oracles")
    x.add_argument("n", type=int)
    x.add_argument("--s", help="comma-separated residues (default: every valid S)")
    x.add_argument("--families", type=int, default=1000)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_crosscheck)

    m = sub.add_parser("search-mult", help="count multiplications on the file's lattice")
    m.add_argument("file")
    m.add_argument("--level", choices=["multiplicative", "v_lattice"], default="multiplicative")
    m.add_argument("--budget", type=int)
    m.add_argument("--examples", type=int, default=0)
    m.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MultLatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
