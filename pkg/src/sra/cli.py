"""Command-line front end: group analysis, trace/supertrace counts, ground
level solving, trace evaluation, eta=0 cross-checks, Gram scans, and the
property self-test suite.  All arithmetic lives in the library; every
subcommand is a thin adapter with deterministic (optionally JSON) output.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .scalar import Cyclotomic, literal
from .group import (
    CapExceededError,
    DEFAULT_CAP,
    NotReflectionError,
    NotSymplecticError,
    builtin,
    group_to_dict,
    load_group,
)
from .algebra import Algebra, GroupMismatchError, IndefiniteParityError
from .traces import (
    InconsistentGLCError,
    KappaEigenvaluePresentError,
    _trace_value_json,
    eta0_trace,
    even_monomials,
    format_trace_value as _tv_human,
    gram,
    solve_glc,
    symmetrized_monomial,
)
from .expr import ParseError, parse, print_element

DOMAIN_ERRORS = (
    NotSymplecticError,
    NotReflectionError,
    CapExceededError,
    GroupMismatchError,
    IndefiniteParityError,
    InconsistentGLCError,
    KappaEigenvaluePresentError,
    ParseError,
    FileNotFoundError,
    ValueError,
    ZeroDivisionError,
)


def _add_group_args(p: argparse.ArgumentParser):
    p.add_argument("--group", metavar="FILE", help="group definition file (JSON)")
    p.add_argument("--builtin", choices=["cyclic", "doubled-A", "doubled-B",
                                         "dihedral", "product"],
                   help="builtin group constructor")
    p.add_argument("--n", type=int, help="parameter n for cyclic/dihedral")
    p.add_argument("--rank", type=int,
                   help="doubled-A: the n of S_n (builds A_(n-1)); doubled-B: the rank")
    p.add_argument("--factors", metavar="SPEC",
                   help="product factors, e.g. 'cyclic:2,cyclic:3' or 'doubled-A:3'")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="closure element cap (default %(default)s)")


def _parse_factor(spec: str):
    kind, _, arg = spec.partition(":")
    kind = kind.strip()
    if kind in ("cyclic", "dihedral"):
        return kind, {"n": int(arg)}
    if kind in ("doubled-A", "doubled-B"):
        return kind, {"rank": int(arg)}
    raise ValueError(f"unknown product factor {spec!r}")


def _make_group(args):
    if bool(args.group) == bool(args.builtin):
        raise ValueError("choose exactly one of --group FILE or --builtin NAME")
    if args.group:
        min_order = int(os.environ.get("SRA_CYCLOTOMIC_ORDER", "1"))
        return load_group(args.group, cap=args.cap, min_order=min_order)
    kind = args.builtin
    if kind in ("cyclic", "dihedral"):
        if args.n is None:
            raise ValueError(f"--builtin {kind} needs --n")
        return builtin(kind, n=args.n)
    if kind in ("doubled-A", "doubled-B"):
        if args.rank is None:
            raise ValueError(f"--builtin {kind} needs --rank")
        return builtin(kind, rank=args.rank)
    if kind == "product":
        if not args.factors:
            raise ValueError("--builtin product needs --factors")
        factors = [_parse_factor(s) for s in args.factors.split(",")]
        return builtin("product", factors=factors)
    raise ValueError(f"unknown builtin {kind!r}")


def _kappas(arg: str):
    if arg == "both":
        return (1, -1)
    return (int(arg),)


def _emit(payload: dict, args, human_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _group_header(group):
    return {
        "group": group.name,
        "order": len(group),
        "N": group.N,
        "cyclotomic_order": group.exponent,
        "classes": len(group.classes),
        "reflections": len(group.reflections),
        "eta_variables": group.n_eta,
    }


# -- subcommands -----------------------------------------------------------


def cmd_group(args):
    group = _make_group(args)
    classes = []
    for i, cls in enumerate(group.classes):
        rep = group.class_rep[i]
        classes.append({
            "label": f"C{i}",
            "size": len(cls),
            "rep_order": group.elements[rep].order,
            "E_plus": group.e_grading(rep, +1)[0],
            "E_minus": group.e_grading(rep, -1)[0],
            "is_reflection_class": i in group.eta_vars,
            "eta_variable": group.eta_vars.get(i),
        })
    payload = _group_header(group)
    payload["class_table"] = classes
    payload["klein"] = group.klein() is not None
    lines = [f"group {group.name}: |G| = {len(group)}, N = {group.N}, "
             f"m = {group.exponent}, Klein operator: "
             f"{'present' if payload['klein'] else 'absent'}",
             f"{len(group.classes)} conjugacy classes, "
             f"{len(group.reflections)} reflections in {group.n_eta} classes",
             "label  size  order  E+  E-  eta"]
    for c in classes:
        eta = f"eta{c['eta_variable']}" if c["eta_variable"] is not None else "-"
        lines.append(f"{c['label']:<6} {c['size']:<5} {c['rep_order']:<6} "
                     f"{c['E_plus']:<3} {c['E_minus']:<3} {eta}")
    if args.save:
        with open(args.save, "w") as fh:
            json.dump(group_to_dict(group), fh, indent=2, sort_keys=True)
            fh.write("\n")
        lines.append(f"saved group file to {args.save}")
        payload["saved"] = args.save
    _emit(payload, args, lines)
    return 0


def cmd_counts(args):
    group = _make_group(args)
    t_count, s_count = group.kappa_counts()
    payload = _group_header(group)
    payload.update({"traces": t_count, "supertraces": s_count})
    _emit(payload, args, [
        f"group {group.name}: |G| = {len(group)}",
        f"independent traces      T = {t_count}",
        f"independent supertraces S = {s_count}",
    ])
    return 0


def cmd_glc(args):
    group = _make_group(args)
    algebra = Algebra(group, t=Fraction(args.t))
    payload = _group_header(group)
    payload["kappa"] = {}
    lines = [f"group {group.name}: ground level conditions"]
    for kappa in _kappas(args.kappa):
        fn = solve_glc(algebra, kappa, verify=not args.no_verify)
        payload["kappa"][str(kappa)] = fn.to_dict()
        word = "trace" if kappa == 1 else "supertrace"
        lines.append(f"kappa = {kappa:+d} ({word}): {fn.nparams} free parameter(s): "
                     + ", ".join(f"P{i}=sp(C{ci})" for i, ci in enumerate(fn.free_classes)))
        for ci in range(len(group.classes)):
            lines.append(f"  sp(C{ci}) = {_tv_human(fn.table[ci])}")
        if not args.no_verify:
            lines.append("  all redundant ground level equations vanish identically")
    _emit(payload, args, lines)
    return 0


def cmd_eval(args):
    group = _make_group(args)
    algebra = Algebra(group, t=Fraction(args.t))
    payload = _group_header(group)
    payload["expr"] = args.expr
    payload["kappa"] = {}
    lines = []
    f = parse(args.expr, algebra)
    lines.append(f"expr: {print_element(f)}")
    for kappa in _kappas(args.kappa):
        fn = solve_glc(algebra, kappa, verify=False)
        val = fn.evaluate(f)
        entry = {"free_classes": [f"C{ci}" for ci in fn.free_classes],
                 "value": _trace_value_json(val)}
        if group.eta_assignment is not None and group.n_eta:
            point = [group.eta_assignment.get(i, Fraction(0)) for i in range(group.n_eta)]
            entry["eta_point"] = [str(x) for x in point]
            entry["value_at_eta"] = {
                f"P{i}": literal(c.evaluate(point)) for i, c in sorted(val.coeffs.items())}
        payload["kappa"][str(kappa)] = entry
        word = "tr" if kappa == 1 else "str"
        lines.append(f"kappa = {kappa:+d}: {word}(expr) = {_tv_human(val)}")
        if "value_at_eta" in entry:
            at = ", ".join(f"{k}: {v}" for k, v in sorted(entry["value_at_eta"].items()))
            lines.append(f"  at eta = ({', '.join(entry['eta_point'])}): {at or '0'}")
    _emit(payload, args, lines)
    return 0


def cmd_oracle_check(args):
    group = _make_group(args)
    algebra = Algebra(group)
    payload = _group_header(group)
    payload["max_degree"] = args.max_degree
    payload["kappa"] = {}
    lines = [f"group {group.name}: eta=0 oracle cross-check, degree <= {args.max_degree}"]
    ok = True
    zero_pt = [Fraction(0)] * group.n_eta
    for kappa in _kappas(args.kappa):
        fn = solve_glc(algebra, kappa, verify=False)
        checked = mismatches = 0
        for exp in even_monomials(group.dim, args.max_degree):
            sym = symmetrized_monomial(algebra, exp)
            for ci, rep in enumerate(group.class_rep):
                val = fn.evaluate(sym * algebra.group_element(rep))
                got = {i: c.evaluate(zero_pt) for i, c in val.coeffs.items()
                       if not c.evaluate(zero_pt).is_zero()}
                mult = eta0_trace(group, exp, rep, kappa)
                if group.e_grading(rep, kappa)[0] != 0 or mult.is_zero():
                    expected = {}
                else:
                    expected = {fn.free_classes.index(ci): mult}
                checked += 1
                if got != expected:
                    mismatches += 1
        payload["kappa"][str(kappa)] = {"checked": checked, "mismatches": mismatches}
        lines.append(f"kappa = {kappa:+d}: {checked} comparisons, {mismatches} mismatches")
        ok = ok and mismatches == 0
    _emit(payload, args, lines)
    return 0 if ok else 1


def cmd_gram(args):
    group = _make_group(args)
    algebra = Algebra(group, t=Fraction(args.t))
    payload = _group_header(group)
    payload["kappa"] = {}
    lines = []
    for kappa in _kappas(args.kappa):
        fn = solve_glc(algebra, kappa, verify=False)
        assignment = None
        if args.assignment:
            assignment = [Fraction(x) for x in args.assignment.split(",")]
        report = gram(fn, args.degree, assignment=assignment,
                      compute_determinant=not args.no_determinant)
        payload["kappa"][str(kappa)] = report.to_dict()
        lines.append(f"kappa = {kappa:+d}: Gram matrix on {len(report.basis)} basis "
                     f"elements (degree <= {args.degree})")
        if report.determinant is not None:
            from .expr import _eta_poly_expr
            det_s, _ = _eta_poly_expr(report.determinant)
            lines.append(f"  det = {det_s}")
            if report.rational_roots is not None:
                roots = ", ".join(str(r) for r in report.rational_roots) or "(none)"
                lines.append(f"  rational roots: {roots}")
    _emit(payload, args, lines)
    return 0


def cmd_selftest(args):
    rng = random.Random(args.seed)
    specs = [s.strip() for s in args.groups.split(",")]
    payload = {"seed": args.seed, "groups": {}}
    lines = [f"selftest: seed = {args.seed}, samples = {args.samples}"]
    failures = 0
    for spec in specs:
        kind, params = _parse_factor(spec)
        group = builtin(kind, **params)
        algebra = Algebra(group)
        report = {}
        # group invariants
        inv_ok = True
        ident = None
        one = Cyclotomic.one(group.exponent)
        from .linalg import det as mat_det
        for key, el in group.elements.items():
            mat = el.matrix
            if not (mat.transpose() * group.omega * mat == group.omega
                    and mat_det(mat) == one
                    and sum(s.dim for _, s in group.spectrum(key)) == group.dim):
                inv_ok = False
        report["group_invariants"] = inv_ok
        # GLC + cyclicity + confluence for both kappa
        for kappa in (1, -1):
            label = f"kappa{kappa:+d}"
            try:
                fn = solve_glc(algebra, kappa, verify=True)
                glc_ok = True
            except InconsistentGLCError:
                fn = solve_glc(algebra, kappa, verify=False)
                glc_ok = False
            cyc_ok = True
            n = group.dim
            keys = sorted(group.elements)
            for _ in range(args.samples):
                f = _random_definite(algebra, rng, 3, keys)
                h = _random_definite(algebra, rng, 3, keys)
                sign = kappa if (f.parity() * h.parity()) else 1
                if fn.evaluate(f * h) != fn.evaluate(h * f).scaled(sign):
                    cyc_ok = False
            conf_ok = True
            for _ in range(args.samples):
                word = [rng.randrange(n) for _ in range(rng.choice([2, 4]))]
                el = algebra.group_element(rng.choice(keys))
                for i in word:
                    el = algebra.generator(i) * el
                vals = {fn.evaluate(el, rs, ps)
                        for rs in ("first", "last") for ps in ("first", "last")}
                if len(vals) != 1:
                    conf_ok = False
            report[label] = {"glc_verified": glc_ok, "cyclicity": cyc_ok,
                             "confluence": conf_ok}
            if not (glc_ok and cyc_ok and conf_ok):
                failures += 1
        if not inv_ok:
            failures += 1
        payload["groups"][spec] = report
        lines.append(f"{spec}: invariants {'ok' if inv_ok else 'FAIL'}; " + "; ".join(
            f"{k}: glc {'ok' if v['glc_verified'] else 'FAIL'}, "
            f"cyclicity {'ok' if v['cyclicity'] else 'FAIL'}, "
            f"confluence {'ok' if v['confluence'] else 'FAIL'}"
            for k, v in report.items() if k.startswith("kappa")))
    _emit(payload, args, lines)
    return 0 if failures == 0 else 1


def _random_definite(algebra, rng, max_degree, keys):
    n = algebra.group.dim
    par = rng.randint(0, 1)
    out = algebra.zero()
    for _ in range(rng.randint(1, 2)):
        deg = rng.choice([d for d in range(max_degree + 1) if d % 2 == par])
        term = algebra.group_element(rng.choice(keys))
        for _ in range(deg):
            term = algebra.generator(rng.randrange(n)) * term
        out = out + term.scaled(rng.randint(-2, 2))
    if out.parity() is None or out.is_zero():
        term = algebra.group_element(keys[0])
        if par == 1:
            term = algebra.generator(0) * term
        out = term
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sra",
        description="Exact traces and supertraces on symplectic reflection algebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("group", help="group info: classes, reflections, gradings")
    _add_group_args(sp)
    sp.add_argument("--save", metavar="FILE", help="write the group definition file")
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("counts", help="numbers of independent traces and supertraces")
    _add_group_args(sp)
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("glc", help="solve the ground level conditions")
    _add_group_args(sp)
    sp.add_argument("--kappa", choices=["1", "-1", "both"], default="both")
    sp.add_argument("--t", default="1", help="structure constant t (rational, default 1)")
    sp.add_argument("--no-verify", action="store_true",
                    help="skip the redundant-equation verification pass")
    sp.set_defaults(func=cmd_glc)

    sp = sub.add_parser(
        "eval", help="evaluate the kappa-trace of an expression",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="expression grammar:\n"
               "  expr  := term (('+' | '-') term)*\n"
               "  term  := unary ('*' unary)*        (multiplication is explicit)\n"
               "  unary := '-' unary | power\n"
               "  power := atom ('^' NAT)?           (nonnegative integer exponents)\n"
               "  atom  := RATIONAL | 'z' | 'e' | 'a<i>' | 'g<i>' | 'eta<i>' | '(' expr ')'\n"
               "with a1..a2N the algebra generators, g0, g1, ... the group\n"
               "generators, e the identity, eta0, ... the deformation parameters,\n"
               "z the session root of unity, rationals like 3/2.")
    _add_group_args(sp)
    sp.add_argument("--kappa", choices=["1", "-1", "both"], default="both")
    sp.add_argument("--t", default="1")
    sp.add_argument("--expr", required=True, help="expression, e.g. 'a1*a2*g0 + 3/2'")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("oracle-check",
                        help="compare evaluate at eta=0 with the closed-form oracle")
    _add_group_args(sp)
    sp.add_argument("--kappa", choices=["1", "-1", "both"], default="both")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.set_defaults(func=cmd_oracle_check)

    sp = sub.add_parser("gram", help="Gram matrix of the bilinear form B_sp")
    _add_group_args(sp)
    sp.add_argument("--kappa", choices=["1", "-1", "both"], default="-1")
    sp.add_argument("--t", default="1")
    sp.add_argument("--degree", type=int, default=0, help="degree cutoff d")
    sp.add_argument("--assignment", help="free-parameter values, e.g. '1,0'")
    sp.add_argument("--no-determinant", action="store_true")
    sp.set_defaults(func=cmd_gram)

    sp = sub.add_parser("selftest", help="run the property suites at configurable sizes")
    sp.add_argument("--groups", default="cyclic:2,cyclic:3,doubled-A:3",
                    help="comma-separated builtin specs (default %(default)s)")
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
