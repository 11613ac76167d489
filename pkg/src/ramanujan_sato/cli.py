"""Command-line interface: ``ramanujan-sato <command> ...``."""

import argparse
import json
import sys

from . import __version__
from .numerics.rational import format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p, order=False, prec=False, digits=False):
    p.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    p.add_argument("--group-file", metavar="PATH", help="load an extra group record from a file")
    if order:
        p.add_argument("--order", type=int, default=64, help="q-series truncation order")
    if prec:
        p.add_argument("--prec", type=int, default=192, help="working precision in bits")
    if digits:
        p.add_argument("--digits", type=int, default=30, help="target digits of 1/pi")


def build_parser():
    parser = argparse.ArgumentParser(prog="ramanujan-sato", description="Ramanujan-Sato series for 1/pi from eta-quotient Hauptmoduln.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="q-expansions of x and z")
    p.add_argument("label")
    p.add_argument("--terms", type=int, default=12)
    _common(p, order=True)

    p = sub.add_parser("recurrence", help="recurrence for A_n and its first values")
    p.add_argument("label")
    p.add_argument("--count", type=int, default=10)
    _common(p, order=True)

    p = sub.add_parser("modeq", help="modular equation Psi_n(X, Y)")
    p.add_argument("label")
    _common(p, order=True)

    p = sub.add_parser("constants", help="x0, y', y'', W, dW/dx, B and C")
    p.add_argument("label")
    _common(p, prec=True)

    p = sub.add_parser("pi", help="sum the series and compare with 1/pi")
    p.add_argument("label")
    _common(p, digits=True)

    p = sub.add_parser("verify", help="sum the series for several groups")
    p.add_argument("labels", nargs="*")
    p.add_argument("--all", action="store_true", help="every builtin group")
    _common(p, digits=True)

    p = sub.add_parser("selftest", help="run every oracle for every builtin group")
    _common(p, order=True, prec=True)

    p = sub.add_parser("group", help="inspect group records")
    gsub = p.add_subparsers(dest="group_command", required=True)
    q = gsub.add_parser("list")
    _common(q)
    q = gsub.add_parser("show")
    q.add_argument("label")
    _common(q)
    q = gsub.add_parser("check")
    q.add_argument("path")
    _common(q, order=True, prec=True)
    return parser


def _groups(args):
    from .registry import load_builtin, load_file

    extra = ()
    if getattr(args, "group_file", None):
        extra = (load_file(args.group_file),)
    return extra, extra + tuple(load_builtin())


def _lookup(args, label):
    from .registry import UnknownGroupError, get_group

    extra, _ = _groups(args)
    try:
        return get_group(label, extra)
    except UnknownGroupError:
        raise UsageError(f"unknown group label {label!r}") from None


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_expand(args):
    from .odeops import build_z

    g = _lookup(args, args.label)
    x = g.x_series(args.order)
    z = build_z(g, args.order)
    data = {"label": g.label, "t": g.eta_spec.format(), "x": x.to_json(), "z": z.to_json()}
    text = "\n".join([
        f"t = {g.eta_spec.format()}",
        f"x = {x.format(args.terms)}",
        f"z = {z.format(args.terms)}",
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_recurrence(args):
    from .odeops import derive_recurrence, initial_coefficients

    g = _lookup(args, args.label)
    rec = derive_recurrence(g.w, g.R)
    init = initial_coefficients(g, args.count, max(args.order, args.count + 16))
    rec = rec.with_initials(init)
    text = rec.format() + "\n" + ", ".join(f"A_{k} = {format_rational(a)}" for k, a in enumerate(init))
    _emit(args, rec.to_json(), text)
    return EXIT_OK


def cmd_modeq(args):
    from .modeq import find_modular_equation

    g = _lookup(args, args.label)
    psi = find_modular_equation(g, max(args.order, 96))
    _emit(args, psi.to_json(), psi.format())
    return EXIT_OK


def cmd_constants(args):
    from .constants import compare_closed_forms, compute_BC

    g = _lookup(args, args.label)
    sc = compute_BC(g, args.prec)
    cmp = compare_closed_forms(g, sc)
    data = sc.to_json()
    data["closed_forms"] = [{"name": c.name, "digits": c.digits, "ok": c.ok, "expected": c.expected.to_json()} for c in cmp]
    lines = [
        f"x0  = {sc.x0_exact}  ~ {sc.x0_ball}",
        f"y'  = {sc.y1}",
        f"y'' = {sc.y2}",
        f"W   = {sc.W}",
        f"dW  = {sc.dW}",
        f"B   = {sc.B}",
        f"C   = {sc.C}",
    ]
    for c in cmp:
        lines.append(f"{c.name} vs closed form: {'agrees' if c.ok else 'DIFFERS'} ({c.digits} digits)")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if all(c.ok for c in cmp) else EXIT_FAIL


def _report_line(r):
    return f"{'PASS' if r.passed else 'FAIL'}  {r.label:<7} {r.digits_agreed} digits in {r.terms_used} terms ({r.per_term_rate:.3f} digits/term)"


def cmd_pi(args):
    from .evaluator import sum_series

    if args.digits < 5:
        raise UsageError("--digits must be at least 5")
    g = _lookup(args, args.label)
    r = sum_series(g, args.digits)
    text = _report_line(r) + f"\nsum  = {r.partial_sum}\n1/pi = {r.pi_inverse_ref}"
    _emit(args, r.to_json(), text)
    return EXIT_OK if r.passed else EXIT_FAIL


def cmd_verify(args):
    from .evaluator import verify_all

    if args.digits < 5:
        raise UsageError("--digits must be at least 5")
    extra, everything = _groups(args)
    if args.all:
        groups = everything
    elif args.labels:
        groups = [_lookup(args, lab) for lab in args.labels]
    else:
        raise UsageError("give group labels or --all")
    reports, errors = verify_all(args.digits, groups)
    data = {"reports": [r.to_json() for r in reports], "errors": [{"label": l, "error": e} for l, e in errors]}
    text = "\n".join([_report_line(r) for r in reports] + [f"FAIL  {l:<7} {e}" for l, e in errors])
    _emit(args, data, text)
    return EXIT_OK if not errors and all(r.passed for r in reports) else EXIT_FAIL


def _checks(args, groups):
    from .checks import check_group

    results = []
    for g in groups:
        results.extend(check_group(g, args.order, args.prec))
    data = [{"label": r.label, "check": r.name, "ok": r.ok, "detail": r.detail} for r in results]
    _emit(args, data, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_selftest(args):
    from .registry import load_builtin

    return _checks(args, load_builtin())


def cmd_group(args):
    from .registry import dump_group, load_file

    if args.group_command == "list":
        _, groups = _groups(args)
        data = [{"label": g.label, "level": g.level, "n": g.meq_n} for g in groups]
        _emit(args, data, "\n".join(f"{g.label:<7} level {g.level:<3} n = {g.meq_n}  t = {g.eta_spec.format()}" for g in groups))
        return EXIT_OK
    if args.group_command == "show":
        g = _lookup(args, args.label)
        text = dump_group(g)
        _emit(args, {"label": g.label, "record": text}, text.rstrip())
        return EXIT_OK
    g = load_file(args.path)
    return _checks(args, [g])


COMMANDS = {
    "expand": cmd_expand,
    "recurrence": cmd_recurrence,
    "modeq": cmd_modeq,
    "constants": cmd_constants,
    "pi": cmd_pi,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
    "group": cmd_group,
}


def dispatch(argv=None):
    from .registry import GroupFileError, RegistryError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupFileError, RegistryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as exc:  # last-resort guard so scripts see the documented exit code
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
