"""Command-line front end: python -m lerchkit <command> [flags]."""
import argparse
import json
import math
import re
import sys
import textwrap

from . import __version__
from .errors import LerchkitError
from .identities.registry import REGISTRY, IntegralCase, get, lhs_integrand
from .quad import integrate_semi_infinite
from .special import hurwitz_zeta, lerch_phi, polygamma
from .verify import (
    DEFAULT_ABS_TOL,
    DEFAULT_REL_TOL,
    GridSpec,
    Status,
    format_complex,
    quad_tolerance,
    reports_to_csv,
    reports_to_json,
    summarize,
    verify_case,
    verify_suite,
)
from .identities.registry import DEFAULT_PERTURBATIONS, DEFAULT_SEED

PARAM_FLAGS = ("z", "s", "v", "k", "a", "m", "t", "alpha", "beta")

_PI_TOKEN = re.compile(r"^([+-]?)(\d*)pi(?:/(\d+))?$")
_IMAG_ONLY = re.compile(r"^([+-]?)(\d*\.?\d*(?:[eE][+-]?\d+)?)[ij]$")


class UsageError(Exception):
    pass


def parse_complex(text):
    """Parse "1.5", "-2i", "0.3+0.4i", "1e-3-2e-1j", or pi tokens like "pi/2", "-2pi/3".

    Decimal parts go through float(), so they round-trip exactly.
    """
    s = text.strip().replace(" ", "")
    m = _PI_TOKEN.match(s)
    if m:
        sign, num, den = m.groups()
        val = (int(num) if num else 1) * math.pi / (int(den) if den else 1)
        return complex(-val if sign == "-" else val)
    m = _IMAG_ONLY.match(s)
    if m and m.group(2) in ("", "+", "-"):
        return complex(0, -1.0 if m.group(1) == "-" else 1.0)
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex literal {text!r}") from None


def _emit_value(value, output, name="value"):
    if output == "json":
        print(json.dumps({name: {"re": value.real, "im": value.imag}}))
    elif output == "csv":
        print(f"{name}_re,{name}_im")
        print(f"{value.real!r},{value.imag!r}")
    else:
        print(format_complex(value))


def _need(args, *names):
    vals = []
    for n in names:
        v = getattr(args, n)
        if v is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")
        vals.append(v)
    return vals


def _case_from_args(args):
    if args.case is None:
        raise UsageError(f"--case is required for {args.command}")
    try:
        ident = get(args.case)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None
    given = {n: getattr(args, n) for n in PARAM_FLAGS if getattr(args, n) is not None}
    extra = sorted(set(given) - set(ident.params))
    if extra:
        raise UsageError(f"{args.case} does not take --{extra[0]} (takes: {', '.join(ident.params) or 'nothing'})")
    missing = [n for n in ident.params if n not in given]
    if missing:
        raise UsageError(f"{args.case} needs --{missing[0]} (takes: {', '.join(ident.params)})")
    return IntegralCase.make(args.case, **given)


def _cmd_phi(args):
    z, s, v = _need(args, "z", "s", "v")
    _emit_value(complex(lerch_phi(z, s, v)), args.output)
    return 0


def _cmd_zeta(args):
    s, v = _need(args, "s", "v")
    _emit_value(complex(hurwitz_zeta(s, v)), args.output)
    return 0


def _cmd_polygamma(args):
    n, x = _need(args, "n", "x")
    _emit_value(complex(polygamma(n, x)), args.output)
    return 0


def _cmd_integrate(args):
    case = _case_from_args(args)
    r = integrate_semi_infinite(
        lhs_integrand(case), tol=quad_tolerance(args.rel_tol), abs_tol=args.abs_tol / 10
    )
    if args.output == "json":
        print(json.dumps({
            "case_id": case.case_id,
            "value": {"re": r.value.real, "im": r.value.imag},
            "error_estimate": r.error_estimate,
            "evaluations": r.evaluations,
        }))
    elif args.output == "csv":
        print("case_id,value_re,value_im,error_estimate,evaluations")
        print(f"{case.case_id},{r.value.real!r},{r.value.imag!r},{r.error_estimate!r},{r.evaluations}")
    else:
        print(f"{format_complex(r.value)}  (error estimate {r.error_estimate:.3g}, {r.evaluations} evaluations)")
    return 0


def _print_reports(reports, output):
    if output == "json":
        sys.stdout.write(reports_to_json(reports))
    elif output == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        for r in reports:
            params = " ".join(f"{k}={format_complex(v)}" for k, v in sorted(r.params.items()))
            err = "" if r.rel_err is None else f" rel_err={r.rel_err:.3g}"
            print(f"{r.status.value:<13} {r.case_id} {params}{err}")


def _check_tols(args):
    if not (1e-13 <= args.rel_tol <= 1e-4):
        raise UsageError(f"--rel-tol must lie in [1e-13, 1e-4], got {args.rel_tol!r}")
    if not (0 <= args.abs_tol <= 1e-4):
        raise UsageError(f"--abs-tol must lie in [0, 1e-4], got {args.abs_tol!r}")


def _cmd_verify(args):
    _check_tols(args)
    case = _case_from_args(args)
    rep = verify_case(case, args.rel_tol, args.abs_tol)
    _print_reports([rep], args.output)
    return 1 if rep.status is Status.FAIL else 0


def _cmd_suite(args):
    _check_tols(args)
    fams = tuple(f.strip() for f in args.families.split(",") if f.strip())
    for f in fams:
        if f != "all" and f not in REGISTRY:
            raise UsageError(f"unknown family {f!r}; known: {', '.join(REGISTRY)}")
    spec = GridSpec(fams, seed=args.seed, perturbations=args.perturbations)
    reports = verify_suite(spec, args.rel_tol, args.abs_tol)
    _print_reports(reports, args.output)
    counts = summarize(reports)
    line = ", ".join(f"{k}={v}" for k, v in counts.items())
    if args.output == "text":
        print(f"summary: {line}")
    else:
        print(f"summary: {line}", file=sys.stderr)
    return 1 if counts[Status.FAIL.value] else 0


def _cmd_list(args):
    if args.output == "json":
        print(json.dumps([
            {"id": i.id, "family": i.family.value, "params": list(i.params),
             "flagged": i.flagged, "description": i.description}
            for i in REGISTRY.values()
        ], indent=1))
    elif args.output == "csv":
        print("id,family,params,flagged")
        for i in REGISTRY.values():
            print(f"{i.id},{i.family.value},{' '.join(i.params)},{str(i.flagged).lower()}")
    else:
        for i in REGISTRY.values():
            print(i.id)
    return 0


COMMANDS = {
    "phi": (_cmd_phi, "Lerch transcendent Phi(z, s, v)"),
    "zeta": (_cmd_zeta, "Hurwitz zeta(s, v)"),
    "polygamma": (_cmd_polygamma, "polygamma psi^(n)(x)"),
    "integrate": (_cmd_integrate, "quadrature of a registered left-hand side"),
    "verify": (_cmd_verify, "check one registered identity at given parameters"),
    "suite": (_cmd_suite, "check identities over the default parameter grids"),
    "list": (_cmd_list, "list registered identity ids"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    ids = ", ".join(REGISTRY)
    # ids contain hyphens, so wrap here rather than let argparse split them
    epilog = textwrap.fill(f"identity ids: {ids}", 78, break_on_hyphens=False)
    raw = argparse.RawDescriptionHelpFormatter
    p = _Parser(prog="lerchkit", description="Lerch transcendent and integral identity checks.",
                epilog=epilog, formatter_class=raw)
    p.add_argument("--version", action="version", version=f"lerchkit {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    for name, (_, helptext) in COMMANDS.items():
        sp = sub.add_parser(name, help=helptext, description=helptext, epilog=epilog,
                            formatter_class=raw)
        for flag in PARAM_FLAGS:
            sp.add_argument(f"--{flag}", type=parse_complex, default=None,
                            help="complex literal like 1.5, 0.3-0.2i, or pi/3")
        if name == "polygamma":
            sp.add_argument("--n", type=int, help="derivative order (0 = digamma)")
            sp.add_argument("--x", type=parse_complex, help="argument")
        sp.add_argument("--rel-tol", type=float, default=DEFAULT_REL_TOL)
        sp.add_argument("--abs-tol", type=float, default=DEFAULT_ABS_TOL)
        sp.add_argument("--output", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
        sp.add_argument("--families", default="all", help=f"'all' or comma-separated ids: {ids}")
        sp.add_argument("--perturbations", type=int, default=DEFAULT_PERTURBATIONS,
                        help="random complex perturbations per identity")
        sp.add_argument("--case", default=None, help=f"identity id: {ids}")
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        return COMMANDS[args.command][0](args)
    except UsageError as e:
        print(f"lerchkit: error: {e}", file=sys.stderr)
        return 2
    except (LerchkitError, ValueError) as e:
        print(f"lerchkit: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
