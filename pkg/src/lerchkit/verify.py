"""Compare quadrature of each left-hand side with its closed form, over grids."""
import csv
import enum
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError, LerchkitError, PoleError, SingularityError
from .identities.registry import (
    DEFAULT_PERTURBATIONS,
    DEFAULT_SEED,
    REGISTRY,
    IntegralCase,
    get,
    lhs_integrand,
    rhs_value,
)
from .quad import integrate_semi_infinite

__all__ = [
    "Status",
    "VerificationReport",
    "verify_case",
    "GridSpec",
    "build_cases",
    "verify_suite",
    "summarize",
    "reports_to_json",
    "reports_from_json",
    "reports_to_csv",
    "DEFAULT_REL_TOL",
    "DEFAULT_ABS_TOL",
]

DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_TOL = 1e-10


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED_POLE = "SkippedPole"
    SKIPPED_DOMAIN = "SkippedDomain"
    DISCREPANT = "Discrepant"


def _cdict(z):
    if z is None:
        return None
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _cparse(d):
    if d is None:
        return None
    return complex(d["re"], d["im"])


@dataclass
class VerificationReport:
    """One comparison. lhs/rhs/errors are None when the case was skipped
    before they could be computed. rel_err is abs_err/|rhs|, or abs_err
    when rhs is exactly zero."""

    case_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    quad_error_estimate: float
    status: Status

    def to_dict(self):
        return {
            "case_id": self.case_id,
            "params": {k: _cdict(v) for k, v in sorted(self.params.items())},
            "lhs": _cdict(self.lhs),
            "rhs": _cdict(self.rhs),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "quad_error_estimate": self.quad_error_estimate,
            "status": self.status.value,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            case_id=d["case_id"],
            params={k: _cparse(v) for k, v in d["params"].items()},
            lhs=_cparse(d["lhs"]),
            rhs=_cparse(d["rhs"]),
            abs_err=d["abs_err"],
            rel_err=d["rel_err"],
            quad_error_estimate=d["quad_error_estimate"],
            status=Status(d["status"]),
        )

    def sort_key(self):
        return _case_key(self.case_id, self.params)


def _case_key(case_id, params):
    return (case_id, tuple((k, v.real, v.imag) for k, v in sorted(params.items())))


def _finite(z):
    return z is not None and math.isfinite(z.real) and math.isfinite(z.imag)


def quad_tolerance(rel_tol):
    """Quadrature has to be ten times tighter than the comparison."""
    return min(max(rel_tol / 10, 1e-13), 1e-4)


def verify_case(case, rel_tol=DEFAULT_REL_TOL, abs_tol=DEFAULT_ABS_TOL):
    """Quadrature of the LHS against the RHS for one case. Never raises for
    numerical trouble; the outcome is encoded in the status."""
    if not (1e-13 <= rel_tol <= 1e-4):
        raise ValueError(f"rel_tol out of range [1e-13, 1e-4]: {rel_tol!r}")
    if not (0 <= abs_tol <= 1e-4):
        raise ValueError(f"abs_tol out of range: {abs_tol!r}")
    ident = case.identity
    params = case.param_dict()

    def report(status, lhs=None, rhs=None, est=None):
        abs_err = rel_err = None
        if _finite(lhs) and _finite(rhs):
            abs_err = abs(lhs - rhs)
            rel_err = abs_err / abs(rhs) if rhs != 0 else abs_err
        return VerificationReport(case.case_id, params, lhs, rhs, abs_err, rel_err, est, status)

    try:
        integrand = lhs_integrand(case)
    except DomainError:
        return report(Status.SKIPPED_DOMAIN)
    try:
        rhs = rhs_value(case)
    except PoleError:
        return report(Status.SKIPPED_POLE)
    except DomainError:
        return report(Status.SKIPPED_DOMAIN)
    except LerchkitError:
        return report(Status.FAIL)
    try:
        q = integrate_semi_infinite(integrand, tol=quad_tolerance(rel_tol), abs_tol=abs_tol / 10)
    except (ConvergenceError, SingularityError):
        return report(Status.FAIL, rhs=rhs)
    lhs = q.value
    if not (_finite(rhs) and _finite(lhs)):
        return report(Status.FAIL, lhs, rhs if _finite(rhs) else None, q.error_estimate)
    budget = max(rel_tol * abs(rhs), abs_tol)
    ok = abs(lhs - rhs) <= budget and q.error_estimate <= budget
    if ok:
        status = Status.PASS
    elif ident.flagged:
        status = Status.DISCREPANT
    else:
        status = Status.FAIL
    return report(status, lhs, rhs, q.error_estimate)


@dataclass(frozen=True)
class GridSpec:
    """Which identities to run and how many random complex perturbations each.

    families: identity ids, or ("all",). An empty tuple selects nothing.
    """

    families: tuple = ("all",)
    seed: int = DEFAULT_SEED
    perturbations: int = DEFAULT_PERTURBATIONS
    base: bool = True

    def identity_ids(self):
        if "all" in self.families:
            return list(REGISTRY)
        for f in self.families:
            get(f)
        return list(dict.fromkeys(self.families))


def build_cases(spec):
    cases = []
    for fid in spec.identity_ids():
        ident = get(fid)
        points = ident.base_grid() if spec.base else []
        points += ident.perturbed_grid(spec.perturbations, spec.seed)
        for p in points:
            cases.append(IntegralCase.make(fid, **p))
    return cases


def verify_suite(grid_spec=None, rel_tol=DEFAULT_REL_TOL, abs_tol=DEFAULT_ABS_TOL, workers=1):
    """One report per grid point, in canonical order (case_id, then params)."""
    spec = grid_spec if grid_spec is not None else GridSpec()
    cases = build_cases(spec)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            reports = list(ex.map(lambda c: verify_case(c, rel_tol, abs_tol), cases))
    else:
        reports = [verify_case(c, rel_tol, abs_tol) for c in cases]
    reports.sort(key=VerificationReport.sort_key)
    return reports


def summarize(reports):
    counts = {s.value: 0 for s in Status}
    for r in reports:
        counts[r.status.value] += 1
    counts["total"] = len(reports)
    return counts


def reports_to_json(reports):
    return json.dumps([r.to_dict() for r in reports], indent=1, allow_nan=False) + "\n"


def reports_from_json(text):
    return [VerificationReport.from_dict(d) for d in json.loads(text)]


def _fmt(x):
    return "" if x is None else repr(float(x))


def format_complex(z):
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def reports_to_csv(reports):
    names = sorted({k for r in reports for k in r.params})
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["case_id"] + [f"param_{n}" for n in names]
        + ["lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "status"]
    )
    for r in reports:
        row = [r.case_id]
        row += [format_complex(r.params[n]) if n in r.params else "" for n in names]
        for z in (r.lhs, r.rhs):
            row += ["", ""] if z is None else [repr(z.real), repr(z.imag)]
        row += [_fmt(r.abs_err), _fmt(r.rel_err), r.status.value]
        w.writerow(row)
    return buf.getvalue()
