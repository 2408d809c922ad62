import csv
import dataclasses
import io
import json
import math

import pytest

from lerchkit.identities import REGISTRY, IntegralCase, get
from lerchkit.verify import (
    GridSpec,
    Status,
    VerificationReport,
    build_cases,
    quad_tolerance,
    reports_from_json,
    reports_to_csv,
    reports_to_json,
    summarize,
    verify_case,
    verify_suite,
)

PI = math.pi


def test_passing_case():
    r = verify_case(IntegralCase.make("gr-3.514.4-k0", a=2, m=1, t=PI / 2), rel_tol=1e-9)
    assert r.status is Status.PASS
    assert r.rel_err <= 1e-9
    assert r.quad_error_estimate >= 0
    assert r.params == {"a": 2, "m": 1, "t": PI / 2}


def test_both_sides_zero():
    # at alpha = 1 and odd k the bracket (-x)^k + x^k vanishes identically
    r = verify_case(IntegralCase.make("diff-sinh-sinh", k=1, a=2, m=1, t=PI / 3, alpha=1))
    assert r.status is Status.PASS
    assert abs(r.lhs) < 1e-12 and abs(r.rhs) < 1e-12


def test_flagged_entry_is_discrepant_with_values():
    r = verify_case(IntegralCase.make("new-entry-3.514"))
    assert r.status is Status.DISCREPANT
    assert abs(r.lhs - 0.0662526241381331944098) < 1e-11
    assert abs(r.rhs - 26.7649069419) < 1e-9
    assert verify_case(IntegralCase.make("new-entry-3.514-lerch")).status is Status.PASS


def test_unflagged_mismatch_is_fail(monkeypatch):
    ident = get("catalan-t0")
    monkeypatch.setitem(REGISTRY, "catalan-t0", dataclasses.replace(ident, rhs=lambda: 0.5))
    r = verify_case(IntegralCase.make("catalan-t0"))
    assert r.status is Status.FAIL
    assert r.lhs is not None and r.rhs == 0.5


def test_pole_and_domain_skips():
    r = verify_case(IntegralCase.make("cosh-case", k=2, a=2, m=1, t=PI / 3))
    assert r.status is Status.SKIPPED_POLE
    assert r.lhs is None and r.abs_err is None
    r = verify_case(IntegralCase.make("gr-3.514.4", k=0, a=1, m=1.5, t=PI / 3))
    assert r.status is Status.SKIPPED_DOMAIN


def test_rel_tol_range():
    c = IntegralCase.make("catalan-t0")
    for bad in (1e-14, 1e-3):
        with pytest.raises(ValueError):
            verify_case(c, rel_tol=bad)


def test_quad_tolerance_clamp():
    assert quad_tolerance(1e-8) == pytest.approx(1e-9)
    assert quad_tolerance(1e-13) == 1e-13
    assert quad_tolerance(1e-4) == pytest.approx(1e-5)


def test_tolerance_monotone():
    # a case that passes at a tight tolerance passes at every looser one
    c = IntegralCase.make("mellin-tanh-sech", s=2.5, a=2)
    statuses = [verify_case(c, rel_tol=t).status for t in (1e-12, 1e-10, 1e-8, 1e-6, 1e-4)]
    first = statuses.index(Status.PASS)
    assert all(s is Status.PASS for s in statuses[first:])


def test_empty_grid():
    reports = verify_suite(GridSpec(families=()))
    assert reports == []
    counts = summarize(reports)
    assert counts["total"] == 0 and all(v == 0 for v in counts.values())


def test_single_fixed_case():
    reports = verify_suite(GridSpec(families=("catalan-t0",)))
    assert len(reports) == 1 and reports[0].status is Status.PASS


def test_unknown_family():
    with pytest.raises(KeyError):
        verify_suite(GridSpec(families=("nope",)))


def test_every_case_reported_once():
    spec = GridSpec(families=("gr-3.514.4-k0", "hurwitz-a2m1"), perturbations=5, seed=3)
    cases = build_cases(spec)
    reports = verify_suite(spec)
    assert len(reports) == len(cases)
    got = {(r.case_id, tuple(sorted(r.params.items()))) for r in reports}
    want = {(c.case_id, c.params) for c in cases}
    assert got == want


def test_determinism_and_ordering():
    spec = GridSpec(families=("trigamma-alg", "mellin-tanh-sech"), perturbations=4, seed=99)
    a = verify_suite(spec)
    b = verify_suite(spec, workers=4)
    assert reports_to_json(a) == reports_to_json(b)
    assert [r.sort_key() for r in a] == sorted(r.sort_key() for r in a)


def test_json_round_trip():
    spec = GridSpec(families=("cosh-case",), perturbations=2)
    reports = verify_suite(spec)
    text = reports_to_json(reports)
    back = reports_from_json(text)
    assert reports_to_json(back) == text
    d = json.loads(text)[0]
    assert set(d) == {"case_id", "params", "lhs", "rhs", "abs_err", "rel_err",
                      "quad_error_estimate", "status"}


def test_report_fields():
    names = [f.name for f in dataclasses.fields(VerificationReport)]
    assert names == ["case_id", "params", "lhs", "rhs", "abs_err", "rel_err",
                     "quad_error_estimate", "status"]


def test_csv_columns():
    reports = verify_suite(GridSpec(families=("trigamma-alg",), perturbations=0))
    rows = list(csv.reader(io.StringIO(reports_to_csv(reports))))
    assert rows[0] == ["case_id", "param_a", "param_beta", "lhs_re", "lhs_im", "rhs_re",
                       "rhs_im", "abs_err", "rel_err", "status"]
    assert len(rows) == 1 + len(reports)
    assert all(r[-1] == "Pass" for r in rows[1:])
