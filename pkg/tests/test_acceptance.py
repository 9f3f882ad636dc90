"""End-to-end gate: every shipped behavior bundle must hold within budget.

Each case is self-contained in intrec.acceptance and checks its own oracle
values and time budget; one test function per case keeps the report to a
single pass/fail line each.
"""

from intrec import acceptance


def test_plain_chebyshev_integral():
    r = acceptance.case_plain_chebyshev_integral()
    assert r.passed, r.detail


def test_power_sequence_integral():
    r = acceptance.case_power_sequence_integral()
    assert r.passed, r.detail


def test_chebyshev_generating_function():
    r = acceptance.case_chebyshev_generating_function()
    assert r.passed, r.detail


def test_closure_operations():
    r = acceptance.case_closure_operations()
    assert r.passed, r.detail


def test_certificate_fuzz():
    r = acceptance.case_certificate_fuzz()
    assert r.passed, r.detail


def test_squared_chebyshev_integral():
    r = acceptance.case_squared_chebyshev_integral()
    assert r.passed, r.detail


def test_singular_weight_fallback():
    r = acceptance.case_singular_weight_fallback()
    assert r.passed, r.detail


def test_report_determinism():
    r = acceptance.case_report_determinism()
    assert r.passed, r.detail
