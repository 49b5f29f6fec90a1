import pytest

from knotmosaics.verify import (EXTENDED_CHECKS, FAIL, PASS, REQUIRED_CHECKS,
                                SKIPPED, _CHECKS, VerifyResult, verify_all)


def test_manifest():
    assert set(REQUIRED_CHECKS) == {"thm-2.3", "thm-2.4", "thm-2.5",
                                    "thm-4.1-n3", "thm-4.1-n4",
                                    "bounds-table", "pretzel"}
    assert set(EXTENDED_CHECKS) == {"thm-2.6", "thm-3.2", "budget-12"}
    assert set(_CHECKS) == set(REQUIRED_CHECKS) | set(EXTENDED_CHECKS)


def test_unknown_tier():
    with pytest.raises(ValueError):
        verify_all("nightly")


def test_quick_checks_pass():
    for check_id in ("thm-2.3", "thm-4.1-n3", "bounds-table", "pretzel"):
        ok, details = _CHECKS[check_id]()
        assert ok, f"{check_id}: {details}"


def test_counterexample_check_passes():
    ok, details = _CHECKS["thm-3.2"]()
    assert ok
    assert "corner mosaic number" in details


def test_result_statuses_are_known():
    r = VerifyResult("thm-2.3", PASS, "x", 0.1)
    assert r.status in (PASS, FAIL, SKIPPED)
