import pytest

from exlie import verify
from exlie.verify import CheckFailed, Check, Report, checks_for, expect, expect_eq, run_check, run_suite


@pytest.mark.parametrize("suite", verify.SUITES)
def test_suites_pass(suite):
    rep = run_suite(suite)
    failed = [(r.id, r.witness) for r in rep.results if not r.passed]
    assert not failed
    assert rep.ok and rep.passed == len(rep.results) > 0


def test_deep_only_excluded_by_default():
    ids = {c.id for c in checks_for("e8")}
    deep = {c.id for c in checks_for("e8", deep=True)}
    assert "e8_jacobi_full" in deep - ids


def test_unknown_suite():
    with pytest.raises(ValueError):
        checks_for("g2")


def test_failure_is_reported_with_witness():
    def bad():
        expect_eq(1, 2, "value")

    res = run_check(Check("bad", "f4", "demo", bad))
    assert not res.passed and res.witness == "value: got 1, expected 2"
    rep = Report("demo", [res])
    assert not rep.ok and rep.failed == 1
    js = rep.to_json()
    assert js["totals"] == {"pass": 0, "fail": 1, "total": 1}
    assert set(js["checks"][0]) == {"id", "claim", "status", "witness", "seconds"}
    assert "FAIL" in rep.render()
    with pytest.raises(CheckFailed):
        expect(False)
