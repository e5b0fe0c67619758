from loggw.verify import CHECKS, run_checks


def test_all_checks_pass_on_shipped_data():
    results = run_checks()
    assert [r.name for r in results] == [name for name, _, _ in CHECKS]
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_only_filter():
    results = run_checks(only=["degree5-ledger"])
    assert [r.name for r in results] == ["degree5-ledger"]


def test_missing_data_dir_fails_by_name(tmp_path):
    results = {r.name: r for r in run_checks(data_dir=tmp_path)}
    assert not results["tropical-count"].passed
    assert "ConfigurationError" in results["tropical-count"].observed
    # checks that read no data file are unaffected
    assert results["two-component"].passed
