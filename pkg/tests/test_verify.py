import pytest

from symprod.verify import SUITES, VerifyConfig, run_verify, sample_subgroups


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_each_suite_passes(suite):
    report = run_verify(VerifyConfig(suites=[suite], max_n=4, seed=11))
    assert report["total_failures"] == 0, report["suites"][suite]["failures"]
    assert report["suites"][suite]["checks"] > 0


def test_report_independent_of_threads():
    a = run_verify(VerifyConfig(max_n=4, seed=3, threads=1))
    b = run_verify(VerifyConfig(max_n=4, seed=3, threads=4))
    assert a == b
    assert list(a["suites"]) == list(SUITES)


def test_seed_is_recorded_and_reproducible():
    a = run_verify(VerifyConfig(suites=["localization"], max_n=3, seed=1))
    assert a == run_verify(VerifyConfig(suites=["localization"], max_n=3, seed=1))
    b = run_verify(VerifyConfig(suites=["localization"], max_n=3, seed=2))
    assert (a["seed"], b["seed"]) == (1, 2)
    assert a["total_failures"] == b["total_failures"] == 0


def test_config_validation():
    with pytest.raises(ValueError):
        run_verify(VerifyConfig(suites=["nope"]))
    with pytest.raises(ValueError):
        run_verify(VerifyConfig(max_n=-1))
    with pytest.raises(ValueError):
        run_verify(VerifyConfig(threads=0))


def test_sample_subgroups_include_named_groups():
    orders = sorted(len(K) for _, K in sample_subgroups(4))
    assert orders[0] == 1 and orders[-1] == 24 and 12 in orders
    assert len({tuple(K) for _, K in sample_subgroups(4)}) == len(sample_subgroups(4))
