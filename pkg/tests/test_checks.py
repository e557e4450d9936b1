import pytest

from dwigner import checks


@pytest.mark.parametrize("n", range(2, 8))
def test_registry_passes(n):
    results = checks.run_checks(n, seed=11)
    assert results
    assert all(r.passed for r in results), [(r.name, r.deviation) for r in results if not r.passed]


def test_names_unique():
    names = [entry[0] for entry in checks.REGISTRY]
    assert len(names) == len(set(names))


def test_dimension_specific_checks():
    assert "qubit_closed_form" in {r.name for r in checks.run_checks(2, 0)}
    names3 = {r.name for r in checks.run_checks(3, 0)}
    assert {"qutrit_dictionary", "delta_basis", "parity_from_displacements"} <= names3
    assert "delta_basis" not in {r.name for r in checks.run_checks(4, 0)}


def test_reproducible():
    a = [r.deviation for r in checks.run_checks(3, 5)]
    b = [r.deviation for r in checks.run_checks(3, 5)]
    assert a == b


def test_nan_fails():
    assert not checks.CheckResult("x", float("nan"), 1.0).passed
    assert checks.CheckResult("x", 0.5, 1.0).passed
