import math

import numpy as np
import pytest

import trient


def ghz(theta):
    v = np.zeros(8, dtype=complex)
    v[0] = math.cos(theta)
    v[7] = math.sin(theta)
    return v


def test_reference_table_passes():
    report = trient.table1()
    assert report["schema"] == "tri-entangle/1"
    assert report["passed"] is True


def test_ghz_area():
    spec = trient.MeasureSpec(trient.MeasureKind.ConcurrenceSquared, 0.5)
    t = trient.triangle_area(ghz(math.pi / 4), spec)
    assert t["value"] == pytest.approx(1.0, abs=1e-14)
    assert t["classification"] == "acute"
    assert trient.gmc(ghz(math.pi / 8)) == pytest.approx(math.sqrt(0.5))


def test_sides_and_lambdas():
    t = trient.triangle_area_sides([3.0, 4.0, 5.0])
    assert t["area"] == pytest.approx(6.0)
    psi = trient.haar_state([2, 2, 2], seed=3)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    lam = trient.local_lambdas(psi)
    assert len(lam) == 3 and all(0.0 <= x <= 0.5 for x in lam)
    spec = trient.MeasureSpec(trient.parse_measure("c2"))
    vals = trient.bipartition_vector(psi, spec)
    assert vals == pytest.approx([4 * x * (1 - x) for x in lam])


def test_monotonicity_gap_with_identity():
    psi = trient.haar_state([2, 2, 2], seed=4)
    spec = trient.MeasureSpec(trient.MeasureKind.VonNeumann, 0.5)
    gap = trient.monotonicity_gap(psi, 0, [np.eye(2, dtype=complex)], spec)
    assert abs(gap) < 1e-14


def test_continuous_systems():
    imp = trient.hybrid_impurities(0.0, 1.0)
    assert imp[2] == pytest.approx(0.5 * (1 - math.exp(-1.0)), abs=1e-14)
    sigma = trient.random_pure_cm(seed=2)
    assert np.linalg.det(sigma) == pytest.approx(1.0, abs=1e-8)
    ia, ib, ic = (trient.gaussian_impurity(sigma, [p]) for p in range(3))
    assert ia <= ib + ic + 1e-10


def test_suite_json():
    report = trient.run_suite("triangle-holds", seed=5, samples=50, threads=1)
    assert list(report.keys()) == sorted(report.keys())
    assert report["passed"] is True
    assert report["config"]["seed"] == 5
    assert "triangle-holds" in trient.suite_names()


def test_errors_map_to_python_exceptions():
    with pytest.raises(trient.ArgumentError):
        trient.run_suite("no-such-suite")
    with pytest.raises(trient.TrientError):
        trient.MeasureSpec(trient.MeasureKind.VonNeumann, -1.0)
    with pytest.raises(trient.ValidationError):
        trient.local_lambdas(np.ones(8, dtype=complex))
