import math

import ffvar


def test_version():
    assert ffvar.__version__ == "0.1.0"


def test_traces_sum_to_zero():
    for q, deg in [(3, 1), (3, 2), (5, 1), (5, 2)]:
        traces = ffvar.traces(q, "legendre", deg)
        assert len(traces) == q**deg
        assert sum(traces) == 0


def test_frozen_traces_gf3():
    assert ffvar.traces(3, "legendre", 1) == [-1, 1, 0]


def test_euler_factor():
    good = ffvar.euler_factor(3, "legendre", [1, 1])
    assert good["coeffs"] == [1, 0, 3]
    bad = ffvar.euler_factor(3, "legendre", [0, 1])
    assert bad["coeffs"] == [1, 1]
    assert bad["degree"] == 1


def test_von_mangoldt():
    assert ffvar.von_mangoldt(3, "legendre", [0, 1]) == -1
    # t(t+1) is not a prime power
    assert ffvar.von_mangoldt(3, "legendre", [0, 1, 1]) == 0


def test_lfun_degree_and_purity():
    out = ffvar.lfun(3, "legendre", [0, 1, 0, 1])
    assert len(out) == 16
    for row in out:
        assert len(row["roots"]) == 5
        if row["class"] == "good":
            for th in row["theta"]:
                assert abs(abs(th) - 1.0) < 1e-9
            # good inverse roots sit on |gamma| = q
            for g in row["roots"]:
                assert abs(abs(g) - 3.0) < 1e-3


def test_variance_identities():
    rep = ffvar.variance(3, "legendre", [0, 1, 0, 1], 2)
    assert rep["phi"] == 16
    assert rep["prediction"] == 2.0
    assert math.isclose(rep["variance"], rep["spectral"], rel_tol=1e-8, abs_tol=1e-8)


def test_classical_variance():
    rep = ffvar.variance(5, "classical", [0, 2, 1], 3)
    assert rep["prediction"] == 1.0
    assert rep["phi"] == 16  # (5-1)*(5-1) units mod t(t+2)


def test_trace_moments():
    rows = ffvar.trace_moments(3, 4, 4000, seed=1)
    for row in rows:
        assert row["prediction"] == min(row["n"], 3)
        assert abs(row["estimate"] - row["prediction"]) < 6 * row["std_error"] + 1e-9


def test_selftest():
    ok, log = ffvar.selftest()
    assert ok, log
    assert "all checks passed" in log
