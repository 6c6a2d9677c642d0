import math

import pytest

import chpm


def test_basis_values():
    b = chpm.HeatPolynomialBasis(1.0, 6)
    assert len(b) == 7
    assert b.eval(4, 1.0, 1.0) == pytest.approx(25.0)
    assert b.eval_dx(4, 1.0, 1.0) == pytest.approx(28.0)
    assert b.eval_dt(4, 1.0, 1.0) == pytest.approx(36.0)
    assert list(b.term_coefficients(4)) == pytest.approx([1.0, 12.0, 12.0])
    n = chpm.HeatPolynomialBasis(1.0, 6, scaling="normalized")
    assert n.eval(4, 1.0, 1.0) * 24 == pytest.approx(25.0)


def test_solve_first_benchmark():
    r = chpm.solve("example1", order=12)
    assert r["scheme"] == (6, 5, 2, 16)
    assert len(r["coefficients"]) == 13
    assert r["delta_p"] < 1e-5
    assert len(r["t"]) == 101
    assert r["t"][0] == 0.0 and r["t"][-1] == 1.0


def test_noisy_solve_is_deterministic():
    a = chpm.solve(order=8, noise=0.02, seed=3)
    b = chpm.solve(order=8, noise=0.02, seed=3)
    assert a["coefficients"] == b["coefficients"]


def test_sweep_rows():
    rows = chpm.sweep("example2", orders=[6, 8, 10], betas=[0.0])
    assert [r["N"] for r in rows] == [6, 8, 10]
    conds = [r["cond"] for r in rows]
    assert conds == sorted(conds)
    assert all(r["failures"] == 0 for r in rows)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        chpm.solve(order=12, scheme="2,1,1")
    with pytest.raises(chpm.NumericalError):
        chpm.solve(order=30)
    with pytest.raises(ValueError):
        chpm.solve("example7")


def test_neumann_root():
    alpha = chpm.neumann_root()
    assert chpm.neumann_consistency(alpha) == pytest.approx(1.0, abs=1e-14)
    assert math.isclose(alpha, 0.620063, rel_tol=1e-6)
