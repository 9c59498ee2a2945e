import math

import numpy as np
import pytest

import h3sep


def test_hydrogen_levels():
    roots = h3sep.find_hydrogen_roots(3.0, 1e-10)
    assert [r.x for r in roots] == pytest.approx([1.0, 0.5], abs=1e-10)
    assert roots[0].pure_state and roots[1].pure_state
    assert h3sep.a_matrix(2.0).a00 == pytest.approx(10.0 / 27.0, rel=1e-14)


def test_integrals():
    assert h3sep.i0(1.0) == pytest.approx(1.0)
    assert h3sep.f_overlap(0.0, 1.7) == pytest.approx(h3sep.i0(1.7))
    s = h3sep.integral_set(h3sep.Geometry(0.0, "pi/6"), 1.5)
    assert s.i0 == s.iplus == s.i1


def test_ground_state_roots():
    root = h3sep.ground_state_root(h3sep.Geometry(1.6, "pi/6"))
    assert root.x == pytest.approx(1.7893258, abs=1e-7)
    assert root.factor == h3sep.Factor.Symmetric
    assert root.epsilon == root.x * root.x
    assert h3sep.ground_state_root(h3sep.Geometry(1.68, math.pi / 6)).x == pytest.approx(1.76526, abs=1e-5)


def test_lambda_vector_is_symmetric():
    g = h3sep.Geometry(1.0, "pi/3")
    lam = h3sep.lambda_vector(g, h3sep.ground_state_root(g))
    assert lam.l0 == 1.0
    assert lam.lplus == lam.lminus


def test_scan_and_stability():
    rows = h3sep.scan_r("pi/2", [0.0, 0.5, 1.0, 2.0, 3.0])
    assert rows[0].e_total is None
    assert rows[1].x == pytest.approx(2.0471617, abs=1e-6)
    assert all(r.status == "ok" for r in rows)
    report = h3sep.stability_report(rows)
    assert report.monotone_decreasing
    assert report.classification == "unstable (monotone decreasing)"


def test_psi_grid_shape_and_symmetry():
    g = h3sep.Geometry(1.6, "pi/6")
    params = h3sep.raw_params(g, h3sep.ground_state_root(g))
    grid = h3sep.psi_grid(1.6, params, 10, 20)
    psi = grid["psi"]
    assert psi.shape == (10, 20)
    assert np.all(np.isfinite(psi))
    np.testing.assert_allclose(psi, psi[:, ::-1], rtol=1e-12)


def test_normalize():
    g = h3sep.Geometry(1.2, "pi/4")
    p = h3sep.normalize(g, h3sep.ground_state_root(g))
    assert p.norm > 0.0


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        h3sep.Geometry(-1.0, 0.5)
    with pytest.raises(ValueError):
        h3sep.parse_angle("pie")
    assert h3sep.parse_angle("2pi/3") == pytest.approx(2 * math.pi / 3)
