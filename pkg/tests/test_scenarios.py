"""Built-in scenario reports, curve values, sweeps."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from accrgeo import (
    Example2Params,
    example1_curve,
    example2_expected_curvature,
    example2_state,
    run_example1_report,
    run_example2_report,
    sweep,
)
from accrgeo.errors import DegenerateParameter, EmptyGrid, GeometryError
from accrgeo.scenarios import (
    DEFAULT_BETA_GRID,
    DEFAULT_T_GRID,
    SQRT2,
)

DEG_T = 3.0 * math.pi / 4.0


def test_example2_report_defaults_pass():
    report = run_example2_report(Example2Params())
    assert report.passed, report.worst()
    for name in (
        "curvature_table",
        "ricci_form",
        "tau_value",
        "tau_star_value",
        "tau_assoc_pipeline",
        "tau_assoc_two_routes",
        "sasaki_like",
        "lie_g_closed_vs_connection",
        "h_form",
        "soliton_residual",
        "einstein_fit_residual",
    ):
        assert name in report, name


def test_example2_report_away_from_origin():
    report = run_example2_report(Example2Params(p=2.0, q=-1.5, beta=0.5, t0=-1.0))
    assert report.passed, report.worst()


def test_example2_expected_table_size():
    frame = example2_state(0.0, 0.0)[1].frame
    table = example2_expected_curvature(frame)
    assert int(np.count_nonzero(table.data)) == 40


def test_example2_supplied_lambda_pass_and_fail():
    params = Example2Params(beta=0.0, t0=1.0)
    good = run_example2_report(params, lam=2.0, lam_assoc=-2.0)
    assert good.passed
    bad = run_example2_report(params, lam=5.0, lam_assoc=-2.0)
    assert not bad.passed
    assert not bad["lambda_matches_solution"].passed


def test_example2_eta_variant():
    # rho = 4 eta(.)eta solves the single-metric equation with zero
    # potential, lam = 0, mu = -4 at beta = 0
    from accrgeo import VerticalScalar

    params = Example2Params(beta=0.0, t0=0.0)
    report = run_example2_report(
        params, k=VerticalScalar(0.0, 0.0), mu=-4.0
    )
    assert report.passed, report.worst()
    assert "eta_soliton_residual" in report


def test_example1_point_t0_n2():
    point = example1_curve(0.0, 2, 0.0)
    assert point.p == pytest.approx((1.0 + SQRT2) / 2.0, abs=1e-12)
    assert point.q == pytest.approx(-0.5, abs=1e-12)
    assert point.tau == pytest.approx(4.0 + 8.0 * SQRT2, abs=1e-9)
    assert point.tau_assoc == pytest.approx(20.0 - 8.0 * SQRT2, abs=1e-9)
    assert point.tau + point.tau_assoc == pytest.approx(24.0, abs=1e-9)


def test_example1_scalar_sum_all_n():
    for n in range(1, 6):
        point = example1_curve(1.0, n, 0.25)
        assert point.tau + point.tau_assoc == pytest.approx(
            4.0 * n * (n + 1), abs=1e-9
        )


def test_example1_degenerate_t_raises():
    with pytest.raises(DegenerateParameter):
        example1_curve(DEG_T, 2, 0.0)
    # the other branches of the excluded family too
    with pytest.raises(DegenerateParameter):
        example1_curve(DEG_T + 2.0 * math.pi, 2, 0.0)


@settings(max_examples=80, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
    st.integers(min_value=1, max_value=5),
)
def test_example1_curve_constraint(t, n):
    try:
        point = example1_curve(t, n, 0.0)
    except DegenerateParameter:
        return
    # the defining curve equation
    assert abs(
        point.p ** 2 + point.q ** 2 - point.p + point.q
    ) < 1e-12


def test_example1_report_passes_on_grid():
    for beta in DEFAULT_BETA_GRID:
        report = run_example1_report(0.5, 2, beta)
        assert report.passed, (beta, report.worst())


def test_example1_degenerate_beta_unit_sums():
    point = example1_curve(1.0, 2, -0.25)
    assert point.sum_g == 1.0
    assert point.sum_assoc == 1.0
    report = run_example1_report(1.0, 2, -0.25)
    assert report.passed, report.worst()
    assert "unit_sum_g" in report


def test_example1_sums_override_inconsistent_fails():
    report = run_example1_report(0.0, 2, 0.0, sums_override=(3.0, 0.0, 0.0, 0.0))
    assert not report.passed


def test_sweep_example2_counts():
    result = sweep(
        "example2",
        p_grid=[0.0, 1.0],
        q_grid=[0.0, -1.0],
        beta_grid=[0.0, -0.25],
        t0_grid=[1.0],
    )
    assert result.scenario == "example2"
    assert len(result.rows) == 8
    assert result.n_pass == 8
    assert result.n_fail == 0
    assert result.passed


def test_sweep_example1_degenerate_row_excluded():
    result = sweep(
        "example1",
        t_grid=[0.0, DEG_T, 1.0],
        n_grid=[2],
        beta_grid=[0.0],
    )
    assert len(result.rows) == 3
    assert result.n_degenerate == 1
    assert result.n_pass == 2
    assert result.n_fail == 0
    assert result.passed
    degenerate_rows = [row for row in result.rows if row.degenerate]
    assert len(degenerate_rows) == 1
    assert degenerate_rows[0].params["t"] == pytest.approx(DEG_T)


def test_sweep_scalars_are_computed():
    result = sweep(
        "example2",
        p_grid=[0.0],
        q_grid=[0.0],
        beta_grid=[0.5],
        t0_grid=[2.0],
    )
    row = result.rows[0]
    assert row.scalars["tau"] == pytest.approx(4.0, abs=1e-10)
    # lam = 2(t0 - 2 beta) = 2(2 - 1) = 2
    assert row.scalars["lambda"] == pytest.approx(2.0, abs=1e-9)
    assert row.scalars["lambda_tilde"] == pytest.approx(-2.0 * (2.0 + 1.0), abs=1e-9)


def test_sweep_empty_grid_raises():
    with pytest.raises(EmptyGrid):
        sweep("example2", p_grid=[], q_grid=[0.0], beta_grid=[0.0], t0_grid=[0.0])


def test_sweep_unknown_scenario():
    with pytest.raises(GeometryError):
        sweep("example3")


def test_default_t_grid_avoids_degenerate_point():
    for t in DEFAULT_T_GRID:
        assert abs(t - DEG_T) > 1e-3
