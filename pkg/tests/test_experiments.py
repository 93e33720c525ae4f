import math

import numpy as np
import pytest

from noisygrover import experiments
from noisygrover.experiments import (
    ANCHOR_POINTS,
    audit_points,
    crosscheck_printed_forms,
    find_threshold,
    solution_margin,
    summarize_crosscheck,
    sweep_channel,
    sweep_noise_free,
)

# exact root of the solution margin; see test_frozen_threshold_oracle
C_STAR = 0.2554167013429022


@pytest.fixture(scope="module")
def audit():
    return crosscheck_printed_forms(samples=50, seed=7)


def test_noise_free_sweep_shape():
    records = sweep_noise_free(11)
    assert len(records) == 11
    assert records[0].c == 0.0 and records[-1].c == 1.0
    assert records[-1].alpha_sq == pytest.approx(0.5)
    assert records[-1].prob_01 == pytest.approx(1.0, abs=1e-12)
    # c = 0 on the plus branch is alpha = 1: the circuit returns |00>
    assert records[0].prob_00 == pytest.approx(1.0, abs=1e-12)


def test_noise_free_concurrence_column():
    for rec in sweep_noise_free(21):
        assert abs(rec.concurrence - rec.c) <= 1e-12
        assert abs(sum(rec.probabilities) - 1) <= 1e-12


def test_grid_rejects_single_point():
    with pytest.raises(ValueError):
        sweep_noise_free(1)
    with pytest.raises(ValueError):
        sweep_channel("phase", 1, 3)


def test_solution_margin_signs():
    assert solution_margin(0.0) < 0 < solution_margin(1.0)
    assert solution_margin(C_STAR - 1e-4) < 0 < solution_margin(C_STAR + 1e-4)


def test_frozen_threshold_oracle():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    # P(01) = P(00) in the closed form of the one-iterate amplitudes
    root = mpmath.findroot(
        lambda c: mpmath.sqrt(c) * (3 - c) - (1 - c) * (1 + mpmath.sqrt(1 - c)), 0.25)
    assert abs(float(root) - C_STAR) <= 1e-15


def test_threshold_value():
    c_star = find_threshold(1e-6)
    assert abs(c_star - C_STAR) <= 1e-6
    assert abs(c_star - 0.256) <= 0.006


def test_threshold_stable_under_tolerance():
    values = [find_threshold(tol) for tol in (1e-4, 1e-6, 1e-9, 1e-12)]
    for v, tol in zip(values, (1e-4, 1e-6, 1e-9, 1e-12)):
        assert abs(v - C_STAR) <= tol
    assert find_threshold(1e-6) == find_threshold(1e-6)


def test_threshold_other_marked():
    # the 10 solution is the qubit-swapped mirror of 01
    assert abs(find_threshold(1e-9, marked=2) - C_STAR) <= 1e-9


def test_threshold_validation():
    with pytest.raises(ValueError):
        find_threshold(0.0)


def test_channel_sweep_order_and_invariants():
    records = sweep_channel("amplitude", 3, 4)
    assert [(r.alpha_sq, r.p) for r in records] == [
        (a, p) for a in (0, 0.5, 1) for p in (0, 1 / 3, 2 / 3, 1)]
    for r in records:
        assert abs(sum(r.probabilities) - 1) <= 1e-12
        assert 0 <= r.concurrence <= 1
        assert 0 <= r.discord_quarter <= r.discord_half
        assert abs(r.discord_half - 2 * r.discord_quarter) <= 1e-15
        assert math.isnan(r.c)


def test_channel_sweep_deterministic():
    first = [experiments.as_tuple(r) for r in sweep_channel("phase", 5, 5)]
    second = [experiments.as_tuple(r) for r in sweep_channel("phase", 5, 5)]
    assert first == second


def test_channel_sweep_endgames():
    records = {(r.alpha_sq, r.p): r for r in sweep_channel("amplitude", 3, 3)}
    np.testing.assert_allclose(records[0.5, 1.0].probabilities, [0.25] * 4, atol=1e-10)
    records = {(r.alpha_sq, r.p): r for r in sweep_channel("phase", 3, 3)}
    np.testing.assert_allclose(records[0.5, 1.0].probabilities, [0, 0.5, 0, 0.5], atol=1e-10)


def test_audit_points_reproducible():
    points = audit_points(5, 42)
    assert points[:len(ANCHOR_POINTS)] == list(ANCHOR_POINTS)
    assert points == audit_points(5, 42)
    assert points != audit_points(5, 43)
    assert all(0 <= a < 1 and 0 <= p < 1 for a, p in points[len(ANCHOR_POINTS):])
    with pytest.raises(ValueError):
        audit_points(0, 1)


def test_crosscheck_row_bookkeeping(audit):
    for row in audit:
        assert row.abs_deviation == abs(row.computed - row.printed)
    summary = summarize_crosscheck(audit)
    assert summary["sec4-concurrence"][1] == 50 + len(ANCHOR_POINTS)


def test_crosscheck_verified_forms(audit):
    summary = summarize_crosscheck(audit)
    assert summary["sec4-concurrence"][0] < 1e-10
    assert summary["sec3-concurrence"][0] < 1e-10
    entries16 = [summary["eq16-entry-%d%d" % (i, j)][0] for i in range(4) for j in range(4)
                 if (i, j) != (2, 1)]
    assert max(entries16) < 1e-9
    assert summary["eq16-entry-21"][0] > 1e-3


def test_crosscheck_flags_known_misprints(audit):
    summary = summarize_crosscheck(audit)
    for fid in ("eq19", "sec3-discord", "eq10-entry-02", "eq18-entry-32", "sec3-bloch-tyy"):
        assert summary[fid][0] > 1e-3, fid
    assert summary["eq12-amp-1"][0] < 1e-12


def test_crosscheck_discord_anchor(audit):
    row = next(r for r in audit if r.formula_id == "eq19" and (r.alpha_sq, r.p) == (0.5, 0.0))
    assert row.printed == pytest.approx(0.4375)
    assert row.computed == pytest.approx(1.0, abs=1e-12)


def test_crosscheck_phase_amplitude_anchor(audit):
    rows = {r.formula_id: r for r in audit if (r.alpha_sq, r.p) == (0.5, 1.0)}
    assert rows["sec4-amp-01"].computed == pytest.approx(0.5, abs=1e-12)
    assert rows["sec4-amp-01"].abs_deviation < 1e-12
    assert rows["sec4-amp-11"].abs_deviation < 1e-12
