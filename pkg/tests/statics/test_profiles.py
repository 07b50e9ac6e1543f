"""
Unit tests for squat profiles and strategy comparison
"""

import math

import pytest
import numpy as np

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.analysis.reconcile import fit_reconciliation_geometry, published_squat_load
from src.kinematics import reachable_height_band
from src.model import DEFAULT_LATERAL_OFFSET_M, LegGeometry, LoadCase, UnreachableHeightError, XRLError
from src.statics import (
    ProfileSample,
    SquatProfile,
    Strategy,
    compare_strategies,
    comparison_rows,
    default_heights,
    evaluate_strategy,
    joint_peaks,
    squat_profile,
)


@pytest.fixture
def geom():
    return LegGeometry(l1=0.425, l2=1.025)


@pytest.fixture
def load():
    return published_squat_load()


class TestDefaultHeights:
    """Tests for the common sweep band"""

    def test_sample_count_and_order(self, geom):
        heights = default_heights(geom)
        assert len(heights) == 200
        assert np.all(np.diff(heights) > 0)

    def test_inside_both_bands(self, geom):
        heights = default_heights(geom)
        for offset in (0.0, DEFAULT_LATERAL_OFFSET_M):
            z_min, z_max = reachable_height_band(geom, offset)
            assert heights[0] > z_min
            assert heights[-1] < z_max

    def test_single_sample(self, geom):
        assert len(default_heights(geom, samples=1)) == 1

    def test_zero_samples_rejected(self, geom):
        with pytest.raises(XRLError):
            default_heights(geom, samples=0)

    def test_disjoint_plane_bands_are_unreachable(self, geom):
        """A stance so wide the frontal band ends below the sagittal one"""
        assert reachable_height_band(geom, 1.36)[1] < reachable_height_band(geom, 0.0)[0]
        with pytest.raises(UnreachableHeightError):
            default_heights(geom, 1.36)


class TestSquatProfile:
    """Tests for profile sweeps"""

    @pytest.mark.parametrize("strategy", list(Strategy))
    def test_every_strategy_reaches_the_common_band(self, geom, load, strategy):
        profile = squat_profile(geom, load, default_heights(geom, samples=50), strategy)
        assert profile.reachable_count == 50
        assert profile.strategy is strategy

    def test_unreachable_sample_flagged(self, geom, load):
        profile = squat_profile(geom, load, [0.3, 1.0], Strategy.SAGITTAL)
        first, second = profile.samples
        assert not first.reachable
        assert first.note
        assert math.isnan(first.max_abs)
        assert second.reachable
        assert profile.reachable_count == 1
        assert profile.peak_max_abs() == second.max_abs

    def test_threads_preserve_order_and_values(self, geom, load):
        heights = default_heights(geom, samples=64)
        serial = squat_profile(geom, load, heights, Strategy.FRONTAL_L2)
        threaded = squat_profile(geom, load, heights, Strategy.FRONTAL_L2, workers=4)
        assert threaded == serial

    def test_heights_must_increase(self):
        samples = (ProfileSample(1.0, None), ProfileSample(0.9, None))
        with pytest.raises(XRLError):
            SquatProfile(Strategy.SAGITTAL, samples)

    def test_zero_load(self, geom):
        for strategy in Strategy:
            profile = squat_profile(geom, LoadCase(0.0), default_heights(geom, samples=10), strategy)
            assert profile.peak_max_abs() == 0.0

    def test_strategy_from_string(self, geom, load):
        sample = evaluate_strategy(geom, load, 1.0, "frontal-l2")
        assert sample.internal_wrench is not None

    def test_joint_peaks(self, geom, load):
        profile = squat_profile(geom, load, default_heights(geom, samples=50), Strategy.SAGITTAL)
        peaks = joint_peaks(profile)
        assert set(peaks) == {"hip", "knee", "ankle"}
        assert peaks["hip"] == pytest.approx(load.leg_assist_moment)
        assert peaks["knee"] == pytest.approx(profile.peak_max_abs())


class TestComparison:
    """Tests for the strategy comparison table"""

    def test_frontal_minimax_never_exceeds_sagittal(self, load):
        """Holds over the sweep band for the geometry fitted to the published squat"""
        fit = fit_reconciliation_geometry(load, 1.45)
        heights = default_heights(fit.geometry, fit.lateral_offset, 200)
        rows = compare_strategies(fit.geometry, load, heights, fit.lateral_offset)
        assert len(rows) == 200
        for row in rows:
            assert row.frontal_minimax_max_abs <= row.sagittal_max_abs + 1e-9

    def test_l2_never_exceeds_passive_chain(self, geom, load):
        rows = compare_strategies(geom, load, default_heights(geom, samples=50))
        assert all(row.l2_norm_ratio <= 1.0 + 1e-12 for row in rows)

    def test_rows_follow_heights(self, geom, load):
        heights = default_heights(geom, samples=20)
        rows = compare_strategies(geom, load, heights, workers=2)
        assert [row.height for row in rows] == list(heights)

    def test_mismatched_grids_rejected(self, geom, load):
        profiles = {
            Strategy.SAGITTAL: squat_profile(geom, load, [0.9, 1.0], Strategy.SAGITTAL),
            Strategy.FRONTAL_L2: squat_profile(geom, load, [0.9, 1.0], Strategy.FRONTAL_L2),
            Strategy.FRONTAL_MINIMAX: squat_profile(geom, load, [0.9, 1.1], Strategy.FRONTAL_MINIMAX),
        }
        with pytest.raises(XRLError):
            comparison_rows(geom, load, profiles)
