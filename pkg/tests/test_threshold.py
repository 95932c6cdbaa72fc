import numpy as np
import pytest

from mumbounds.threshold import find_threshold


def test_simple_root():
    result = find_threshold(lambda w: w - 0.3, tol=1e-8)
    assert result.found
    assert result.threshold == pytest.approx(0.3, abs=1e-7)
    lo, hi = result.bracket
    assert hi - lo <= 1e-8
    mlo, mhi = result.margins
    assert mlo <= 0.0 < mhi


def test_picks_last_crossing_of_non_monotone_margin():
    # sign pattern -, +, -, + over [0, 1]; the detected side is [w*, 1]
    def margin(w):
        return np.sin(2.5 * np.pi * w - 0.2)

    result = find_threshold(margin, tol=1e-9)
    assert result.found
    assert margin(result.threshold + 1e-6) > 0.0
    assert margin(1.0) > 0.0
    # everything between threshold and 1 stays detected
    assert all(margin(w) > 0 for w in np.linspace(result.threshold + 1e-6, 1.0, 50))


def test_all_negative_reports_not_found():
    result = find_threshold(lambda w: -1.0, tol=1e-6)
    assert not result.found
    assert not result.all_positive


def test_all_positive_flagged():
    result = find_threshold(lambda w: 1.0, tol=1e-6)
    assert not result.found
    assert result.all_positive


def test_evaluation_count_is_bounded():
    result = find_threshold(lambda w: w - 0.5, tol=1e-6, prescan=64)
    assert result.found
    assert result.evaluations <= 64 + 30


def test_parameter_validation():
    with pytest.raises(ValueError, match="positive"):
        find_threshold(lambda w: w, tol=0.0)
    with pytest.raises(ValueError, match="prescan"):
        find_threshold(lambda w: w, prescan=1)
