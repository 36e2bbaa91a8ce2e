import numpy as np
import pytest

from qhfedge.baselines import canny, idz_direct, prewitt, sobel, to_gray
from qhfedge.metrics import psnr
from qhfedge.noise import NoiseSpec, corrupt
from qhfedge.pipeline import PipelineConfig, detect, edge_map_to_gray
from qhfedge.synthetic import clouds, green_pink


def column_step(height=16, width=16, at=8, low=0.0, high=1.0):
    gray = np.full((height, width), low)
    gray[:, at:] = high
    return gray


class TestToGray:
    def test_white(self):
        img = np.ones((2, 2, 3))
        np.testing.assert_allclose(to_gray(img), 1.0)

    def test_black(self):
        np.testing.assert_array_equal(to_gray(np.zeros((2, 2, 3))), 0.0)

    def test_two_tone_luma_nearly_equal(self):
        gray = to_gray(green_pink())
        left = gray[0, 0]
        right = gray[0, -1]
        assert left == pytest.approx(0.3946, abs=2e-4)
        assert right == pytest.approx(0.4051, abs=2e-4)
        assert abs(right - left) == pytest.approx(0.0105, abs=2e-4)

    def test_affine_per_channel_but_not_permutation_invariant(self):
        rng = np.random.default_rng(0)
        img = rng.random((4, 4, 3))
        assert not np.allclose(to_gray(img), to_gray(img[..., [2, 1, 0]]))


class TestSobelPrewitt:
    def test_constant_field_empty(self):
        flat = np.full((8, 8), 0.5)
        assert not sobel(flat, 0.1).any()
        assert not prewitt(flat, 0.1).any()

    def test_ideal_step_marks_adjacent_columns(self):
        gray = column_step()
        edges = sobel(gray, 0.5)
        expected = np.zeros((16, 16), dtype=bool)
        expected[:, 7:9] = True
        np.testing.assert_array_equal(edges, expected)

    def test_unit_step_response_normalized_to_one(self):
        gray = column_step()
        assert sobel(gray, 1.0).any()       # full-scale step reaches 1.0
        assert not sobel(0.5 * gray, 0.6).any()

    def test_two_tone_boundary_missed_at_low_contrast(self):
        gray = to_gray(green_pink())
        edges = sobel(gray, 0.1)
        assert not (edges[:, 63] | edges[:, 64]).any()

    def test_agreement_on_axis_aligned_step(self):
        gray = column_step()
        np.testing.assert_array_equal(sobel(gray, 0.3), prewitt(gray, 0.3))

    def test_threshold_validation(self):
        with pytest.raises(ValueError):
            sobel(np.zeros((4, 4)), -0.2)
        with pytest.raises(ValueError):
            prewitt(np.zeros((4, 4)), 1.1)


class TestCanny:
    def test_constant_field_empty(self):
        assert not canny(np.full((16, 16), 0.3)).any()

    def test_step_detected_thinly(self):
        gray = column_step(32, 32, at=16)
        edges = canny(gray, 0.08, 0.2, sigma=1.4)
        assert edges.any()
        cols = np.where(edges.any(axis=0))[0]
        assert set(cols) <= {14, 15, 16, 17}
        assert edges.sum(axis=1).max() <= 2

    def test_hysteresis_keeps_connected_weak_edges(self):
        gray = column_step(24, 24, at=12)
        gray[:12, :] *= 0.4  # upper half weaker contrast
        strong_only = canny(gray, 0.75, 0.8, sigma=1.0)
        with_hysteresis = canny(gray, 0.2, 0.8, sigma=1.0)
        assert with_hysteresis.sum() > strong_only.sum()

    def test_parameter_validation(self):
        gray = np.zeros((8, 8))
        with pytest.raises(ValueError):
            canny(gray, 0.5, 0.2)       # low > high
        with pytest.raises(ValueError):
            canny(gray, -0.1, 0.2)
        with pytest.raises(ValueError):
            canny(gray, 0.1, 0.2, sigma=-1.0)


class TestIdzDirect:
    def test_constant_image_empty(self):
        assert not idz_direct(np.full((12, 12, 3), 0.7)).any()

    def test_matches_zero_decay_pipeline_on_single_channel_step(self):
        cols = np.arange(48, dtype=float)[None, :].repeat(40, axis=0)
        blend = 1.0 / (1.0 + np.exp(-(cols - 19) / 2.5))
        img = np.zeros((40, 48, 3))
        img[..., 0] = 0.2 + 0.5 * blend
        np.testing.assert_array_equal(idz_direct(img, 0.1),
                                      detect(img, PipelineConfig(0.0, 0.0, 0.1)))

    def test_more_noise_sensitive_than_filtered_pipeline(self):
        img = clouds(20, 64)
        noisy = corrupt(img, NoiseSpec("salt-pepper", density=0.05, seed=77))
        raw_score = psnr(edge_map_to_gray(idz_direct(img, 0.1)),
                         edge_map_to_gray(idz_direct(noisy, 0.1)))
        config = PipelineConfig(8.0, 8.0, 0.1)
        filtered_score = psnr(edge_map_to_gray(detect(img, config)),
                              edge_map_to_gray(detect(noisy, config)))
        assert filtered_score > raw_score

    def test_channel_permutation_invariance(self):
        # without the frequency-domain stage the gradient sees raw channels,
        # so permuting them cannot change the map
        img = clouds(21, 48)
        base = idz_direct(img, 0.1)
        for perm in ([1, 0, 2], [2, 0, 1], [0, 2, 1]):
            np.testing.assert_array_equal(idz_direct(img[..., perm], 0.1), base)

    def test_rotation_covariance(self):
        img = clouds(22, 48)
        base = idz_direct(img, 0.1)
        rotated = idz_direct(np.ascontiguousarray(np.rot90(img)), 0.1)
        np.testing.assert_array_equal(rotated, np.rot90(base))
