import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratiolab.errors import EvaluationError, QuadratureError
from ratiolab.integrands import CONST1, EXP, IDENTITY, LNGAMMA
from ratiolab.matrix_core import (
    CesaroInput,
    Integrand,
    SampledMatrixSpec,
    convergence_table,
    matrix_entry,
    norm_power,
    norm_report,
    predict_limit,
    sample_row,
    weighted_cesaro,
)

from oracles import exp_row_mean, naive_norm_power, naive_weighted_sum

E = math.e


class TestMatrixEntry:
    def test_single_entry_is_f_of_one(self):
        assert matrix_entry(SampledMatrixSpec(EXP, 1), 1, 1) == pytest.approx(E, abs=1e-12)

    def test_off_diagonal_samples_ratio(self):
        spec = SampledMatrixSpec(EXP, 2)
        assert matrix_entry(spec, 1, 2) == pytest.approx(math.exp(0.5), abs=1e-12)

    def test_symmetry_of_swapped_indices(self):
        spec = SampledMatrixSpec(EXP, 3)
        assert matrix_entry(spec, 3, 2) == math.exp(2 / 3)
        assert matrix_entry(spec, 3, 2) == matrix_entry(spec, 2, 3)

    def test_out_of_range_raises(self):
        spec = SampledMatrixSpec(EXP, 3)
        for i, j in [(0, 1), (1, 0), (4, 1), (1, 4), (-1, 2)]:
            with pytest.raises(IndexError):
                matrix_entry(spec, i, j)

    @given(
        n=st.integers(min_value=1, max_value=30),
        data=st.data(),
    )
    @settings(max_examples=60)
    def test_symmetry_property(self, n, data):
        i = data.draw(st.integers(min_value=1, max_value=n))
        j = data.draw(st.integers(min_value=1, max_value=n))
        spec = SampledMatrixSpec(EXP, n)
        assert matrix_entry(spec, i, j) == matrix_entry(spec, j, i)

    def test_invalid_order_rejected(self):
        with pytest.raises(ValueError):
            SampledMatrixSpec(EXP, 0)


class TestSampleRow:
    def test_scalar_fallback_matches_vectorized(self):
        scalar_only = Integrand(eval=math.exp, label="exp-scalar")
        for k in (1, 2, 7, 33):
            np.testing.assert_allclose(
                sample_row(scalar_only, k), sample_row(EXP, k), rtol=1e-15
            )

    def test_non_finite_value_names_sample_point(self):
        blowup = Integrand(
            eval=lambda x: math.inf if x == 0.5 else 1.0, label="pole"
        )
        with pytest.raises(EvaluationError, match="1/2"):
            sample_row(blowup, 2)


class TestNormPower:
    def test_order_one_is_single_entry(self):
        assert norm_power(SampledMatrixSpec(EXP, 1), 1.0) == pytest.approx(E, abs=1e-14)

    def test_order_two_closed_form(self):
        expected = 2 * E + 2 * math.exp(0.5)
        assert norm_power(SampledMatrixSpec(EXP, 2), 1.0) == pytest.approx(
            expected, abs=1e-12
        )

    def test_normalized_value_near_limit_at_100(self):
        spec = SampledMatrixSpec(EXP, 100)
        value = norm_power(spec, 1.0)
        assert abs(value / 100**2 - (E - 1)) <= 0.05
        assert value == pytest.approx(naive_norm_power(spec, 1.0), rel=1e-12)

    @pytest.mark.parametrize("m", [1.0, 2.0, 3.0])
    @pytest.mark.parametrize("n", [1, 2, 17, 512])
    def test_triangle_identity_against_naive(self, n, m):
        spec = SampledMatrixSpec(EXP, n)
        assert norm_power(spec, m) == pytest.approx(naive_norm_power(spec, m), rel=1e-12)

    def test_triangle_identity_lngamma(self):
        spec = SampledMatrixSpec(LNGAMMA, 33)
        assert norm_power(spec, 1.0) == pytest.approx(
            naive_norm_power(spec, 1.0), rel=1e-12
        )

    @pytest.mark.parametrize("m", [1.0, 2.0, 3.0])
    def test_scaling_by_two_is_homogeneous(self, m):
        doubled = Integrand(
            eval=lambda x: 2.0 * math.exp(x),
            label="2exp",
            eval_array=lambda x: 2.0 * np.exp(x),
        )
        base = norm_power(SampledMatrixSpec(EXP, 40), m)
        scaled = norm_power(SampledMatrixSpec(doubled, 40), m)
        assert scaled == pytest.approx(2.0**m * base, rel=1e-12)

    def test_exponent_below_one_rejected(self):
        with pytest.raises(ValueError):
            norm_power(SampledMatrixSpec(EXP, 4), 0.5)

    def test_sign_changing_integrand_uses_absolute_values(self):
        signed = Integrand(eval=lambda x: x - 0.6, label="shifted")
        spec = SampledMatrixSpec(signed, 9)
        assert norm_power(spec, 1.0) == pytest.approx(naive_norm_power(spec, 1.0), rel=1e-12)
        assert norm_power(spec, 1.0) > 0.0


class TestNormReport:
    def test_order_two_report_values(self):
        report = norm_report(SampledMatrixSpec(EXP, 2), 1.0, E - 1)
        assert report.normalized == report.raw_norm_power / 4
        assert report.normalized == pytest.approx((2 * E + 2 * math.sqrt(E)) / 4, abs=1e-12)
        assert report.abs_error == abs(report.normalized - report.predicted_limit)
        assert report.abs_error == pytest.approx(0.4652, abs=5e-4)

    @pytest.mark.parametrize(
        "m,predicted",
        [(2.0, (E**2 - 1) / 2), (3.0, (E**3 - 1) / 3)],
    )
    def test_error_shrinks_as_order_doubles(self, m, predicted):
        errors = [
            norm_report(SampledMatrixSpec(EXP, n), m, predicted).abs_error
            for n in (32, 64, 128)
        ]
        assert errors[0] > errors[1] > errors[2]


class TestPredictLimit:
    def test_exponential(self):
        assert predict_limit(EXP, 1.0) == pytest.approx(E - 1, abs=1e-9)

    def test_unit_constant_any_exponent(self):
        for m in (1.0, 2.0, 7.5):
            assert predict_limit(CONST1, m) == pytest.approx(1.0, abs=1e-10)

    def test_identity_squared(self):
        assert predict_limit(IDENTITY, 2.0) == pytest.approx(1 / 3, abs=1e-10)

    def test_log_singularity_at_origin(self):
        assert predict_limit(LNGAMMA, 1.0) == pytest.approx(
            0.5 * math.log(2 * math.pi), abs=1e-9
        )

    def test_non_integrable_integrand_exhausts_budget(self):
        harmonic = Integrand(eval=lambda x: 1.0 / x, label="reciprocal")
        with pytest.raises(QuadratureError):
            predict_limit(harmonic, 1.0)


class TestWeightedCesaro:
    def test_constant_ten_terms(self):
        assert weighted_cesaro(CesaroInput([1.0] * 10, 1.0)) == pytest.approx(0.55, abs=1e-15)

    def test_constant_thousand_terms_near_half(self):
        value = weighted_cesaro(CesaroInput([1.0] * 1000, 1.0))
        assert value == pytest.approx(0.5005, abs=1e-12)
        assert abs(value - 0.5) <= 1e-3

    def test_exp_row_means_approach_half_limit(self):
        n = 500
        terms = [exp_row_mean(k) for k in range(1, n + 1)]
        value = weighted_cesaro(CesaroInput(terms, E - 1))
        assert value == pytest.approx(naive_weighted_sum(terms) / n**2, rel=1e-12)
        assert abs(value - (E - 1) / 2) <= 0.01

    @given(
        c=st.floats(min_value=-100, max_value=100, allow_nan=False),
        n=st.integers(min_value=1, max_value=400),
    )
    @settings(max_examples=60)
    def test_constant_sequence_closed_form(self, c, n):
        value = weighted_cesaro(CesaroInput([c] * n, c))
        expected = c * (n + 1) / (2 * n)
        assert value == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_empty_terms_rejected(self):
        with pytest.raises(ValueError):
            CesaroInput([], 0.0)

    def test_non_finite_terms_rejected(self):
        with pytest.raises(ValueError):
            weighted_cesaro(CesaroInput([1.0, math.inf], 1.0))


class TestConvergenceTable:
    def test_single_order_one(self):
        rows = convergence_table(EXP, 1.0, [1])
        assert len(rows) == 1
        assert rows[0].normalized == pytest.approx(E, abs=1e-12)

    def test_errors_strictly_decreasing_exp(self):
        rows = convergence_table(EXP, 1.0, [100, 200, 400])
        for row in rows:
            spec = SampledMatrixSpec(EXP, row.order)
            assert row.raw_norm_power == pytest.approx(
                naive_norm_power(spec, 1.0), rel=1e-12
            )
        errors = [row.abs_error for row in rows]
        assert errors[0] > errors[1] > errors[2]

    def test_errors_strictly_decreasing_lngamma(self):
        rows = convergence_table(LNGAMMA, 1.0, [64, 128, 256])
        assert rows[0].predicted_limit == pytest.approx(
            0.5 * math.log(2 * math.pi), abs=1e-9
        )
        errors = [row.abs_error for row in rows]
        assert errors[0] > errors[1] > errors[2]

    def test_rows_keep_input_order_and_share_prediction(self):
        rows = convergence_table(EXP, 2.0, [3, 5, 9])
        assert [row.order for row in rows] == [3, 5, 9]
        assert len({row.predicted_limit for row in rows}) == 1

    def test_non_ascending_orders_rejected(self):
        with pytest.raises(ValueError):
            convergence_table(EXP, 1.0, [10, 10, 20])
        with pytest.raises(ValueError):
            convergence_table(EXP, 1.0, [])
