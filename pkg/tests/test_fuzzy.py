import numpy as np
import pytest

from cnotlab.errors import OutOfRange
from cnotlab.fuzzy import clamp_unit, cnot_polynomial, luk_neg, luk_sum, product


def test_connective_values():
    assert product(0.5, 0.5) == pytest.approx(0.25)
    assert luk_neg(0.25) == pytest.approx(0.75)
    assert luk_sum(0.2, 0.3) == pytest.approx(0.5)
    assert luk_sum(0.7, 0.6) == 1.0  # truncation
    assert luk_sum(1.0, 1.0) == 1.0


def test_clamp_window():
    assert clamp_unit(0.5) == 0.5
    assert clamp_unit(-5e-13) == 0.0
    assert clamp_unit(1.0 + 5e-13) == 1.0
    for bad in (-1e-3, 1.001, 2.0, float("nan")):
        with pytest.raises(OutOfRange):
            clamp_unit(bad)


def test_cnot_polynomial_truth_table():
    assert cnot_polynomial(0, 0) == 0.0
    assert cnot_polynomial(1, 1) == 0.0
    assert cnot_polynomial(1, 0) == 1.0
    assert cnot_polynomial(0, 1) == 1.0
    assert cnot_polynomial(0.5, 0.5) == pytest.approx(0.5)


def test_cnot_polynomial_matches_plain_expression():
    """The truncated sum never engages, so the polynomial form is exact."""
    rng = np.random.default_rng(61)
    for _ in range(500):
        x, y = rng.uniform(0, 1, size=2)
        direct = (1 - x) * y + (1 - y) * x
        assert direct <= 1.0
        assert cnot_polynomial(x, y) == pytest.approx(direct, abs=1e-15)
        assert cnot_polynomial(x, y) == pytest.approx(cnot_polynomial(y, x), abs=1e-15)


def test_connectives_reject_out_of_range_inputs():
    with pytest.raises(OutOfRange):
        product(1.5, 0.5)
    with pytest.raises(OutOfRange):
        luk_neg(-0.5)
    with pytest.raises(OutOfRange):
        cnot_polynomial(0.5, 7.0)
