import numpy as np
import pytest

from cnotlab.channels import (
    P0,
    P1,
    KrausChannel,
    cnot_channel,
    cnot_matrix,
    lift_unitary,
    probability,
    truth_projector,
    validate_kraus,
)
from cnotlab.errors import (
    DimensionMismatch,
    IncompleteKraus,
    InvalidDimension,
    NotQubitDimension,
    NotUnitary,
    OutOfRange,
    ShapeMismatch,
)
from cnotlab.linalg import kron
from cnotlab.pauli import PAULI_X
from cnotlab.states import is_density, random_density


def _ket(bits):
    v = np.zeros((2 ** len(bits), 1), dtype=complex)
    v[int(bits, 2), 0] = 1.0
    return v


def test_validate_kraus_accepts_bit_flip_channel():
    p = 0.3
    ch = validate_kraus([np.sqrt(1 - p) * np.eye(2), np.sqrt(p) * PAULI_X])
    out = ch.apply(P0)
    np.testing.assert_allclose(out, np.diag([1 - p, p]), atol=1e-15)


def test_validate_kraus_rejections():
    with pytest.raises(IncompleteKraus):
        validate_kraus([0.5 * PAULI_X])
    with pytest.raises(ShapeMismatch):
        validate_kraus([np.eye(2), np.eye(3)])
    with pytest.raises(ShapeMismatch):
        validate_kraus([])


def test_channel_preserves_density():
    rng = np.random.default_rng(51)
    p = 0.25
    ch = validate_kraus([np.sqrt(1 - p) * np.eye(2), np.sqrt(p) * PAULI_X])
    for _ in range(20):
        out = ch.apply(random_density(rng, 2))
        assert is_density(out)


def test_apply_rejects_wrong_size():
    with pytest.raises(DimensionMismatch):
        cnot_channel().apply(np.eye(2) / 2)


def test_lift_unitary():
    ch = lift_unitary(PAULI_X)
    np.testing.assert_allclose(ch.apply(P0), P1, atol=1e-15)
    with pytest.raises(NotUnitary):
        lift_unitary(np.array([[1, 1], [0, 1]]))
    with pytest.raises(NotUnitary):
        lift_unitary(np.ones((2, 3)))


def test_cnot_matrix_basis_action():
    c = cnot_matrix()
    np.testing.assert_allclose(c @ _ket("00"), _ket("00"))
    np.testing.assert_allclose(c @ _ket("01"), _ket("01"))
    np.testing.assert_allclose(c @ _ket("10"), _ket("11"))
    np.testing.assert_allclose(c @ _ket("11"), _ket("10"))
    # involution and unitarity
    np.testing.assert_allclose(c @ c, np.eye(4), atol=1e-15)


def test_cnot_channel_on_random_states():
    rng = np.random.default_rng(52)
    ch = cnot_channel()
    for _ in range(20):
        rho = random_density(rng, 4)
        out = ch.apply(rho)
        assert is_density(out)
        assert np.trace(out).real == pytest.approx(1.0, abs=1e-12)


def test_truth_projector_patterns():
    np.testing.assert_allclose(truth_projector(1), P1)
    np.testing.assert_allclose(truth_projector(2), np.diag([0, 1, 0, 1]))
    p3 = truth_projector(3)
    np.testing.assert_allclose(np.diag(p3), [0, 1, 0, 1, 0, 1, 0, 1])
    np.testing.assert_allclose(p3 @ p3, p3, atol=1e-15)
    np.testing.assert_allclose(truth_projector(2), kron(np.eye(2), P1))
    with pytest.raises(InvalidDimension):
        truth_projector(0)


def test_probability_known_values():
    assert probability(P1) == pytest.approx(1.0)
    assert probability(P0) == pytest.approx(0.0)
    assert probability(np.eye(4) / 4) == pytest.approx(0.5)


def test_probability_is_sum_of_odd_diagonal_entries():
    rng = np.random.default_rng(53)
    for n in (2, 4, 8):
        rho = random_density(rng, n)
        want = rho.diagonal().real[1::2].sum()
        assert probability(rho) == pytest.approx(want, abs=1e-12)


def test_probability_rejects_non_qubit_dimension():
    with pytest.raises(NotQubitDimension):
        probability(np.eye(3) / 3)
    with pytest.raises(NotQubitDimension):
        probability(np.eye(6) / 6)


def test_probability_clamp_policy():
    # rounding-sized overshoot is snapped onto [0, 1]
    assert probability(np.diag([1.0 + 1e-12, -1e-12])) == 0.0
    assert probability(np.diag([-1e-12, 1.0 + 1e-12])) == 1.0
    # anything larger is an error
    with pytest.raises(OutOfRange):
        probability(np.diag([2.0, -1.0]))


def test_kraus_channel_dict_round_trip():
    ch = cnot_channel()
    d = ch.to_dict()
    assert list(d) == ["kraus"]
    back = KrausChannel.from_dict(d)
    assert len(back.operators) == 1
    np.testing.assert_allclose(back.operators[0], cnot_matrix())
