import numpy as np
import pytest

from cnotlab.errors import NotDensity, NotSquare
from cnotlab.linalg import kron, max_abs_diff, partial_trace, trace
from cnotlab.states import (
    holistic_from_coefficients,
    holistic_term,
    is_density,
    is_factorizable,
    m_coefficients,
    random_density,
    reduced_states,
    require_density,
)
from cnotlab.analysis import werner


def test_is_density_accepts_random_states():
    rng = np.random.default_rng(41)
    for n in (2, 3, 4):
        for _ in range(20):
            assert is_density(random_density(rng, n))


def test_is_density_rejects_each_failed_invariant():
    assert not is_density(np.eye(2))                      # trace 2
    assert not is_density(np.diag([1.5, -0.5]))           # negative eigenvalue
    assert not is_density(np.array([[0.5, 1], [0, 0.5]])) # not Hermitian
    with pytest.raises(NotSquare):
        is_density(np.ones((2, 3)))


def test_require_density_diagnostics():
    with pytest.raises(NotDensity, match="Hermitian"):
        require_density(np.array([[0.5, 1], [0, 0.5]]))
    with pytest.raises(NotDensity, match="trace"):
        require_density(np.eye(2))
    with pytest.raises(NotDensity, match="positive"):
        require_density(np.diag([1.5, -0.5]))


def test_random_density_is_reproducible():
    a = random_density(np.random.default_rng(5), 4)
    b = random_density(np.random.default_rng(5), 4)
    assert (a == b).all()
    c = random_density(np.random.default_rng(6), 4)
    assert max_abs_diff(a, c) > 1e-3


def test_reduced_states_of_products():
    rng = np.random.default_rng(42)
    a = random_density(rng, 2)
    b = random_density(rng, 3)
    ra, rb = reduced_states(kron(a, b), 2, 3)
    np.testing.assert_allclose(ra, a, atol=1e-12)
    np.testing.assert_allclose(rb, b, atol=1e-12)


def test_reduced_states_of_werner_are_maximally_mixed():
    for alpha in (0.0, 0.3, 0.7, 1.0):
        ra, rb = reduced_states(werner(alpha), 2, 2)
        np.testing.assert_allclose(ra, np.eye(2) / 2, atol=1e-15)
        np.testing.assert_allclose(rb, np.eye(2) / 2, atol=1e-15)


def test_holistic_term_vanishes_on_products():
    rng = np.random.default_rng(43)
    a = random_density(rng, 2)
    b = random_density(rng, 2)
    assert np.abs(holistic_term(kron(a, b), 2, 2)).max() <= 1e-14


def test_holistic_term_structure():
    """Traceless, both marginals vanish, and the split reassembles the state."""
    rng = np.random.default_rng(44)
    for _ in range(50):
        rho = random_density(rng, 4)
        m = holistic_term(rho, 2, 2)
        assert abs(trace(m)) <= 1e-12
        assert np.abs(partial_trace(m, 2, 2, keep="A")).max() <= 1e-12
        assert np.abs(partial_trace(m, 2, 2, keep="B")).max() <= 1e-12
        ra, rb = reduced_states(rho, 2, 2)
        np.testing.assert_allclose(kron(ra, rb) + m, rho, atol=1e-14)


def test_m_coefficients_on_werner():
    """tr(rho_w [s_i (x) s_j]) has the hand-computed diagonal (-a, -a, -a)."""
    coeffs = m_coefficients(werner(0.6), 2, 2)
    np.testing.assert_allclose(coeffs, np.diag([-0.6, -0.6, -0.6]), atol=1e-12)


def test_coefficient_route_matches_direct_route():
    rng = np.random.default_rng(45)
    for _ in range(50):
        rho = random_density(rng, 4)
        np.testing.assert_allclose(
            holistic_from_coefficients(rho, 2, 2),
            holistic_term(rho, 2, 2),
            atol=1e-12,
        )


def test_coefficient_route_generalizes_beyond_qubits():
    rng = np.random.default_rng(46)
    rho = random_density(rng, 6)
    np.testing.assert_allclose(
        holistic_from_coefficients(rho, 2, 3),
        holistic_term(rho, 2, 3),
        atol=1e-12,
    )


def test_is_factorizable_verdicts():
    rng = np.random.default_rng(47)
    a = random_density(rng, 2)
    b = random_density(rng, 2)
    rep = is_factorizable(kron(a, b), 2, 2)
    assert rep.factorizable
    assert rep.residual_norm <= 1e-14
    np.testing.assert_allclose(rep.rho_a, a, atol=1e-12)
    np.testing.assert_allclose(rep.rho_b, b, atol=1e-12)

    rep = is_factorizable(werner(1.0), 2, 2)
    assert not rep.factorizable
    assert rep.residual_norm == pytest.approx(0.5, abs=1e-15)

    assert is_factorizable(werner(0.0), 2, 2).factorizable


def test_factorization_report_dict():
    rep = is_factorizable(werner(0.0), 2, 2)
    d = rep.to_dict()
    assert set(d) == {"rho_a", "rho_b", "holistic", "residual_norm", "factorizable"}
    assert d["factorizable"] is True
    assert d["rho_a"]["rows"] == 2
