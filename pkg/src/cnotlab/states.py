"""Density-operator validation, reduced states, and the holistic decomposition.

Any bipartite state splits as

    rho = rho_a (x) rho_b + M(rho)

where rho_a, rho_b are the reduced states of the two factors and the
holistic term M(rho) carries all correlations.  M vanishes exactly on
product states, is traceless, and both of its partial traces vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonRealCoefficient, NotDensity, NotSquare
from .jsonio import matrix_to_dict
from .linalg import (
    DEFAULT_TOL,
    as_matrix,
    kron,
    max_abs_diff,
    partial_trace,
    trace,
)
from .pauli import generalized_paulis


def is_density(a, tol: float = DEFAULT_TOL) -> bool:
    """True when ``a`` is Hermitian with unit trace and no eigenvalue below -tol."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"density check needs a square matrix, got {a.shape}")
    if float(np.abs(a - a.conj().T).max()) > tol:
        return False
    if abs(np.trace(a) - 1.0) > tol:
        return False
    return float(np.linalg.eigvalsh(a).min()) >= -tol


def require_density(a, tol: float = DEFAULT_TOL, name: str = "state") -> np.ndarray:
    """Return ``a`` as a complex ndarray or raise NotDensity naming the failed invariant."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"{name} must be square, got {a.shape}")
    dev = float(np.abs(a - a.conj().T).max())
    if dev > tol:
        raise NotDensity(f"{name} is not Hermitian: max |a - a^H| = {dev:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > tol:
        raise NotDensity(f"{name} has trace {tr.real:.12g}{tr.imag:+.3e}j, expected 1")
    lo = float(np.linalg.eigvalsh(a).min())
    if lo < -tol:
        raise NotDensity(f"{name} is not positive semidefinite: min eigenvalue {lo:.3e}")
    return a


def random_density(rng: np.random.Generator, n: int) -> np.ndarray:
    """Draw a random n x n density operator.

    A Ginibre matrix G with independent standard-normal real and imaginary
    parts gives G G^H, positive semidefinite by construction; normalizing
    its trace yields a full-rank state almost surely.
    """
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = g @ g.conj().T
    return h / np.trace(h).real


def reduced_states(rho, m: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Both reduced states (rho_a, rho_b) of a state on an (m*k)-dimensional space."""
    rho = as_matrix(rho)
    return partial_trace(rho, m, k, keep="A"), partial_trace(rho, m, k, keep="B")


def holistic_term(rho, m: int, k: int) -> np.ndarray:
    """M(rho) = rho - rho_a (x) rho_b, the part no product state accounts for."""
    rho = as_matrix(rho)
    rho_a, rho_b = reduced_states(rho, m, k)
    return rho - kron(rho_a, rho_b)


def m_coefficients(rho, m: int, k: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coordinates of the holistic term in the product Pauli basis.

    Entry (j, l) is tr(rho [s_j (x) t_l]) - tr(rho [s_j (x) I]) tr(rho [I (x) t_l]),
    with s ranging over the dimension-m basis and t over the dimension-k one.
    This route never forms M(rho) itself, which makes it an independent
    cross-check of :func:`holistic_term`: reassembling with
    :func:`holistic_from_coefficients` must reproduce it.
    """
    rho = as_matrix(rho)
    basis_a = generalized_paulis(m)
    basis_b = generalized_paulis(k)
    eye_a = np.eye(m, dtype=complex)
    eye_b = np.eye(k, dtype=complex)
    s = [trace(rho @ kron(sa, eye_b)) for sa in basis_a]
    t = [trace(rho @ kron(eye_a, tb)) for tb in basis_b]
    out = np.empty((m * m - 1, k * k - 1), dtype=float)
    for j, sa in enumerate(basis_a):
        for l, tb in enumerate(basis_b):
            c = trace(rho @ kron(sa, tb)) - s[j] * t[l]
            if abs(c.imag) > tol:
                raise NonRealCoefficient(
                    f"coefficient ({j}, {l}) has imaginary part {c.imag:.3e}"
                )
            out[j, l] = c.real
    return out


def holistic_from_coefficients(rho, m: int, k: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Reassemble M(rho) = (1/4) sum_jl M_jl (s_j (x) t_l) from its coordinates.

    The 1/4 is the product normalization tr((s (x) t)^2) = 4, independent
    of m and k.
    """
    coeffs = m_coefficients(rho, m, k, tol=tol)
    basis_a = generalized_paulis(m)
    basis_b = generalized_paulis(k)
    out = np.zeros((m * k, m * k), dtype=complex)
    for j, sa in enumerate(basis_a):
        for l, tb in enumerate(basis_b):
            out += 0.25 * coeffs[j, l] * kron(sa, tb)
    return out


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of testing rho against the product of its reduced states."""

    rho_a: np.ndarray
    rho_b: np.ndarray
    holistic: np.ndarray
    residual_norm: float
    factorizable: bool

    def to_dict(self) -> dict:
        return {
            "rho_a": matrix_to_dict(self.rho_a),
            "rho_b": matrix_to_dict(self.rho_b),
            "holistic": matrix_to_dict(self.holistic),
            "residual_norm": self.residual_norm,
            "factorizable": self.factorizable,
        }


def is_factorizable(rho, m: int, k: int, tol: float = DEFAULT_TOL) -> FactorizationReport:
    """Decide whether rho equals the product of its own reduced states.

    The residual norm is the largest entrywise modulus of the holistic
    term; ``factorizable`` is true when it does not exceed ``tol``.
    """
    rho = as_matrix(rho)
    rho_a, rho_b = reduced_states(rho, m, k)
    holistic = rho - kron(rho_a, rho_b)
    residual = float(np.abs(holistic).max())
    return FactorizationReport(rho_a, rho_b, holistic, residual, residual <= tol)
