"""Generalized Pauli bases and the Bloch-vector codec.

For an n-dimensional system the traceless Hermitian basis consists of
three families built on the computational basis kets |1>, ..., |n>
(1-based below to match the usual convention):

* symmetric:      sigma_1[k,j] = |j><k| + |k><j|            for k < j,
* antisymmetric:  sigma_2[k,j] = i(|j><k| - |k><j|)         for k < j,
* diagonal:       sigma_3[k]   = sqrt(2/(k(k+1))) *
                  (sum_{i<=k} |i><i| - k |k+1><k+1|)        for k < n.

That is n^2 - 1 matrices, pairwise orthogonal with tr(s_i s_j) = 2 d_ij.
The canonical order is the whole sigma_1 family first (lexicographic in
(k, j), k major), then sigma_2 in the same order, then sigma_3 by k.
For n = 2 this is exactly (X, Y, Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimension, NonRealCoefficient
from .linalg import DEFAULT_TOL, as_matrix, trace

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def generalized_paulis(n: int) -> list[np.ndarray]:
    """The n^2 - 1 basis matrices for dimension ``n``, in canonical order."""
    if n < 2:
        raise InvalidDimension(f"basis needs dimension >= 2, got {n}")
    basis: list[np.ndarray] = []
    for k in range(n):
        for j in range(k + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[j, k] = 1.0
            m[k, j] = 1.0
            basis.append(m)
    for k in range(n):
        for j in range(k + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[j, k] = 1.0j
            m[k, j] = -1.0j
            basis.append(m)
    for k in range(1, n):
        d = np.zeros(n)
        d[:k] = 1.0
        d[k] = -float(k)
        basis.append(math.sqrt(2.0 / (k * (k + 1))) * np.diag(d).astype(complex))
    return basis


@dataclass(frozen=True)
class BlochVector:
    """Real coordinates of a state in the generalized Pauli basis."""

    dim: int
    coeffs: np.ndarray

    def to_dict(self) -> dict:
        return {"dim": self.dim, "coeffs": [float(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, obj) -> "BlochVector":
        dim = int(obj["dim"])
        coeffs = np.asarray([float(c) for c in obj["coeffs"]], dtype=float)
        if coeffs.shape != (dim * dim - 1,):
            raise InvalidDimension(
                f"dimension {dim} needs {dim * dim - 1} coefficients, got {coeffs.size}"
            )
        return cls(dim, coeffs)


def bloch_vector(rho, tol: float = DEFAULT_TOL) -> BlochVector:
    """Coordinates s_j = tr(rho sigma_j) of a state.

    Each coordinate of a Hermitian input is real; a coefficient with
    imaginary part above ``tol`` raises :class:`NonRealCoefficient`.
    """
    rho = as_matrix(rho)
    n = rho.shape[0]
    if rho.shape != (n, n) or n < 2:
        raise InvalidDimension(f"expected a square matrix of side >= 2, got {rho.shape}")
    coeffs = np.empty(n * n - 1, dtype=float)
    for j, sigma in enumerate(generalized_paulis(n)):
        s = trace(rho @ sigma)
        if abs(s.imag) > tol:
            raise NonRealCoefficient(
                f"coefficient {j} has imaginary part {s.imag:.3e}; input not Hermitian?"
            )
        coeffs[j] = s.real
    return BlochVector(n, coeffs)


def from_bloch(v: BlochVector) -> np.ndarray:
    """Reassemble (1/n) I + (1/2) sum_j s_j sigma_j from coordinates.

    Inverts :func:`bloch_vector` for every valid state.  Note the output
    is Hermitian with unit trace for any real coordinates, but not
    necessarily positive; feed it to :func:`cnotlab.states.is_density`
    if positivity matters.
    """
    n = v.dim
    coeffs = np.asarray(v.coeffs, dtype=float)
    if n < 2:
        raise InvalidDimension(f"dimension must be >= 2, got {n}")
    if coeffs.shape != (n * n - 1,):
        raise InvalidDimension(
            f"dimension {n} needs {n * n - 1} coefficients, got {coeffs.shape}"
        )
    out = np.eye(n, dtype=complex) / n
    for s, sigma in zip(coeffs, generalized_paulis(n)):
        out += 0.5 * s * sigma
    return out
