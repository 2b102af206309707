"""Quantum operations in Kraus form and the truth-value readout.

A channel is a finite family of Kraus operators A_i with
sum_i A_i^H A_i = I, acting as rho -> sum_i A_i rho A_i^H.  Unitary
dynamics is the single-operator case.  The probability that a register
reads "true" is tr(P1 rho) for the truth projector P1 on the last qubit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import (
    DimensionMismatch,
    IncompleteKraus,
    InvalidDimension,
    NotQubitDimension,
    NotUnitary,
    OutOfRange,
    ShapeMismatch,
)
from .jsonio import matrix_from_dict, matrix_to_dict
from .linalg import DEFAULT_TOL, as_matrix, kron

P0 = np.array([[1, 0], [0, 0]], dtype=complex)
P1 = np.array([[0, 0], [0, 1]], dtype=complex)


@dataclass(frozen=True)
class KrausChannel:
    """A completely positive trace-preserving map, as validated Kraus operators."""

    operators: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]

    def apply(self, rho) -> np.ndarray:
        """sum_i A_i rho A_i^H."""
        rho = as_matrix(rho)
        n = self.dim
        if rho.shape != (n, n):
            raise DimensionMismatch(
                f"channel acts on {n}x{n} matrices, got {rho.shape}"
            )
        out = np.zeros((n, n), dtype=complex)
        for a in self.operators:
            out += a @ rho @ a.conj().T
        return out

    def to_dict(self) -> dict:
        return {"kraus": [matrix_to_dict(a) for a in self.operators]}

    @classmethod
    def from_dict(cls, obj, tol: float = DEFAULT_TOL) -> "KrausChannel":
        return validate_kraus([matrix_from_dict(m) for m in obj["kraus"]], tol=tol)


def validate_kraus(operators, tol: float = DEFAULT_TOL) -> KrausChannel:
    """Check shapes and the completeness sum, then wrap into a channel."""
    ops = tuple(as_matrix(a) for a in operators)
    if not ops:
        raise ShapeMismatch("a channel needs at least one Kraus operator")
    n = ops[0].shape[0]
    for a in ops:
        if a.shape != (n, n):
            raise ShapeMismatch(
                f"Kraus operators must all be {n}x{n}, got {a.shape}"
            )
    total = sum(a.conj().T @ a for a in ops)
    dev = float(np.abs(total - np.eye(n)).max())
    if dev > tol:
        raise IncompleteKraus(
            f"sum of A_i^H A_i deviates from the identity by {dev:.3e}"
        )
    return KrausChannel(ops)


def lift_unitary(u, tol: float = DEFAULT_TOL) -> KrausChannel:
    """The channel rho -> U rho U^H of a unitary U."""
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise NotUnitary(f"unitary must be square, got {u.shape}")
    dev = float(np.abs(u.conj().T @ u - np.eye(u.shape[0])).max())
    if dev > tol:
        raise NotUnitary(f"U^H U deviates from the identity by {dev:.3e}")
    return KrausChannel((u,))


def cnot_matrix() -> np.ndarray:
    """The two-qubit controlled-NOT in the computational basis.

    The first factor controls, the second is the target: |10> and |11>
    swap, |00> and |01> stay put.
    """
    return np.array(
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ],
        dtype=complex,
    )


def cnot_channel() -> KrausChannel:
    return lift_unitary(cnot_matrix())


def truth_projector(n: int) -> np.ndarray:
    """P1 on the last of ``n`` qubits: I (x) ... (x) I (x) P1."""
    if n < 1:
        raise InvalidDimension(f"need at least one qubit, got n={n}")
    factors = [np.eye(2, dtype=complex)] * (n - 1) + [P1]
    return reduce(kron, factors)


def probability(rho, tol: float = DEFAULT_TOL) -> float:
    """tr(P1 rho): the probability that the last qubit of ``rho`` reads 1.

    The side of ``rho`` must be a power of two.  Rounding may push the
    trace slightly outside [0, 1]; overshoot up to ``tol`` is snapped
    back, anything larger raises :class:`OutOfRange`.
    """
    rho = as_matrix(rho)
    d = rho.shape[0]
    if rho.shape != (d, d) or d < 2 or d & (d - 1):
        raise NotQubitDimension(f"matrix side must be a power of two >= 2, got {rho.shape}")
    n = d.bit_length() - 1
    p = float(np.trace(truth_projector(n) @ rho).real)
    if p < -tol or p > 1.0 + tol:
        raise OutOfRange(f"tr(P1 rho) = {p!r} lies outside [0, 1] beyond tol")
    return min(max(p, 0.0), 1.0)
