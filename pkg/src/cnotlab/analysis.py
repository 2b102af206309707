"""Closed-form controlled-NOT analysis on two-qubit states.

Three related questions about the gate acting on a 4x4 state rho:

* what is the output truth probability, and how does it split into the
  fuzzy part carried by the product of the marginals plus the holistic
  incidence carried by M(rho) (:func:`cnot_report`);
* what does that look like on the Werner family (:func:`werner`);
* for a product input rho (x) sigma, when is the output again a product,
  and what is its holistic term when it is not (:func:`residual_entries`,
  :func:`classify_preservation`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channels import P0, P1, cnot_matrix
from .errors import DimensionMismatch, OutOfRange
from .linalg import DEFAULT_TOL, as_matrix, kron, max_abs_diff
from .states import is_factorizable


@dataclass(frozen=True)
class CnotReport:
    """Output probability of the gate, split into fuzzy and holistic parts."""

    p_total: float
    p_fuzzy: float
    incidence: float

    def to_dict(self) -> dict:
        return {
            "p_total": self.p_total,
            "p_fuzzy": self.p_fuzzy,
            "incidence": self.incidence,
        }


def cnot_report(rho) -> CnotReport:
    """Evaluate the three closed forms from the diagonal of ``rho``.

    With diagonal entries r11..r44,

        p_total   = r22 + r33
        p_fuzzy   = (r11 + r22)(r22 + r44) + (r11 + r33)(r33 + r44)
        incidence = 2 (r22 r33 - r11 r44)

    p_total is the truth probability of the gate output, p_fuzzy the value
    the connective polynomial assigns to the two marginals, and the
    incidence their difference, always in [-1/2, 1/2].
    """
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 state, got {rho.shape}")
    r11, r22, r33, r44 = (float(rho[i, i].real) for i in range(4))
    p_total = r22 + r33
    p_fuzzy = (r11 + r22) * (r22 + r44) + (r11 + r33) * (r33 + r44)
    incidence = 2.0 * (r22 * r33 - r11 * r44)
    return CnotReport(p_total, p_fuzzy, incidence)


def werner(alpha: float) -> np.ndarray:
    """The one-parameter two-qubit family with maximally mixed marginals.

    werner(0) is I/4; werner(1) is the projector onto the singlet-like
    Bell state with diagonal (0, 1/2, 1/2, 0).
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")
    return 0.25 * np.array(
        [
            [1 - alpha, 0, 0, 0],
            [0, 1 + alpha, -2 * alpha, 0],
            [0, -2 * alpha, 1 + alpha, 0],
            [0, 0, 0, 1 - alpha],
        ],
        dtype=complex,
    )


def _two_qubit_pair(rho, sigma) -> tuple[np.ndarray, np.ndarray]:
    rho, sigma = as_matrix(rho), as_matrix(sigma)
    if rho.shape != (2, 2) or sigma.shape != (2, 2):
        raise DimensionMismatch(
            f"expected two 2x2 states, got {rho.shape} and {sigma.shape}"
        )
    return rho, sigma


def residual_entries(rho, sigma) -> np.ndarray:
    """Holistic term of the gate output for the product input rho (x) sigma.

    Closed form in the parameters a1 = rho[0,0], a = rho[0,1],
    b1 = sigma[0,0], b = sigma[0,1].  The result is Hermitian with the
    diagonal pattern (x11, -x11, -x11, x11) where

        x11 = a1 (1 - a1) (2 b1 - 1),

    and vanishes exactly on the preserving families: a = 0 with b1 = 1/2
    and b real; a1 in {0, 1} with a = 0; or b = +-1/2 with b1 = 1/2.
    Must agree with the brute-force route (apply the gate, subtract the
    product of the marginals) to rounding; the test suite holds it to that.
    """
    rho, sigma = _two_qubit_pair(rho, sigma)
    a1 = float(rho[0, 0].real)
    a = complex(rho[0, 1])
    b1 = float(sigma[0, 0].real)
    b = complex(sigma[0, 1])
    br, bi = b.real, b.imag
    bc = b.conjugate()

    x11 = a1 * (1.0 - a1) * (2.0 * b1 - 1.0)
    x12 = 2.0j * a1 * (1.0 - a1) * bi
    x13 = -a * (bc + 2.0 * br * (a1 * (2.0 * b1 - 1.0) - b1))
    x14 = a * (b1 - 2.0 * br * (bc + 2.0j * a1 * bi))
    x23 = -a * (b1 - 1.0 + 2.0 * br * (b - 2.0j * a1 * bi))
    x24 = a * (bc - 2.0 * br * (a1 + b1 - 2.0 * a1 * b1))
    x34 = 2.0j * a1 * bi * (a1 - 1.0)

    m = np.empty((4, 4), dtype=complex)
    m[0] = (x11, x12, x13, x14)
    m[1] = (x12.conjugate(), -x11, x23, x24)
    m[2] = (x13.conjugate(), x23.conjugate(), -x11, x34)
    m[3] = (x14.conjugate(), x24.conjugate(), x34.conjugate(), x11)
    return m


class PreservationFamily(str, Enum):
    """Parameter families of product inputs whose gate output stays a product."""

    DIAGONAL_CONTROL_HALF_DIAG_TARGET = "DiagonalControlHalfDiagTarget"
    CONTROL_IS_P0 = "ControlIsP0"
    CONTROL_IS_P1 = "ControlIsP1"
    TARGET_IS_PLUS_MINUS = "TargetIsPlusMinus"
    NOT_PRESERVED = "NotPreserved"


@dataclass(frozen=True)
class PreservationVerdict:
    preserved: bool
    family: PreservationFamily
    residual_norm: float

    def to_dict(self) -> dict:
        return {
            "preserved": self.preserved,
            "family": self.family.value,
            "residual_norm": self.residual_norm,
        }


_PLUS = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)
_MINUS = 0.5 * np.array([[1, -1], [-1, 1]], dtype=complex)


def _matches_diagonal_half(rho: np.ndarray, sigma: np.ndarray, tol: float) -> bool:
    return (
        abs(rho[0, 1]) <= tol
        and abs(rho[1, 0]) <= tol
        and abs(sigma[0, 0] - 0.5) <= tol
        and abs(sigma[1, 1] - 0.5) <= tol
        and abs(sigma[0, 1].imag) <= tol
        and abs(sigma[1, 0].imag) <= tol
    )


def classify_preservation(rho, sigma, tol: float = DEFAULT_TOL) -> PreservationVerdict:
    """Does the gate send the product rho (x) sigma to another product?

    ``preserved`` comes from the direct route: apply the gate and measure
    the holistic term of the output; it is true iff the residual norm is
    within ``tol``.  The family label is informational.  When several
    parameter families overlap, the most specific one wins: control is a
    basis projector, then target is a |+>/|-> projector, then the
    diagonal-control case.
    """
    rho, sigma = _two_qubit_pair(rho, sigma)
    gate = cnot_matrix()
    out = gate @ kron(rho, sigma) @ gate.conj().T
    report = is_factorizable(out, 2, 2, tol=tol)

    family = PreservationFamily.NOT_PRESERVED
    if report.factorizable:
        if max_abs_diff(rho, P0) <= tol:
            family = PreservationFamily.CONTROL_IS_P0
        elif max_abs_diff(rho, P1) <= tol:
            family = PreservationFamily.CONTROL_IS_P1
        elif min(max_abs_diff(sigma, _PLUS), max_abs_diff(sigma, _MINUS)) <= tol:
            family = PreservationFamily.TARGET_IS_PLUS_MINUS
        elif _matches_diagonal_half(rho, sigma, tol):
            family = PreservationFamily.DIAGONAL_CONTROL_HALF_DIAG_TARGET
    return PreservationVerdict(report.factorizable, family, report.residual_norm)
