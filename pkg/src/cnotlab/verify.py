"""Seeded randomized verification campaigns for the library's core identities.

Each suite draws its own substream from the configured seed (PCG64 via
``numpy.random.default_rng((seed, suite_index))``), so runs are
reproducible and suites stay independent of each other's sample counts.
Failures are counted and reported, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import (
    PreservationFamily,
    classify_preservation,
    cnot_report,
    residual_entries,
)
from .channels import P0, P1, cnot_channel, probability, truth_projector
from .errors import OutOfRange
from .fuzzy import cnot_polynomial
from .linalg import DEFAULT_TOL, kron, max_abs_diff, partial_trace, trace
from .states import (
    holistic_from_coefficients,
    holistic_term,
    random_density,
    reduced_states,
)

#: Minimum residual norm expected from inputs outside every preserving family.
COMPLETENESS_MARGIN = 1e-6


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one verification run."""

    seed: int = 0
    samples: int = 1000
    tolerance: float = DEFAULT_TOL
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise OutOfRange(f"samples must be >= 1, got {self.samples}")
        if not self.tolerance > 0.0:
            raise OutOfRange(f"tolerance must be positive, got {self.tolerance!r}")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    samples: int
    failures: int
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def sample_diagonal_half_pair(rng: np.random.Generator):
    """Diagonal control, target with half diagonal and real off-diagonal."""
    a1 = rng.uniform(0.0, 1.0)
    rho = np.diag([a1, 1.0 - a1]).astype(complex)
    b = rng.uniform(-0.5, 0.5)
    sigma = np.array([[0.5, b], [b, 0.5]], dtype=complex)
    return rho, sigma


def sample_control_projector_pair(rng: np.random.Generator):
    """Control P0 or P1, arbitrary target."""
    rho = (P0 if rng.integers(2) == 0 else P1).copy()
    return rho, random_density(rng, 2)


def sample_plus_minus_pair(rng: np.random.Generator):
    """Arbitrary control, target |+><+| or |-><-|."""
    sign = 1.0 if rng.integers(2) == 0 else -1.0
    sigma = 0.5 * np.array([[1.0, sign], [sign, 1.0]], dtype=complex)
    return random_density(rng, 2), sigma


def sample_outside_families(rng: np.random.Generator):
    """A product input bounded away from every preserving family.

    Margins: a1 in (0.1, 0.9), |a| > 0.1, and |b1 - 1/2| > 0.1, which
    force the top-left residual entry a1 (1 - a1)(2 b1 - 1) above 0.018
    in modulus.  Off-diagonals stay inside the positivity disc.
    """
    a1 = rng.uniform(0.1, 0.9)
    r = rng.uniform(0.1, math.sqrt(a1 * (1.0 - a1)))
    phase = rng.uniform(0.0, 2.0 * math.pi)
    a = r * complex(math.cos(phase), math.sin(phase))
    rho = np.array([[a1, a], [a.conjugate(), 1.0 - a1]], dtype=complex)

    u = rng.uniform(0.0, 0.8)
    b1 = u if u < 0.4 else u + 0.2
    s = rng.uniform(0.0, math.sqrt(b1 * (1.0 - b1)))
    phase = rng.uniform(0.0, 2.0 * math.pi)
    b = s * complex(math.cos(phase), math.sin(phase))
    sigma = np.array([[b1, b], [b.conjugate(), 1.0 - b1]], dtype=complex)
    return rho, sigma


def _suite_fuzzy_identity(rng, samples, tol) -> SuiteResult:
    """Gate probability on products equals the connective polynomial."""
    ch = cnot_channel()
    failures, worst = 0, 0.0
    for _ in range(samples):
        rho = random_density(rng, 2)
        sigma = random_density(rng, 2)
        brute = probability(ch.apply(kron(rho, sigma)))
        poly = cnot_polynomial(probability(rho), probability(sigma))
        r = abs(brute - poly)
        worst = max(worst, r)
        failures += r > tol
    return SuiteResult("fuzzy-identity", samples, failures, worst)


def _suite_probability_closed_forms(rng, samples, tol) -> SuiteResult:
    """Closed forms for p_total, p_fuzzy, incidence against brute-force routes."""
    ch = cnot_channel()
    p1 = truth_projector(2)
    failures, worst = 0, 0.0
    for _ in range(samples):
        rho = random_density(rng, 4)
        rep = cnot_report(rho)
        out = ch.apply(rho)
        rho_a, rho_b = reduced_states(rho, 2, 2)
        brute_total = probability(out)
        brute_fuzzy = probability(ch.apply(kron(rho_a, rho_b)))
        brute_inc = trace(p1 @ ch.apply(holistic_term(rho, 2, 2))).real
        r = max(
            abs(rep.p_total - brute_total),
            abs(rep.p_fuzzy - brute_fuzzy),
            abs(rep.incidence - brute_inc),
        )
        worst = max(worst, r)
        failures += r > tol or abs(rep.incidence) > 0.5 + tol
    return SuiteResult("probability-closed-forms", samples, failures, worst)


def _suite_decomposition_identities(rng, samples, tol) -> SuiteResult:
    """M(rho) from block traces vs Pauli coordinates; trace and marginals vanish."""
    failures, worst = 0, 0.0
    for _ in range(samples):
        rho = random_density(rng, 4)
        m_direct = holistic_term(rho, 2, 2)
        m_pauli = holistic_from_coefficients(rho, 2, 2)
        r = max(
            max_abs_diff(m_direct, m_pauli),
            abs(trace(m_direct)),
            float(np.abs(partial_trace(m_direct, 2, 2, keep="A")).max()),
            float(np.abs(partial_trace(m_direct, 2, 2, keep="B")).max()),
        )
        worst = max(worst, r)
        failures += r > tol
    return SuiteResult("decomposition-identities", samples, failures, worst)


def _suite_residual_closed_forms(rng, samples, tol) -> SuiteResult:
    """Closed-form holistic term of gate outputs against the brute-force route."""
    ch = cnot_channel()
    failures, worst = 0, 0.0
    for _ in range(samples):
        rho = random_density(rng, 2)
        sigma = random_density(rng, 2)
        brute = holistic_term(ch.apply(kron(rho, sigma)), 2, 2)
        r = max_abs_diff(residual_entries(rho, sigma), brute)
        worst = max(worst, r)
        failures += r > tol
    return SuiteResult("residual-closed-forms", samples, failures, worst)


_FAMILY_SAMPLERS = (
    sample_control_projector_pair,
    sample_plus_minus_pair,
    sample_diagonal_half_pair,
)


def _suite_preservation_soundness(rng, samples, tol) -> SuiteResult:
    """Every family member keeps the gate output factorizable."""
    failures, worst = 0, 0.0
    for i in range(samples):
        rho, sigma = _FAMILY_SAMPLERS[i % len(_FAMILY_SAMPLERS)](rng)
        verdict = classify_preservation(rho, sigma, tol=tol)
        worst = max(worst, verdict.residual_norm)
        failures += (
            not verdict.preserved
            or verdict.family is PreservationFamily.NOT_PRESERVED
        )
    return SuiteResult("preservation-soundness", samples, failures, worst)


def _suite_preservation_completeness(rng, samples, tol) -> SuiteResult:
    """Inputs outside every family leave a residual the classifier must flag."""
    failures, worst = 0, 0.0
    for _ in range(samples):
        rho, sigma = sample_outside_families(rng)
        verdict = classify_preservation(rho, sigma, tol=tol)
        worst = max(worst, verdict.residual_norm)
        failures += verdict.preserved or verdict.residual_norm <= COMPLETENESS_MARGIN
    return SuiteResult("preservation-completeness", samples, failures, worst)


_SUITES = (
    _suite_fuzzy_identity,
    _suite_probability_closed_forms,
    _suite_decomposition_identities,
    _suite_residual_closed_forms,
    _suite_preservation_soundness,
    _suite_preservation_completeness,
)


def run_verification(config: RunConfig) -> list[SuiteResult]:
    """Run every suite with its own seeded substream; collect, never raise."""
    results = []
    for idx, suite in enumerate(_SUITES):
        rng = np.random.default_rng((config.seed, idx))
        results.append(suite(rng, config.samples, config.tolerance))
    return results


def format_report(results: list[SuiteResult]) -> str:
    """Fixed-width text report; byte-identical for identical configurations."""
    name_w = max(len(r.name) for r in results)
    lines = [f"{'suite':<{name_w}}  samples  failures  max-residual"]
    for r in results:
        lines.append(
            f"{r.name:<{name_w}}  {r.samples:7d}  {r.failures:8d}  {r.max_residual:12.3e}"
        )
    passed = sum(r.passed for r in results)
    status = "PASS" if passed == len(results) else "FAIL"
    lines.append(f"overall: {status} ({passed}/{len(results)} suites)")
    return "\n".join(lines) + "\n"
