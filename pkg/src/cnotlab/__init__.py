"""Mixed-state quantum computation on small systems, centered on the
controlled-NOT gate: density-operator algebra, the holistic decomposition
rho = rho_a (x) rho_b + M(rho), truth-value readout with product and
Lukasiewicz connectives, and the classification of product inputs the
gate keeps factorizable.
"""

from . import errors
from .analysis import (
    CnotReport,
    PreservationFamily,
    PreservationVerdict,
    classify_preservation,
    cnot_report,
    residual_entries,
    werner,
)
from .channels import (
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
from .fuzzy import clamp_unit, cnot_polynomial, luk_neg, luk_sum, product
from .jsonio import (
    dumps_matrix,
    load_matrix,
    loads_matrix,
    matrix_from_dict,
    matrix_to_dict,
)
from .linalg import (
    DEFAULT_TOL,
    adjoint,
    hermitian_eigenvalues,
    is_hermitian,
    kron,
    matmul,
    max_abs_diff,
    partial_trace,
    trace,
)
from .pauli import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    BlochVector,
    bloch_vector,
    from_bloch,
    generalized_paulis,
)
from .states import (
    FactorizationReport,
    holistic_from_coefficients,
    holistic_term,
    is_density,
    is_factorizable,
    m_coefficients,
    random_density,
    reduced_states,
    require_density,
)
from .verify import (
    RunConfig,
    SuiteResult,
    format_report,
    run_verification,
    sample_control_projector_pair,
    sample_diagonal_half_pair,
    sample_outside_families,
    sample_plus_minus_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BlochVector",
    "CnotReport",
    "DEFAULT_TOL",
    "FactorizationReport",
    "KrausChannel",
    "P0",
    "P1",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "PreservationFamily",
    "PreservationVerdict",
    "RunConfig",
    "SuiteResult",
    "adjoint",
    "bloch_vector",
    "clamp_unit",
    "classify_preservation",
    "cnot_channel",
    "cnot_matrix",
    "cnot_polynomial",
    "cnot_report",
    "dumps_matrix",
    "errors",
    "format_report",
    "from_bloch",
    "generalized_paulis",
    "hermitian_eigenvalues",
    "holistic_from_coefficients",
    "holistic_term",
    "is_density",
    "is_factorizable",
    "is_hermitian",
    "kron",
    "lift_unitary",
    "load_matrix",
    "loads_matrix",
    "luk_neg",
    "luk_sum",
    "m_coefficients",
    "matmul",
    "matrix_from_dict",
    "matrix_to_dict",
    "max_abs_diff",
    "partial_trace",
    "probability",
    "product",
    "random_density",
    "reduced_states",
    "require_density",
    "residual_entries",
    "run_verification",
    "sample_control_projector_pair",
    "sample_diagonal_half_pair",
    "sample_outside_families",
    "sample_plus_minus_pair",
    "trace",
    "truth_projector",
    "validate_kraus",
    "werner",
]
