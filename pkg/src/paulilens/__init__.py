"""Spectral diagnostics of quantum operators and circuits.

Influence and circuit sensitivity, matchgate (Gaussian) sensitivity,
magic entropy and magic power, coherence measures, averaged OTOC
identities, discrete Wigner transforms, and circuit-cost lower-bound
audits on explicit 2-local gate paths.
"""

from .coherence import (
    DensityOperator,
    cohering_power_search,
    coherence_rate,
    coherence_rate_bound_check,
    d_max,
    density_operator,
    rel_entropy_coherence,
)
from .errors import (
    ConvergenceError,
    DimensionCapError,
    NormalizationError,
    PauliLensError,
    ShapeError,
    SingularStateError,
)
from .gaussian import (
    GammaBasis,
    carlen_lieb_apply,
    gamma_basis,
    gamma_monomial,
    gamma_transition_matrix,
    gaussian_circuit_sensitivity,
    gaussian_influence,
    gaussian_spectrum,
    is_matchgate,
    quadratic_hamiltonian,
)
from .magic import (
    SearchResult,
    is_clifford,
    magic_entropy,
    magic_power_search,
    magic_rate,
    magic_rate_bound,
)
from .ops import (
    Operator,
    avg_renyi2_entanglement,
    dimension_cap,
    embed,
    hs_inner,
    identity,
    is_hermitian,
    is_unitary,
    l2_norm,
    lp_norm,
    partial_trace,
    pauli_op,
    set_dimension_cap,
)
from .otoc import (
    CorrelatorReport,
    avg_4pt_weight_m,
    avg_4pt_weight_m_oracle,
    avg_8pt,
    avg_8pt_oracle,
    avg_otoc_weight1,
    avg_otoc_weight1_oracle,
    eight_point_raw_oracle,
    krawtchouk,
    krawtchouk_second_form,
    otoc,
)
from .paths import (
    CertificateReport,
    CircuitPath,
    classify_gate,
    compile_unitary,
    complexity_certificate,
    make_path,
    path_cost,
    reaudit_certificate,
    unitary_hash,
)
from .sensitivity import (
    SensitivityReport,
    TransitionMatrix,
    circuit_sensitivity,
    influence_delta,
    influence_rate,
    influence_rate_bound_check,
    is_stable,
    operator_support,
    transition_matrix,
)
from .spectrum import (
    BooleanFunction,
    PauliSpectrum,
    boolean_embed,
    boolean_entropy,
    boolean_influence,
    depolarizing_sensitivity_check,
    fourier_entropy,
    fourier_min_entropy,
    fourier_renyi_entropy,
    influence_local,
    influence_total,
    pauli_spectrum,
    qfei_gap,
    weight_distribution,
)
from .wigner import (
    WignerFunction,
    convolve,
    hermitian_pauli_coeffs,
    symplectic_ft,
    wigner_function,
    wigner_to_operator,
)

__version__ = "0.1.0"
