"""Magic entropy, magic power, and the magic rate.

Magic entropy is an exact finite maximization of the quantum Fourier
entropy over conjugated weight-1 Paulis.  Magic power is a nonconvex sup
over all unit-norm operators; we report certified lower bounds (best
exactly re-evaluated objective) from a Pauli-basis scan plus gradient
ascent restarts, never claimed maxima.  For Clifford unitaries both
vanish identically and are returned exactly.
"""

from dataclasses import dataclass

import numpy as np

from .ascent import maximize_entropy_gap
from .entropies import entropy_bits
from .errors import ShapeError
from .ops import embed, is_hermitian, is_unitary, l2_norm, single_site_paulis
from .sensitivity import transition_matrix, weight_one_paulis
from .spectrum import matrix_to_coeffs, pauli_spectrum


def is_clifford(u, tol=1e-8, unitary_tol=1e-8):
    """True iff U maps every Pauli to a single Pauli (up to phase).

    Checked on the generating set {X_i, Z_i}: each conjugation must have
    one coefficient of unit modulus.
    """
    if not is_unitary(u, unitary_tol):
        raise ShapeError("is_clifford requires a unitary input")
    singles = single_site_paulis(u.d)
    x_code, z_code = 1, u.d  # codes of X and Z
    for site in range(u.n):
        for code in (x_code, z_code):
            p = embed(singles[code], [site], u.d, u.n).mat
            c = matrix_to_coeffs(u.mat @ p @ u.mat.conj().T, u.d, u.n)
            if np.max(np.abs(c) ** 2) < 1.0 - max(tol, 1e-10):
                return False
    return True


def magic_entropy(u, unitary_tol=1e-8):
    """M[U] = max over weight-1 Paulis P of H[U P U^dag] (exact finite max)."""
    if not is_unitary(u, unitary_tol):
        raise ShapeError("magic_entropy requires a unitary input")
    singles = single_site_paulis(u.d)
    best = 0.0
    for site in range(u.n):
        for code in range(1, u.d * u.d):
            p = embed(singles[code], [site], u.d, u.n).mat
            c = matrix_to_coeffs(u.mat @ p @ u.mat.conj().T, u.d, u.n)
            best = max(best, entropy_bits(np.abs(c) ** 2))
    return best


@dataclass(frozen=True)
class SearchResult:
    value: float
    witness: object
    restarts_used: int
    converged: bool
    exact: bool = False


def entropy_gap_at(t, coeffs):
    """|H[U O U^dag] - H[O]| for the operator with Pauli coefficients c."""
    c = np.asarray(coeffs, dtype=np.complex128)
    c = c / np.linalg.norm(c)
    q = np.abs(t @ c) ** 2
    p = np.abs(c) ** 2
    return abs(entropy_bits(q) - entropy_bits(p))


def magic_power_search(u, restarts=64, seed=0, threads=1, unitary_tol=1e-8):
    """Certified lower bound on the magic power max |H[U O U^dag] - H[O]|.

    The objective is expressed through the transition matrix as
    |H(|Tc|^2) - H(|c|^2)| over unit coefficient vectors.  All Pauli
    basis vectors are scanned exactly (which attains the analytic values
    for T-gate tensor powers); gradient ascent restarts refine the bound.
    Witnesses are post-projected onto their traceless part whenever that
    does not decrease the objective.
    """
    if not is_unitary(u, unitary_tol):
        raise ShapeError("magic_power_search requires a unitary input")
    if is_clifford(u):
        e0 = np.zeros((u.d * u.d) ** u.n, dtype=np.complex128)
        e0[0] = 1.0
        return SearchResult(0.0, e0, 0, True, True)
    t = transition_matrix(u, unitary_tol).mat
    res = maximize_entropy_gap(t, restarts=restarts, seed=seed, threads=threads)
    value, witness = res.value, res.witness
    if abs(witness[0]) > 1e-12 and np.linalg.norm(witness[1:]) > 1e-12:
        trless = witness.copy()
        trless[0] = 0.0
        val2 = entropy_gap_at(t, trless)
        if val2 >= value:
            value, witness = val2, trless / np.linalg.norm(trless)
    return SearchResult(value, witness, res.restarts_used, res.converged, res.from_vertex)


def magic_rate(h, o):
    """d/dt H[U_t O U_t^dag] at t = 0 for U_t = exp(-i t H).

    Exact derivative of the quantum Fourier entropy: with p_a(t) the
    spectral probabilities, R_M = -sum_a pdot_a log2 p_a (0 log 0 := 0).
    """
    if not is_hermitian(h, 1e-9):
        raise ShapeError("magic_rate requires a Hermitian generator")
    if abs(l2_norm(o) - 1.0) > 1e-6:
        raise ShapeError("magic_rate requires a unit-l2-norm operator")
    c = matrix_to_coeffs(o.mat, o.d, o.n)
    cdot = matrix_to_coeffs(1j * (o.mat @ h.mat - h.mat @ o.mat), o.d, o.n)
    p = np.abs(c) ** 2
    pdot = 2.0 * np.real(cdot * np.conj(c))
    mask = p > 1e-30
    return float(-np.sum(pdot[mask] * np.log2(p[mask])))


def magic_rate_bound(d, k, h_inf_norm):
    """Stated small-incremental-magic bound 8 d^k ||H||_inf log2(e)/e."""
    return 8.0 * d ** k * h_inf_norm * float(np.log2(np.e)) / float(np.e)
