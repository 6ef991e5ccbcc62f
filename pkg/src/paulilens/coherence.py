"""Relative entropy of coherence, cohering power, coherence rate, D_max.

The incoherent reference basis is the computational basis; Delta is the
completely dephasing channel (diagonal restriction).  The cohering power
is a sup over all density operators, searched over pure states (gradient
ascent; unitary invariance of S(rho) reduces the objective to a diagonal
entropy gap) plus Hilbert-Schmidt-sampled mixed states.  Values are
certified lower bounds.
"""

from dataclasses import dataclass

import numpy as np

from .ascent import maximize_entropy_gap
from .entropies import entropy_bits, von_neumann_entropy_bits
from .errors import ShapeError, SingularStateError
from .ops import Operator, is_unitary, lp_norm


@dataclass(frozen=True)
class DensityOperator:
    """An Operator verified to be positive semidefinite with unit trace."""

    op: Operator

    def __post_init__(self):
        m = self.op.mat
        if np.max(np.abs(m - m.conj().T)) > 1e-9:
            raise ShapeError("density operator must be Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-10 or abs(np.trace(m).imag) > 1e-10:
            raise ShapeError("density operator must have unit trace")
        if np.linalg.eigvalsh(m)[0] < -1e-10:
            raise ShapeError("density operator must be positive semidefinite")

    @property
    def mat(self):
        return self.op.mat

    @property
    def d(self):
        return self.op.d

    @property
    def n(self):
        return self.op.n


def density_operator(mat, d, n):
    return DensityOperator(Operator(d, n, mat))


def dephase(mat):
    return np.diag(np.diag(mat))


def rel_entropy_coherence(rho):
    """C_r(rho) = S(Delta(rho)) - S(rho), in bits."""
    diag = np.clip(np.real(np.diag(rho.mat)), 0.0, None)
    return float(entropy_bits(diag / diag.sum()) - von_neumann_entropy_bits(rho.mat))


@dataclass(frozen=True)
class CoherenceSearchResult:
    value: float
    witness: DensityOperator
    restarts_used: int
    converged: bool
    exact: bool = False


def cohering_power_search(u, restarts=64, seed=0, samples=256, threads=1, unitary_tol=1e-8):
    """Certified lower bound on max_rho |C_r(U rho U^dag) - C_r(rho)|.

    For any rho, S(U rho U^dag) = S(rho), so the objective reduces to
    |S(Delta(U rho U^dag)) - S(Delta(rho))|; for pure states this is the
    entropy gap of amplitude distributions, handled by gradient ascent
    with a computational-basis vertex scan.  Mixed states are covered by
    Hilbert-Schmidt ensemble sampling.
    """
    if not is_unitary(u, unitary_tol):
        raise ShapeError("cohering_power_search requires a unitary input")
    res = maximize_entropy_gap(u.mat, restarts=restarts, seed=seed, threads=threads)
    best_val = res.value
    psi = res.witness / np.linalg.norm(res.witness)
    best_rho = np.outer(psi, psi.conj())
    exact = res.from_vertex

    rng = np.random.default_rng([seed, 0x5A11])
    dim = u.dim
    for _ in range(samples):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        rho = g @ g.conj().T
        rho /= np.trace(rho).real
        urho = u.mat @ rho @ u.mat.conj().T
        val = abs(
            entropy_bits(np.clip(np.real(np.diag(urho)), 0, None))
            - entropy_bits(np.clip(np.real(np.diag(rho)), 0, None))
        )
        if val > best_val:
            best_val, best_rho, exact = val, rho, False

    witness = density_operator(best_rho, u.d, u.n)
    return CoherenceSearchResult(best_val, witness, res.restarts_used, res.converged, exact)


def coherence_rate(h, rho, diag_floor=1e-12):
    """d/dt C_r(e^{-itH} rho e^{itH}) at t = 0.

    Equals i Tr([rho, log2 Delta(rho)] H); requires all diagonal entries
    of rho to be positive, otherwise log Delta(rho) is undefined and a
    SingularStateError is raised (callers may mix with eps * I / d^n).
    """
    if np.max(np.abs(h.mat - h.mat.conj().T)) > 1e-9:
        raise ShapeError("coherence_rate requires a Hermitian generator")
    diag = np.real(np.diag(rho.mat))
    if np.min(diag) <= diag_floor:
        raise SingularStateError(
            f"diagonal entry {np.min(diag):.3e} below floor {diag_floor:.0e}"
        )
    log_delta = np.diag(np.log2(diag))
    comm = rho.mat @ log_delta - log_delta @ rho.mat
    return float(np.real(1j * np.trace(comm @ h.mat)))


@dataclass(frozen=True)
class DMaxReport:
    value: float
    support_violation: bool


def d_max(rho, sigma, support_tol=1e-10):
    """D_max(rho || sigma) = log2 min { lambda : rho <= lambda sigma }.

    Computed as log2 lambda_max(sigma^{-1/2} rho sigma^{-1/2}) on the
    support of sigma; if rho leaks outside that support the report
    carries +inf with the violation flag set.
    """
    w, v = np.linalg.eigh(sigma.mat)
    on = w > support_tol
    if not np.all(on):
        kernel = v[:, ~on]
        leak = np.linalg.norm(rho.mat @ kernel)
        if leak > np.sqrt(support_tol):
            return DMaxReport(float("inf"), True)
    vs = v[:, on]
    inv_sqrt = vs * (1.0 / np.sqrt(w[on]))
    core = inv_sqrt.conj().T @ rho.mat @ inv_sqrt
    lam = float(np.linalg.eigvalsh(0.5 * (core + core.conj().T))[-1])
    return DMaxReport(float(np.log2(max(lam, 1e-300))), False)


@dataclass(frozen=True)
class CoherenceRateBound:
    rate: float
    bound: float
    satisfied: bool


def coherence_rate_bound_check(h, rho):
    """Check |R_C(H, rho)| <= 4 ||H||_inf D_max(rho || Delta(rho))."""
    rate = coherence_rate(h, rho)
    delta = density_operator(dephase(rho.mat), rho.d, rho.n)
    dm = d_max(rho, delta)
    bound = 4.0 * lp_norm(h, np.inf) * dm.value
    return CoherenceRateBound(rate, bound, abs(rate) <= bound + 1e-9)
