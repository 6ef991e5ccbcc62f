"""Heisenberg transition matrices, circuit sensitivity, and influence rate.

The central reduction: expand a unit-norm operator O in the orthonormal
Pauli basis, O = sum_a c_a P_a with ||c||_2 = 1.  Conjugation by U maps
the coefficient vector to T c, where T[b, a] = <P_b, U P_a U^dag> is
unitary, and the total influence is the quadratic form I[O] = c^dag W c
with W = diag(weight(a)).  Hence

    I[U O U^dag] - I[O] = c^dag (T^dag W T - W) c,

and the supremum over unit-norm operators of the absolute change --- the
circuit sensitivity --- is exactly the spectral norm of the Hermitian
form M = T^dag W T - W.  The sup is therefore a finite eigenproblem, the
maximizer is the corresponding eigenvector, and traceless reduction is
automatic because M annihilates the identity label.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, ShapeError
from .ops import (
    Operator,
    embed,
    is_hermitian,
    is_unitary,
    l2_norm,
    lp_norm,
    mask_sites,
    partial_trace,
    single_site_paulis,
)
from .spectrum import coeffs_to_matrix, index_weights, matrix_to_coeffs

DENSE_EIG_LIMIT = 1024


@lru_cache(maxsize=16)
def pauli_stack(d, n):
    """All d^{2n} Pauli matrices stacked along axis 0, in flat-index order.

    Site k is the k-th kron factor from the left but the k-th least
    significant base-d^2 digit of the flat index.
    """
    singles = single_site_paulis(d)
    stack = singles
    for _ in range(n - 1):
        stack = np.einsum("aij,bkl->abkilj", singles, stack).reshape(
            stack.shape[0] * d * d, stack.shape[1] * d, stack.shape[2] * d
        )
    return stack


@dataclass(frozen=True)
class TransitionMatrix:
    d: int
    n: int
    basis: str  # "pauli" or "gamma"
    mat: np.ndarray


def transition_matrix(u, unitary_tol=1e-8):
    """T[b, a] = Tr(P_b^dag U P_a U^dag) / d^n over all Pauli labels."""
    if not is_unitary(u, unitary_tol):
        raise ShapeError("transition_matrix requires a unitary input")
    size = (u.d * u.d) ** u.n
    if size > DENSE_EIG_LIMIT:
        raise ShapeError(
            f"dense transition matrix of size {size} exceeds limit {DENSE_EIG_LIMIT}"
        )
    stack = pauli_stack(u.d, u.n)
    conj = np.einsum("ij,ajk,lk->ail", u.mat, stack, u.mat.conj())
    dim = u.dim
    t = stack.reshape(size, dim * dim).conj() @ conj.reshape(size, dim * dim).T / dim
    return TransitionMatrix(u.d, u.n, "pauli", t)


@dataclass(frozen=True)
class SensitivityReport:
    value: float
    witness: np.ndarray
    iterations: int
    degenerate: bool = False


def spectral_norm_report(apply_m, size, weights_bound, rng, tol=1e-10, max_iter=5000):
    """Largest |eigenvalue| of a Hermitian operator given by matvecs.

    Runs shifted power iterations on sigma*I + M and sigma*I - M with
    sigma an upper bound on ||M||, so both extreme eigenvalues are found
    without sign oscillation.
    """
    sigma = 2.0 * weights_bound
    best = (0.0, None, 0)
    for sign in (+1.0, -1.0):
        v = rng.normal(size=size) + 1j * rng.normal(size=size)
        v /= np.linalg.norm(v)
        lam = 0.0
        iters = 0
        for _ in range(max_iter):
            w = sigma * v + sign * apply_m(v)
            nrm = np.linalg.norm(w)
            iters += 1
            if nrm < 1e-30:
                break
            v = w / nrm
            mv = apply_m(v)
            lam = float(np.real(np.vdot(v, mv)))
            resid = np.linalg.norm(mv - lam * v)
            if resid <= tol * max(1.0, abs(lam)):
                break
        else:
            raise ConvergenceError("power iteration did not converge")
        if abs(lam) > best[0]:
            best = (abs(lam), v, iters + best[2])
        else:
            best = (best[0], best[1], best[2] + iters)
    return best


def circuit_sensitivity(u, unitary_tol=1e-8, seed=7):
    """Circuit sensitivity CiS[U] = max_{||O||_2=1} |I[U O U^dag] - I[O]|.

    Computed exactly as the spectral norm of M = T^dag W T - W (see the
    module docstring); dense Hermitian eigendecomposition up to
    DENSE_EIG_LIMIT labels, shifted power iteration beyond.
    """
    if not is_unitary(u, unitary_tol):
        raise ShapeError("circuit_sensitivity requires a unitary input")
    size = (u.d * u.d) ** u.n
    w = index_weights(u.d, u.n)
    if size <= DENSE_EIG_LIMIT:
        t = transition_matrix(u, unitary_tol).mat
        m = t.conj().T @ (w[:, None] * t) - np.diag(w)
        m = 0.5 * (m + m.conj().T)
        vals, vecs = np.linalg.eigh(m)
        pick = int(np.argmax(np.abs(vals)))
        value = float(np.abs(vals[pick]))
        degenerate = bool(np.sum(np.abs(np.abs(vals) - value) < 1e-9) > 1)
        return SensitivityReport(value, vecs[:, pick], 0, degenerate)

    umat = u.mat
    udag = umat.conj().T

    def apply_m(c):
        o = coeffs_to_matrix(c, u.d, u.n)
        tc = matrix_to_coeffs(umat @ o @ udag, u.d, u.n)
        wtc = w * tc
        back = matrix_to_coeffs(udag @ coeffs_to_matrix(wtc, u.d, u.n) @ umat, u.d, u.n)
        return back - w * c

    rng = np.random.default_rng(seed)
    value, witness, iters = spectral_norm_report(apply_m, size, float(u.n), rng)
    return SensitivityReport(value, witness, iters)


def influence_delta(u, coeffs):
    """I[U O U^dag] - I[O] for the operator with the given coefficients."""
    w = index_weights(u.d, u.n)
    o = coeffs_to_matrix(coeffs, u.d, u.n)
    tc = matrix_to_coeffs(u.mat @ o @ u.mat.conj().T, u.d, u.n)
    return float(w @ np.abs(tc) ** 2 - w @ np.abs(np.asarray(coeffs)) ** 2)


def operator_support(h, tol=1e-9):
    """Bitmask of sites where h acts non-trivially, verified by reconstruction.

    A site j is inessential if replacing it by Tr_j(h) ox I_j / d leaves h
    unchanged; the returned mask is re-verified as a whole, so the result
    is the exact support for genuinely product-with-identity operators.
    """
    support = 0
    for j in range(h.n):
        keep = ((1 << h.n) - 1) ^ (1 << j)
        traced = partial_trace(h, keep)
        lifted = embed(traced.mat / h.d, mask_sites(keep, h.n), h.d, h.n)
        if lp_norm(Operator(h.d, h.n, h.mat - lifted.mat), np.inf) > tol:
            support |= 1 << j
    k = bin(support).count("1")
    if k:
        sites = mask_sites(support, h.n)
        hs = partial_trace(h, support)
        lifted = embed(hs.mat / h.d ** (h.n - k), sites, h.d, h.n)
        if lp_norm(Operator(h.d, h.n, h.mat - lifted.mat), np.inf) > tol:
            raise ShapeError("operator is not supported on any strict site subset")
    return support


def influence_rate(h, o):
    """d/dt I[U_t O U_t^dag] at t = 0 for U_t = exp(-i t H).

    Evaluated through the Pauli coefficients of O and of dO/dt = i[O, H];
    for Hermitian O this is the displayed closed form of the rate.
    """
    if not is_hermitian(h, 1e-9):
        raise ShapeError("influence_rate requires a Hermitian generator")
    if abs(l2_norm(o) - 1.0) > 1e-6:
        raise ShapeError("influence_rate requires a unit-l2-norm operator")
    c = matrix_to_coeffs(o.mat, o.d, o.n)
    cdot = matrix_to_coeffs(1j * (o.mat @ h.mat - h.mat @ o.mat), o.d, o.n)
    w = index_weights(o.d, o.n)
    return float(np.sum(w * 2.0 * np.real(cdot * np.conj(c))))


@dataclass(frozen=True)
class RateBoundReport:
    rate: float
    bound: float
    satisfied: bool
    support: int


def influence_rate_bound_check(h, o, k):
    """Check |R_I(H, O)| <= 4 k ||H||_inf for H supported on k qudits."""
    support = operator_support(h)
    if bin(support).count("1") > k:
        raise ShapeError(f"H acts on {bin(support).count('1')} sites, more than k={k}")
    rate = influence_rate(h, o)
    bound = 4.0 * k * lp_norm(h, np.inf)
    return RateBoundReport(rate, bound, abs(rate) <= bound + 1e-9, support)


def weight_one_paulis(d, n):
    """Flat indices of all n (d^2 - 1) weight-1 Pauli labels."""
    out = []
    for site in range(n):
        for code in range(1, d * d):
            out.append(code * (d * d) ** site)
    return out


def is_stable(u, tol=1e-8, unitary_tol=1e-8):
    """True iff U conjugates every weight-1 Pauli (both ways) into the
    span of weight-1 Paulis, which characterizes CiS[U] = 0."""
    if not is_unitary(u, unitary_tol):
        raise ShapeError("is_stable requires a unitary input")
    w = index_weights(u.d, u.n)
    off = w != 1
    singles = single_site_paulis(u.d)
    for site in range(u.n):
        for code in range(1, u.d * u.d):
            p = embed(singles[code], [site], u.d, u.n).mat
            for m in (u.mat @ p @ u.mat.conj().T, u.mat.conj().T @ p @ u.mat):
                c = matrix_to_coeffs(m, u.d, u.n)
                if np.max(np.abs(c[off])) > tol:
                    return False
    return True
