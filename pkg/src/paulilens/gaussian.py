"""Clifford-algebra generators, Gaussian influence, and matchgate tests.

Qubit-only machinery (d = 2).  The 2n generators are realized by the
Jordan-Wigner strings

    gamma_{2k}   = Z^{x k} x X x I...   (list index 2k)
    gamma_{2k+1} = Z^{x k} x Y x I...   (list index 2k+1)

which satisfy {gamma_i, gamma_j} = 2 delta_ij I.  Monomials gamma^S are
ordered products over ascending index; any fixed order only changes
gamma^S by a sign, leaving all spectra unchanged.  The coefficients
O_S = <gamma^S, O> are an orthonormal expansion, so P^G_O[S] = |O_S|^2
sums to one for unit-norm O, and the Gaussian analogue of the circuit
sensitivity reduces to the same quadratic-form eigenproblem as the Pauli
case with W^G = diag(|S|).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ShapeError
from .ops import Operator, check_dims, is_unitary, l2_norm
from .sensitivity import SensitivityReport, TransitionMatrix
from .errors import NormalizationError


def _require_qubits(d):
    if d != 2:
        raise ShapeError("Clifford-algebra machinery is defined for qubits (d=2) only")


@dataclass(frozen=True)
class GammaBasis:
    n: int
    gammas: np.ndarray  # (2n, 2^n, 2^n)


@lru_cache(maxsize=16)
def gamma_basis(n):
    """Jordan-Wigner realization of the 2n Clifford-algebra generators."""
    check_dims(2, n)
    x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    eye = np.eye(2, dtype=np.complex128)
    gammas = np.empty((2 * n, 2 ** n, 2 ** n), dtype=np.complex128)
    for k in range(n):
        for parity, local in ((0, x), (1, y)):
            factors = [z] * k + [local] + [eye] * (n - k - 1)
            m = np.eye(1, dtype=np.complex128)
            for f in factors:
                m = np.kron(m, f)
            gammas[2 * k + parity] = m
    basis = GammaBasis(n, gammas)
    for i in range(2 * n):
        for j in range(i, 2 * n):
            anti = gammas[i] @ gammas[j] + gammas[j] @ gammas[i]
            target = 2.0 * np.eye(2 ** n) if i == j else 0.0
            if np.max(np.abs(anti - target)) > 1e-10:
                raise ShapeError("gamma basis failed anticommutation check")
    gammas.flags.writeable = False
    return basis


def gamma_monomial(basis, subset):
    """Ordered product gamma^S over ascending generator index."""
    m = np.eye(2 ** basis.n, dtype=np.complex128)
    for i in range(2 * basis.n):
        if (subset >> i) & 1:
            m = m @ basis.gammas[i]
    return Operator(2, basis.n, m)


@lru_cache(maxsize=16)
def gamma_stack(n):
    """All 4^n monomials gamma^S stacked by subset bitmask."""
    basis = gamma_basis(n)
    dim = 2 ** n
    stack = np.empty((4 ** n, dim, dim), dtype=np.complex128)
    stack[0] = np.eye(dim)
    for subset in range(1, 4 ** n):
        low = subset & -subset
        i = low.bit_length() - 1
        # gamma_i commutes to the front of the remaining ascending product
        stack[subset] = basis.gammas[i] @ stack[subset ^ low]
    stack.flags.writeable = False
    return stack


@lru_cache(maxsize=32)
def subset_sizes(n_generators):
    idx = np.arange(1 << n_generators)
    w = np.zeros(1 << n_generators)
    for bit in range(n_generators):
        w += (idx >> bit) & 1
    return w


def gamma_coeffs(mat, n):
    """Coefficients O_S = Tr((gamma^S)^dag M) / 2^n for all subsets."""
    dim = 2 ** n
    stack = gamma_stack(n)
    return stack.reshape(4 ** n, dim * dim).conj() @ np.asarray(mat).reshape(-1) / dim


def gamma_reconstruct(coeffs, n):
    dim = 2 ** n
    stack = gamma_stack(n)
    return np.tensordot(np.asarray(coeffs), stack, axes=(0, 0)).reshape(dim, dim)


@dataclass(frozen=True)
class GaussianSpectrum:
    n: int
    probs: np.ndarray
    coeffs: np.ndarray


def gaussian_spectrum(o, norm_tol=1e-6):
    """P^G_O[S] = |<gamma^S, O>|^2 over subsets S of [2n]."""
    _require_qubits(o.d)
    norm = l2_norm(o)
    if abs(norm - 1.0) > norm_tol:
        raise NormalizationError("gaussian_spectrum requires unit l2 norm", norm)
    coeffs = gamma_coeffs(o.mat, o.n)
    probs = np.abs(coeffs) ** 2
    probs = probs / probs.sum()
    return GaussianSpectrum(o.n, probs, coeffs)


def gaussian_influence_local(spec, j):
    if not 0 <= j < 2 * spec.n:
        raise ShapeError(f"generator index {j} out of range for 2n={2 * spec.n}")
    idx = np.arange(4 ** spec.n)
    return float(spec.probs[(idx >> j) & 1 == 1].sum())


def gaussian_influence(spec):
    """I^G[O] = sum_S |S| P^G_O[S]."""
    return float(subset_sizes(2 * spec.n) @ spec.probs)


def carlen_lieb_apply(o, t):
    """Fermionic noise semigroup: gamma^S coefficient scaled by e^{-t|S|}."""
    _require_qubits(o.d)
    if t < 0:
        raise ShapeError(f"semigroup time must be >= 0, got {t}")
    coeffs = gamma_coeffs(o.mat, o.n)
    scaled = coeffs * np.exp(-t * subset_sizes(2 * o.n))
    return Operator(2, o.n, gamma_reconstruct(scaled, o.n))


def gamma_transition_matrix(u, unitary_tol=1e-8):
    """T^G[S', S] = Tr((gamma^{S'})^dag U gamma^S U^dag) / 2^n."""
    _require_qubits(u.d)
    if not is_unitary(u, unitary_tol):
        raise ShapeError("gamma_transition_matrix requires a unitary input")
    stack = gamma_stack(u.n)
    dim = u.dim
    conj = np.einsum("ij,ajk,lk->ail", u.mat, stack, u.mat.conj())
    size = 4 ** u.n
    t = stack.reshape(size, dim * dim).conj() @ conj.reshape(size, dim * dim).T / dim
    return TransitionMatrix(2, u.n, "gamma", t)


def gaussian_circuit_sensitivity(u, unitary_tol=1e-8):
    """CiS^G[U]: spectral norm of (T^G)^dag W^G T^G - W^G, W^G = diag(|S|).

    Same quadratic-form reduction as the Pauli circuit sensitivity, in the
    orthonormal gamma-monomial basis.
    """
    t = gamma_transition_matrix(u, unitary_tol).mat
    w = subset_sizes(2 * u.n)
    m = t.conj().T @ (w[:, None] * t) - np.diag(w)
    m = 0.5 * (m + m.conj().T)
    vals, vecs = np.linalg.eigh(m)
    pick = int(np.argmax(np.abs(vals)))
    value = float(np.abs(vals[pick]))
    degenerate = bool(np.sum(np.abs(np.abs(vals) - value) < 1e-9) > 1)
    return SensitivityReport(value, vecs[:, pick], 0, degenerate)


def is_matchgate(u, tol=1e-8, unitary_tol=1e-8):
    """True iff U conjugates every generator (both ways) into span{gamma_j}."""
    _require_qubits(u.d)
    if not is_unitary(u, unitary_tol):
        raise ShapeError("is_matchgate requires a unitary input")
    basis = gamma_basis(u.n)
    sizes = subset_sizes(2 * u.n)
    off = sizes != 1
    for i in range(2 * u.n):
        g = basis.gammas[i]
        for m in (u.mat @ g @ u.mat.conj().T, u.mat.conj().T @ g @ u.mat):
            c = gamma_coeffs(m, u.n)
            if np.max(np.abs(c[off])) > tol:
                return False
    return True


def quadratic_hamiltonian(h, n):
    """Hermitian H = i sum_{i<j} h_ij gamma_i gamma_j from a real
    antisymmetric coefficient matrix."""
    h = np.asarray(h, dtype=float)
    if h.shape != (2 * n, 2 * n) or np.max(np.abs(h + h.T)) > 1e-12:
        raise ShapeError("quadratic Hamiltonian needs a real antisymmetric 2n x 2n matrix")
    basis = gamma_basis(n)
    out = np.zeros((2 ** n, 2 ** n), dtype=np.complex128)
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            if h[i, j] != 0.0:
                out += 2j * h[i, j] * (basis.gammas[i] @ basis.gammas[j])
    return Operator(2, n, out)
