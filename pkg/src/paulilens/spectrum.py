"""Pauli characteristic distribution, influence, and Fourier entropies.

A unit-l2-norm operator O has coefficients c_a = <P_a, O> over the
orthonormal Pauli basis; P_O[a] = |c_a|^2 is a probability distribution
over V^n = (Z_d x Z_d)^n.

Index layout: each site carries a code s + d*t for the local Pauli
X^s Z^t, and a full index is the little-endian mixed-radix number with
site 0 as the least significant base-d^2 digit.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .entropies import binary_entropy, entropy_bits, min_entropy_bits, renyi_entropy_bits
from .errors import NormalizationError, ShapeError
from .ops import (
    Operator,
    check_dims,
    embed,
    l2_norm,
    mask_sites,
    partial_trace,
    single_site_paulis,
)


def index_of(a, d):
    """Flat index of a Pauli index tuple ((s_0,t_0), ...)."""
    idx = 0
    for i, (s, t) in enumerate(a):
        idx += (s % d + d * (t % d)) * (d * d) ** i
    return idx


def pauli_index_from_flat(idx, d, n):
    out = []
    for _ in range(n):
        code = idx % (d * d)
        out.append((code % d, code // d))
        idx //= d * d
    return tuple(out)


@lru_cache(maxsize=64)
def index_weights(d, n):
    """Pauli weight of every flat index, as a float vector of length d^{2n}."""
    size = (d * d) ** n
    idx = np.arange(size)
    w = np.zeros(size)
    for site in range(n):
        w += (idx // (d * d) ** site) % (d * d) != 0
    return w


def site_support_mask(d, n, j):
    """Boolean mask of flat indices whose site-j code is non-trivial."""
    idx = np.arange((d * d) ** n)
    return (idx // (d * d) ** j) % (d * d) != 0


def matrix_to_coeffs(mat, d, n):
    """Pauli coefficients c_a = Tr(P_a^dag M) / d^n for all a at once."""
    singles = single_site_paulis(d).conj()
    t = np.asarray(mat, dtype=np.complex128).reshape([d] * (2 * n))
    for k in range(n):
        # axes: [c_{k-1}..c_0, i_k..i_{n-1}, j_k..j_{n-1}]
        t = np.tensordot(singles, t, axes=([1, 2], [k, n]))
    return t.reshape(-1) / d ** n


def coeffs_to_matrix(coeffs, d, n):
    """Reassemble sum_a c_a P_a from a flat coefficient vector."""
    singles = single_site_paulis(d)
    t = np.asarray(coeffs, dtype=np.complex128).reshape([d * d] * n)
    t = t.transpose(list(range(n))[::-1])  # [c_0, c_1, ..., c_{n-1}]
    for _ in range(n):
        t = np.tensordot(t, singles, axes=([0], [0]))
    perm = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    return t.transpose(perm).reshape(d ** n, d ** n)


@dataclass(frozen=True)
class PauliSpectrum:
    d: int
    n: int
    probs: np.ndarray
    coeffs: np.ndarray


def pauli_spectrum(o, norm_tol=1e-6):
    """Characteristic distribution P_O[a] = |<P_a, O>|^2 of a unit-norm operator.

    Inputs within `norm_tol` of unit l2 norm are accepted and the
    probabilities renormalized; anything looser raises NormalizationError.
    """
    norm = l2_norm(o)
    if abs(norm - 1.0) > norm_tol:
        raise NormalizationError("pauli_spectrum requires unit l2 norm", norm)
    coeffs = matrix_to_coeffs(o.mat, o.d, o.n)
    probs = np.abs(coeffs) ** 2
    probs = probs / probs.sum()
    return PauliSpectrum(o.d, o.n, probs, coeffs)


def influence_local(spec, j):
    """Probability that the spectral distribution is non-trivial at site j."""
    if not 0 <= j < spec.n:
        raise ShapeError(f"site index {j} out of range for n={spec.n}")
    return float(spec.probs[site_support_mask(spec.d, spec.n, j)].sum())


def influence_total(spec):
    """Expected Pauli weight E_{a ~ P_O} |a|."""
    return float(index_weights(spec.d, spec.n) @ spec.probs)


@dataclass(frozen=True)
class WeightDistribution:
    w: np.ndarray


def weight_distribution(spec):
    w = np.zeros(spec.n + 1)
    np.add.at(w, index_weights(spec.d, spec.n).astype(int), spec.probs)
    return WeightDistribution(w)


def fourier_entropy(spec):
    return entropy_bits(spec.probs)


def fourier_min_entropy(spec):
    return min_entropy_bits(spec.probs)


def fourier_renyi_entropy(spec, alpha):
    return renyi_entropy_bits(spec.probs, alpha)


def depolarize_site(o, j, gamma):
    """Single-site depolarizing channel D_gamma acting on qudit j."""
    keep = ((1 << o.n) - 1) ^ (1 << j)
    traced = partial_trace(o, keep)
    rest_sites = mask_sites(keep, o.n)
    lifted = embed(traced.mat, rest_sites, o.d, o.n)
    return Operator(o.d, o.n, (1.0 - gamma) * o.mat + (gamma / o.d) * lifted.mat)


def depolarizing_sensitivity_check(o, j, eps):
    """Central difference of ||D_gamma^{(j)}[O]||_2^2 at gamma=0 vs -2 I_j[O].

    ||D_gamma[O]||_2^2 is exactly quadratic in gamma, so the central
    difference recovers the derivative to machine precision.
    """
    plus = l2_norm(depolarize_site(o, j, eps)) ** 2
    minus = l2_norm(depolarize_site(o, j, -eps)) ** 2
    lhs = (plus - minus) / (2.0 * eps)
    rhs = -2.0 * influence_local(pauli_spectrum(o), j)
    return lhs, rhs


@dataclass(frozen=True)
class QfeiGap:
    entropy: float
    influence: float
    bound: float
    satisfied: bool


def qfei_gap(o):
    """Weak quantum Fourier entropy-influence bound with constant 2.

    H[O] <= 2 (log2 n + log2 d) I[O] + h(P_O[0]).
    """
    spec = pauli_spectrum(o)
    h = fourier_entropy(spec)
    infl = influence_total(spec)
    p0 = float(spec.probs[0])
    bound = 2.0 * (np.log2(spec.n) + np.log2(spec.d)) * infl + binary_entropy(p0)
    return QfeiGap(h, infl, float(bound), h <= bound + 1e-9)


# ---------------------------------------------------------------------------
# Boolean functions and their embedding as quantum observables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BooleanFunction:
    """A function {-1,1}^n -> {-1,1} as a truth table.

    table[idx] = f(x) where bit (n-1-i) of idx is 0 for x_i = +1 and 1
    for x_i = -1, i.e. inputs are enumerated lexicographically with +1
    ordered before -1.
    """

    n: int
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int8)
        if t.shape != (1 << self.n,):
            raise ShapeError(f"table length {t.shape} != 2^{self.n}")
        if not np.all(np.abs(t) == 1):
            raise ShapeError("truth table values must be exactly +-1")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)


def walsh_coeffs(f):
    """Walsh-Hadamard transform; entry S uses the same bit layout as table."""
    c = f.table.astype(float).copy()
    h = 1
    while h < len(c):
        for start in range(0, len(c), 2 * h):
            a = c[start:start + h].copy()
            b = c[start + h:start + 2 * h].copy()
            c[start:start + h] = a + b
            c[start + h:start + 2 * h] = a - b
        h *= 2
    return c / len(c)


def _subset_sizes(n):
    idx = np.arange(1 << n)
    w = np.zeros(1 << n)
    for bit in range(n):
        w += (idx >> bit) & 1
    return w


def boolean_influence(f):
    chat = walsh_coeffs(f)
    return float(np.sum(chat ** 2 * _subset_sizes(f.n)))


def boolean_entropy(f):
    return entropy_bits(walsh_coeffs(f) ** 2)


def boolean_embed(f):
    """Observable O_f = sum_S fhat(S) X^S; Hermitian with O_f^2 = I."""
    chat = walsh_coeffs(f)
    coeffs = np.zeros(4 ** f.n, dtype=np.complex128)
    for mask in range(1 << f.n):
        flat = 0
        for i in range(f.n):
            if (mask >> (f.n - 1 - i)) & 1:  # variable i is in S
                flat += 4 ** i
        coeffs[flat] = chat[mask]
    return Operator(2, f.n, coeffs_to_matrix(coeffs, 2, f.n))
