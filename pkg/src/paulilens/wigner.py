"""Discrete Wigner function, symplectic Fourier transform, convolution.

Qubit phase space: points and Pauli labels both live in V^n = (F_2 x F_2)^n
with the symplectic pairing <a,b>_s = sum_i (s_i t'_i + t_i s'_i) mod 2.

The machinery expands operators over the *Hermitian* Pauli strings
sigma_a (per-site I, X, Y, Z), not the raw X^s Z^t words: code (1,1) is
sigma_Y = i X Z.  The two coefficient sets differ only by i-phases on
code-(1,1) sites (probabilities are unaffected), but Hermitian strings
square to the identity, which is what makes the phase-space convolution
interact correctly with operator 4-point averages.

Phase point operators are A_a = sum_b sigma_b (-1)^{<a,b>_s}, the Wigner
function is f_O(a) = <O, A_a>, and the inverse transform recovers the
sigma coefficients exactly.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ShapeError
from .ops import Operator
from .spectrum import coeffs_to_matrix, matrix_to_coeffs

_S4 = np.array(
    [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], dtype=np.int8
)


def _require_qubits(d):
    if d != 2:
        raise ShapeError("discrete Wigner machinery is defined for qubits (d=2) only")


@lru_cache(maxsize=16)
def symplectic_signs(n):
    """(-1)^{<a,b>_s} for all pairs of flat labels, as an int8 matrix."""
    signs = _S4
    for _ in range(n - 1):
        signs = np.kron(_S4, signs)  # new site is the more significant digit
    return signs


@lru_cache(maxsize=16)
def _code3_phases(n):
    """i^{m_a} with m_a the number of code-(1,1) sites of label a."""
    counts = np.zeros(4 ** n, dtype=int)
    idx = np.arange(4 ** n)
    for site in range(n):
        counts += (idx // 4 ** site) % 4 == 3
    return (1j) ** counts


def hermitian_pauli_coeffs(o):
    """Coefficients of O over the Hermitian strings sigma_a; real for Hermitian O."""
    _require_qubits(o.d)
    return _code3_phases(o.n).conj() * matrix_to_coeffs(o.mat, 2, o.n)


def operator_from_hermitian_coeffs(coeffs, n):
    return Operator(2, n, coeffs_to_matrix(_code3_phases(n) * np.asarray(coeffs), 2, n))


@dataclass(frozen=True)
class WignerFunction:
    n: int
    values: np.ndarray


def wigner_function(o):
    """f_O(a) = sum_b <sigma_b, O> (-1)^{<a,b>_s} over phase points a."""
    coeffs = hermitian_pauli_coeffs(o)
    return WignerFunction(o.n, symplectic_signs(o.n) @ coeffs)


def symplectic_ft(w):
    """Inverse pair: recovers the sigma coefficients from a Wigner function."""
    return symplectic_signs(w.n) @ w.values / 4 ** w.n


def wigner_to_operator(w):
    return operator_from_hermitian_coeffs(symplectic_ft(w), w.n)


def convolve(o1, o2):
    """The operator whose Wigner function is the pointwise product f_1 f_2."""
    _require_qubits(o1.d)
    if (o1.d, o1.n) != (o2.d, o2.n):
        raise ShapeError("convolution requires matching signatures")
    f1 = wigner_function(o1).values
    f2 = wigner_function(o2).values
    return wigner_to_operator(WignerFunction(o1.n, f1 * f2))
