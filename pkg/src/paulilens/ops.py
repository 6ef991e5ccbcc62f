"""Dense complex linear algebra over n-qudit spaces.

Conventions used throughout the package:

* The Hilbert space is (C^d)^{x n}; basis index j_0 j_1 ... j_{n-1} with
  site 0 as the leftmost (most significant) tensor factor.
* X is the shift operator X|j> = |j+1 mod d>, Z the clock operator
  Z|j> = exp(2 pi i j / d)|j>, so Z^d = I for every d.
* The operator inner product is <A, B> = Tr(A^dag B) / d^n and the l2
  norm is the one it induces; generalized Paulis are orthonormal in it.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionCapError, ShapeError

_dimension_cap = 4096


def set_dimension_cap(cap):
    """Set the global d^n cap enforced by every constructor."""
    global _dimension_cap
    _dimension_cap = int(cap)


def dimension_cap():
    return _dimension_cap


def check_dims(d, n):
    if d < 2:
        raise ShapeError(f"local dimension must be >= 2, got {d}")
    if n < 0:
        raise ShapeError(f"qudit count must be >= 0, got {n}")
    if d ** n > _dimension_cap:
        raise DimensionCapError(
            f"d^n = {d}^{n} = {d ** n} exceeds the dimension cap {_dimension_cap}"
        )


@dataclass(frozen=True)
class Operator:
    """A dense complex matrix on (C^d)^{x n} with its (d, n) signature.

    Values are immutable after construction; all operations in this
    package are pure functions of their Operator inputs.
    """

    d: int
    n: int
    mat: np.ndarray

    def __post_init__(self):
        check_dims(self.d, self.n)
        m = np.asarray(self.mat, dtype=np.complex128)
        dim = self.d ** self.n
        if m.shape != (dim, dim):
            raise ShapeError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
        m = np.ascontiguousarray(m)
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    @property
    def dim(self):
        return self.d ** self.n


def same_signature(a, b):
    if (a.d, a.n) != (b.d, b.n):
        raise ShapeError(f"signature mismatch: ({a.d},{a.n}) vs ({b.d},{b.n})")


def identity(d, n):
    return Operator(d, n, np.eye(d ** n))


@lru_cache(maxsize=32)
def single_site_paulis(d):
    """All d^2 single-site Paulis X^s Z^t, indexed by code s + d*t."""
    x = np.zeros((d, d), dtype=np.complex128)
    for j in range(d):
        x[(j + 1) % d, j] = 1.0
    z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    out = np.empty((d * d, d, d), dtype=np.complex128)
    for t in range(d):
        for s in range(d):
            out[s + d * t] = np.linalg.matrix_power(x, s) @ np.linalg.matrix_power(z, t)
    return out


def pauli_op(a, d, n):
    """Tensor product Pauli P_a = (x)_i X^{s_i} Z^{t_i} for a = ((s_i, t_i))_i."""
    check_dims(d, n)
    if len(a) != n:
        raise ShapeError(f"Pauli index has {len(a)} sites, expected {n}")
    singles = single_site_paulis(d)
    mat = np.eye(1, dtype=np.complex128)
    for (s, t) in a:
        mat = np.kron(mat, singles[s % d + d * (t % d)])
    return Operator(d, n, mat)


def pauli_weight(a):
    """Number of sites where the Pauli index acts non-trivially."""
    return sum(1 for (s, t) in a if (s, t) != (0, 0))


def hs_inner(a, b):
    """Normalized Hilbert-Schmidt inner product Tr(A^dag B) / d^n."""
    same_signature(a, b)
    return complex(np.vdot(a.mat, b.mat) / a.dim)


def lp_norm(a, p):
    """Normalized Schatten norm (Tr|A|^p / d^n)^{1/p}; operator norm for p=inf."""
    if p != np.inf and p < 1:
        raise ShapeError(f"p must be >= 1 or inf, got {p}")
    s = np.linalg.svd(a.mat, compute_uv=False)
    if p == np.inf:
        return float(s[0])
    return float((np.sum(s ** p) / a.dim) ** (1.0 / p))


def l2_norm(a):
    return float(np.sqrt(np.vdot(a.mat, a.mat).real / a.dim))


def is_unitary(a, tol=1e-9):
    return bool(np.max(np.abs(a.mat @ a.mat.conj().T - np.eye(a.dim))) <= tol)


def is_hermitian(a, tol=1e-9):
    return bool(np.max(np.abs(a.mat - a.mat.conj().T)) <= tol)


def is_density_operator(a, tol=1e-9):
    if not is_hermitian(a, tol):
        return False
    if abs(np.trace(a.mat) - 1.0) > max(tol, 1e-9):
        return False
    return bool(np.linalg.eigvalsh(a.mat)[0] >= -max(tol, 1e-10))


def dagger(a):
    return Operator(a.d, a.n, a.mat.conj().T)


def conjugate(u, o):
    """Heisenberg conjugation U O U^dag."""
    same_signature(u, o)
    return Operator(o.d, o.n, u.mat @ o.mat @ u.mat.conj().T)


def mask_sites(mask, n):
    return [i for i in range(n) if (mask >> i) & 1]


def partial_trace(a, keep):
    """Trace over the complement of the `keep` bitmask; Tr is preserved.

    keep = 0 returns the full trace as a 1x1 operator.
    """
    if keep >> a.n:
        raise ShapeError(f"keep mask {keep:#x} has bits beyond site {a.n - 1}")
    kept = mask_sites(keep, a.n)
    t = a.mat.reshape([a.d] * (2 * a.n))
    cur = a.n
    for site in sorted(set(range(a.n)) - set(kept), reverse=True):
        t = np.trace(t, axis1=site, axis2=site + cur)
        cur -= 1
    k = len(kept)
    return Operator(a.d, k, t.reshape(a.d ** k, a.d ** k))


def embed(small, sites, d, n):
    """Embed an operator on the ordered site tuple `sites` into n qudits."""
    check_dims(d, n)
    sites = list(sites)
    k = len(sites)
    if len(set(sites)) != k or any(s < 0 or s >= n for s in sites):
        raise ShapeError(f"invalid site tuple {sites} for n={n}")
    m = np.asarray(small, dtype=np.complex128)
    if m.shape != (d ** k, d ** k):
        raise ShapeError(f"small operator shape {m.shape} does not match {k} sites")
    rest = [s for s in range(n) if s not in sites]
    full = np.kron(m, np.eye(d ** len(rest)))
    order = sites + rest  # current tensor leg order
    perm = [order.index(s) for s in range(n)]
    t = full.reshape([d] * (2 * n))
    t = t.transpose(perm + [n + p for p in perm])
    return Operator(d, n, t.reshape(d ** n, d ** n))


def avg_renyi2_entanglement(rho):
    """Average Renyi-2 entanglement entropy over all 2^n subsystem choices.

    (1/2^n) sum_{A subset [n]} -log2 Tr(rho_A^2), for a density operator rho.
    """
    if not is_density_operator(rho, tol=1e-8):
        raise ShapeError("avg_renyi2_entanglement requires a density operator")
    total = 0.0
    for mask in range(1 << rho.n):
        red = partial_trace(rho, mask)
        purity = float(np.vdot(red.mat, red.mat).real)
        total += -np.log2(max(purity, 1e-300))
    return total / (1 << rho.n)
