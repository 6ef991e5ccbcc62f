"""Random ensembles and named corpora used by tests, scripts, and audits."""

import numpy as np

from .gaussian import quadratic_hamiltonian
from .ops import Operator, embed
from scipy.linalg import expm


def haar_unitary(dim, rng):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_unitary_operator(d, n, rng):
    return Operator(d, n, haar_unitary(d ** n, rng))


def random_unit_norm_operator(d, n, rng):
    m = rng.normal(size=(d ** n, d ** n)) + 1j * rng.normal(size=(d ** n, d ** n))
    return Operator(d, n, m / np.sqrt(np.vdot(m, m).real / d ** n))


def random_hermitian_unit_norm(d, n, rng):
    m = rng.normal(size=(d ** n, d ** n)) + 1j * rng.normal(size=(d ** n, d ** n))
    m = m + m.conj().T
    return Operator(d, n, m / np.sqrt(np.vdot(m, m).real / d ** n))


def random_hermitian(d, n, rng, scale=1.0):
    m = rng.normal(size=(d ** n, d ** n)) + 1j * rng.normal(size=(d ** n, d ** n))
    return Operator(d, n, scale * (m + m.conj().T) / 2.0)


def hilbert_schmidt_state(d, n, rng):
    dim = d ** n
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return Operator(d, n, rho / np.trace(rho).real)


def random_pure_state(d, n, rng):
    psi = rng.normal(size=d ** n) + 1j * rng.normal(size=d ** n)
    psi /= np.linalg.norm(psi)
    return Operator(d, n, np.outer(psi, psi.conj()))


def swap_matrix(d):
    m = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            m[j * d + i, i * d + j] = 1.0
    return m


def random_stable_unitary(d, n, rng, layers=3):
    """Random product of single-qudit unitaries and swaps (a stable circuit)."""
    u = np.eye(d ** n, dtype=np.complex128)
    for _ in range(layers):
        locals_ = np.eye(1, dtype=np.complex128)
        for _ in range(n):
            locals_ = np.kron(locals_, haar_unitary(d, rng))
        u = locals_ @ u
        if n >= 2:
            i, j = rng.choice(n, size=2, replace=False)
            u = embed(swap_matrix(d), [int(i), int(j)], d, n).mat @ u
    return Operator(d, n, u)


def random_matchgate(n, rng, scale=1.0):
    """exp(-i H) for a random quadratic Clifford-algebra Hamiltonian."""
    h = rng.normal(size=(2 * n, 2 * n)) * scale
    h = h - h.T
    hq = quadratic_hamiltonian(h, n)
    return Operator(2, n, expm(-1j * hq.mat))


def random_two_local_path(d, n, rng, n_segments=3, terms_per_segment=2):
    """Random piecewise-constant 2-local path description for make_path."""
    segments = []
    for _ in range(n_segments):
        terms = []
        for _ in range(terms_per_segment):
            sites = sorted(rng.choice(n, size=2, replace=False).tolist())
            g = rng.normal(size=(d * d, d * d)) + 1j * rng.normal(size=(d * d, d * d))
            h = (g + g.conj().T) / 2.0
            h -= np.trace(h) / (d * d) * np.eye(d * d)
            h /= np.linalg.norm(h, 2)
            terms.append((tuple(sites), h, float(rng.normal())))
        segments.append((float(rng.uniform(0.2, 0.6)), terms))
    return segments
