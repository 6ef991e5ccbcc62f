"""Entropy helpers, base-2 throughout, with the 0*log(0) := 0 convention."""

import numpy as np


def entropy_bits(p):
    """Shannon entropy of a probability vector, in bits."""
    p = np.asarray(p, dtype=float)
    nz = p > 0
    return float(-np.sum(p[nz] * np.log2(p[nz])))


def min_entropy_bits(p):
    p = np.asarray(p, dtype=float)
    top = float(np.max(p))
    return float(np.log2(1.0 / top))


def renyi_entropy_bits(p, alpha):
    if alpha <= 0:
        raise ValueError(f"Renyi order must be positive, got {alpha}")
    if alpha == 1.0:
        return entropy_bits(p)
    if alpha == np.inf:
        return min_entropy_bits(p)
    p = np.asarray(p, dtype=float)
    nz = p > 0
    return float(np.log2(np.sum(p[nz] ** alpha)) / (1.0 - alpha))


def binary_entropy(x):
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def von_neumann_entropy_bits(mat):
    """Entropy of a density matrix from its eigenvalues, in bits."""
    w = np.linalg.eigvalsh(mat)
    w = np.clip(w.real, 0.0, None)
    return entropy_bits(w / max(np.sum(w), 1e-300)) if np.sum(w) > 0 else 0.0
