"""Circuit paths, Trotter compilation, path cost, and cost-audit certificates.

A path is a piecewise-constant schedule of normalized 2-local Hermitian
terms.  The exhibited path cost sum_segments ds * sum_j |r_j| is an
upper bound on the true infimum cost of the compiled unitary, so the
sensitivity / magic / coherence lower-bound theorems are falsifiable on
any concrete path: every certificate must satisfy
path_cost >= max(CiS/8, e*M/(8 d^2 log2 e), C_r/(8 log2 d)).
Magic and coherence enter through search lower bounds, which only makes
the audited inequalities weaker, never unsound.
"""

import hashlib
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .coherence import cohering_power_search
from .errors import ShapeError
from .gaussian import gaussian_circuit_sensitivity, is_matchgate
from .magic import is_clifford, magic_entropy, magic_power_search
from .ops import Operator, check_dims, embed, is_unitary, lp_norm
from .sensitivity import circuit_sensitivity, is_stable

_LOG2E = float(np.log2(np.e))


@dataclass(frozen=True)
class PathTerm:
    support: tuple
    h: np.ndarray  # Hermitian, traceless, ||h||_inf = 1, on the support sites
    r: float


@dataclass(frozen=True)
class Segment:
    duration: float
    terms: tuple


@dataclass(frozen=True)
class CircuitPath:
    d: int
    n: int
    segments: tuple


def make_path(d, n, segments, mode="rescale", tol=1e-9):
    """Validate and normalize a path description.

    segments: iterable of (duration, [(support, h, r), ...]).  Each h must
    be traceless Hermitian on <= 2 qudits; `rescale` mode moves any
    deviation of ||h||_inf from 1 into the coefficient r, `strict` mode
    rejects it.
    """
    check_dims(d, n)
    out = []
    for duration, terms in segments:
        if duration <= 0:
            raise ShapeError(f"segment duration must be positive, got {duration}")
        packed = []
        for support, h, r in terms:
            support = tuple(int(s) for s in support)
            if not 1 <= len(support) <= 2:
                raise ShapeError(f"term support {support} must have 1 or 2 sites")
            if len(set(support)) != len(support) or any(
                s < 0 or s >= n for s in support
            ):
                raise ShapeError(f"invalid term support {support} for n={n}")
            h = np.asarray(h, dtype=np.complex128)
            k = len(support)
            if h.shape != (d ** k, d ** k):
                raise ShapeError(f"term matrix shape {h.shape} != ({d**k},{d**k})")
            if np.max(np.abs(h - h.conj().T)) > tol:
                raise ShapeError("term matrix must be Hermitian")
            if abs(np.trace(h)) > tol * d ** k:
                raise ShapeError("term matrix must be traceless")
            norm = float(np.linalg.norm(h, 2))
            if abs(norm - 1.0) > tol:
                if mode == "strict":
                    raise ShapeError(
                        f"term matrix has ||h||_inf = {norm:.6g}, expected 1"
                    )
                if norm < 1e-300:
                    raise ShapeError("term matrix is zero")
                h = h / norm
                r = float(r) * norm
            packed.append(PathTerm(support, h, float(r)))
        out.append(Segment(float(duration), tuple(packed)))
    return CircuitPath(d, n, tuple(out))


def compile_unitary(path, substeps=1):
    """Product of segment exponentials, latest segment leftmost.

    Within a segment the Hamiltonian is constant, so `substeps` must not
    change the result; it exists for future time-varying schedules and is
    exercised by tests.
    """
    if substeps < 1:
        raise ShapeError(f"substeps must be >= 1, got {substeps}")
    dim = path.d ** path.n
    total = np.eye(dim, dtype=np.complex128)
    for seg in path.segments:
        h = np.zeros((dim, dim), dtype=np.complex128)
        for term in seg.terms:
            h += term.r * embed(term.h, list(term.support), path.d, path.n).mat
        step = expm(-1j * (seg.duration / substeps) * h)
        seg_u = np.linalg.matrix_power(step, substeps)
        total = seg_u @ total
    return Operator(path.d, path.n, total)


def path_cost(path):
    """Integrated pulse strength sum_segments ds * sum_j |r_j|."""
    return float(
        sum(seg.duration * sum(abs(t.r) for t in seg.terms) for seg in path.segments)
    )


def unitary_hash(u, decimals=12):
    """Reproducibility hash of the compiled unitary (entries rounded)."""
    rounded = np.round(u.mat, decimals)
    payload = rounded.tobytes() + f"{u.d}:{u.n}".encode()
    return hashlib.sha256(payload).hexdigest()


@dataclass(frozen=True)
class CertificateReport:
    d: int
    n: int
    path_cost: float
    cis: float
    magic_power_lower: float
    cohering_power_lower: float
    cis_bound: float
    magic_bound: float
    coherence_bound: float
    compiled_unitary_hash: str
    all_bounds_hold: bool
    tolerance: float = 1e-7

    def to_json_dict(self):
        return {
            "schema": "pauli-lens/1",
            "kind": "cost-audit",
            "d": self.d,
            "n": self.n,
            "path_cost": self.path_cost,
            "cis": self.cis,
            "magic_power_lower": self.magic_power_lower,
            "cohering_power_lower": self.cohering_power_lower,
            "cis_bound": self.cis_bound,
            "magic_bound": self.magic_bound,
            "coherence_bound": self.coherence_bound,
            "compiled_unitary_hash": self.compiled_unitary_hash,
            "all_bounds_hold": self.all_bounds_hold,
            "tolerance": self.tolerance,
        }


def certificate_bounds(d, cis, magic_lower, coherence_lower):
    cis_bound = cis / 8.0
    magic_bound = np.e / (8.0 * d * d * _LOG2E) * magic_lower
    coherence_bound = coherence_lower / (8.0 * np.log2(d))
    return float(cis_bound), float(magic_bound), float(coherence_bound)


def complexity_certificate(path, restarts=12, seed=0, samples=64, tol=1e-7):
    """Audit the three circuit-cost lower bounds on an exhibited path."""
    u = compile_unitary(path)
    cost = path_cost(path)
    cis = circuit_sensitivity(u).value
    magic = magic_power_search(u, restarts=restarts, seed=seed).value
    coh = cohering_power_search(u, restarts=restarts, seed=seed, samples=samples).value
    cis_b, magic_b, coh_b = certificate_bounds(path.d, cis, magic, coh)
    holds = all(cost >= b - tol for b in (cis_b, magic_b, coh_b))
    return CertificateReport(
        path.d,
        path.n,
        cost,
        cis,
        magic,
        coh,
        cis_b,
        magic_b,
        coh_b,
        unitary_hash(u),
        holds,
        tol,
    )


def reaudit_certificate(report_dict):
    """Re-check the bound inequalities recorded in a certificate report.

    Returns True when path_cost >= each recorded bound - tolerance and the
    stored all_bounds_hold flag is consistent with the numbers.
    """
    try:
        cost = float(report_dict["path_cost"])
        bounds = [
            float(report_dict["cis_bound"]),
            float(report_dict["magic_bound"]),
            float(report_dict["coherence_bound"]),
        ]
        tol = float(report_dict.get("tolerance", 1e-7))
        flag = bool(report_dict["all_bounds_hold"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed certificate report: {exc}") from exc
    holds = all(cost >= b - tol for b in bounds)
    return holds and flag == holds


@dataclass(frozen=True)
class GateTaxonomy:
    clifford: bool
    stable: bool
    gaussian_stable: object  # bool for qubits, None otherwise
    magic_entropy: float
    cis: float
    cis_gaussian: object

    def to_json_dict(self):
        return {
            "schema": "pauli-lens/1",
            "kind": "classify",
            "clifford": self.clifford,
            "stable": self.stable,
            "gaussian_stable": self.gaussian_stable,
            "magic_entropy": self.magic_entropy,
            "cis": self.cis,
            "cis_gaussian": self.cis_gaussian,
        }


def classify_gate(u, tol=1e-8):
    """One-stop taxonomy: Clifford / stable / Gaussian-stable membership
    plus the magic entropy and both sensitivities."""
    if not is_unitary(u, tol):
        raise ShapeError("classify_gate requires a unitary input")
    gaussian = None
    cis_g = None
    if u.d == 2:
        gaussian = is_matchgate(u, tol)
        cis_g = gaussian_circuit_sensitivity(u).value
    return GateTaxonomy(
        is_clifford(u, tol),
        is_stable(u, tol),
        gaussian,
        magic_entropy(u),
        circuit_sensitivity(u).value,
        cis_g,
    )
