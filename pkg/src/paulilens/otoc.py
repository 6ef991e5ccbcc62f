"""OTOCs and the averaged 4-point / 8-point correlator identities.

Every closed form ships with a direct-enumeration oracle (public, suffix
`_oracle`); reports carry both sides and their absolute difference.

Conventions.  <M> = Tr(M) / d^n.  The probe region D is the trailing
qudits; averaged insertion sites are the leading n-k ones.  Single-site
insertions enter as P M P^dag with P the raw Pauli word, which at d = 2
coincides with conjugation by the Hermitian strings X, Y, Z and is
phase-convention independent; the closed forms assume a Hermitian
evolved observable.

The weight-m 8-point closed form is stated for the convolution O*O.  For
operators with non-commuting Pauli support the literal operator-product
8-point average differs from that closed form (their equality silently
needs mutually commuting support); what the closed form does equal is
the direct 4-point average of the convolution operator itself.  We
therefore pair the closed form with the convolution 4-point enumeration
as its oracle and additionally expose the literal 8-point average as
`eight_point_raw_oracle` for inspection.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .errors import ShapeError
from .ops import Operator, conjugate, embed, l2_norm, single_site_paulis
from .spectrum import influence_local, pauli_spectrum
from .wigner import convolve


def otoc(u_t, o_d, o_a):
    """C(t) = 1/2 ||[O_D(t), O_A]||_2^2 with O_D(t) = U_t O_D U_t^dag."""
    evolved = conjugate(u_t, o_d)
    comm = evolved.mat @ o_a.mat - o_a.mat @ evolved.mat
    return float(0.5 * np.vdot(comm, comm).real / o_d.dim)


@dataclass(frozen=True)
class CorrelatorReport:
    lhs: float
    rhs: float

    @property
    def abs_err(self):
        return abs(self.lhs - self.rhs)


def _move_site_last(o, site):
    if site in (None, o.n - 1):
        return o
    perm = list(range(o.n))
    perm[site], perm[o.n - 1] = perm[o.n - 1], perm[site]
    t = o.mat.reshape([o.d] * (2 * o.n))
    t = t.transpose(perm + [o.n + p for p in perm])
    return Operator(o.d, o.n, t.reshape(o.dim, o.dim))


def avg_otoc_weight1_oracle(o):
    """E over sites j < n-1 and non-identity Paulis P at j of <O P O P^dag>."""
    singles = single_site_paulis(o.d)
    d2 = o.d * o.d
    total = 0.0
    for j in range(o.n - 1):
        for code in range(1, d2):
            p = embed(singles[code], [j], o.d, o.n).mat
            total += np.trace(o.mat @ p @ o.mat @ p.conj().T).real / o.dim
    return total / ((o.n - 1) * (d2 - 1))


def avg_otoc_weight1(o_dt, d_site=None):
    """Average OTOC-influence relation for weight-1 probes.

    lhs: direct enumeration; rhs: 1 - d^2/(d^2-1) * mean_j I_j[O_D(t)]
    over the n-1 sites away from D.  `d_site` moves the probe region to
    the last site first (swap conjugation).
    """
    if o_dt.n < 2:
        raise ShapeError("avg_otoc_weight1 needs n >= 2")
    o = _move_site_last(o_dt, d_site)
    lhs = avg_otoc_weight1_oracle(o)
    spec = pauli_spectrum(o)
    mean_inf = np.mean([influence_local(spec, j) for j in range(o.n - 1)])
    d2 = o.d * o.d
    rhs = 1.0 - d2 / (d2 - 1.0) * float(mean_inf)
    return CorrelatorReport(lhs, rhs)


def krawtchouk(m, x, n, q):
    """K_m(x; n, q) = sum_j (-1)^j (q-1)^{m-j} C(x,j) C(n-x, m-j)."""
    if not (0 <= m <= n and 0 <= x <= n):
        raise ShapeError(f"krawtchouk arguments out of range: m={m}, x={x}, n={n}")
    return sum(
        (-1) ** j * (q - 1) ** (m - j) * comb(x, j) * comb(n - x, m - j)
        for j in range(m + 1)
    )


def krawtchouk_second_form(m, x, n, q):
    """Equivalent rewriting sum_j (-q)^j (q-1)^{m-j} C(n-j, m-j) C(x,j)."""
    if not (0 <= m <= n and 0 <= x <= n):
        raise ShapeError(f"krawtchouk arguments out of range: m={m}, x={x}, n={n}")
    return sum(
        (-q) ** j * (q - 1) ** (m - j) * comb(n - j, m - j) * comb(x, j)
        for j in range(m + 1)
    )


def _require_region(o, k, m):
    if o.d != 2:
        raise ShapeError("weight-m correlator identities are qubit-only")
    if not (1 <= k < o.n):
        raise ShapeError(f"region size k={k} must satisfy 1 <= k < n={o.n}")
    if not (0 <= m <= o.n - k):
        raise ShapeError(f"weight m={m} must satisfy 0 <= m <= n-k={o.n - k}")


def _hermitian_singles():
    x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    return {1: x, 2: z, 3: y}


def four_point_average(o, k, m):
    """E over size-m subsets of the leading n-k sites and weight-m
    Hermitian Paulis P of <O P O P>, for an arbitrary (even non-unit-norm)
    operator O."""
    _require_region(o, k, m)
    if m == 0:
        return float(np.trace(o.mat @ o.mat).real / o.dim)
    singles = _hermitian_singles()
    terms = []
    for sites in combinations(range(o.n - k), m):
        for codes in product((1, 2, 3), repeat=m):
            small = np.eye(1, dtype=np.complex128)
            for c in codes:
                small = np.kron(small, singles[c])
            p = embed(small, list(sites), 2, o.n).mat
            terms.append(np.trace(o.mat @ p @ o.mat @ p).real / o.dim)
    return float(np.mean(terms))


def region_overlap_counts(n, k):
    """Per-label count of support sites inside the leading n-k region."""
    idx = np.arange(4 ** n)
    counts = np.zeros(4 ** n, dtype=int)
    for site in range(n - k):
        counts += (idx // 4 ** site) % 4 != 0
    return counts


def weighted_influence_sum(probs, n, k, j):
    """I^{(j)}_{[n-k]} = sum over size-j subsets S of the region of
    sum_{a : S subset supp(a)} P[a], via the binomial recount."""
    counts = region_overlap_counts(n, k)
    weights = np.array([comb(int(c), j) for c in counts], dtype=float)
    return float(weights @ probs)


def krawtchouk_influence_form(probs, n, k, m):
    """(1 / C(n-k, m)) sum_j (-4/3)^j C(n-k-j, m-j) I^{(j)}_{[n-k]}."""
    total = 0.0
    for j in range(m + 1):
        total += (-4.0 / 3.0) ** j * comb(n - k - j, m - j) * weighted_influence_sum(
            probs, n, k, j
        )
    return total / comb(n - k, m)


def avg_4pt_weight_m_oracle(o, k, m):
    return four_point_average(o, k, m)


def avg_4pt_weight_m(o_dt, k, m):
    """Weight-m 4-point correlator vs its Krawtchouk-weighted closed form."""
    _require_region(o_dt, k, m)
    lhs = four_point_average(o_dt, k, m)
    spec = pauli_spectrum(o_dt)
    rhs = krawtchouk_influence_form(spec.probs, o_dt.n, k, m)
    return CorrelatorReport(lhs, float(rhs))


def avg_8pt_oracle(o, k, m):
    """Resolved oracle: direct 4-point average of the convolution O*O."""
    q = convolve(o, o)
    return four_point_average(q, k, m)


def eight_point_raw_oracle(o, k, m):
    """Literal operator-product average E <(O P)^4>; differs from the
    closed form unless the Pauli support of O is mutually commuting."""
    _require_region(o, k, m)
    if m == 0:
        return float(np.trace(np.linalg.matrix_power(o.mat, 4)).real / o.dim)
    singles = _hermitian_singles()
    terms = []
    for sites in combinations(range(o.n - k), m):
        for codes in product((1, 2, 3), repeat=m):
            small = np.eye(1, dtype=np.complex128)
            for c in codes:
                small = np.kron(small, singles[c])
            p = embed(small, list(sites), 2, o.n).mat
            op = o.mat @ p
            terms.append(np.trace(np.linalg.matrix_power(op, 4)).real / o.dim)
    return float(np.mean(terms))


def avg_8pt(o_dt, k, m):
    """Weight-m 8-point closed form vs the convolution 4-point oracle.

    rhs = ||O*O||_2^2 * Krawtchouk-influence form of the normalized
    convolution; lhs = direct 4-point enumeration of O*O (see the module
    docstring for why this, and not the literal 8-point average, is the
    quantity the closed form computes).
    """
    _require_region(o_dt, k, m)
    q = convolve(o_dt, o_dt)
    lhs = four_point_average(q, k, m)
    norm_sq = l2_norm(q) ** 2
    if norm_sq < 1e-300:
        return CorrelatorReport(lhs, 0.0)
    qhat = Operator(2, q.n, q.mat / np.sqrt(norm_sq))
    rhs = norm_sq * krawtchouk_influence_form(pauli_spectrum(qhat).probs, q.n, k, m)
    return CorrelatorReport(lhs, float(rhs))
