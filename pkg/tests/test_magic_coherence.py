import numpy as np
import pytest
from scipy.linalg import expm

from paulilens import (
    Operator,
    ShapeError,
    SingularStateError,
    circuit_sensitivity,
    cohering_power_search,
    coherence_rate,
    coherence_rate_bound_check,
    d_max,
    density_operator,
    fourier_entropy,
    gaussian_circuit_sensitivity,
    identity,
    is_clifford,
    lp_norm,
    magic_entropy,
    magic_power_search,
    magic_rate,
    magic_rate_bound,
    pauli_spectrum,
    rel_entropy_coherence,
)
from paulilens.coherence import dephase
from paulilens.io import gate_matrix
from paulilens.magic import entropy_gap_at
from paulilens.sampling import (
    hilbert_schmidt_state,
    random_hermitian,
    random_stable_unitary,
    random_unit_norm_operator,
    random_unitary_operator,
)
from paulilens.sensitivity import transition_matrix

T = Operator(2, 1, gate_matrix("T", 2))
CNOT = Operator(2, 2, gate_matrix("CNOT", 2))
TT = Operator(2, 2, np.kron(gate_matrix("T", 2), gate_matrix("T", 2)))


def test_is_clifford():
    assert is_clifford(CNOT)
    assert is_clifford(Operator(2, 1, gate_matrix("H", 2)))
    assert is_clifford(Operator(2, 1, gate_matrix("S", 2)))
    assert not is_clifford(T)


def test_magic_entropy_values():
    assert abs(magic_entropy(T) - 1) < 1e-9
    assert magic_entropy(CNOT) < 1e-9
    assert abs(magic_entropy(TT) - 1) < 1e-9


def test_magic_entropy_clifford_faithfulness(rng):
    cliffords = [CNOT, Operator(2, 2, np.kron(gate_matrix("H", 2), gate_matrix("S", 2)))]
    for u in cliffords:
        assert magic_entropy(u) < 1e-9
    t_aug = Operator(2, 2, CNOT.mat @ TT.mat)
    assert magic_entropy(t_aug) > 0.5


def test_magic_entropy_left_clifford_invariance(rng):
    u = random_unitary_operator(2, 2, rng)
    v = CNOT
    assert abs(magic_entropy(Operator(2, 2, v.mat @ u.mat)) - magic_entropy(u)) < 1e-9


def test_magic_entropy_tensor_maximization(rng):
    u1 = random_unitary_operator(2, 1, rng)
    u2 = random_unitary_operator(2, 1, rng)
    joint = Operator(2, 2, np.kron(u1.mat, u2.mat))
    expect = max(magic_entropy(u1), magic_entropy(u2))
    assert abs(magic_entropy(joint) - expect) < 1e-9


def test_magic_power_t_gate():
    res = magic_power_search(T, restarts=8, seed=0)
    assert res.value >= 1 - 1e-9
    assert res.exact


def test_magic_power_tensor_t():
    res = magic_power_search(TT, restarts=8, seed=0)
    assert res.value >= 2 - 1e-3


def test_magic_power_clifford_exact_zero():
    res = magic_power_search(CNOT, restarts=4, seed=0)
    assert res.value == 0.0 and res.converged and res.exact


def test_magic_power_witness_reproduces_value(rng):
    u = random_unitary_operator(2, 2, rng)
    res = magic_power_search(u, restarts=12, seed=3)
    t = transition_matrix(u).mat
    assert abs(entropy_gap_at(t, res.witness) - res.value) < 1e-8


def test_magic_power_traceless_projection_never_helps_witness(rng):
    # projecting any witness to its traceless part never decreases the gap
    for seed in range(3):
        u = random_unitary_operator(2, 2, rng)
        res = magic_power_search(u, restarts=8, seed=seed)
        w = np.array(res.witness, dtype=complex)
        if abs(w[0]) > 1e-9 and np.linalg.norm(w[1:]) > 1e-9:
            w0 = w.copy()
            w0[0] = 0
            t = transition_matrix(u).mat
            assert entropy_gap_at(t, w0) >= entropy_gap_at(t, w) - 1e-9


def test_magic_power_clifford_bi_invariance(rng):
    u = random_unitary_operator(2, 2, rng)
    base = magic_power_search(u, restarts=16, seed=1).value
    moved = Operator(2, 2, CNOT.mat @ u.mat @ np.kron(gate_matrix("H", 2), np.eye(2)))
    moved_val = magic_power_search(moved, restarts=16, seed=1).value
    assert abs(moved_val - base) < 0.05


def test_magic_power_subadditivity_exact_corpus():
    # T (x) T = (T x I) (I x T): 2 <= 1 + 1 + slack, with all values known
    t1 = Operator(2, 2, np.kron(gate_matrix("T", 2), np.eye(2)))
    t2 = Operator(2, 2, np.kron(np.eye(2), gate_matrix("T", 2)))
    v1 = magic_power_search(t1, restarts=8, seed=0).value
    v2 = magic_power_search(t2, restarts=8, seed=0).value
    vt = magic_power_search(TT, restarts=8, seed=0).value
    assert vt <= v1 + v2 + 0.05
    assert magic_power_search(CNOT, restarts=4, seed=0).value <= 0.05


def test_magic_sensitivity_relation(rng):
    gates = [T, CNOT, TT, random_unitary_operator(2, 2, rng)]
    for u in gates:
        m = magic_entropy(u)
        cis = circuit_sensitivity(u).value
        bound = 2 * (np.log2(u.n) + np.log2(u.d)) * (cis + 1)
        assert m <= bound + 1e-9


def test_magic_gaussian_sensitivity_relation(rng):
    gates = [TT, CNOT, random_unitary_operator(2, 2, rng)]
    for u in gates:
        m = magic_entropy(u)
        cis_g = gaussian_circuit_sensitivity(u).value
        bound = 2 * np.log2(2 * u.n) * (cis_g + 1)
        assert m <= bound + 1e-9


def test_magic_rate_commuting_is_zero(rng):
    h = Operator(2, 2, np.diag(rng.normal(size=4)))
    o = Operator(2, 2, np.diag(rng.normal(size=4).astype(complex)))
    o = Operator(2, 2, o.mat / np.sqrt(np.vdot(o.mat, o.mat).real / 4))
    assert abs(magic_rate(h, o)) < 1e-10


def test_magic_rate_finite_difference(rng):
    for _ in range(10):
        h = random_hermitian(2, 2, rng)
        o = random_unit_norm_operator(2, 2, rng)
        rate = magic_rate(h, o)
        eps = 1e-5

        def ent(t):
            ut = expm(-1j * t * h.mat)
            return fourier_entropy(
                pauli_spectrum(Operator(2, 2, ut @ o.mat @ ut.conj().T))
            )

        fd = (ent(eps) - ent(-eps)) / (2 * eps)
        assert abs(rate - fd) < 1e-5


def test_magic_rate_bound_statistical(rng):
    worst = 0.0
    for _ in range(100):
        h2 = random_hermitian(2, 2, rng)
        from paulilens import embed

        hbig = embed(h2.mat, [0, 1], 2, 2)
        o = random_unit_norm_operator(2, 2, rng)
        rate = abs(magic_rate(hbig, o))
        bound = magic_rate_bound(2, 2, lp_norm(hbig, np.inf))
        assert rate <= bound + 1e-9
        worst = max(worst, rate / bound)
    assert worst <= 1.0


# --- coherence -------------------------------------------------------------


def test_rel_entropy_coherence_examples():
    e0 = np.zeros((2, 2))
    e0[0, 0] = 1
    assert rel_entropy_coherence(density_operator(e0, 2, 1)) == 0.0
    assert abs(rel_entropy_coherence(density_operator(np.full((2, 2), 0.5), 2, 1)) - 1) < 1e-12
    assert abs(rel_entropy_coherence(density_operator(np.eye(4) / 4, 2, 2))) < 1e-12


def test_density_operator_validation():
    with pytest.raises(ShapeError):
        density_operator(np.diag([1.5, -0.5]), 2, 1)
    with pytest.raises(ShapeError):
        density_operator(np.diag([0.7, 0.7]), 2, 1)


def test_cohering_power_diagonal_phase_zero(rng):
    u = Operator(2, 2, np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, size=4))))
    res = cohering_power_search(u, restarts=8, seed=0, samples=64)
    assert res.value < 1e-9


def test_cohering_power_hadamard():
    u = Operator(2, 1, gate_matrix("H", 2))
    res = cohering_power_search(u, restarts=8, seed=0, samples=32)
    assert res.value >= 1 - 1e-9
    # witness objective reproduces the value
    before = rel_entropy_coherence(res.witness)
    after = rel_entropy_coherence(
        density_operator(u.mat @ res.witness.mat @ u.mat.conj().T, 2, 1)
    )
    assert abs(abs(after - before) - res.value) < 1e-8


def test_cohering_power_permutation_zero():
    u = Operator(2, 1, gate_matrix("X", 2))
    assert cohering_power_search(u, restarts=8, seed=0, samples=32).value < 1e-9


def test_coherence_rate_diagonal_state_zero(rng):
    rho = density_operator(np.diag([0.3, 0.2, 0.25, 0.25]), 2, 2)
    h = random_hermitian(2, 2, rng)
    assert abs(coherence_rate(h, rho)) < 1e-12
    flat = density_operator(np.eye(4) / 4, 2, 2)
    assert abs(coherence_rate(h, flat)) < 1e-12


def test_coherence_rate_finite_difference(rng):
    for _ in range(10):
        h = random_hermitian(2, 2, rng)
        rho = hilbert_schmidt_state(2, 2, rng)
        rop = density_operator(rho.mat, 2, 2)
        rate = coherence_rate(h, rop)
        eps = 1e-5

        def cr(t):
            ut = expm(-1j * t * h.mat)
            return rel_entropy_coherence(
                density_operator(ut @ rho.mat @ ut.conj().T, 2, 2)
            )

        fd = (cr(eps) - cr(-eps)) / (2 * eps)
        assert abs(rate - fd) < 1e-5


def test_coherence_rate_singular_diagonal():
    psi = np.zeros(4)
    psi[1] = 1.0
    rho = density_operator(np.outer(psi, psi), 2, 2)
    h = Operator(2, 2, np.eye(4))
    with pytest.raises(SingularStateError):
        coherence_rate(h, rho)


def test_d_max_examples(rng):
    rho = hilbert_schmidt_state(2, 2, rng)
    r = density_operator(rho.mat, 2, 2)
    assert abs(d_max(r, r).value) < 1e-9
    psi = np.zeros(4)
    psi[2] = 1.0
    pure = density_operator(np.outer(psi, psi), 2, 2)
    flat = density_operator(np.eye(4) / 4, 2, 2)
    assert abs(d_max(pure, flat).value - 2.0) < 1e-9  # n log d = 2


def test_d_max_binary_search_oracle(rng):
    rho = hilbert_schmidt_state(2, 2, rng)
    r = density_operator(rho.mat, 2, 2)
    sig = density_operator(dephase(rho.mat), 2, 2)
    val = d_max(r, sig).value
    lo, hi = 0.0, 2.0 ** 20
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if np.linalg.eigvalsh(mid * sig.mat - rho.mat)[0] >= 0:
            hi = mid
        else:
            lo = mid
    assert abs(val - np.log2(hi)) < 1e-6


def test_d_max_support_violation():
    proj = np.zeros((4, 4))
    proj[0, 0] = 1.0
    sig = density_operator(proj, 2, 2)
    psi = np.zeros(4)
    psi[1] = 1.0
    rho = density_operator(np.outer(psi, psi), 2, 2)
    rep = d_max(rho, sig)
    assert rep.support_violation and rep.value == float("inf")


def test_coherence_rate_bound(rng):
    plus = np.full((2, 2), 0.5)
    rho = density_operator(0.999 * plus + 0.001 * np.eye(2) / 2, 2, 1)
    h = Operator(2, 1, np.diag([1.0, -1.0]))
    rep = coherence_rate_bound_check(h, rho)
    assert rep.satisfied
    diag = density_operator(np.diag([0.4, 0.6]), 2, 1)
    rep = coherence_rate_bound_check(h, diag)
    assert abs(rep.rate) < 1e-12 and rep.satisfied


def test_coherence_rate_bound_statistical(rng):
    for _ in range(100):
        n = int(rng.integers(1, 4))
        h = random_hermitian(2, n, rng)
        rho = hilbert_schmidt_state(2, n, rng)
        rep = coherence_rate_bound_check(h, density_operator(rho.mat, 2, n))
        assert rep.satisfied


def test_coherence_rate_k_local_bound(rng):
    from paulilens import embed

    for _ in range(30):
        h2 = random_hermitian(2, 2, rng)
        hbig = embed(h2.mat, [0, 1], 2, 3)
        rho = hilbert_schmidt_state(2, 3, rng)
        rate = coherence_rate(hbig, density_operator(rho.mat, 2, 3))
        bound = 4 * lp_norm(hbig, np.inf) * 2 * np.log2(2)
        assert abs(rate) <= bound + 1e-9
