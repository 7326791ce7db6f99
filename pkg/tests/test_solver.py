"""Pseudospectral oracle: spectra, convergence, and the coupling bisection."""

import math

import numpy as np
import pytest

from salpeter_bounds import potentials as pot
from salpeter_bounds import solver as sv
from salpeter_bounds.errors import BracketError, ConvergenceError, DomainError

ZERO = pot.tabulated([0.0, 50.0], [0.0, 0.0])


def test_free_spectrum_3d():
    cfg = sv.SolverConfig(m=1.0, alpha=2, dimension=3, L=20.0, N=64)
    res = sv.ground_state_3d_swave(ZERO, cfg)
    exact = 2.0 * math.sqrt((math.pi / 20.0) ** 2 + 1.0)
    assert res.mass == pytest.approx(exact, rel=1e-12)
    assert res.binding_energy == res.mass - 2.0


def test_free_spectrum_1d():
    cfg = sv.SolverConfig(m=0.7, alpha=2, dimension=1, L=20.0, N=64)
    res = sv.ground_state_1d(ZERO, cfg)
    assert res.mass == pytest.approx(1.4, rel=1e-12)


def test_kinetic_operator_on_sine_modes():
    L, N, m, alpha = 17.0, 128, 0.7, 2.0
    j = np.arange(1, N)
    for k in (1, 5, 31):
        mode = np.sin(math.pi * k * j / N)
        out = sv.apply_kinetic_3d(mode, L, m, alpha)
        eps = alpha * math.sqrt((k * math.pi / L) ** 2 + m * m)
        assert np.max(np.abs(out - eps * mode)) < 1e-12 * eps


def test_wavefunction_normalization():
    E = pot.exponential(2.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=128)
    res = sv.ground_state_3d_swave(E, cfg)
    dr = res.box_size / res.grid_count
    assert np.sum(res.wavefunction**2) * dr == pytest.approx(1.0, abs=1e-10)


def test_rayleigh_quotient_upper_bounds_ground_state():
    E = pot.exponential(2.0, 1.0)
    m, alpha, L, N = 1.0, 2.0, 20.0, 128
    r, H = sv.build_hamiltonian_3d(E, m, alpha, L, N)
    M, _, _ = sv.solve_once_3d(E, m, alpha, L, N)
    rng = np.random.default_rng(3)
    for _ in range(5):
        v = rng.standard_normal(N - 1)
        v /= np.linalg.norm(v)
        assert M <= v @ H @ v + 1e-10


def test_1d_even_ground_state():
    E = pot.exponential(1.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=2, dimension=1, L=24.0, N=256)
    res = sv.ground_state_1d(E, cfg)
    u = res.wavefunction
    asym = np.max(np.abs(u - u[::-1])) / np.max(np.abs(u))
    assert asym < 1e-8


def test_mass_monotone_in_coupling():
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=128)
    masses = [
        sv.ground_state_3d_swave(pot.exponential(g, 1.0), cfg).mass
        for g in (2.0, 4.0, 6.0)
    ]
    assert masses[0] > masses[1] > masses[2]
    # deep 1D states converge only quadratically in the spacing (the |x| kink
    # of the potential); 1e-5 is ample for an O(1) monotonicity check
    cfg1 = sv.SolverConfig(m=1.0, alpha=2, dimension=1, L=24.0, N=256, eigen_tol=1e-5)
    m1 = [
        sv.ground_state_1d(pot.exponential(g, 1.0), cfg1).mass for g in (2.0, 5.0)
    ]
    assert m1[0] > m1[1]


@pytest.mark.parametrize(
    "V",
    [
        pot.exponential(3.0, 1.0),
        pot.power_exponential(4.0, 1.0),
        pot.logarithmic(0.5, 2.5),
    ],
    ids=["exp", "pexp", "log"],
)
def test_self_convergence_smooth_potentials(V):
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=128)
    res = sv.ground_state_3d_swave(V, cfg)
    assert res.converged
    assert res.refinement_delta_rel < 1e-6


def test_grid_drift_decreases_with_refinement():
    V = pot.exponential(6.0, 1.0)
    masses = [sv.solve_once_3d(V, 1.0, 2.0, 20.0, N)[0] for N in (128, 256, 512, 1024)]
    drifts = [abs(a - b) for a, b in zip(masses, masses[1:])]
    assert drifts[0] > drifts[1] > drifts[2]


def test_singular_potential_solvable():
    # grid never contains r = 0, so the r^(-1/2) core is evaluable;
    # convergence is slower than for smooth kinds but still achieved
    S = pot.singular(3.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=128)
    res = sv.ground_state_3d_swave(S, cfg)
    assert res.converged
    assert res.mass < 2.0  # g = 3 binds at beta = 1


def test_weakly_bound_state_box_doubling():
    # alpha = 1 exponential well binds weakly; the relativistic tail floor
    # exp(-m L / 2) forces at least one box doubling
    E = pot.exponential(1.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=1, dimension=1, N=128)
    res = sv.ground_state_1d(E, cfg)
    assert res.converged
    assert res.box_size > 20.0
    assert res.mass == pytest.approx(0.5625, abs=2e-3)


def test_nonconvergence_raises():
    E = pot.exponential(2.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=64, eigen_tol=1e-14, max_grid=256)
    with pytest.raises(ConvergenceError):
        sv.ground_state_3d_swave(E, cfg)


def test_config_validation():
    with pytest.raises(DomainError):
        sv.SolverConfig(m=-1.0)
    with pytest.raises(DomainError):
        sv.SolverConfig(alpha=3)
    with pytest.raises(DomainError):
        sv.SolverConfig(dimension=2)
    with pytest.raises(DomainError):
        sv.SolverConfig(N=4)
    with pytest.raises(DomainError):
        sv.ground_state_1d(ZERO, sv.SolverConfig(dimension=3))
    with pytest.raises(DomainError):
        sv.ground_state_3d_swave(ZERO, sv.SolverConfig(dimension=1))


def test_iterative_path_matches_dense():
    E = pot.exponential(6.0, 1.0)
    dense, _, _ = sv.solve_once_3d(E, 1.0, 2.0, 20.0, 512, dense_max=2048)
    iterative, _, _ = sv.solve_once_3d(E, 1.0, 2.0, 20.0, 512, dense_max=256)
    assert iterative == pytest.approx(dense, rel=1e-9)


def test_critical_coupling_bisection():
    E = pot.exponential(1.0, 1.0)
    cfg = sv.SolverConfig(m=1.0, alpha=2, N=128)
    res = sv.critical_coupling_exact(E, 1.0, 2, cfg, g_tol_rel=1e-6)
    assert res.converged
    # frozen from the first converged run (stable under grid doubling)
    assert res.coupling == pytest.approx(7.82803, rel=2e-5)
    assert abs(res.mass_residual) < 1e-4
    assert res.iterations == len(res.bracket_history)
    # bracket invariant: M(lo) > 0 > M(hi), spot-checked on a sample
    for lo, hi, N in res.bracket_history[:: max(1, len(res.bracket_history) // 4)]:
        assert lo < hi
        m_lo = sv.solve_once_3d(pot.exponential(lo, 1.0), 1.0, 2.0, res.box_size, N)[0]
        m_hi = sv.solve_once_3d(pot.exponential(hi, 1.0), 1.0, 2.0, res.box_size, N)[0]
        assert m_lo > 0.0 > m_hi


def test_critical_coupling_bracket_failure():
    # a potential with no attractive part never drives the mass to zero
    cfg = sv.SolverConfig(m=1.0, alpha=2, L=20.0, N=32)
    with pytest.raises(BracketError):
        sv.critical_coupling_exact(ZERO, 1.0, 2, cfg)


def test_critical_coupling_beta_invariance():
    cfg = sv.SolverConfig(N=128)
    a = sv.critical_coupling_exact(pot.exponential(1.0, 1.0), 1.0, 2, cfg)
    b = sv.critical_coupling_exact(pot.exponential(1.0, 0.5), 2.0, 2, cfg)
    # (m, R) -> (2m, R/2) leaves beta = mR fixed; the discretized problem is
    # identical up to overall scale
    assert b.coupling == pytest.approx(a.coupling, rel=1e-10)
