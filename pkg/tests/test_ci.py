import math

import numpy as np
import pytest

from h2ent.ci import (E1S, HamiltonianBlock, ci_solve, ground_concurrence,
                      ground_entropy, h11, hamiltonian_block, solve_block, w_from_ci)
from h2ent.entanglement import concurrence4, slater_decompose, von_neumann_entropy
from h2ent.integrals import integral_set
from h2ent.specfun import binary_entropy

SQ2 = math.sqrt(0.5)
GRID = np.linspace(0.3, 8.0, 60)


def energy_of_angle(block, omega):
    c1, c2 = math.cos(omega), math.sin(omega)
    return (c1 * c1 * block.h11 + 2.0 * c1 * c2 * block.h12 + c2 * c2 * block.h22)


def test_h11_near_equilibrium():
    # frozen; the shallow minimum of the single-configuration curve
    assert h11(1.67) - 2.0 * E1S == pytest.approx(-0.09839885086607802, abs=1e-12)


def test_h11_repulsive_wall():
    assert h11(0.1) > h11(1.0)


def test_h11_dissociation_tail():
    # tends to m/2 above 2 E1S, approached through a -1/(2s) ionic tail
    assert h11(20.0) - 2.0 * E1S == pytest.approx(5.0 / 16.0 - 1.0 / 40.0, abs=1e-6)
    assert h11(500.0) - 2.0 * E1S == pytest.approx(5.0 / 16.0, abs=1.1e-3)


def test_block_symmetric_and_positive_coupling():
    for s in GRID:
        block = hamiltonian_block(float(s))
        assert block.h21 == block.h12
        assert block.h12 > 0.0
        assert block.h11 < block.h22


def test_block_variants_differ_as_documented():
    q = integral_set(2.0)
    blocks = {v: hamiltonian_block(2.0, v) for v in ("corrected", "printed")}
    assert blocks["corrected"].h11 == blocks["printed"].h11
    assert blocks["corrected"].h12 == blocks["printed"].h12
    delta = (-2.0 * (q.jp - q.kp) / (1.0 - q.S)
             + (q.j + 2.0 * q.k + q.m - 4.0 * q.l) / (2.0 * (1.0 - q.S) ** 2)
             + 2.0 * (q.jp - q.kp) / (1.0 + q.S)
             - (q.j + 2.0 * q.k + q.m - 4.0 * q.l) / (2.0 * (1.0 + q.S) ** 2))
    assert blocks["corrected"].h22 - blocks["printed"].h22 == pytest.approx(delta, rel=1e-12)


def test_block_rejects_unknown_variant():
    with pytest.raises(ValueError):
        hamiltonian_block(1.0, "bogus")


def test_ci_solution_normalized_and_variational():
    for s in GRID:
        sol = ci_solve(float(s))
        assert sol.c1 ** 2 + sol.c2 ** 2 == pytest.approx(1.0, abs=1e-12)
        assert sol.e_ground < min(sol.e_psi1, sol.e_psi2)
        assert sol.c1 > 0.0 and sol.c2 < 0.0   # h12 > 0, h11 < h22 on this grid


def test_closed_form_squares_match_eigenvector():
    for s in GRID:
        block = hamiltonian_block(float(s))
        sol = solve_block(block)
        t = 2.0 * block.h12 / (block.h11 - block.h22)
        c1_sq = 0.5 + 0.5 / math.sqrt(1.0 + t * t)
        c2_sq = 0.5 - 0.5 / math.sqrt(1.0 + t * t)
        assert sol.c1 ** 2 == pytest.approx(c1_sq, abs=1e-10)
        assert sol.c2 ** 2 == pytest.approx(c2_sq, abs=1e-10)


def test_energy_stationary_at_solution():
    h = 1e-6
    for s in (0.8, 1.67, 5.0):
        block = hamiltonian_block(s)
        sol = solve_block(block)
        omega = math.atan2(sol.c2, sol.c1)
        deriv = (energy_of_angle(block, omega + h) - energy_of_angle(block, omega - h)) / (2 * h)
        assert abs(deriv) < 1e-8


def test_decoupled_block():
    sol = solve_block(HamiltonianBlock(s=1.0, h11=-1.0, h12=0.0, h21=0.0, h22=1.0,
                                       variant="corrected"))
    assert (sol.c1, sol.c2) == (1.0, 0.0)
    assert not sol.degenerate


def test_degenerate_block_flagged():
    sol = solve_block(HamiltonianBlock(s=1.0, h11=0.5, h12=0.0, h21=0.0, h22=0.5,
                                       variant="corrected"))
    assert (sol.c1, sol.c2) == (1.0, 0.0)
    assert sol.degenerate
    assert sol.e_ground == 0.5


def test_symmetric_mixing_when_diagonal_degenerate():
    sol = solve_block(HamiltonianBlock(s=1.0, h11=0.3, h12=0.2, h21=0.2, h22=0.3,
                                       variant="corrected"))
    assert sol.c1 ** 2 == pytest.approx(0.5, abs=1e-14)
    assert sol.c2 ** 2 == pytest.approx(0.5, abs=1e-14)


def test_ground_eigenvector_sign_follows_coupling():
    up = solve_block(HamiltonianBlock(s=1.0, h11=0.0, h12=0.3, h21=0.3, h22=1.0,
                                      variant="corrected"))
    dn = solve_block(HamiltonianBlock(s=1.0, h11=0.0, h12=-0.3, h21=-0.3, h22=1.0,
                                      variant="corrected"))
    assert up.c2 < 0.0 < dn.c2
    assert up.c2 * 0.3 <= 0.0 and dn.c2 * (-0.3) <= 0.0


def test_dissociation_limit():
    sol = ci_solve(20.0)
    assert sol.e_ground - 2.0 * E1S == pytest.approx(0.0, abs=2e-3)
    assert sol.c1 ** 2 == pytest.approx(0.5, abs=1e-3)
    assert sol.c2 ** 2 == pytest.approx(0.5, abs=1e-3)


def test_equilibrium_numbers():
    # frozen values of this model at s = 1.67 (corrected variant)
    sol = ci_solve(1.67)
    assert (sol.e_ground - 2.0 * E1S) * 2.0 == pytest.approx(-0.23729970736710637, abs=1e-12)
    assert sol.c2 ** 2 == pytest.approx(0.019094376129162444, abs=1e-12)


def test_w_from_ci_single_configuration():
    w = w_from_ci(1.0, 0.0)
    assert w.w[0, 1] == w.w[2, 3] == w.w[0, 3] == 0.25
    assert w.w[1, 2] == -0.25
    assert w.w[0, 2] == w.w[1, 3] == 0.0
    assert concurrence4(w) == pytest.approx(0.0, abs=1e-15)


def test_w_from_ci_symmetric_mixture():
    w = w_from_ci(SQ2, SQ2)
    assert w.w[0, 1] == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)), abs=1e-15)
    assert w.w[0, 3] == pytest.approx(0.0, abs=1e-15)
    assert w.w[1, 2] == pytest.approx(0.0, abs=1e-15)
    assert concurrence4(w) == pytest.approx(1.0, abs=1e-14)


def test_w_from_ci_rejects_unnormalized():
    with pytest.raises(ValueError):
        w_from_ci(1.0, 0.5)


def test_concurrence_chain_identity(rng):
    for _ in range(100):
        th = rng.uniform(0.0, 2.0 * math.pi)
        c1, c2 = math.cos(th), math.sin(th)
        w = w_from_ci(c1, c2)
        z = slater_decompose(w).z
        target = 2.0 * abs(c1 * c2)
        assert concurrence4(w) == pytest.approx(target, abs=1e-12)
        assert 8.0 * z[0] * z[1] == pytest.approx(target, abs=1e-12)
        assert np.allclose(np.sort(z)[::-1],
                           sorted([abs(c1) / 2.0, abs(c2) / 2.0], reverse=True),
                           atol=1e-12)


def test_ground_concurrence_values():
    assert ground_concurrence(1.0, 0.0) == 0.0
    assert ground_concurrence(SQ2, -SQ2) == pytest.approx(1.0, abs=1e-14)


def test_ground_entropy_values_and_identity(rng):
    assert ground_entropy(1.0, 0.0) == pytest.approx(1.0, abs=1e-14)
    assert ground_entropy(SQ2, SQ2) == pytest.approx(2.0, abs=1e-14)
    for _ in range(25):
        th = rng.uniform(0.0, 2.0 * math.pi)
        c1, c2 = math.cos(th), math.sin(th)
        via_spectrum = von_neumann_entropy(slater_decompose(w_from_ci(c1, c2)))
        assert ground_entropy(c1, c2) == pytest.approx(via_spectrum, abs=1e-10)
        assert ground_entropy(c1, c2) == pytest.approx(
            1.0 + binary_entropy(c1 * c1), abs=1e-14)


def test_ground_measures_reject_unnormalized():
    with pytest.raises(ValueError):
        ground_concurrence(1.0, 1.0)
    with pytest.raises(ValueError):
        ground_entropy(0.2, 0.2)
