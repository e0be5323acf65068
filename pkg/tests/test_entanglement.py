import math

import numpy as np
import pytest

from conftest import mode_rotate, random_antisym, random_unitary
from h2ent.entanglement import (AntisymW, SlaterSpectrum, concurrence4, make_antisym,
                                reduced_density, slater_decompose, slater_rank,
                                von_neumann_entropy)
from h2ent.specfun import binary_entropy

INV_SQRT8 = 1.0 / (2.0 * math.sqrt(2.0))


def norm2(w):
    return float(np.sum(np.abs(w.w) ** 2))


def test_make_antisym_single_pair():
    w = make_antisym([1.0, 0, 0, 0, 0, 0], n=4)
    assert w.w[0, 1] == 0.5
    assert w.w[1, 0] == -0.5
    assert norm2(w) == pytest.approx(0.5, abs=1e-15)


def test_make_antisym_two_pairs_uniform_rescale():
    w = make_antisym([1.0, 0, 0, 0, 0, 1.0], n=4)
    assert w.w[0, 1] == pytest.approx(INV_SQRT8, abs=1e-15)
    assert w.w[2, 3] == pytest.approx(INV_SQRT8, abs=1e-15)


def test_make_antisym_preserves_phase():
    w = make_antisym([5.0j], n=2)
    assert w.w[0, 1] == pytest.approx(0.5j, abs=1e-15)


def test_make_antisym_rejects_bad_input():
    with pytest.raises(ValueError):
        make_antisym([0.0] * 6, n=4)           # all zero
    with pytest.raises(ValueError):
        make_antisym([1.0, 2.0, 3.0], n=3)     # odd dimension
    with pytest.raises(ValueError):
        make_antisym([1.0, 2.0], n=4)          # wrong entry count


def test_concurrence_of_single_slater_determinant_is_zero():
    w = make_antisym([1.0, 0, 0, 0, 0, 0], n=4)
    assert concurrence4(w) == pytest.approx(0.0, abs=1e-15)
    assert slater_rank(slater_decompose(w), 1e-10) == 1


def test_concurrence_of_maximally_entangled_state_is_one():
    w = make_antisym([1.0, 0, 0, 0, 0, 1.0], n=4)
    assert concurrence4(w) == pytest.approx(1.0, abs=1e-14)


def test_concurrence_requires_dimension_four():
    with pytest.raises(ValueError):
        concurrence4(make_antisym([1.0], n=2))
    with pytest.raises(ValueError):
        concurrence4(make_antisym([1.0] + [0.0] * 14, n=6))


def test_slater_decompose_block_state():
    w = make_antisym([1.0, 0, 0, 0, 0, 0], n=4)
    spec = slater_decompose(w)
    assert spec.z[0] == pytest.approx(0.5, abs=1e-14)
    assert spec.z[1] == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_slater_spectrum_normalization(rng, n):
    for _ in range(20):
        spec = slater_decompose(random_antisym(rng, n))
        assert len(spec.z) <= n // 2
        assert float(np.sum(spec.z ** 2)) == pytest.approx(0.25, abs=1e-12)


def test_slater_decompose_surfaces_pairing_violation():
    # a non-antisymmetric matrix has no doubly degenerate w^dag w spectrum
    w = np.zeros((4, 4), dtype=complex)
    w[0, 1], w[1, 0] = 0.7, -0.1
    w *= math.sqrt(0.5 / np.sum(np.abs(w) ** 2))
    with pytest.raises(RuntimeError):
        slater_decompose(AntisymW(n=4, w=w))


def test_slater_decompose_surfaces_eigensolver_failure():
    w = np.full((4, 4), np.nan, dtype=complex)
    with pytest.raises((np.linalg.LinAlgError, ValueError)):
        slater_decompose(AntisymW(n=4, w=w))


def test_slater_rank_counts_above_tolerance():
    spec = SlaterSpectrum(z=np.array([0.5, 0.0]), n=4)
    assert slater_rank(spec, 1e-10) == 1
    spec2 = SlaterSpectrum(z=np.array([0.49, 0.099]), n=4)
    assert slater_rank(spec2, 1e-6) == 2
    with pytest.raises(ValueError):
        slater_rank(spec, 0.0)


def test_reduced_density_of_block_state():
    w = make_antisym([1.0, 0, 0, 0, 0, 0], n=4)
    rho = reduced_density(w)
    assert np.allclose(rho, np.diag([0.5, 0.5, 0.0, 0.0]), atol=1e-14)


def test_reduced_density_unit_trace_and_paired_eigenvalues(rng):
    for _ in range(20):
        w = random_antisym(rng, 4)
        rho = reduced_density(w)
        assert np.allclose(rho, rho.conj().T, atol=1e-12)
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        evals = np.sort(np.linalg.eigvalsh(rho))[::-1]
        assert np.all(evals >= -1e-12)
        z = slater_decompose(w).z
        expect = np.sort(np.repeat(2.0 * z ** 2, 2))[::-1]
        assert np.allclose(evals, expect, atol=1e-12)


def test_entropy_of_single_determinant_is_one():
    spec = SlaterSpectrum(z=np.array([0.5, 0.0]), n=4)
    assert von_neumann_entropy(spec) == pytest.approx(1.0, abs=1e-14)


def test_entropy_of_maximally_mixed_state_is_two():
    spec = SlaterSpectrum(z=np.array([INV_SQRT8, INV_SQRT8]), n=4)
    assert von_neumann_entropy(spec) == pytest.approx(2.0, abs=1e-14)


def test_entropy_reduces_to_binary_entropy_for_two_blocks():
    for c1sq in np.linspace(1e-6, 1.0 - 1e-6, 23):
        z = np.array([math.sqrt(c1sq) / 2.0, math.sqrt(1.0 - c1sq) / 2.0])
        spec = SlaterSpectrum(z=np.sort(z)[::-1], n=4)
        assert von_neumann_entropy(spec) == pytest.approx(
            1.0 + binary_entropy(c1sq), abs=1e-10)


def test_entropy_via_density_matrix_matches_spectrum(rng):
    for _ in range(15):
        w = random_antisym(rng, 4)
        spec = slater_decompose(w)
        rho = reduced_density(w)
        evals = np.linalg.eigvalsh(rho)
        evals = evals[evals > 1e-14]
        s_rho = float(-np.sum(evals * np.log2(evals)))
        assert s_rho == pytest.approx(von_neumann_entropy(spec), abs=1e-10)


def test_measures_invariant_under_mode_rotation(rng):
    for _ in range(20):
        w = random_antisym(rng, 4)
        u = random_unitary(rng, 4)
        wp = mode_rotate(w, u)
        assert norm2(wp) == pytest.approx(0.5, abs=1e-12)
        assert concurrence4(wp) == pytest.approx(concurrence4(w), abs=1e-10)
        assert np.allclose(slater_decompose(wp).z, slater_decompose(w).z, atol=1e-10)


def test_concurrence_equals_8_z1z2_for_real_block_family(rng):
    for _ in range(30):
        th = rng.uniform(0.0, 2.0 * math.pi)
        c1, c2 = math.cos(th), math.sin(th)
        entries = [(c1 + c2) / 4, 0, (c1 - c2) / 4, -(c1 - c2) / 4, 0, (c1 + c2) / 4]
        w = make_antisym(entries, n=4)
        z = slater_decompose(w).z
        assert concurrence4(w) == pytest.approx(8.0 * z[0] * z[1], abs=1e-12)


def test_rotated_single_determinants_have_zero_concurrence(rng):
    for _ in range(30):
        base = make_antisym([1.0, 0, 0, 0, 0, 0], n=4)
        wp = mode_rotate(base, random_unitary(rng, 4))
        assert concurrence4(wp) < 1e-8
        assert slater_rank(slater_decompose(wp), 1e-6) == 1
