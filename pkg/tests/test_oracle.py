import math

import numpy as np
import pytest

from bosonspectra import (
    CapacityError,
    GaussianWavepacket,
    LambdaMatrix,
    fock_evolve,
    lambda_from_photons,
    make_beamsplitter_50_50,
    make_dft,
    make_random_unitary,
    oracle_probability,
    verify_against_oracle,
)
from conftest import hom_lambda, random_unit_rows


def random_gaussians(rng, n):
    return [
        GaussianWavepacket(rng.uniform(-1.5, 1.5), rng.uniform(0.4, 1.6), rng.uniform(-2.0, 2.0))
        for _ in range(n)
    ]


class TestFockEvolve:
    def test_single_photon_splits_evenly(self):
        bs = make_beamsplitter_50_50()
        state = fock_evolve(bs, LambdaMatrix([[1.0]]), (1,))
        r = 1.0 / math.sqrt(2.0)
        assert state.amplitudes[(1, 0)] == pytest.approx(r)
        assert state.amplitudes[(0, 1)] == pytest.approx(r)

    def test_hom_indistinguishable_amplitudes(self):
        bs = make_beamsplitter_50_50()
        state = fock_evolve(bs, LambdaMatrix([[1.0], [1.0]]), (1, 2))
        assert state.amplitudes[(2, 0)] == pytest.approx(1.0 / math.sqrt(2.0))
        assert (1, 1) not in state.amplitudes  # anti-bunching amplitude pruned at 0
        assert state.norm_squared() == pytest.approx(1.0, abs=1e-12)

    def test_norm_preserved_random_instance(self, rng):
        u = make_random_unitary(5, 91)
        lam = random_unit_rows(rng, 3, 2)
        state = fock_evolve(u, lam, (1, 3, 5))
        assert state.norm_squared() == pytest.approx(1.0, abs=1e-9)

    def test_photon_number_and_spectral_counts_preserved(self, rng):
        u = make_random_unitary(4, 51)
        lam = LambdaMatrix(np.eye(3))  # distinguishable: fixed spectral profile
        state = fock_evolve(u, lam, (1, 2, 3))
        nb = state.basis_size
        for occ in state.amplitudes:
            assert sum(occ) == 3
            per_basis = tuple(sum(occ[i::nb]) for i in range(nb))
            assert per_basis == (1, 1, 1)

    def test_caps_enforced(self):
        with pytest.raises(CapacityError):
            fock_evolve(make_dft(9), LambdaMatrix([[1.0]]), (1,))
        with pytest.raises(CapacityError):
            fock_evolve(make_dft(8), LambdaMatrix(np.ones((7, 1))), tuple(range(1, 8)))


class TestOracleProbability:
    def test_hom_dip_closed_form(self):
        bs = make_beamsplitter_50_50()
        for alpha in np.linspace(0.0, 1.0, 11):
            state = fock_evolve(bs, hom_lambda(float(alpha)), (1, 2))
            p = oracle_probability(state, (1, 1), "nonresolved")
            assert p == pytest.approx((1.0 - alpha**2) / 2.0, abs=1e-12)

    def test_resolved_outcome_lookup(self):
        bs = make_beamsplitter_50_50()
        alpha = 0.6
        state = fock_evolve(bs, hom_lambda(alpha), (1, 2))
        assert oracle_probability(state, ((1, 1), (0, 0)), "resolved") == pytest.approx(0.0)
        bunched = oracle_probability(state, ((2, 0), (0, 0)), "resolved")
        assert bunched == pytest.approx(alpha**2 / 2.0)

    def test_nonresolved_probabilities_sum_to_one(self, rng):
        u = make_random_unitary(4, 77)
        lam = random_unit_rows(rng, 2, 2)
        state = fock_evolve(u, lam, (2, 4))
        total = 0.0
        for b1 in range(4):
            for b2 in range(b1, 4):
                sig = [0, 0, 0, 0]
                sig[b1] += 1
                sig[b2] += 1
                total += oracle_probability(state, tuple(sig), "nonresolved")
        assert total == pytest.approx(1.0, abs=1e-9)


class TestVerifyAgainstOracle:
    @pytest.mark.parametrize("detector", ["nonresolved", "resolved"])
    def test_gaussian_instances_agree(self, rng, detector):
        for trial in range(8):
            n = int(rng.integers(1, 4))
            m = int(rng.integers(n, 6))
            u = make_random_unitary(m, int(rng.integers(0, 10**6)))
            lam = lambda_from_photons(random_gaussians(rng, n))
            inputs = tuple(sorted(rng.choice(np.arange(1, m + 1), size=n, replace=False).tolist()))
            rows, dev = verify_against_oracle(u, lam, inputs, detector)
            assert dev <= 1e-9
            assert sum(p for _, p, _ in rows) == pytest.approx(1.0, abs=1e-9)

    def test_rotated_basis_still_agrees(self, rng):
        # The oracle consumes the same coefficient matrix as the engine,
        # so agreement must survive any basis rotation.
        u = make_random_unitary(4, 11)
        lam = random_unit_rows(rng, 3, 3)
        z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q, r = np.linalg.qr(z)
        w = q * (np.diag(r) / np.abs(np.diag(r)))
        rows, dev = verify_against_oracle(u, lam.rotated(w), None, "nonresolved")
        assert dev <= 1e-9
