"""Acceptance suite: every release-gating criterion, one test each.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL
line per criterion alongside the measured numbers.
"""

import math
import time

import numpy as np

from bosonspectra import (
    GaussianWavepacket,
    LambdaMatrix,
    MixedPhotonSource,
    amplitude_resolved,
    distribution_nonresolved,
    distribution_resolved,
    lambda_from_photons,
    make_beamsplitter_50_50,
    make_random_unitary,
    permanent_naive,
    permanent_ryser,
    probability_distinguishable_fast,
    probability_indistinguishable_fast,
    probability_mixed,
    probability_nonresolved,
    verify_against_oracle,
)
from conftest import hom_lambda

HOM_ALPHAS = (0.0, 0.25, 0.5, 1.0 / math.sqrt(2.0), 1.0)


def report(num: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")


def limit_instances():
    """The 20 random (unitary, collision-free signature) pairs of criteria 3-4."""
    rng = np.random.default_rng(3_141_592)
    instances = []
    for k in range(20):
        u = make_random_unitary(5, 1000 + k)
        modes = rng.choice(5, size=3, replace=False)
        sig = tuple(1 if p in modes else 0 for p in range(5))
        instances.append((u, sig))
    return instances


def oracle_instances():
    """The 50 random Gaussian-photon instances of criterion 5."""
    rng = np.random.default_rng(2_718_281)
    instances = []
    for k in range(50):
        n = int(rng.integers(1, 4))
        m = int(rng.integers(n, 6))
        u = make_random_unitary(m, int(rng.integers(0, 2**31)))
        photons = [
            GaussianWavepacket(
                mu=float(rng.uniform(-1.5, 1.5)),
                sigma=float(rng.uniform(0.4, 1.6)),
                tau=float(rng.uniform(-2.0, 2.0)),
            )
            for _ in range(n)
        ]
        inputs = tuple(sorted(int(x) for x in rng.choice(np.arange(1, m + 1), n, replace=False)))
        instances.append((u, photons, inputs))
    return instances


def test_criterion_1_hom_closed_form():
    beamsplitter = make_beamsplitter_50_50()
    start = time.perf_counter()
    worst = 0.0
    for alpha in HOM_ALPHAS:
        p = probability_nonresolved(beamsplitter, hom_lambda(alpha), None, (1, 1))
        worst = max(worst, abs(p - (1.0 - alpha**2) / 2.0))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 1.0
    report(1, ok, f"HOM coincidence vs (1-a^2)/2: max |diff| = {worst:.3e}, {elapsed:.3f}s")
    assert worst <= 1e-12
    assert elapsed < 1.0


def test_criterion_2_hom_resolved_antibunching():
    beamsplitter = make_beamsplitter_50_50()
    worst = 0.0
    for alpha in HOM_ALPHAS:
        amp = amplitude_resolved(beamsplitter, hom_lambda(alpha), None, ((1, 1), (0, 0)))
        worst = max(worst, abs(amp))
    ok = worst <= 1e-14
    report(2, ok, f"anti-bunched amplitude in xi_1: max |amp| = {worst:.3e}")
    assert worst <= 1e-14


def test_criterion_3_indistinguishable_limit():
    photon = GaussianWavepacket(0.2, 1.1, 0.4)
    lam = lambda_from_photons([photon, photon, photon])
    t = (1, 1, 1, 0, 0)
    worst = 0.0
    for u, sig in limit_instances():
        engine = probability_nonresolved(u, lam, (1, 2, 3), sig)
        reference = probability_indistinguishable_fast(u, sig, t)
        worst = max(worst, abs(engine - reference))
    ok = worst <= 1e-10
    report(3, ok, f"identical photons vs |Per(U_MT)|^2 on 20 instances: max diff = {worst:.3e}")
    assert worst <= 1e-10


def test_criterion_4_distinguishable_limit():
    lam = LambdaMatrix(np.eye(3))
    t = (1, 1, 1, 0, 0)
    worst = 0.0
    for u, sig in limit_instances():
        engine = probability_nonresolved(u, lam, (1, 2, 3), sig)
        reference = probability_distinguishable_fast(u, sig, t)
        worst = max(worst, abs(engine - reference))
    ok = worst <= 1e-10
    report(4, ok, f"identity lambda vs Per(|U_MT|^2) on 20 instances: max diff = {worst:.3e}")
    assert worst <= 1e-10


def test_criterion_5_oracle_equivalence():
    start = time.perf_counter()
    worst = 0.0
    for u, photons, inputs in oracle_instances():
        lam = lambda_from_photons(photons)
        for detector in ("nonresolved", "resolved"):
            _, dev = verify_against_oracle(u, lam, inputs, detector)
            worst = max(worst, dev)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and elapsed < 60.0
    report(5, ok, f"engine vs Fock oracle on 50 instances, both detectors: "
                  f"max dev = {worst:.3e}, {elapsed:.1f}s")
    assert worst <= 1e-9
    assert elapsed < 60.0


def test_criterion_6_normalization():
    worst = 0.0
    photon = GaussianWavepacket(0.2, 1.1, 0.4)
    lam_identical = lambda_from_photons([photon, photon, photon])
    lam_identity = LambdaMatrix(np.eye(3))
    for u, _ in limit_instances():
        for lam in (lam_identical, lam_identity):
            total = sum(distribution_nonresolved(u, lam, (1, 2, 3)).values())
            worst = max(worst, abs(total - 1.0))
    for u, photons, inputs in oracle_instances():
        lam = lambda_from_photons(photons)
        total_nr = sum(distribution_nonresolved(u, lam, inputs).values())
        total_r = sum(distribution_resolved(u, lam, inputs).values())
        worst = max(worst, abs(total_nr - 1.0), abs(total_r - 1.0))
    ok = worst <= 1e-9
    report(6, ok, f"distribution sums over criteria 3-5 instances: max |sum-1| = {worst:.3e}")
    assert worst <= 1e-9


def test_criterion_7_basis_rotation_invariance():
    rng = np.random.default_rng(1_618_033)
    worst = 0.0
    for k in range(10):
        n = int(rng.integers(2, 4))
        m = int(rng.integers(n, 6))
        u = make_random_unitary(m, 5000 + k)
        raw = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        raw /= np.linalg.norm(raw, axis=1, keepdims=True)
        lam = LambdaMatrix(raw)
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, r = np.linalg.qr(z)
        w = q * (np.diag(r) / np.abs(np.diag(r)))
        base = distribution_nonresolved(u, lam)
        rotated = distribution_nonresolved(u, lam.rotated(w))
        worst = max(worst, max(abs(base[key] - rotated[key]) for key in base))
    ok = worst <= 1e-9
    report(7, ok, f"lambda -> lambda W on 10 instances: max prob change = {worst:.3e}")
    assert worst <= 1e-9


def test_criterion_8_permanent_kernel():
    rng = np.random.default_rng(6_022_140)
    worst = 0.0
    for _ in range(100):
        k = int(rng.integers(1, 9))
        a = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
        ryser = permanent_ryser(a)
        naive = permanent_naive(a)
        worst = max(worst, abs(ryser - naive) / abs(naive))
    ones = permanent_ryser(np.ones((4, 4)))
    ok = worst <= 1e-10 and ones == 24.0
    report(8, ok, f"Ryser vs naive on 100 matrices: max rel err = {worst:.3e}; "
                  f"Per(ones 4x4) = {ones}")
    assert worst <= 1e-10
    assert ones == 24.0


def test_criterion_9_mixed_state_sanity():
    beamsplitter = make_beamsplitter_50_50()
    psi = GaussianWavepacket(0.0, 1.0, 0.0)
    orthogonal = GaussianWavepacket(60.0, 1.0, 0.0)
    worst = 0.0
    for p in (0.0, 0.5, 1.0):
        photon2 = MixedPhotonSource(((p, psi), (1.0 - p, orthogonal)))
        got = probability_mixed(beamsplitter, [psi, photon2], None, (1, 1))
        worst = max(worst, abs(got - (1.0 - p) / 2.0))

    lam = lambda_from_photons([psi, orthogonal])
    pure = probability_nonresolved(beamsplitter, lam, None, (1, 1))
    via_mixture = probability_mixed(
        beamsplitter,
        [MixedPhotonSource(((1.0, psi),)), MixedPhotonSource(((1.0, orthogonal),))],
        None,
        (1, 1),
    )
    bit_for_bit = via_mixture == pure
    ok = worst <= 1e-12 and bit_for_bit
    report(9, ok, f"HOM mixture vs (1-p)/2: max diff = {worst:.3e}; "
                  f"q=1 bit-for-bit: {bit_for_bit}")
    assert worst <= 1e-12
    assert bit_for_bit
