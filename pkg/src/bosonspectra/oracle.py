"""Brute-force Fock-space simulator over joint (spatial x spectral) modes.

Ground truth for the sampling engine at small scale: photons are
expanded one at a time over their basis coefficients and the unitary's
columns, so no permanent is ever computed here. Joint modes are ordered
spatial-major (mode 1 basis 1, mode 1 basis 2, ..., mode 2 basis 1, ...)
and occupation keys are tuples over all m * N joint modes.

Deliberately inefficient and capped; anything bigger belongs to the
engine.
"""

import math
from dataclasses import dataclass, field

from .errors import CapacityError, ConfigurationError
from .network import Interferometer, as_occupation
from .sampling import (
    _validated_inputs,
    as_resolved_outcome,
    distribution_nonresolved,
    distribution_resolved,
)
from .spectra import LambdaMatrix

MAX_PHOTONS = 6
MAX_MODES = 8
MAX_BASIS = 6
AMPLITUDE_PRUNE = 1e-15


@dataclass(frozen=True, eq=False)
class FockState:
    """Sparse state over joint (spatial, spectral) occupation configurations."""

    m: int
    basis_size: int
    amplitudes: dict = field(repr=False)

    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amplitudes.values()))


def fock_evolve(interferometer: Interferometer, lam: LambdaMatrix, input_modes=None) -> FockState:
    """Evolve n spectrally structured photons through the network exactly.

    Photon j enters spatial mode input_modes[j] carrying its coefficient
    row; each creation operator is substituted by its image under the
    unitary (spectral index untouched) and the product of sums is
    expanded term by term. Amplitudes land on normalized occupation
    states, including the sqrt(occupation!) bosonic factors.

    Columns of the unitary are input modes and rows are output modes
    (U[b, a] is the a -> b transfer amplitude), the orientation under
    which the permanent rule reads Per(U_{S,T}) with output rows.
    """
    m = interferometer.m
    n = lam.n
    nb = lam.basis_size
    if n > MAX_PHOTONS or m > MAX_MODES or nb > MAX_BASIS:
        raise CapacityError(
            f"oracle caps exceeded (n={n} <= {MAX_PHOTONS}, m={m} <= {MAX_MODES}, "
            f"N={nb} <= {MAX_BASIS})"
        )
    inputs = _validated_inputs(input_modes, n, m)

    u = interferometer.matrix
    vacuum = (0,) * (m * nb)
    # Coefficients of operator monomials prod_w (a_w^dag)^{occ_w} |0>;
    # the sqrt(occ!) conversion to normalized states happens at the end.
    raw: dict[tuple[int, ...], complex] = {vacuum: 1.0 + 0.0j}
    for j in range(n):
        row = lam.matrix[j]
        port = inputs[j] - 1
        new: dict[tuple[int, ...], complex] = {}
        for occ, coeff in raw.items():
            for i in range(nb):
                li = row[i]
                if li == 0.0:
                    continue
                for k in range(m):
                    amp = coeff * li * u[k, port]
                    if amp == 0.0:
                        continue
                    pos = k * nb + i
                    key = occ[:pos] + (occ[pos] + 1,) + occ[pos + 1 :]
                    new[key] = new.get(key, 0.0 + 0.0j) + amp
        raw = new

    amplitudes = {}
    for occ, coeff in raw.items():
        amp = coeff * math.sqrt(math.prod(math.factorial(c) for c in occ))
        if abs(amp) > AMPLITUDE_PRUNE:
            amplitudes[occ] = amp
    return FockState(m=m, basis_size=nb, amplitudes=amplitudes)


def _joint_key(outcome_parts, m: int, nb: int) -> tuple[int, ...]:
    key = [0] * (m * nb)
    for i, part in enumerate(outcome_parts):
        for k, c in enumerate(part):
            key[k * nb + i] = c
    return tuple(key)


def oracle_probability(state: FockState, outcome, detector: str = "nonresolved") -> float:
    """Probability of an outcome read directly from the Fock state.

    detector="resolved": outcome is a resolved outcome (one occupation
    configuration per basis function); the probability is the squared
    amplitude of the single matching joint state.
    detector="nonresolved": outcome is a spatial signature M; squared
    amplitudes are summed over all joint states with that marginal.
    """
    if detector == "resolved":
        parts = as_resolved_outcome(outcome, state.m, state.basis_size)
        amp = state.amplitudes.get(_joint_key(parts, state.m, state.basis_size), 0.0)
        return float(abs(amp) ** 2)
    if detector == "nonresolved":
        sig = as_occupation(outcome, state.m)
        total = 0.0
        nb = state.basis_size
        for occ, amp in state.amplitudes.items():
            marginal = tuple(sum(occ[k * nb : (k + 1) * nb]) for k in range(state.m))
            if marginal == sig:
                total += abs(amp) ** 2
        return float(total)
    raise ConfigurationError(f"unknown detector model {detector!r}")


def verify_against_oracle(
    interferometer: Interferometer,
    lam: LambdaMatrix,
    input_modes=None,
    detector: str = "nonresolved",
    eps: float = 0.0,
):
    """Compare the engine against the Fock oracle on every outcome.

    Returns (rows, max_deviation) where each row is
    (outcome, engine_probability, oracle_probability).
    """
    state = fock_evolve(interferometer, lam, input_modes)
    if detector == "resolved":
        dist = distribution_resolved(interferometer, lam, input_modes, eps)
    elif detector == "nonresolved":
        dist = distribution_nonresolved(interferometer, lam, input_modes, eps)
    else:
        raise ConfigurationError(f"unknown detector model {detector!r}")

    rows = []
    max_dev = 0.0
    for outcome, engine_p in dist.items():
        oracle_p = oracle_probability(state, outcome, detector)
        rows.append((outcome, engine_p, oracle_p))
        max_dev = max(max_dev, abs(engine_p - oracle_p))
    return rows, max_dev
