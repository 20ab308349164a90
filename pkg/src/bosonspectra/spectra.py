"""Photon spectral wavefunctions, overlaps and the coefficient matrix.

A photon's spectral wavefunction can be given either as a Gaussian
wavepacket (center, width, delay) or as an explicit coefficient row in a
caller-declared orthonormal basis. Pairwise overlaps form a Gram matrix;
its rank-revealing Cholesky factor is the coefficient matrix ("lambda
matrix") whose row j holds photon j's expansion in the induced
orthonormal basis. Basis indices are 1-based throughout, matching the
xi_1, xi_2, ... naming of the basis functions.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DimensionError, RepresentationError
from .network import as_occupation

ROW_NORM_TOL = 1e-10
GRAM_PSD_TOL = 1e-9
RANK_TOL = 1e-12


@dataclass(frozen=True)
class GaussianWavepacket:
    """Normalized Gaussian spectral amplitude with a temporal delay.

    psi(w) = (2 pi sigma^2)^(-1/4) exp(-(w - mu)^2 / (4 sigma^2)) exp(i w tau),
    so |psi|^2 is a normal density with standard deviation sigma and the
    delay tau enters as a pure phase.
    """

    mu: float
    sigma: float
    tau: float = 0.0

    def __post_init__(self):
        if not (self.sigma > 0):
            raise ConfigurationError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class CoefficientSpectrum:
    """Explicit unit-norm coefficient row in a caller-declared orthonormal basis."""

    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=np.complex128).reshape(-1)
        if c.size == 0 or not np.all(np.isfinite(c)):
            raise ConfigurationError("coefficient row must be non-empty and finite")
        norm = np.linalg.norm(c)
        if abs(norm - 1.0) > ROW_NORM_TOL:
            raise ConfigurationError(f"coefficient row must have unit norm, got {norm!r}")
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    @property
    def basis_size(self) -> int:
        return self.coefficients.size

    def __eq__(self, other):
        if not isinstance(other, CoefficientSpectrum):
            return NotImplemented
        return self.coefficients.shape == other.coefficients.shape and bool(
            np.all(self.coefficients == other.coefficients)
        )

    def __hash__(self):
        return hash(self.coefficients.tobytes())


SpectralSpec = GaussianWavepacket | CoefficientSpectrum


def overlap(a: SpectralSpec, b: SpectralSpec) -> complex:
    """Spectral inner product integral(a(w)* b(w) dw).

    Gaussian pairs use the analytic closed form (validated against
    numerical quadrature in the test suite); explicit rows use the
    Hermitian inner product. Mixing the two kinds has no shared basis
    and raises RepresentationError.
    """
    if isinstance(a, GaussianWavepacket) and isinstance(b, GaussianWavepacket):
        if a == b:
            return complex(1.0)
        return _gaussian_overlap(a, b)
    if isinstance(a, CoefficientSpectrum) and isinstance(b, CoefficientSpectrum):
        if a.basis_size != b.basis_size:
            raise RepresentationError(
                f"coefficient rows live in different bases (N={a.basis_size} vs {b.basis_size})"
            )
        return complex(np.vdot(a.coefficients, b.coefficients))
    raise RepresentationError(
        "cannot overlap a Gaussian wavepacket with an explicit coefficient row"
    )


def _gaussian_overlap(a: GaussianWavepacket, b: GaussianWavepacket) -> complex:
    # Gaussian integral of conj(a) * b; the delay difference appears as a
    # linear imaginary term in the exponent.
    qa = 1.0 / (4.0 * a.sigma**2)
    qb = 1.0 / (4.0 * b.sigma**2)
    quad = qa + qb
    lin = 2.0 * (a.mu * qa + b.mu * qb) + 1j * (b.tau - a.tau)
    const = a.mu**2 * qa + b.mu**2 * qb
    prefactor = (2.0 * np.pi * a.sigma**2) ** -0.25 * (2.0 * np.pi * b.sigma**2) ** -0.25
    return complex(prefactor * math.sqrt(math.pi / quad) * np.exp(lin**2 / (4.0 * quad) - const))


def gram_matrix(photons) -> np.ndarray:
    """Hermitian matrix of pairwise overlaps, G[a, b] = overlap(a, b).

    The lower triangle is filled by conjugation so the result is exactly
    Hermitian; the diagonal is 1 by photon normalization.
    """
    photons = list(photons)
    n = len(photons)
    if n == 0:
        raise ConfigurationError("need at least one photon")
    g = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        g[i, i] = overlap(photons[i], photons[i])
        for j in range(i + 1, n):
            g[i, j] = overlap(photons[i], photons[j])
            g[j, i] = np.conj(g[i, j])
    return g


class LambdaMatrix:
    """n x N matrix of spectral decomposition coefficients.

    Row j is photon j's unit-norm expansion over the orthonormal basis
    functions xi_1 .. xi_N (columns).
    """

    def __init__(self, matrix):
        m = np.array(matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
            raise DimensionError(f"lambda matrix must be 2-D and non-empty, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise DimensionError("lambda matrix entries must be finite")
        norms = np.linalg.norm(m, axis=1)
        bad = np.abs(norms - 1.0) > ROW_NORM_TOL
        if np.any(bad):
            raise ConfigurationError(
                f"photon rows must have unit norm; rows {np.nonzero(bad)[0].tolist()} "
                f"have norms {norms[bad].tolist()}"
            )
        m.setflags(write=False)
        self.matrix = m

    @property
    def n(self) -> int:
        """Photon count (rows)."""
        return self.matrix.shape[0]

    @property
    def basis_size(self) -> int:
        """Number of basis functions (columns)."""
        return self.matrix.shape[1]

    def rotated(self, w) -> "LambdaMatrix":
        """The same photons expressed in a rotated basis: lambda @ W."""
        w = np.asarray(w, dtype=np.complex128)
        return LambdaMatrix(self.matrix @ w)

    def __repr__(self):
        return f"LambdaMatrix(n={self.n}, basis_size={self.basis_size})"


def orthonormal_decomposition(gram) -> LambdaMatrix:
    """Coefficient matrix of the photons in their own induced basis.

    Rank-revealing Cholesky in photon order: photon 1 defines xi_1, each
    later photon adds a new direction only if its residual norm exceeds
    the rank tolerance, so identical photons collapse onto shared basis
    functions instead of failing. Satisfies lambda @ lambda^dag = G and
    is lower-triangular up to dropped directions.
    """
    g = np.asarray(gram, dtype=np.complex128)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] == 0:
        raise DimensionError(f"Gram matrix must be square and non-empty, got {g.shape}")
    n = g.shape[0]
    if np.max(np.abs(g - g.conj().T)) > 1e-8:
        raise ConfigurationError("Gram matrix must be Hermitian")
    if np.max(np.abs(np.diag(g) - 1.0)) > 1e-8:
        raise ConfigurationError("Gram matrix must have unit diagonal (normalized photons)")
    if np.min(np.linalg.eigvalsh(g)) < -GRAM_PSD_TOL:
        raise ConfigurationError(
            f"Gram matrix is not positive semidefinite (min eigenvalue "
            f"{np.min(np.linalg.eigvalsh(g)):.3e})"
        )

    lam = np.zeros((n, n), dtype=np.complex128)
    pivots: list[int] = []
    for a in range(n):
        for j, p in enumerate(pivots):
            lam[a, j] = (g[a, p] - lam[a, :j] @ lam[p, :j].conj()) / lam[p, j].real
        r = len(pivots)
        # Diagonal residual of the Cholesky step. A linearly dependent
        # photon leaves cancellation noise of order eps here, so the
        # rank cut must act on the residual itself, not its square root.
        residual = g[a, a].real - float(np.linalg.norm(lam[a, :r]) ** 2)
        if residual > RANK_TOL:
            lam[a, r] = math.sqrt(residual)
            pivots.append(a)
    return LambdaMatrix(lam[:, : len(pivots)])


def lambda_from_photons(photons) -> LambdaMatrix:
    """Build the coefficient matrix for a list of spectral specs.

    Explicit coefficient rows (all in the same declared basis) are
    stacked as-is; Gaussian wavepackets go through the Gram matrix and
    its orthonormal decomposition.
    """
    photons = list(photons)
    if not photons:
        raise ConfigurationError("need at least one photon")
    if all(isinstance(p, CoefficientSpectrum) for p in photons):
        sizes = {p.basis_size for p in photons}
        if len(sizes) > 1:
            raise RepresentationError(f"coefficient rows disagree on basis size: {sorted(sizes)}")
        return LambdaMatrix(np.vstack([p.coefficients for p in photons]))
    if all(isinstance(p, GaussianWavepacket) for p in photons):
        return orthonormal_decomposition(gram_matrix(photons))
    raise RepresentationError("photons mix Gaussian and explicit-row specs; no shared basis")


def chi(lam: LambdaMatrix, v) -> complex:
    """Weight of one spectral configuration: prod_j lambda[j, v_j].

    v assigns basis index v_j (1-based) to photon j.
    """
    v = tuple(int(i) for i in v)
    if len(v) != lam.n:
        raise ConfigurationError(f"configuration length {len(v)} != photon count {lam.n}")
    if any(i < 1 or i > lam.basis_size for i in v):
        raise ConfigurationError(f"basis indices must lie in 1..{lam.basis_size}, got {v}")
    out = 1.0 + 0.0j
    for j, i in enumerate(v):
        out *= lam.matrix[j, i - 1]
    return complex(out)


def enumerate_configurations(lam: LambdaMatrix, eps: float = 0.0):
    """Yield (v, chi(v)) for every spectral configuration with |chi(v)| > eps.

    Iteration is lexicographic in v and visits only per-photon nonzero
    coefficients, so the cost is the product of row support sizes rather
    than a blind N^n scan. Rows have unit norm, hence every coefficient
    magnitude is <= 1 and a partial product that has already dropped to
    eps can be pruned.
    """
    if eps < 0:
        raise ConfigurationError(f"eps must be >= 0, got {eps}")
    supports = [
        [(int(i) + 1, complex(lam.matrix[j, i])) for i in np.nonzero(lam.matrix[j])[0]]
        for j in range(lam.n)
    ]

    def walk(j: int, prefix: tuple[int, ...], weight: complex):
        if j == lam.n:
            if abs(weight) > eps:
                yield prefix, weight
            return
        for i, coeff in supports[j]:
            w = weight * coeff
            if abs(w) <= eps and eps > 0.0:
                continue
            yield from walk(j + 1, prefix + (i,), w)

    yield from walk(0, (), 1.0 + 0.0j)


def t_sets(v, input_modes, m: int, basis_size: int | None = None) -> dict[int, tuple[int, ...]]:
    """Input occupation carried by each basis function under configuration v.

    Photon j sits in spatial mode input_modes[j] (1-based) and carries
    basis function xi_{v_j}; the result maps every basis index i in
    1..basis_size to the occupation configuration over the m spatial
    modes of the photons with v_j = i. The union over i reproduces the
    full input configuration.
    """
    v = tuple(int(i) for i in v)
    modes = tuple(int(x) for x in input_modes)
    if len(v) != len(modes):
        raise ConfigurationError(f"configuration length {len(v)} != photon count {len(modes)}")
    if any(x < 1 or x > m for x in modes):
        raise ConfigurationError(f"input modes must lie in 1..{m}, got {modes}")
    if basis_size is None:
        basis_size = max(v)
    if any(i < 1 or i > basis_size for i in v):
        raise ConfigurationError(f"basis indices must lie in 1..{basis_size}, got {v}")

    counts = {i: [0] * m for i in range(1, basis_size + 1)}
    for mode, i in zip(modes, v):
        counts[i][mode - 1] += 1
    return {i: as_occupation(c) for i, c in counts.items()}
