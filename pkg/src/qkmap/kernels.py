"""Kernel values and Gram matrices by three routes, plus weighted combination.

Routes: exact (squared statevector overlap), pauli (2^n * dot product of
coefficient vectors, the real-feature-space identity), and shots (fraction
of all-zero outcomes when measuring the inversion-test circuit).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .encodings import EncodingSpec, feature_state
from .pauli import coefficients_at
from .states import apply_diagonal_phase, apply_hadamard_all, inner_product, sample_measurement

EXACT = "exact"
PAULI = "pauli"
SHOTS = "shots"
COMBINED = "combined"


@dataclass(frozen=True)
class KernelWeights:
    """Nonnegative combination weights summing to their count."""

    weights: tuple

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        m = len(w)
        if m == 0:
            raise ValueError("at least one weight required")
        if any(v < 0.0 or v > m for v in w):
            raise ValueError(f"each weight must lie in [0, {m}]")
        if abs(sum(w) - m) > 1e-9:
            raise ValueError(f"weights must sum to {m}, got {sum(w)}")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True)
class GramMatrix:
    """N x N kernel matrix with its construction method recorded."""

    values: np.ndarray = field(repr=False)
    method: str = EXACT
    shots: int | None = None
    seed: int | None = None
    weights: KernelWeights | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"Gram matrix must be square, got {v.shape}")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return self.values.shape[0]

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.values)[0])

    def to_csv(self, path) -> None:
        """One-line header (method plus shots/seed/weights), then the rows."""
        parts = [f"method={self.method}", f"size={self.size}"]
        if self.shots is not None:
            parts.append(f"shots={self.shots}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if self.weights is not None:
            parts.append("weights=" + ";".join(repr(w) for w in self.weights))
        with open(path, "w") as fh:
            fh.write("# " + " ".join(parts) + "\n")
            for row in self.values:
                fh.write(",".join(repr(float(v)) for v in row) + "\n")


def kernel_exact(spec: EncodingSpec, x, z) -> float:
    """K(x, z) = |<Phi(x)|Phi(z)>|^2."""
    ov = inner_product(feature_state(spec, x), feature_state(spec, z))
    return abs(ov) ** 2


def kernel_pauli(spec: EncodingSpec, x, z) -> float:
    """K(x, z) = 2^n * sum_i a_i(x) a_i(z), via the coefficient vectors."""
    ax = coefficients_at(spec, x).coeffs
    az = coefficients_at(spec, z).coeffs
    return float(4.0 * ax @ az)


def _inversion_test_state(spec: EncodingSpec, x, z):
    """U_Phi(x)^dagger U_Phi(z) |00>: all-zero probability equals K(x, z)."""
    from .encodings import eval_encoding

    state = feature_state(spec, z)
    p1, p2, p12 = eval_encoding(spec, x)
    # inverse of the two-layer circuit: conjugate phase layers and Hadamards
    # in reverse order (feature_state applies phases -phi/2, so +phi/2 here).
    for _ in range(2):
        state = apply_diagonal_phase(
            state, [0.5 * p1, 0.5 * p2], {(1, 2): 0.5 * p12}
        )
        state = apply_hadamard_all(state)
    return state


def kernel_shots(spec: EncodingSpec, x, z, shots: int, seed: int) -> float:
    """Shot-estimated kernel: fraction of "00" outcomes over the inversion test."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    state = _inversion_test_state(spec, x, z)
    counts = sample_measurement(state, shots, seed)
    return counts.frequency("0" * state.n_qubits)


def pair_seed(base_seed: int, i: int, j: int) -> int:
    """Stable per-pair seed: first word of SeedSequence((base_seed, i, j))."""
    return int(np.random.SeedSequence((base_seed, i, j)).generate_state(1)[0])


def gram(spec: EncodingSpec, points, method: str = EXACT,
         shots: int = 10_000, seed: int = 0) -> GramMatrix:
    """Gram matrix over a point set; each unordered pair evaluated once.

    Shot-estimated matrices set the diagonal to exactly 1 without sampling
    (the inversion-test circuit is the identity there) and mirror each
    off-diagonal estimate, so they are symmetric by construction.
    """
    pts = [np.asarray(p, dtype=float) for p in points]
    n = len(pts)
    if n < 1:
        raise ValueError("at least one point required")
    k = np.empty((n, n))
    if method == EXACT:
        states = np.array([feature_state(spec, p).amplitudes for p in pts])
        overlaps = states.conj() @ states.T
        k = np.abs(overlaps) ** 2
        k = (k + k.T) / 2.0
        np.fill_diagonal(k, 1.0)
        return GramMatrix(k, EXACT)
    if method == PAULI:
        coeffs = np.array([coefficients_at(spec, p).coeffs for p in pts])
        k = 4.0 * coeffs @ coeffs.T
        k = (k + k.T) / 2.0
        return GramMatrix(k, PAULI)
    if method == SHOTS:
        for i in range(n):
            k[i, i] = 1.0
            for j in range(i + 1, n):
                try:
                    v = kernel_shots(spec, pts[i], pts[j], shots, pair_seed(seed, i, j))
                except Exception as exc:
                    raise type(exc)(f"at pair ({i}, {j}): {exc}") from exc
                k[i, j] = k[j, i] = v
        return GramMatrix(k, SHOTS, shots=shots, seed=seed)
    raise ValueError(f"unknown gram method {method!r}")


def gram_from_kernel(kernel_fn, points, method: str = "callable") -> GramMatrix:
    """Gram matrix from an arbitrary symmetric kernel function."""
    pts = [np.asarray(p, dtype=float) for p in points]
    n = len(pts)
    if n < 1:
        raise ValueError("at least one point required")
    k = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            try:
                v = float(kernel_fn(pts[i], pts[j]))
            except Exception as exc:
                raise type(exc)(f"at pair ({i}, {j}): {exc}") from exc
            k[i, j] = k[j, i] = v
    return GramMatrix(k, method)


def combine(grams, weights: KernelWeights) -> GramMatrix:
    """Entrywise weighted sum of Gram matrices (PSD-preserving)."""
    grams = list(grams)
    if len(grams) != len(weights):
        raise ValueError(f"{len(grams)} matrices but {len(weights)} weights")
    size = grams[0].size
    for g in grams:
        if g.size != size:
            raise ValueError("Gram matrices have mismatched sizes")
    total = np.zeros((size, size))
    for g, w in zip(grams, weights):
        total += w * g.values
    return GramMatrix(total, COMBINED, weights=weights)
