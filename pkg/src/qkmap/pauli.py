"""Real-vector representation of feature states via Pauli coefficients.

A pure n-qubit density matrix expands as rho = sum_i a_i sigma_i over the
4^n multi-qubit Pauli operators; the real vector a is the feature-space
image used throughout the toolkit.  Index order: i = sum_k d_k 4^(k-1)
with d_k in {I:0, X:1, Y:2, Z:3} the letter on qubit k, so the qubit-1
letter varies fastest (II, XI, YI, ZI, IX, XX, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .encodings import EncodingSpec, eval_encoding, feature_state
from .states import StateVector

_LETTERS = "IXYZ"


def pauli_label(index: int, n_qubits: int = 2) -> str:
    """Label for a coefficient index, qubit-1 letter leftmost (e.g. 7 -> "ZX")."""
    if not 0 <= index < 4 ** n_qubits:
        raise ValueError(f"index {index} out of range for n={n_qubits}")
    return "".join(_LETTERS[(index >> (2 * k)) & 3] for k in range(n_qubits))


def pauli_index(label: str) -> int:
    """Inverse of :func:`pauli_label`."""
    digits = [_LETTERS.index(ch) for ch in label.upper()]
    return sum(d << (2 * k) for k, d in enumerate(digits))


TWO_QUBIT_LABELS = tuple(pauli_label(i, 2) for i in range(16))


@dataclass(frozen=True)
class PauliVector:
    """The 4^n real coefficients a_i of a pure state's density matrix."""

    n_qubits: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (4 ** self.n_qubits,):
            raise ValueError(f"expected {4 ** self.n_qubits} coefficients")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, key):
        if isinstance(key, str):
            key = pauli_index(key)
        return self.coeffs[key]


def _pauli_action(n_qubits: int, index: int):
    """Bit-level action of sigma_index: source permutation and phase vector."""
    dim = 2 ** n_qubits
    idx = np.arange(dim)
    xmask = 0
    phase = np.ones(dim, dtype=np.complex128)
    for k in range(n_qubits):
        d = (index >> (2 * k)) & 3
        bit = (idx >> k) & 1
        if d == 1:  # X: flip bit k
            xmask |= 1 << k
        elif d == 2:  # Y: flip bit k, phase +i into |1>, -i into |0>
            xmask |= 1 << k
            phase = phase * np.where(bit == 1, 1j, -1j)
        elif d == 3:  # Z: sign on bit k
            phase = phase * (1.0 - 2.0 * bit)
    return idx ^ xmask, phase


def expectation(state: StateVector, index: int) -> complex:
    """<psi| sigma_index |psi> computed by bit-index arithmetic."""
    src, phase = _pauli_action(state.n_qubits, index)
    sigma_psi = phase * state.amplitudes[src]
    return complex(np.vdot(state.amplitudes, sigma_psi))


def decompose(state: StateVector) -> PauliVector:
    """All 4^n coefficients a_i = <psi|sigma_i|psi> / 2^n."""
    n = state.n_qubits
    scale = 1.0 / 2 ** n
    coeffs = np.empty(4 ** n)
    for i in range(4 ** n):
        e = expectation(state, i)
        if abs(e.imag) > 1e-10:
            raise ArithmeticError(f"expectation of index {i} has imaginary residue {e.imag}")
        coeffs[i] = e.real * scale
    return PauliVector(n, coeffs)


def closed_form_coefficients(phi1: float, phi2: float, phi12: float) -> PauliVector:
    """Closed-form coefficients of the two-qubit feature circuit.

    Independent of the simulator: these are the analytic trigonometric
    expressions for a_i as functions of the three phases, in the standard
    index order (II, XI, YI, ZI, IX, ...).
    """
    s1, c1 = math.sin(phi1), math.cos(phi1)
    s2, c2 = math.sin(phi2), math.cos(phi2)
    sp, cp = math.sin(phi12), math.cos(phi12)
    a = {
        "II": 1.0,
        "XI": s1 * (s2 * sp ** 2 + s1 * cp ** 2 + c2 * c1 * sp),
        "YI": -s2 * c1 * sp ** 2 - s1 * c1 * cp ** 2 + c2 * s1 ** 2 * sp,
        "ZI": c1 * cp,
        "IX": s2 * (s1 * sp ** 2 + s2 * cp ** 2 + c1 * c2 * sp),
        "XX": s1 ** 2 * s2 ** 2 + sp * c1 * c2 * (s1 + s2),
        "YX": -s2 ** 2 * s1 * c1 + sp * c2 * (s1 * s2 - c1 ** 2),
        "ZX": cp * (-s1 * c2 * sp + c1 * s2 ** 2 + s2 * c2 * sp),
        "IY": -s1 * c2 * sp ** 2 - s2 * c2 * cp ** 2 + c1 * s2 ** 2 * sp,
        "XY": -s1 ** 2 * s2 * c2 + sp * c1 * (s1 * s2 - c2 ** 2),
        "YY": s1 * c1 * s2 * c2 - sp * (c2 ** 2 * s1 + s2 * c1 ** 2),
        "ZY": s2 * (-s1 * sp * cp - c2 * c1 * cp + s2 * cp * sp),
        "IZ": c2 * cp,
        "XZ": cp * (-s2 * c1 * sp + c2 * s1 ** 2 + s1 * c1 * sp),
        "YZ": s1 * (-s2 * sp * cp - c1 * c2 * cp + s1 * cp * sp),
        "ZZ": c1 * c2,
    }
    coeffs = np.array([a[label] for label in TWO_QUBIT_LABELS]) / 4.0
    return PauliVector(2, coeffs)


def coefficients_at(spec: EncodingSpec, x) -> PauliVector:
    """Closed-form coefficient vector of the feature map at point x."""
    return closed_form_coefficients(*eval_encoding(spec, x))


def coefficient_grid(spec: EncodingSpec, pauli_index: int, x_range=(-1.0, 1.0),
                     resolution: int = 101) -> np.ndarray:
    """Sample a_{pauli_index}(x) on a uniform grid over x_range x x_range.

    Row-major with x2 descending down the rows and x1 ascending along the
    columns, so printing the grid matches the usual heat-map orientation.
    Values come from the simulator route (decompose of the feature state),
    not the closed forms.
    """
    return coefficient_grids(spec, [pauli_index], x_range, resolution)[0]


def coefficient_grids(spec: EncodingSpec, pauli_indices, x_range=(-1.0, 1.0),
                      resolution: int = 101) -> list[np.ndarray]:
    """Several coefficient grids sharing one sweep of feature states."""
    indices = list(pauli_indices)
    for i in indices:
        if not 0 <= i < 16:
            raise ValueError(f"pauli index {i} out of range [0, 16)")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    lo, hi = float(x_range[0]), float(x_range[1])
    x1s = np.linspace(lo, hi, resolution)
    x2s = x1s[::-1]
    grids = [np.empty((resolution, resolution)) for _ in indices]
    for r, x2 in enumerate(x2s):
        for c, x1 in enumerate(x1s):
            try:
                vec = decompose(feature_state(spec, (x1, x2)))
            except Exception as exc:
                raise type(exc)(f"at grid point x=({x1}, {x2}): {exc}") from exc
            for g, i in zip(grids, indices):
                g[r, c] = vec.coeffs[i]
    return grids


def grid_to_csv(grid: np.ndarray, path) -> None:
    """One grid row per line, '.'-decimal, full round-trip precision."""
    with open(path, "w") as fh:
        for row in grid:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def grid_to_pgm(grid: np.ndarray, path) -> None:
    """8-bit PGM, min-max normalized per grid (flat grids render mid-gray)."""
    lo, hi = float(grid.min()), float(grid.max())
    if hi - lo < 1e-300:
        pixels = np.full(grid.shape, 128, dtype=np.uint8)
    else:
        pixels = np.round((grid - lo) / (hi - lo) * 255.0).astype(np.uint8)
    rows, cols = grid.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        fh.write(pixels.tobytes())
