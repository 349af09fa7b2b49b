"""Soft-margin kernel SVM trained by sequential minimal optimization.

The solver works on a precomputed Gram matrix.  The working pair is the
maximal violating pair in Keerthi's sense: with g_i = sum_j alpha_j y_j
K_ij and c_i = y_i - g_i, feasibility of the bias requires
max(c over the lower set) <= min(c over the upper set) + 2 * tolerance;
the pair attaining that gap is updated analytically each step.  At
convergence the bias is the midpoint of the feasible interval, which
makes every KKT residual at most the tolerance by construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .kernels import GramMatrix


@dataclass(frozen=True)
class LabeledDataset:
    """Points in the plane with binary labels in {-1, +1}."""

    points: np.ndarray = field(repr=False)
    labels: np.ndarray = field(repr=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        lab = np.asarray(self.labels, dtype=int)
        if pts.ndim != 2 or pts.shape[0] != lab.shape[0]:
            raise ValueError("points and labels must have equal length")
        if not np.all(np.isin(lab, (-1, 1))):
            raise ValueError("labels must be -1 or +1")
        pts = pts.copy()
        lab = lab.copy()
        pts.setflags(write=False)
        lab.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", lab)

    def __len__(self):
        return len(self.labels)

    def subset(self, indices) -> "LabeledDataset":
        return LabeledDataset(self.points[indices], self.labels[indices])


@dataclass(frozen=True)
class SvmModel:
    """Dual solution: multipliers, bias, and the training labels/points."""

    alphas: np.ndarray = field(repr=False)
    bias: float
    labels: np.ndarray = field(repr=False)
    C: float
    tolerance: float
    points: np.ndarray | None = field(default=None, repr=False)

    def dual_objective(self, gram_values: np.ndarray) -> float:
        ay = self.alphas * self.labels
        return float(self.alphas.sum() - 0.5 * ay @ gram_values @ ay)

    def to_text(self) -> str:
        lines = [f"C={float(self.C)!r}", f"tolerance={float(self.tolerance)!r}",
                 f"bias={float(self.bias)!r}"]
        for i, (a, y) in enumerate(zip(self.alphas, self.labels)):
            coords = ""
            if self.points is not None:
                coords = "," + ",".join(repr(float(v)) for v in self.points[i])
            lines.append(f"{float(a)!r},{int(y)}{coords}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SvmModel":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        header = {}
        for ln in lines[:3]:
            key, val = ln.split("=", 1)
            header[key] = float(val)
        alphas, labels, points = [], [], []
        for ln in lines[3:]:
            parts = ln.split(",")
            alphas.append(float(parts[0]))
            labels.append(int(parts[1]))
            if len(parts) > 2:
                points.append([float(v) for v in parts[2:]])
        pts = np.array(points) if points else None
        return cls(np.array(alphas), header["bias"], np.array(labels, dtype=int),
                   header["C"], header["tolerance"], pts)


def _clamp_psd(values: np.ndarray) -> np.ndarray:
    """Clamp negative eigenvalues to zero (shot noise can break PSD-ness)."""
    w, v = np.linalg.eigh(values)
    if w[0] >= -1e-6:
        return values
    warnings.warn(
        f"Gram matrix has minimum eigenvalue {w[0]:.3e}; clamping to PSD",
        RuntimeWarning,
    )
    w = np.clip(w, 0.0, None)
    return (v * w) @ v.T


def train(gram, labels, C: float = 1.0, tolerance: float = 1e-3,
          max_passes: int = 10_000, points=None) -> SvmModel:
    """Solve the soft-margin dual over a precomputed Gram matrix.

    Deterministic: pair selection is the maximal violating pair with
    lowest-index tie-breaks.
    """
    k = gram.values if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=float)
    y = np.asarray(labels, dtype=float)
    n = len(y)
    if k.shape != (n, n):
        raise ValueError("gram size does not match number of labels")
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise ValueError("labels must be -1 or +1")
    if np.all(y == y[0]):
        raise ValueError("both classes must be present for training")
    if C <= 0 or tolerance <= 0:
        raise ValueError("C and tolerance must be positive")
    k = _clamp_psd(k)

    alphas = np.zeros(n)
    g = np.zeros(n)  # sum_j alpha_j y_j K_ij, bias-free margin

    def feasibility():
        """(gap, i_low, i_up, b) for the current multipliers."""
        c = y - g
        # lower set: indices forcing b >= c_i - tol
        #   alpha=0 & y=+1, alpha=C & y=-1, 0<alpha<C
        # upper set: indices forcing b <= c_i + tol
        #   alpha=0 & y=-1, alpha=C & y=+1, 0<alpha<C
        at_zero = alphas <= 1e-12
        at_c = alphas >= C - 1e-12
        free = ~at_zero & ~at_c
        lower = free | (at_zero & (y > 0)) | (at_c & (y < 0))
        upper = free | (at_zero & (y < 0)) | (at_c & (y > 0))
        c_low = np.where(lower, c, -np.inf)
        c_up = np.where(upper, c, np.inf)
        i_low = int(np.argmax(c_low))
        i_up = int(np.argmin(c_up))
        gap = c_low[i_low] - c_up[i_up]
        b = (c_low[i_low] + c_up[i_up]) / 2.0
        return gap, i_low, i_up, b

    b = 0.0
    for _ in range(max_passes):
        gap, i, j, b = feasibility()
        if gap <= 2.0 * tolerance:
            break
        # two-variable analytic update of (alpha_i, alpha_j)
        if y[i] != y[j]:
            lo = max(0.0, alphas[j] - alphas[i])
            hi = min(C, C + alphas[j] - alphas[i])
        else:
            lo = max(0.0, alphas[i] + alphas[j] - C)
            hi = min(C, alphas[i] + alphas[j])
        eta = k[i, i] + k[j, j] - 2.0 * k[i, j]
        eta = max(eta, 1e-12)
        e_i = g[i] - y[i]
        e_j = g[j] - y[j]
        aj_new = np.clip(alphas[j] + y[j] * (e_i - e_j) / eta, lo, hi)
        d_j = aj_new - alphas[j]
        if abs(d_j) < 1e-14:
            break  # numerically stuck; bias midpoint still minimizes residuals
        d_i = -y[i] * y[j] * d_j
        alphas[i] += d_i
        alphas[j] += d_j
        g += (d_i * y[i]) * k[i] + (d_j * y[j]) * k[j]
    else:
        _, _, _, b = feasibility()

    return SvmModel(alphas, float(b), np.asarray(labels, dtype=int), C, tolerance,
                    None if points is None else np.asarray(points, dtype=float))


def decide(model: SvmModel, kernel_row) -> float:
    """Signed decision value sum_i alpha_i y_i K(x_i, x) + b."""
    row = np.asarray(kernel_row, dtype=float)
    if row.shape != model.alphas.shape:
        raise ValueError("kernel row length does not match training size")
    return float((model.alphas * model.labels) @ row + model.bias)


def classify(model: SvmModel, kernel_row) -> int:
    """Sign of the decision value; exact zero resolves to +1."""
    return 1 if decide(model, kernel_row) >= 0.0 else -1


def accuracy(model: SvmModel, kernel_rows: np.ndarray, labels) -> float:
    """Fraction of rows classified with the correct label."""
    preds = np.array([classify(model, row) for row in np.asarray(kernel_rows)])
    return float(np.mean(preds == np.asarray(labels)))


def kkt_residuals(model: SvmModel, gram_values: np.ndarray) -> np.ndarray:
    """Per-point violation of the KKT conditions (0 when satisfied)."""
    y = model.labels.astype(float)
    u = (model.alphas * y) @ gram_values + model.bias
    margin = y * u
    res = np.zeros(len(y))
    at_zero = model.alphas <= 1e-12
    at_c = model.alphas >= model.C - 1e-12
    free = ~at_zero & ~at_c
    res[at_zero] = np.maximum(0.0, 1.0 - margin[at_zero])
    res[at_c] = np.maximum(0.0, margin[at_c] - 1.0)
    res[free] = np.abs(margin[free] - 1.0)
    return res


@dataclass(frozen=True)
class CvReport:
    """Per-fold and mean accuracies of a k-fold cross validation."""

    fold_train_accuracies: tuple
    fold_test_accuracies: tuple
    seed: int

    @property
    def mean_train(self) -> float:
        return float(np.mean(self.fold_train_accuracies))

    @property
    def mean_test(self) -> float:
        return float(np.mean(self.fold_test_accuracies))

    def summary(self) -> str:
        folds = " ".join(
            f"{tr:.4f}/{te:.4f}"
            for tr, te in zip(self.fold_train_accuracies, self.fold_test_accuracies)
        )
        return (f"folds(train/test): {folds}  "
                f"mean train={self.mean_train:.4f} test={self.mean_test:.4f} "
                f"seed={self.seed}")


def cross_validate(dataset: LabeledDataset, gram_builder, folds: int = 5,
                   C: float = 1.0, tolerance: float = 1e-3, seed: int = 0) -> CvReport:
    """Seeded k-fold cross validation over a full-dataset Gram matrix.

    ``gram_builder`` maps the full point array to a GramMatrix; fold
    sub-blocks are sliced out of it.  Folds are contiguous blocks of one
    seeded shuffle.  If a fold misses a class the shuffle is retried once
    with a derived seed, then an error is raised.
    """
    n = len(dataset)
    if n % folds != 0:
        raise ValueError(f"dataset size {n} not divisible by {folds} folds")
    full = gram_builder(dataset.points)
    k = full.values if isinstance(full, GramMatrix) else np.asarray(full, dtype=float)

    def fold_indices(shuffle_seed):
        order = np.random.default_rng(shuffle_seed).permutation(n)
        size = n // folds
        return [order[f * size:(f + 1) * size] for f in range(folds)]

    parts = fold_indices(seed)
    if any(len(np.unique(dataset.labels[np.concatenate([p for g, p in enumerate(parts) if g != f])])) < 2
           for f in range(folds)):
        parts = fold_indices(seed + 1)
        for f in range(folds):
            train_idx = np.concatenate([p for g, p in enumerate(parts) if g != f])
            if len(np.unique(dataset.labels[train_idx])) < 2:
                raise ValueError("a fold is missing a class even after re-shuffle")

    train_acc, test_acc = [], []
    for f in range(folds):
        test_idx = parts[f]
        train_idx = np.concatenate([p for g, p in enumerate(parts) if g != f])
        sub = k[np.ix_(train_idx, train_idx)]
        model = train(sub, dataset.labels[train_idx], C=C, tolerance=tolerance)
        train_acc.append(accuracy(model, sub, dataset.labels[train_idx]))
        test_rows = k[np.ix_(test_idx, train_idx)]
        test_acc.append(accuracy(model, test_rows, dataset.labels[test_idx]))
    return CvReport(tuple(train_acc), tuple(test_acc), seed)
