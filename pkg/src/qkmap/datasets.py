"""Seeded generators for the four benchmark datasets on [-1, 1]^2.

The published benchmarks exist only as scatter plots, so these are
documented reconstructions: each boundary carries a small margin band so
the classes are cleanly separable.  All constants live in
:class:`GeneratorConfig` and can be re-tuned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .svm import LabeledDataset

_MAX_DRAWS = 10 ** 6


class DatasetKind(enum.Enum):
    CIRCLE = "circle"
    EXP = "exp"
    MOON = "moon"
    XOR = "xor"


@dataclass(frozen=True)
class GeneratorConfig:
    margin: float = 0.05
    circle_radius: float = 0.6
    exp_scale: float = 0.4
    exp_rate: float = 2.0
    exp_offset: float = -0.6
    moon_radius: float = 0.7
    moon_width: float = 0.25
    moon_x_offset: float = 0.35
    moon_y_offset: float = 0.35


DEFAULT_CONFIG = GeneratorConfig()


def _balanced_rejection(rng, n_points, labeler):
    """Uniform draws on [-1,1]^2, kept until each class holds n/2 points."""
    per_class = n_points // 2
    kept = {1: [], -1: []}
    for _ in range(_MAX_DRAWS):
        if len(kept[1]) == per_class and len(kept[-1]) == per_class:
            break
        x = rng.uniform(-1.0, 1.0, 2)
        label = labeler(x)
        if label is not None and len(kept[label]) < per_class:
            kept[label].append(x)
    else:
        raise RuntimeError("rejection sampling exceeded the draw budget")
    points = np.array(kept[1] + kept[-1])
    labels = np.array([1] * per_class + [-1] * per_class)
    order = rng.permutation(n_points)
    return LabeledDataset(points[order], labels[order])


def _gen_circle(rng, n_points, cfg):
    def labeler(x):
        r = float(np.linalg.norm(x))
        if abs(r - cfg.circle_radius) <= cfg.margin:
            return None
        return 1 if r < cfg.circle_radius else -1

    return _balanced_rejection(rng, n_points, labeler)


def _gen_exp(rng, n_points, cfg):
    def labeler(x):
        boundary = cfg.exp_scale * np.exp(cfg.exp_rate * x[0]) + cfg.exp_offset
        if abs(x[1] - boundary) <= cfg.margin:
            return None
        return 1 if x[1] > boundary else -1

    return _balanced_rejection(rng, n_points, labeler)


def _gen_xor(rng, n_points, cfg):
    def labeler(x):
        prod = x[0] * x[1]
        if abs(prod) <= cfg.margin:
            return None
        return 1 if prod > 0 else -1

    return _balanced_rejection(rng, n_points, labeler)


def _gen_moon(rng, n_points, cfg):
    """Two interleaved half-annuli; points outside the square are redrawn."""
    per_class = n_points // 2
    kept = {1: [], -1: []}
    for _ in range(_MAX_DRAWS):
        if len(kept[1]) == per_class and len(kept[-1]) == per_class:
            break
        label = 1 if len(kept[1]) < per_class else -1
        theta = rng.uniform(0.0, np.pi)
        radius = cfg.moon_radius + rng.uniform(-0.5, 0.5) * cfg.moon_width
        if label == 1:
            x = np.array([radius * np.cos(theta) - cfg.moon_x_offset,
                          radius * np.sin(theta) - cfg.moon_y_offset])
        else:
            x = np.array([radius * np.cos(theta) + cfg.moon_x_offset,
                          -radius * np.sin(theta) + cfg.moon_y_offset])
        if np.all(np.abs(x) <= 1.0):
            kept[label].append(x)
    else:
        raise RuntimeError("rejection sampling exceeded the draw budget")
    points = np.array(kept[1] + kept[-1])
    labels = np.array([1] * per_class + [-1] * per_class)
    order = rng.permutation(n_points)
    return LabeledDataset(points[order], labels[order])


_GENERATORS = {
    DatasetKind.CIRCLE: _gen_circle,
    DatasetKind.EXP: _gen_exp,
    DatasetKind.MOON: _gen_moon,
    DatasetKind.XOR: _gen_xor,
}


def generate(kind: DatasetKind, n_points: int = 100, seed: int = 0,
             config: GeneratorConfig = DEFAULT_CONFIG) -> LabeledDataset:
    """Deterministic balanced dataset of the given kind."""
    if isinstance(kind, str):
        kind = DatasetKind(kind.lower())
    if n_points < 2 or n_points % 2 != 0:
        raise ValueError("n_points must be an even number >= 2")
    rng = np.random.default_rng(seed)
    return _GENERATORS[kind](rng, n_points, config)


def to_csv(dataset: LabeledDataset, path) -> None:
    with open(path, "w") as fh:
        fh.write("x1,x2,label\n")
        for (x1, x2), y in zip(dataset.points, dataset.labels):
            fh.write(f"{float(x1)!r},{float(x2)!r},{int(y)}\n")


def from_csv(path) -> LabeledDataset:
    points, labels = [], []
    with open(path) as fh:
        header = fh.readline().strip()
        if header.replace(" ", "") != "x1,x2,label":
            raise ValueError(f"unexpected dataset header {header!r}")
        for line in fh:
            if not line.strip():
                continue
            x1, x2, y = line.strip().split(",")
            points.append([float(x1), float(x2)])
            labels.append(int(y))
    if not points:
        raise ValueError("dataset file contains no points")
    return LabeledDataset(np.array(points), np.array(labels))
