"""Command-line front end: gen, heatmap, screen, train, kernel.

Exit codes: 0 success, 1 validation error, 2 numerical failure.  Every
command is deterministic given its full flag set; all randomness flows
from explicit seeds.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import datasets, kernels, pauli, screening, svm
from .encodings import (
    BUILTIN_IDS,
    EncodingError,
    EncodingSpec,
    builtin,
    custom,
    parse_phase_expression,
)

EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2


def _encoding_from_args(encoding_id: str, custom_phi12: str | None) -> EncodingSpec:
    if custom_phi12 is not None:
        return custom(parse_phase_expression(custom_phi12))
    return builtin(encoding_id)


def _load_dataset(args) -> svm.LabeledDataset:
    if args.dataset is not None:
        return datasets.from_csv(args.dataset)
    return datasets.generate(args.generate, args.n, args.seed)


def _add_dataset_flags(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dataset", help="dataset CSV (x1,x2,label)")
    group.add_argument("--generate", choices=[k.value for k in datasets.DatasetKind],
                       help="generate a benchmark dataset instead of reading one")
    p.add_argument("--n", type=int, default=100, help="points to generate (default 100)")


def cmd_gen(args) -> int:
    ds = datasets.generate(args.kind, args.n, args.seed)
    datasets.to_csv(ds, args.out)
    print(f"wrote {len(ds)} points to {args.out}")
    return 0


def cmd_heatmap(args) -> int:
    spec = _encoding_from_args(args.encoding, args.custom_phi12)
    if args.axis == "all":
        indices = list(range(16))
    else:
        indices = [pauli.pauli_index(args.axis)]
    grids = pauli.coefficient_grids(spec, indices,
                                    (args.range_min, args.range_max), args.resolution)
    os.makedirs(args.out, exist_ok=True)
    for i, grid in zip(indices, grids):
        stem = os.path.join(args.out, pauli.pauli_label(i))
        pauli.grid_to_csv(grid, stem + ".csv")
        if args.pgm:
            pauli.grid_to_pgm(grid, stem + ".pgm")
    print(f"wrote {len(indices)} grid(s) to {args.out}")
    return 0


def cmd_screen(args) -> int:
    ds = _load_dataset(args)
    ids = args.encodings or list(BUILTIN_IDS)
    rows = []
    for eid in ids:
        spec = _encoding_from_args(eid, None) if eid != "custom" else \
            _encoding_from_args(eid, args.custom_phi12)
        report = screening.minimum_accuracy(ds, spec)
        rows.append((eid, report))
    if args.csv:
        print("encoding,minimum_accuracy,best_axis,best_threshold,orientation")
        for eid, r in rows:
            print(f"{eid},{r.minimum_accuracy!r},{r.best_axis_label},"
                  f"{r.best_threshold!r},{r.best_orientation}")
    else:
        print(f"{'encoding':>10} {'min acc':>8} {'axis':>5}")
        for eid, r in rows:
            print(f"{eid:>10} {r.minimum_accuracy:8.4f} {r.best_axis_label:>5}")
    if args.per_axis and len(rows) == 1:
        sys.stdout.write(rows[0][1].to_csv())
    return 0


def _gram_builder(args, specs):
    def build(points):
        gs = [kernels.gram(spec, points, method=args.method,
                           shots=args.shots, seed=args.seed)
              for spec in specs]
        if len(gs) == 1:
            return gs[0]
        weights = kernels.KernelWeights(tuple(args.weights or [1.0] * len(gs)))
        return kernels.combine(gs, weights)
    return build


def cmd_train(args) -> int:
    ds = _load_dataset(args)
    specs = [_encoding_from_args(eid, None) for eid in args.encodings]
    if args.custom_phi12:
        specs.append(custom(parse_phase_expression(args.custom_phi12)))
    if not specs:
        raise ValueError("at least one encoding required")
    builder = _gram_builder(args, specs)
    report = svm.cross_validate(ds, builder, folds=args.folds, C=args.C,
                                tolerance=args.tolerance, seed=args.seed)
    if args.csv:
        print("fold,train_accuracy,test_accuracy")
        for f, (tr, te) in enumerate(zip(report.fold_train_accuracies,
                                         report.fold_test_accuracies)):
            print(f"{f},{tr!r},{te!r}")
        print(f"mean,{report.mean_train!r},{report.mean_test!r}")
    else:
        print(report.summary())
    if args.model_out:
        full = builder(ds.points)
        model = svm.train(full, ds.labels, C=args.C, tolerance=args.tolerance,
                          points=ds.points)
        with open(args.model_out, "w") as fh:
            fh.write(model.to_text())
        print(f"wrote model to {args.model_out}")
    return 0


def cmd_kernel(args) -> int:
    ds = _load_dataset(args)
    spec = _encoding_from_args(args.encoding, args.custom_phi12)
    g = kernels.gram(spec, ds.points, method=args.method,
                     shots=args.shots, seed=args.seed)
    g.to_csv(args.out)
    print(f"wrote {g.size}x{g.size} Gram matrix ({g.method}) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkmap",
        description="Feature-map analysis and screening for kernel-based quantum classifiers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a benchmark dataset CSV")
    p.add_argument("kind", choices=[k.value for k in datasets.DatasetKind])
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("heatmap", help="export coefficient grids as CSV/PGM")
    p.add_argument("--encoding", default="ef1", choices=list(BUILTIN_IDS) + ["custom"])
    p.add_argument("--custom-phi12", help="phi12 expression for --encoding custom")
    p.add_argument("--axis", default="all",
                   help='Pauli label like ZZ, or "all" for the 16-panel set')
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--range-min", type=float, default=-1.0)
    p.add_argument("--range-max", type=float, default=1.0)
    p.add_argument("--pgm", action="store_true", help="also write PGM images")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(fn=cmd_heatmap)

    p = sub.add_parser("screen", help="minimum-accuracy screening report")
    _add_dataset_flags(p)
    p.add_argument("--encodings", nargs="*", choices=list(BUILTIN_IDS) + ["custom"],
                   help="encodings to screen (default: all five built-ins)")
    p.add_argument("--custom-phi12")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true", help="machine-readable output")
    p.add_argument("--per-axis", action="store_true",
                   help="with one encoding, print the per-axis table")
    p.set_defaults(fn=cmd_screen)

    p = sub.add_parser("train", help="cross-validated SVM training report")
    _add_dataset_flags(p)
    p.add_argument("--encodings", nargs="+", choices=list(BUILTIN_IDS),
                   help="one or more encodings (several are combined)")
    p.add_argument("--custom-phi12")
    p.add_argument("--weights", type=float, nargs="*",
                   help="combination weights (default equal, must sum to count)")
    p.add_argument("--method", default="exact", choices=["exact", "pauli", "shots"])
    p.add_argument("--shots", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--tolerance", type=float, default=1e-3)
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--model-out", help="also train on the full set and save the model")
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("kernel", help="dump a Gram matrix CSV")
    _add_dataset_flags(p)
    p.add_argument("--encoding", default="ef1", choices=list(BUILTIN_IDS) + ["custom"])
    p.add_argument("--custom-phi12")
    p.add_argument("--method", default="exact", choices=["exact", "pauli", "shots"])
    p.add_argument("--shots", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_kernel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, EncodingError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
