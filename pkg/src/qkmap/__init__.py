"""Feature-map analysis and screening toolkit for kernel-based quantum classifiers."""

from .states import (
    MeasurementCounts,
    StateVector,
    apply_diagonal_phase,
    apply_hadamard_all,
    inner_product,
    sample_measurement,
    zero_state,
)
from .encodings import (
    BUILTIN_IDS,
    EncodingError,
    EncodingSpec,
    builtin,
    custom,
    eval_encoding,
    feature_state,
    parse_phase_expression,
)
from .pauli import (
    TWO_QUBIT_LABELS,
    PauliVector,
    closed_form_coefficients,
    coefficient_grid,
    coefficient_grids,
    coefficients_at,
    decompose,
    expectation,
    grid_to_csv,
    grid_to_pgm,
    pauli_index,
    pauli_label,
)
from .kernels import (
    GramMatrix,
    KernelWeights,
    combine,
    gram,
    gram_from_kernel,
    kernel_exact,
    kernel_pauli,
    kernel_shots,
)
from .svm import (
    CvReport,
    LabeledDataset,
    SvmModel,
    accuracy,
    classify,
    cross_validate,
    decide,
    kkt_residuals,
    train,
)
from .screening import AxisAccuracyReport, axis_accuracy, minimum_accuracy, vc_dimension
from .datasets import DatasetKind, GeneratorConfig, from_csv, generate, to_csv

__version__ = "0.1.0"
