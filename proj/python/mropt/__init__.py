"""Multiresolution-accelerated black-box minimization (MR/OPT).

A large minimization problem over finest-grid samples is solved as a ladder
of coarse-to-fine auxiliary problems: at each level only a coarse
perturbation is optimized, predicted to the finest grid by interpolatory
subdivision, cutting the total number of objective evaluations.
"""

from ._core import (
    GridHierarchy,
    LevelRecord,
    PredictionScheme,
    Problem,
    Report,
    __version__,
    decimate,
    forward_full,
    forward_full_2d,
    inverse_full,
    inverse_full_2d,
    make_problem,
    predict_multilevel,
    predict_multilevel_2d,
    predict_two_level,
    property_s_probe,
    run_direct,
    run_mropt,
    sample_limit_basis,
    smoothness_probe,
)

__all__ = [
    "GridHierarchy",
    "LevelRecord",
    "PredictionScheme",
    "Problem",
    "Report",
    "__version__",
    "decimate",
    "forward_full",
    "forward_full_2d",
    "inverse_full",
    "inverse_full_2d",
    "make_problem",
    "predict_multilevel",
    "predict_multilevel_2d",
    "predict_two_level",
    "property_s_probe",
    "run_direct",
    "run_mropt",
    "sample_limit_basis",
    "smoothness_probe",
]
