"""Discrete power-law fitting, goodness of fit, model comparison and
scaling regressions for citation counts."""

from ._core import (
    __version__,
    hurwitz_zeta,
    fit_alpha,
    fit_power_law,
    ks_distance,
    gof_test,
    required_sims,
    compare_models,
    sample_power_law,
    sample_alternative,
    scaling_fit,
    matthew_factor,
    parse_export,
)

__all__ = [
    "__version__",
    "hurwitz_zeta",
    "fit_alpha",
    "fit_power_law",
    "ks_distance",
    "gof_test",
    "required_sims",
    "compare_models",
    "sample_power_law",
    "sample_alternative",
    "scaling_fit",
    "matthew_factor",
    "parse_export",
]
