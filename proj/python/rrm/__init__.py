"""Expected signal and particle simulation for a reversible-reaction spherical receiver."""

from ._core import (  # noqa: F401
    ConfigError,
    ConvergenceError,
    DimensionlessParams,
    DomainError,
    Error,
    ReceptorLayout,
    StepSizeError,
    SystemParams,
    __version__,
    berg_purcell_factor,
    cir,
    cir_asymptote,
    correction_factor,
    effective_forward_rate,
    erfcx,
    expected_signal,
    finite_receptor_params,
    greens_function,
    invert_cir,
    invert_greens,
    run_config,
    simulate,
    solve_roots,
    to_dimensionless,
    to_dimensional_time,
    to_dimensionless_time,
    wfun,
    zwanzig_factor,
)
