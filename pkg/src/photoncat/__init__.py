"""Photon-added two-mode cat states: moments and nonclassicality witnesses.

Two independent computation routes cover the same physics: closed Laguerre
forms (:mod:`photoncat.states`) and a truncated Fock-basis oracle
(:mod:`photoncat.fock`).  The witnesses (:mod:`photoncat.witnesses`) consume
either route's moment tables; :mod:`photoncat.sweep` batches grids, verifies
the closed forms against the oracle, and adjudicates the qualitative claims
attached to the reference figure datasets.
"""

__version__ = "0.1.0"

from .errors import (
    ConfigError,
    ConversionInconsistent,
    DegenerateState,
    OddOrderError,
    PhotoncatError,
    UnconvergedError,
    ZeroMeanPhoton,
)
from .fock import (
    FockStateTwoMode,
    build_state,
    coherent_amplitudes,
    moment_numeric,
    moment_table_oracle,
    oracle_quadrature,
    quadrature_central_moment,
)
from .states import (
    Family,
    MomentTable,
    StateSpec,
    coherent_moment_table,
    matrix_element_antinormal,
    moment_family_antinormal,
    moment_family_two_mode,
    moment_table_analytic,
    moment_table_two_mode,
    norm_const_sq_inv,
)
from .sweep import (
    GammaGrid,
    SweepConfig,
    SweepResult,
    run_sweep,
    verify_formulas,
)
from .figures import FigureConfig, repro_figures
from .witnesses import (
    WitnessKind,
    WitnessReport,
    antibunching_d,
    mandel_q,
    squeezing_S,
    subpoissonian_D,
)

__all__ = [
    "__version__",
    "ConfigError",
    "ConversionInconsistent",
    "DegenerateState",
    "OddOrderError",
    "PhotoncatError",
    "UnconvergedError",
    "ZeroMeanPhoton",
    "FockStateTwoMode",
    "build_state",
    "coherent_amplitudes",
    "moment_numeric",
    "moment_table_oracle",
    "oracle_quadrature",
    "quadrature_central_moment",
    "Family",
    "MomentTable",
    "StateSpec",
    "coherent_moment_table",
    "matrix_element_antinormal",
    "moment_family_antinormal",
    "moment_family_two_mode",
    "moment_table_analytic",
    "moment_table_two_mode",
    "norm_const_sq_inv",
    "GammaGrid",
    "SweepConfig",
    "SweepResult",
    "run_sweep",
    "verify_formulas",
    "FigureConfig",
    "repro_figures",
    "WitnessKind",
    "WitnessReport",
    "antibunching_d",
    "mandel_q",
    "squeezing_S",
    "subpoissonian_D",
]
