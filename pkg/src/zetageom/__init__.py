"""zetageom: geometric evaluation of the Riemann zeta function.

Exact step-angle arithmetic for the partial sums of n^-s, the detailed
step/conjugate-region symmetry, geometric analytic continuation by
truncation with end corrections, Riemann-Siegel evaluation, zero and
Gram-point scanning, Landau prime-ensemble sums, and Hurwitz/Dirichlet
generalizations.
"""

from .dw import DoubleWord, ReducedAngle, SParam, dw_log, reduce_angle, reduce_linear
from .kernels import BACKEND as kernel_backend
from .argand import ArgandStream, StepRecord, dump_steps, partial_sum, step
from .dts import DiffSet, dts_eval, forward_diffs, invert
from .symmetry import (
    PendantCenter,
    SpiralCenter,
    SymmetryFrame,
    conjugate_range,
    conjugate_ratio_experiment,
    frame,
    gaussian_scroll,
    pendant_center,
    pendant_radius_cap,
    q_exact,
    spiral_center,
    theta_rs,
    theta_sym,
)
from .zeta import (
    ZetaValue,
    functional_eq_residual,
    p_bound,
    riemann_siegel,
    rs_remainder,
    z_function,
    zeta_em,
    zeta_geometric,
)
from .zeros import (
    GramPoint,
    ZeroRecord,
    gram_point,
    ingest_zeros,
    lehmer_scan,
    scan_zeros,
    zero_count_estimate,
)
from .arith import (
    DirichletCharacter,
    LandauTable,
    characters,
    ensemble_real_sum,
    euler_product,
    hurwitz,
    invert_primes_to_zeros,
    l_function,
    landau_cosine_sum,
    mangoldt,
    sieve,
)

__version__ = "0.1.0"

__all__ = [
    "ArgandStream", "DiffSet", "DirichletCharacter", "DoubleWord",
    "GramPoint", "LandauTable", "PendantCenter", "ReducedAngle", "SParam",
    "SpiralCenter", "StepRecord", "SymmetryFrame", "ZeroRecord", "ZetaValue",
    "characters", "conjugate_range", "conjugate_ratio_experiment", "dts_eval",
    "dump_steps", "dw_log", "ensemble_real_sum", "euler_product",
    "forward_diffs", "frame", "functional_eq_residual", "gaussian_scroll",
    "gram_point", "hurwitz", "ingest_zeros", "invert",
    "invert_primes_to_zeros", "kernel_backend", "l_function",
    "landau_cosine_sum", "lehmer_scan", "mangoldt", "p_bound", "partial_sum",
    "pendant_center", "pendant_radius_cap", "q_exact", "reduce_angle",
    "reduce_linear", "riemann_siegel", "rs_remainder", "scan_zeros", "sieve",
    "spiral_center", "step", "theta_rs", "theta_sym", "z_function",
    "zero_count_estimate", "zeta_em", "zeta_geometric",
]
