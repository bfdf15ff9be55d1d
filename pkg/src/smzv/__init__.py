"""Schur multiple zeta values of checkerboard tableaux.

Exact truncated evaluation and identity verification over the rationals,
closed forms in odd zeta values and powers of pi for the (1,3) fill, and
tail-extrapolated high-precision numerics.
"""

from .shapes import (FamilySpec, Partition, SkewShape, SmzvError, Tableau,
                     checkerboard_fill, corner_parity, family_shape, glue_h,
                     glue_v, is_checkerboardable, is_ribbon, iter_skew_shapes,
                     make_family, staircase)
from .exact_engine import (COLS, ROWS, RibbonExpr, check_gluing,
                           check_stair_exact, det_rational, ribbon_decompose,
                           trunc_jacobi_trudi, trunc_mzsv, trunc_mzv,
                           trunc_smzv, trunc_smzv_enum)
from .numerics import (HPReal, PiPolynomial, TailEstimate, ZetaCache,
                       bernoulli, det_float, mzv_numeric, repeated_zeta,
                       smzv_numeric, zeta_even_exact, zeta_int, zeta_odd)
from .closed_forms import (ConjectureReport, StairData, ZetaExpr,
                           antihook_eval, antihook_eval_shape,
                           conjecture_residual, hook_eval, hook_eval_shape,
                           mzv_relation_check, primitive_13, primitive_rec,
                           s_general, special_values, sstar_general,
                           stair_data, stair_eval, stair_hankel,
                           stair_hankel_13, stair_matrix, stair_submatrix)
from .reporting import IdentityReport

__version__ = "0.1.0"
