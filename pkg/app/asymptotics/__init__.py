"""Closed-form asymptotics of the boundary entropy."""

from app.asymptotics.coefficients import (
    AsymptoticModel,
    affleck_ludwig_g,
    epsilon_sign,
    f_coeff,
    f_derivative,
    g_coeff,
    negative_infinity_limits,
    s_minus,
)
from app.asymptotics.constants import SPECIAL_POINTS, special_point_constants
from app.asymptotics.params import Branch, RParam, branch_of, r_of_x, x_of_r
from app.asymptotics.precision import context, log_abs, to_mpf

__all__ = [
    "AsymptoticModel",
    "Branch",
    "RParam",
    "SPECIAL_POINTS",
    "affleck_ludwig_g",
    "branch_of",
    "context",
    "epsilon_sign",
    "f_coeff",
    "f_derivative",
    "g_coeff",
    "log_abs",
    "negative_infinity_limits",
    "r_of_x",
    "s_minus",
    "special_point_constants",
    "to_mpf",
    "x_of_r",
]
