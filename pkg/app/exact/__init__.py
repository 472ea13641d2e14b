"""Exact rational layer: counting formulas, closed forms and identities."""

from app.exact.closedform import (
    closed_form_genfun,
    eval_det_at,
    genfun_per_even,
    genfun_refl_even,
    genfun_refl_odd,
    hypergeom_form,
    ode_residual,
)
from app.exact.genfun import GenFun, eval_genfun
from app.exact.identities import (
    IdentityCheck,
    IdentityStatus,
    check_special_values,
    special_form,
)
from app.exact.numbers import CombinatorialFamily, comb_number
from app.exact.polynomial import Polynomial

__all__ = [
    "GenFun",
    "Polynomial",
    "CombinatorialFamily",
    "comb_number",
    "eval_genfun",
    "genfun_per_even",
    "genfun_refl_even",
    "genfun_refl_odd",
    "closed_form_genfun",
    "eval_det_at",
    "hypergeom_form",
    "ode_residual",
    "IdentityStatus",
    "IdentityCheck",
    "check_special_values",
    "special_form",
]
