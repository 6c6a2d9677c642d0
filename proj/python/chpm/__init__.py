"""Heat-polynomial collocation for the inverse one-phase Stefan problem."""

from ._core import (
    HeatPolynomialBasis,
    NumericalError,
    neumann_consistency,
    neumann_root,
    solve,
    sweep,
)

__all__ = [
    "HeatPolynomialBasis",
    "NumericalError",
    "neumann_consistency",
    "neumann_root",
    "solve",
    "sweep",
]
