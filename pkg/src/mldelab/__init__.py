"""mldelab: exact q-series workbench for a family of fourth-order modular
linear differential equations, their solution classification, closed-form
solution catalog, and vertex-algebra character cross-checks."""

from .series import (
    PuiseuxSeries,
    LogSeries,
    SeriesError,
    ZeroLeadingCoefficient,
    NonUnitBase,
    InsufficientOrder,
    ConstantTermPresent,
    rat,
)

__all__ = [
    "PuiseuxSeries",
    "LogSeries",
    "SeriesError",
    "ZeroLeadingCoefficient",
    "NonUnitBase",
    "InsufficientOrder",
    "ConstantTermPresent",
    "rat",
]

__version__ = "0.1.0"
