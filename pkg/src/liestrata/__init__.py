"""Exact computations on coadjoint strata, stabilizers and sheets of Lie algebras."""

from .algebra import Covector, LieAlgebra, Subspace, Vector
from .catalog import make
from .errors import ConvergenceError, InputError, InvariantViolation, LieStrataError
from .stabilizer import analyze_point, stabilizer

__all__ = [
    "ConvergenceError",
    "Covector",
    "InputError",
    "InvariantViolation",
    "LieAlgebra",
    "LieStrataError",
    "Subspace",
    "Vector",
    "analyze_point",
    "make",
    "stabilizer",
]

__version__ = "0.1.0"
