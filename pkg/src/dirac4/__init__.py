"""Closed-form vector parametrization of 4x4 complex matrices and of the
groups SL(4,C), SU(4), SU(2,2), SU(3,1) and their subgroups."""

from .errors import Dirac4Error
from .params import DiracCoeffs, ParamsKMNL, compose, determinant, inverse
from .kernels import BACKEND

__all__ = ["BACKEND", "Dirac4Error", "DiracCoeffs", "ParamsKMNL", "compose",
           "determinant", "inverse"]
__version__ = "0.1.0"
