"""Continued fractions on the Heisenberg group and U(2,1; Z[i]).

The layers, bottom up: exact Gaussian scalars and complex balls, points of the
Siegel quadric, the integer lattice and its Dirichlet domain, unitary matrices
over Z[i], number fields for fixed points, and the expansions themselves.
"""

from .cf import (
    DigitSequence,
    convergents,
    detect_period,
    euler_matrix,
    expand,
    lagrange_expansion,
    lagrange_report,
)
from .gaussian import GaussianInteger, GaussianRational, parse_scalar
from .lattice import FundamentalDomainConfig, dirichlet_reduce, nearest_integer
from .numfield import NumberField, colinearity_certificate, fixed_point_of
from .siegel import HeisenbergPoint, IntegerPoint, ProjectivePoint
from .unitary import GeneratorWord, UnitaryMatrix, decompose_power4, j_matrix, translation

__version__ = "0.1.0"
