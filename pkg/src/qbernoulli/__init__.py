"""Exact q-analogues of Barnes' multiple Bernoulli numbers and polynomials."""

from .barnes import BarnesParams, barnes_poly, bernoulli
from .characters import DirichletCharacter, beta_chi, enumerate_characters
from .cyclo import CycloElem, cyclotomic_poly
from .exactalg import Poly, PowerSeries, RatFun
from .qbern import BetaParams, SingularFactorError, beta, limit_q1, moment, q_int

__all__ = [
    "BarnesParams", "barnes_poly", "bernoulli",
    "DirichletCharacter", "beta_chi", "enumerate_characters",
    "CycloElem", "cyclotomic_poly",
    "Poly", "PowerSeries", "RatFun",
    "BetaParams", "SingularFactorError", "beta", "limit_q1", "moment", "q_int",
]

__version__ = "0.1.0"
