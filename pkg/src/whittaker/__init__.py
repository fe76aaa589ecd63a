"""Whittaker M_{kappa,mu}(x), its parameter derivatives, incomplete gamma derivatives,
integral Whittaker functions and related logarithmic integrals, each by at least two routes."""

from .deriv import dm_dkappa, dm_dkappa_closed, dm_dmu, dm_dmu_closed, s1_s2
from .errors import BranchError, ConvergenceError, DivergenceError, DomainError, PoleError, WhittakerError
from .families import f_func, p_poly
from .hypergeom import PFQArgs, g1, g1_kummer, g1_reduced, h1, h1_reduced, pfq, pfq_nth_derivative, s_finite
from .incgamma import IncGammaArgs, dGamma_dnu, dgamma_dnu, log_integral_exp, log_integral_gamma, lower_gamma, upper_gamma
from .intwhittaker import (
    IntWhittakerArgs,
    mi_lower,
    mi_lower_reduced,
    mi_lower_reflected,
    mi_upper,
    mi_upper_reduced,
)
from .kernels import EvalResult, KernelValue, SeriesCtrl
from .logint import h_integral, i1_closed, i_integral, j1_closed, j3_closed, j_integral
from .quadrature import QuadCtrl, quad_de
from .verify import GridSpec, VerifyReport, fd_derivative, reproduce_table, run_suite
from .whittaker import ClosedForm, WhittakerParams, m_reduced, m_reflect, m_series

__version__ = "0.1.0"
