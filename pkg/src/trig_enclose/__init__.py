"""Certified enclosures for trigonometric series remainders, sharp constants and inequalities."""
from .best_constants import (SharpConstantPair, huygens_a_b, huygens_varrho, papenfuss_L_M, papenfuss_PQ,
                             rational_bound, sec_remainder_constants, wilker_alpha_beta, wilker_lambda_mu,
                             wilker_q)
from .errors import BudgetExceeded, DomainError, RejectedInput, TrigEncloseError
from .exact_numbers import bernoulli, euler_number, series_coefficient
from .inequality_verifier import compare_bounds, endpoint_limit, falsify_sharpness, verify
from .intervals import Enclosure, TailBound
from .polygamma import polygamma, tail_4k2_minus_1_sq, tail_inverse_quartic
from .remainder_series import (eval_with_enclosure, remainder_cot, remainder_csc, remainder_sec,
                               remainder_sec2tan, remainder_tan, remainder_tanh, xi_factor)
from .zeta_sums import alt_even_zeta, alt_odd_sum, brute_sum, even_zeta, odd_zeta_even, registry_constant

__version__ = "0.1.0"
