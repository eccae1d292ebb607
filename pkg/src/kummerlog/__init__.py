"""Bounded sum-of-digits discrete logarithms in Kummer and Artin-Schreier
extensions, with the prescribed base g = alpha + b.

The short version: in F_q[x]/(x^n - a) with n | q - 1, the conjugates of
g = alpha + b stay linear, so g^e factors into n known linear polynomials
raised to the base-q digits of e.  Factoring the target reads the digits
off directly while the digit sum is at most n; Guruswami-Sudan list
decoding stretches that to digit sums up to 1.32 n for almost all
exponents.  Brute-force oracles check every claim at desk scale.
"""

from .digits import (ExponentDigits, count_N, sample_bounded_sum, sum_of_digits,
                     tail_ratio)
from .extfield import (ASContext, ExtElement, KummerContext,
                       build_artin_schreier, build_kummer, embed_from_prime_model,
                       encode_digits, ext_pow, frobenius_power)
from .ff import Field, build_field
from .listdecode import BivariatePoly, DecodeParams, interpolate, list_decode, select_params, y_roots
from .oracle import (GroupBudget, bsgs_dlp, element_order, exhaustive_dlp_bounded,
                     factorize, meet_in_middle_binary)
from .poly import Poly, factor, gcd, is_irreducible, powmod, roots
from .solver import (DlpInstance, SolveOutcome, build_points, solve_auto,
                     solve_bounded, solve_listdecode)

__version__ = "0.1.0"

__all__ = [
    "ASContext", "BivariatePoly", "DecodeParams", "DlpInstance", "ExponentDigits",
    "ExtElement", "Field", "GroupBudget", "KummerContext", "Poly", "SolveOutcome",
    "bsgs_dlp", "build_artin_schreier", "build_field", "build_kummer", "build_points",
    "count_N", "element_order", "embed_from_prime_model", "encode_digits",
    "exhaustive_dlp_bounded", "ext_pow", "factor", "factorize", "frobenius_power",
    "gcd", "interpolate", "is_irreducible", "list_decode", "meet_in_middle_binary",
    "powmod", "roots", "sample_bounded_sum", "select_params", "solve_auto",
    "solve_bounded", "solve_listdecode", "sum_of_digits", "tail_ratio", "y_roots",
]
