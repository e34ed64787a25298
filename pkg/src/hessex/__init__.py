"""Exact polynomial algebra for Hessenberg schemes and their sheet-line families."""

from .groebner import BudgetExceeded, GroebnerBasis, buchberger, divide, is_groebner_basis, pair_budget, s_polynomial
from .hessenberg import (
    HessenbergFunction,
    JordanData,
    SheetLine,
    e_matrix,
    ev,
    hessenberg_ideal,
    ja_ideal,
    jt_ideal,
    k_ideal,
    minimal_sheet_line,
    psi,
    pt_ideal,
    sheet_line,
)
from .idealops import (
    Ideal,
    eliminate,
    ideal_intersection,
    ideal_quotient,
    ideal_sum,
    ideals_equal,
    krull_dimension,
    multidegree,
    radical_certificate,
    saturate,
)
from .polycore import PAPER, DegLex, DiagonalTwist, Grevlex, Lex, PaperOrder, Polynomial, Ring, parse_polynomial
from .schubert import Permutation, bruhat_leq, class_formula, schubert_determinantal_ideal, schubert_polynomial
from .verify import VerificationReport, run_job, run_suite
from .xpoly import XPoly

__version__ = "0.1.0"
