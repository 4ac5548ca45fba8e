"""Exact certificates for ideals generated by symmetric polynomials.

Submodules: ``polycore`` (polynomials over Q), ``groebner`` (Buchberger and
ideal queries), ``symmetric`` (p, h, e, Schur and residues), ``primecert``
(regular sequences and primality certificates), ``cyclotomic`` (vanishing sums
of roots of unity), ``lefschetz`` (Hilbert functions and the strong Lefschetz
test), and ``cli``.
"""

from ._kernels import BACKEND
from .cyclotomic import RootSumSpec, cyclotomic_poly, no_vanish_guarantee, vanishes, weight_set
from .groebner import (
    Budget,
    GroebnerBasis,
    IdealSpec,
    ResourceCeilingExceeded,
    groebner_basis,
    ideal_equal,
    ideal_membership,
    initial_ideal,
    krull_dimension,
    normal_form,
    quotient_basis,
    radical_is_irrelevant_maximal,
)
from .lefschetz import artinian_presentation, multiplication_matrix, slp_check
from .polycore import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolyRingContext,
    arith,
    format_polynomial,
    parse_polynomial,
    partial_derivative,
)
from .primecert import (
    Verdict,
    arithmetic_precheck,
    certify_prime,
    combine_disjoint_primes,
    is_regular_sequence,
    jacobian,
    minor_ideal,
)
from .symmetric import (
    complete_homogeneous,
    elementary,
    newton_identity_defect,
    power_sum,
    residue_h_mod_h1h4,
    residue_p_mod_initial,
    schur_bialternant,
    schur_jacobi_trudi,
)

__version__ = "0.1.0"
