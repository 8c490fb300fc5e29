"""Exact arithmetic for function-field multiple zeta values and their
u-analogs via the Carlitz module."""

from .errors import (BracketNotInvertible, DenominatorNotCoprime,
                     IndexMismatch, NonIntegralCoefficient, NotInvertible,
                     NotMonic, PrecisionNotCertified, PrecisionTooLow,
                     UnknownSuite, ZeroInput, ZeroToPrecision)
from .fields import (GF, FFElem, FieldDesc, FvElem, PolyA, RatK, ResidueField,
                     enumerate_monic, irreducibles_up_to, reduce_mod_v)
from .laurent import (LaurentElem, LaurentField, ValuationReport,
                      dominance_profile, embed_K, in_domain_D)
from .carlitz import Carlitz
from .upoly import UPoly
from .cyclotomic import CycloElem, CycloRing, bracket_at_lambda, reduce_at_zero
from .shuffle import (ShuffleElem, delta, homomorphism_check, realize,
                      shuffle_product)
from .harmonic import (CycloUBracket, FiniteMZVVector, FormalUBracket,
                       IdentityBracket, LaurentUBracket, XBracket,
                       analytic_limit_check, finite_euler_carlitz_check,
                       finite_mzv, finite_mzv_via_torsion, harmonic_H,
                       harmonic_H_lt, multi_power_sum, power_sum,
                       t_expansion, truncated_sum, zeta_thakur)
from .useries import (USeries, XSeries, derivation_D, gamma_direct, gamma_mzv,
                      gamma_shuffle_check, hasse_schmidt_check,
                      identity_check_explicit, p_poly, w_poly, zeta_u_series,
                      zeta_x_series)

__version__ = "0.1.0"
