"""Spectral distortion of the RLWE-to-PLWE embedding for cyclotomic and
related polynomials: closed-form Gram matrices, eigenvalues, distortion
values and their upper bounds, each paired with a numerical oracle."""
from .embedding import gram_oracle, gram_oracle_cyclotomic
from .gramform import gram_cyclotomic, gram_entry, gram_power_substitution, sign_flip
from .spectral import SDReport, sd_cyclotomic, sd_polynomial, sd_power_substitution, sd_prime_closed

__version__ = "0.1.0"
