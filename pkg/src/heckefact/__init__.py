"""Exact factorization statistics of the long cycle in the Iwahori-Hecke
algebra H_n(q), the q-analogue subspace-coverage polynomials M^n_r(q), and
the generating-function identities relating them.
"""

from .errors import HeckefactError

__all__ = ["HeckefactError"]
__version__ = "1.0.0"
