"""Exact Donaldson-Futaki invariants, norms, and sequence invariants of test configurations.

Test configurations are given by a homogeneous ideal together with integer
weights on the coordinates.  The exact modules (``algebra``, ``geometry``,
``invariants``, ``sequences``) work over the rationals; ``numeric`` checks
the analytic side on the projective line by quadrature.
"""
from .errors import CertificateError, InputError, TrivialConfigurationError

__version__ = "0.1.0"

__all__ = ["CertificateError", "InputError", "TrivialConfigurationError", "__version__"]
