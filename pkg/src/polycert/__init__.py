"""Exact positivity certificates for univariate polynomials of degree at most five.

Every verdict is computed in rational arithmetic and comes with a
certificate naming the rule that produced it.  A Sturm-sequence oracle
checks the closed-form rules independently.
"""
from .dispatch import agrees, classify
from .exactpoly import Poly, discriminant, resultant
from .sturm import oracle_classify, sturm_chain
from .types import Certificate, CertificateConflict, Classification, Region, Verdict, ZeroLocation

__all__ = [
    "Certificate", "CertificateConflict", "Classification", "Poly", "Region", "Verdict", "ZeroLocation",
    "agrees", "classify", "discriminant", "oracle_classify", "resultant", "sturm_chain",
]
__version__ = "0.1.0"
