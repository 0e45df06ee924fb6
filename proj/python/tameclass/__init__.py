"""Classification of tame Galois groups over imaginary quadratic fields.

Exact-arithmetic classification of non-p-adic primes q by finiteness and
powerfulness criteria, plus density scans with Wilson-score reporting.
The heavy lifting lives in the compiled `_core` extension; this package
re-exports its public surface.
"""

from ._core import (
    Classifier,
    TameError,
    class_group,
    is_prime,
    splitting_type,
)

__all__ = [
    "Classifier",
    "TameError",
    "class_group",
    "is_prime",
    "splitting_type",
]

__version__ = "0.1.0"
