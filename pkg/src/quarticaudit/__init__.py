"""quarticaudit: mechanical verification of class number parity for pure quartic fields.

The package checks, prime by prime, every computable step of the argument that
Q(p^(1/4)) has class number 2 mod 4 when p is 9 mod 16, and confirms the
conclusion by computing class groups of small quartic fields directly.
"""

__version__ = "0.1.0"
__description__ = (
    "Mechanical verification of parity results for class numbers of pure quartic fields"
)
