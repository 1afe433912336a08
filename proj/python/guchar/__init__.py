"""Exact equivariant reduced Euler characteristics of unitary groups.

The heavy lifting happens in the compiled extension ``_guchar``; this package
re-exports its functions. Polynomials in q travel as coefficient lists, low
degree first, with exact (arbitrary precision) integer entries.
"""

from ._guchar import (
    NonIntegralError,
    OracleBudgetExceeded,
    chi_gl,
    chi_gu,
    chi_gu_at,
    chi_gu_bruteforce,
    chi_gu_p_primary_bruteforce,
    class_types,
    count_polys,
    count_qregular_classes,
    gu_order,
    p_primary,
    selfdual_monic_count,
    verify,
)

__all__ = [
    "NonIntegralError",
    "OracleBudgetExceeded",
    "chi_gl",
    "chi_gu",
    "chi_gu_at",
    "chi_gu_bruteforce",
    "chi_gu_p_primary_bruteforce",
    "class_types",
    "count_polys",
    "count_qregular_classes",
    "gu_order",
    "p_primary",
    "selfdual_monic_count",
    "verify",
]
