"""Approximation-ratio constants as exact rationals.

Every guarantee certified by this package is a ratio built from Euler's
number.  To keep certification free of floating-point noise, e is pinned
as a 30-decimal-digit rational and all bound arithmetic stays in Fraction;
the documented tolerance of 1e-12 on the bound constant absorbs the
truncation error (about 1e-30) many times over.
"""

from __future__ import annotations

from fractions import Fraction

# e to 30 decimal places
APPROX_E = Fraction("2.718281828459045235360287471353")

# applied to the bound constant when comparing against the exact optimum
RATIO_TOLERANCE = Fraction(1, 10**12)


def ext_domination_bound() -> Fraction:
    """(6e-5)/(6e+5), the k=1 guarantee of the two-branch solver."""
    return (6 * APPROX_E - 5) / (6 * APPROX_E + 5)


def aux_bound_delta0(k: int) -> Fraction:
    """(e-1)/(e+1/k), the guarantee of the size-floor k+1 decomposition."""
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    return (APPROX_E - 1) / (APPROX_E + Fraction(1, k))


def aux_bound_delta1(k: int) -> Fraction:
    """min{(e-1)/(e+1/(k+1)), k/(k+1)} for the size-floor k+2 decomposition."""
    if k < 1:
        raise ValueError("hop radius k must be at least 1")
    return min(
        (APPROX_E - 1) / (APPROX_E + Fraction(1, k + 1)),
        Fraction(k, k + 1),
    )


def ext_representation_bound() -> Fraction:
    """(e-1)/(e+1), the committee and plain-greedy guarantee."""
    return (APPROX_E - 1) / (APPROX_E + 1)
