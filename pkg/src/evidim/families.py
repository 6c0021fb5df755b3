"""Parametric mass-function families, generated as cardinality profiles.

All four families are cardinality-symmetric, so a profile represents them
exactly, and rational construction keeps their total mass exactly 1.
"""
from __future__ import annotations

import math
from typing import Callable

from .core import CardinalityProfile, EvidenceError, FrameTooLargeError, ProfileRow

PROFILE_LIMIT = 1024


class UnknownFamilyError(EvidenceError):
    pass


def vacuous(n: int) -> CardinalityProfile:
    """Total ignorance: the whole frame carries mass 1."""
    _check_size(n)
    return CardinalityProfile.from_rows(n, {n: ProfileRow.from_ratio(1, 1, 1)})


def uniform_bayesian(n: int) -> CardinalityProfile:
    """Mass 1/n on each singleton (a uniform probability distribution)."""
    _check_size(n)
    return CardinalityProfile.from_rows(n, {1: ProfileRow.from_ratio(n, 1, n)})


def uniform_powerset(n: int, limit: int = PROFILE_LIMIT) -> CardinalityProfile:
    """Mass 1/(2^n - 1) on every nonempty subset."""
    _check_size(n, limit)
    den = (1 << n) - 1
    return CardinalityProfile.from_rows(
        n,
        {k: ProfileRow.from_ratio(math.comb(n, k), 1, den) for k in range(1, n + 1)},
    )


def max_deng(n: int, limit: int = PROFILE_LIMIT) -> CardinalityProfile:
    """Mass proportional to 2^|A| - 1; attains the maximum Deng entropy.

    The normalizer sum_k C(n,k) (2^k - 1) collapses to 3^n - 2^n, so the
    total mass is exactly 1 by construction.
    """
    _check_size(n, limit)
    den = 3 ** n - 2 ** n
    return CardinalityProfile.from_rows(
        n,
        {
            k: ProfileRow.from_ratio(math.comb(n, k), (1 << k) - 1, den)
            for k in range(1, n + 1)
        },
    )


FAMILIES: dict[str, Callable[[int], CardinalityProfile]] = {
    "vacuous": vacuous,
    "uniform-bayesian": uniform_bayesian,
    "uniform-powerset": uniform_powerset,
    "max-deng": max_deng,
}


def family_profile(name: str, n: int) -> CardinalityProfile:
    try:
        generator = FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(
            f"unknown family {name!r}; choose from {sorted(FAMILIES)}"
        ) from None
    return generator(n)


def _check_size(n: int, limit: int | None = None):
    if n < 1:
        raise EvidenceError("frame size must be at least 1")
    if limit is not None and n > limit:
        raise FrameTooLargeError(f"family profiles are capped at {limit} elements, got {n}")
