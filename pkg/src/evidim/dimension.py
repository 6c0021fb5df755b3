"""Information fractal dimension of a mass function.

The dimension is the ratio of Deng entropy to the split scale

    log( sum over focal A of (2^|A| - 1)^m(A) ),

which measures how far the mass spreads over the power-set split.  Both
numerator and denominator scale by the same factor under a change of
logarithm base, so the ratio is base-free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import MAX_EXPLICIT_FRAME, CardinalityProfile, MassFunction, ProbabilityDistribution, _logsumexp2
from .entropy import BASE_2, check_base, deng_entropy, deng_entropy_profile, shannon_entropy, _from_bits, _log


@dataclass(frozen=True)
class DimensionReport:
    """Entropy, split scale (both base-2), their ratio, and whether the
    0/0 single-singleton case applied."""

    entropy_bits: float
    split_scale_bits: float
    dimension: float
    degenerate: bool


_DEGENERATE = DimensionReport(0.0, 0.0, 0.0, True)


def split_scale(mass: MassFunction, base: float = BASE_2) -> float:
    """log of sum (2^|A| - 1)^m(A) over the focal elements.

    Every term is >= 1 (base >= 1, exponent in (0, 1]), so the sum is >= 1
    and hits exactly 1 only when the sole focal element is a singleton
    (term 1^1); the split scale is therefore 0 iff the mass function is
    that degenerate case, and positive otherwise.
    """
    base = check_base(base)
    total = math.fsum(
        (2 ** subset.cardinality - 1) ** m for subset, m in mass.focal
    )
    return _log(total, base)


def split_scale_profile(profile: CardinalityProfile, base: float = BASE_2) -> float:
    """Split scale grouped by cardinality: log sum_k count_k (2^k - 1)^m_k."""
    base = check_base(base)
    if profile.frame_size <= MAX_EXPLICIT_FRAME:
        total = math.fsum(
            row.count * (2 ** card - 1) ** row.mass for card, row in profile.rows
        )
        return _log(total, base)
    # beyond the explicit cap the sum itself can overflow; stay in log2 space
    bits = _logsumexp2(
        [
            math.log2(row.count) + _exponent(row) * math.log2((1 << card) - 1)
            for card, row in profile.rows
        ]
    )
    return _from_bits(bits, base)


def _exponent(row) -> float:
    # underflowed masses still act as an exponent of ~0, which is exact enough
    return row.mass if row.mass > 0.0 else 2.0 ** row.log2_mass


def information_dimension(mass: MassFunction) -> DimensionReport:
    """Deng entropy over split scale; structurally 0 for one singleton.

    The degenerate case (single focal element of cardinality 1, the only
    mass function with split scale exactly 0) is detected from the focal
    structure rather than by comparing the denominator to zero.
    """
    if len(mass.focal) == 1 and mass.focal[0][0].cardinality == 1:
        return _DEGENERATE
    entropy = deng_entropy(mass)
    split = split_scale(mass)
    return DimensionReport(entropy, split, entropy / split, False)


def information_dimension_profile(profile: CardinalityProfile) -> DimensionReport:
    """Profile-evaluated dimension; same contract as the explicit form."""
    if profile.is_single_singleton:
        return _DEGENERATE
    entropy = deng_entropy_profile(profile)
    split = split_scale_profile(profile)
    return DimensionReport(entropy, split, entropy / split, False)


def probability_dimension(dist: ProbabilityDistribution) -> DimensionReport:
    """Shannon entropy over log(N) for a probability distribution.

    Singletons never split, so every power-set term is 1^p = 1 and the
    denominator collapses to log(N).  A single-outcome distribution is
    the degenerate 0/0 case.
    """
    if dist.size == 1:
        return _DEGENERATE
    entropy = shannon_entropy(dist)
    split = math.log2(dist.size)
    return DimensionReport(entropy, split, entropy / split, False)
