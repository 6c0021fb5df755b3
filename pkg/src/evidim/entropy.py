"""Shannon entropy, Deng entropy, and the maximum-Deng-entropy value.

Deng entropy generalizes Shannon entropy to mass functions by crediting
each focal set A with the 2^|A| - 1 nonempty subsets it could split
into::

    H_D = -sum m(A) * log( m(A) / (2^|A| - 1) )

For a Bayesian mass function every |A| is 1 and this reduces to Shannon
entropy.  The maximum over all assignments on a full power set is
log(3^n - 2^n), reached when m(A) is proportional to 2^|A| - 1.
"""
from __future__ import annotations

import math

from .core import (
    MAX_EXPLICIT_FRAME,
    CardinalityProfile,
    MassFunction,
    ProbabilityDistribution,
)

BASE_2 = 2.0
BASE_E = math.e
BASE_10 = 10.0


def check_base(base: float) -> float:
    base = float(base)
    if not base > 1.0:
        raise ValueError(f"logarithm base must be > 1, got {base!r}")
    return base


def _log(x: float, base: float) -> float:
    # dedicated stdlib paths keep the canonical bases correctly rounded
    if base == 2.0:
        return math.log2(x)
    if base == 10.0:
        return math.log10(x)
    if base == math.e:
        return math.log(x)
    return math.log(x) / math.log(base)


def _from_bits(bits: float, base: float) -> float:
    return bits if base == 2.0 else bits / math.log2(base)


def shannon_entropy(dist: ProbabilityDistribution, base: float = BASE_2) -> float:
    """-sum p_i log(p_i); zero iff the distribution is deterministic."""
    base = check_base(base)
    return -math.fsum(p * _log(p, base) for p in dist.probabilities)


def shannon_max(n: int, base: float = BASE_2) -> float:
    """log(n), the entropy of the uniform distribution on n outcomes."""
    base = check_base(base)
    if n < 1:
        raise ValueError("outcome count must be at least 1")
    return _log(n, base)


def deng_entropy(mass: MassFunction, base: float = BASE_2) -> float:
    """-sum m(A) log(m(A) / (2^|A| - 1)) over the focal elements."""
    base = check_base(base)
    return -math.fsum(
        m * _log(m / (2 ** subset.cardinality - 1), base)
        for subset, m in mass.focal
    )


def deng_entropy_profile(profile: CardinalityProfile, base: float = BASE_2) -> float:
    """Deng entropy grouped by cardinality: O(N) in the frame size.

    Each layer contributes count * mass * (log(2^k - 1) - log(mass)).
    Layer weights come from the log-domain mass beyond the explicit
    frame cap, where count * mass would overflow or underflow a double.
    """
    base = check_base(base)
    log_domain = profile.frame_size > MAX_EXPLICIT_FRAME
    bits = math.fsum(
        _layer_weight(row, log_domain) * (math.log2((1 << card) - 1) - row.log2_mass)
        for card, row in profile.rows
    )
    return _from_bits(bits, base)


def _layer_weight(row, log_domain: bool) -> float:
    if log_domain:
        return 2.0 ** (math.log2(row.count) + row.log2_mass)
    return row.count * row.mass


def max_deng_entropy(n: int, base: float = BASE_2) -> float:
    """log(3^n - 2^n), the largest Deng entropy on an n-element frame.

    Uses the exact integer 3^n - 2^n (equal to sum_k C(n,k) (2^k - 1));
    math.log2 takes arbitrary-precision integers, so no overflow for
    large n.
    """
    base = check_base(base)
    if n < 1:
        raise ValueError("frame size must be at least 1")
    if n == 1:
        return 0.0
    return _from_bits(math.log2(3 ** n - 2 ** n), base)
