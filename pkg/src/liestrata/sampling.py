"""Seeded random rationals.

Every probabilistic check draws from a numpy ``Generator``; batches derive
one child seed per sample so results do not depend on evaluation order.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

DEFAULT_BOUND = 10**6


def rng_for(seed: int | np.random.SeedSequence) -> np.random.Generator:
    return np.random.default_rng(seed)


def child_seeds(seed: int, count: int, *, salt: int = 0) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence([seed, salt]).spawn(count)


def random_rational(rng: np.random.Generator, bound: int = DEFAULT_BOUND) -> Fraction:
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.integers(1, bound + 1))
    return Fraction(num, den)


def random_vector(rng: np.random.Generator, n: int, bound: int = DEFAULT_BOUND) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng, bound) for _ in range(n))


def small_rational(rng: np.random.Generator, bound: int = 9) -> Fraction:
    """Rationals with small numerator and denominator, for structured points."""
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
