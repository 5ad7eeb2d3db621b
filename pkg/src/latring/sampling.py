"""Seeded random generators for law-checking suites.

Suites default to a fixed seed so every report is reproducible; callers
override the seed to explore.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .elements import EvSeq, FinVec
from .spaces import Space, SpaceKind

DEFAULT_SEED = 0


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def rand_rat(rng: random.Random, span: int = 12, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_nonneg_rat(rng: random.Random, span: int = 12, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(0, span), rng.randint(1, max_den))


def rand_finvec(rng: random.Random, dim: int, span: int = 12) -> FinVec:
    return FinVec(tuple(rand_rat(rng, span) for _ in range(dim)))


def rand_pos_finvec(rng: random.Random, dim: int, span: int = 12) -> FinVec:
    return FinVec(tuple(rand_nonneg_rat(rng, span) for _ in range(dim)))


def rand_evseq(rng: random.Random, max_prefix: int = 5, span: int = 12) -> EvSeq:
    prefix = tuple(rand_rat(rng, span) for _ in range(rng.randint(0, max_prefix)))
    return EvSeq(prefix, rand_rat(rng, span))


def rand_pos_evseq(rng: random.Random, max_prefix: int = 5, span: int = 12) -> EvSeq:
    prefix = tuple(rand_nonneg_rat(rng, span) for _ in range(rng.randint(0, max_prefix)))
    return EvSeq(prefix, rand_nonneg_rat(rng, span))


def rand_element(rng: random.Random, space: Space):
    if space.kind is SpaceKind.QN:
        return rand_finvec(rng, space.dim)
    if space.kind is SpaceKind.EVSEQ:
        return rand_evseq(rng)
    return rng.randint(-12, 12)


def rand_pos_element(rng: random.Random, space: Space):
    if space.kind is SpaceKind.QN:
        return rand_pos_finvec(rng, space.dim)
    if space.kind is SpaceKind.EVSEQ:
        return rand_pos_evseq(rng)
    return rng.randint(0, 12)


def rand_matrix_rows(rng: random.Random, n: int, span: int = 9) -> tuple:
    return tuple(tuple(rand_rat(rng, span) for _ in range(n)) for _ in range(n))


def rand_in_interval(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    """Uniform-ish exact rational in [lo, hi]."""
    t = Fraction(rng.randint(0, 24), 24)
    return lo + t * (hi - lo)
