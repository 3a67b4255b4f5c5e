"""Deterministic enumeration and seeded sampling of test inputs.

Basis fields are enumerated in lexicographic mode order (box of radius R
in the torus model, total degree <= R in the affine model).  For a check
of arity k the engine runs over all increasing index k-tuples when their
count fits the configured budget; otherwise it draws a uniform seeded
sample of exactly `budget` tuples.  Random tuples on top of that are
small rational combinations of basis fields, so a residual that is not
identically zero is caught with certainty at any point where it does not
vanish.

The generator is Python's Mersenne Twister (`random.Random`), which is
stable across platforms; per-check seeds are derived from the base seed
and the check name via CRC32 so reordering checks cannot reshuffle
samples.
"""

from __future__ import annotations

import random
import zlib
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .rings import AFFINE, TORUS, Mode, RingElement
from .fields import VectorField


def derive_seed(base: int, name: str) -> int:
    return (base * 0x9E3779B1 + zlib.crc32(name.encode("utf-8"))) % (2 ** 63)


def box_modes(n: int, radius: int) -> list[Mode]:
    """All torus modes with max norm <= radius, lexicographic order."""
    modes: list[Mode] = [()]
    for _ in range(n):
        modes = [m + (e,) for m in modes for e in range(-radius, radius + 1)]
    return modes


def affine_modes(n: int, max_degree: int) -> list[Mode]:
    """All exponents with total degree <= max_degree, lexicographic order."""
    out = []

    def rec(prefix: tuple[int, ...], budget: int) -> None:
        if len(prefix) == n:
            out.append(prefix)
            return
        for e in range(budget + 1):
            rec(prefix + (e,), budget - e)

    rec((), max_degree)
    return sorted(out)


def model_modes(model: str, n: int, radius: int) -> list[Mode]:
    return box_modes(n, radius) if model == TORUS else affine_modes(n, radius)


def basis_fields(model: str, n: int, radius: int) -> list[VectorField]:
    return [VectorField.basis(n, model, mode, j)
            for mode in model_modes(model, n, radius)
            for j in range(1, n + 1)]


def random_scalar(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def random_field(rng: random.Random, model: str, n: int, radius: int,
                 terms: int = 2) -> VectorField:
    modes = model_modes(model, n, radius)
    acc = VectorField.zero(n, model)
    for _ in range(terms):
        mode = rng.choice(modes)
        j = rng.randrange(1, n + 1)
        acc = acc + VectorField.basis(n, model, mode, j).scale(random_scalar(rng))
    return acc


def random_ring(rng: random.Random, model: str, n: int, radius: int,
                terms: int = 2) -> RingElement:
    modes = model_modes(model, n, radius)
    acc = RingElement.zero(n, model)
    for _ in range(terms):
        acc = acc + RingElement.monomial(n, model, rng.choice(modes), random_scalar(rng))
    return acc


def index_tuples(count: int, arity: int, budget: int,
                 rng: random.Random) -> tuple[Iterator[tuple[int, ...]], int, bool]:
    """Increasing `arity`-tuples out of range(count).

    Returns (iterator, number_of_tuples, exhaustive_flag).  When the full
    count exceeds the budget, a deduplicated seeded sample of `budget`
    tuples is drawn instead.
    """
    total = comb(count, arity)
    if total <= budget:
        return combinations(range(count), arity), total, True

    def sample() -> Iterator[tuple[int, ...]]:
        seen: set[tuple[int, ...]] = set()
        while len(seen) < budget:
            pick = tuple(sorted(rng.sample(range(count), arity)))
            if pick not in seen:
                seen.add(pick)
                yield pick

    return sample(), budget, False


def elements_text(elements: Sequence) -> list[str]:
    return [e.text() for e in elements]
