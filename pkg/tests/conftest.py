"""Shared helpers for building random test inputs with a fixed seed."""

from __future__ import annotations

import random
from fractions import Fraction

from normord import Grammar, Polynomial, mono

# Presets whose rules stay small under repeated derivation; used for
# randomized grammar properties where runtime matters.
SMALL_PRESETS = (
    "stirling-second",
    "stirling-dual",
    "eulerian-ab",
    "eulerian-xy",
    "eulerian-full",
    "pq-eulerian",
    "second-order",
    "full-ternary",
    "pair-symmetric",
    "swap",
    "type-b-split",
    "exp-surrogate",
)


def random_scalar(rng: random.Random, *, rationals: bool = False):
    if rationals and rng.random() < 0.3:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return rng.randint(-9, 9)


def random_polynomial(
    rng: random.Random,
    symbols: str = "xyz",
    *,
    max_terms: int = 4,
    max_exp: int = 3,
    min_exp: int = 0,
    rationals: bool = False,
) -> Polynomial:
    acc = Polynomial()
    for _ in range(rng.randint(0, max_terms)):
        exps = {
            s: rng.randint(min_exp, max_exp)
            for s in symbols
            if rng.random() < 0.7
        }
        acc = acc + mono(random_scalar(rng, rationals=rationals), **exps)
    return acc


def random_grammar(rng: random.Random) -> Grammar:
    return Grammar.preset(rng.choice(SMALL_PRESETS))
