import os
import random

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")

from toroidal_sl2 import basis_sort_key, e, f, h, is_positive, weight_of
from toroidal_sl2.algebra import C1, C2, D1, D2

SEED = int(os.environ.get("TV_SEED", "20250810"))

CONSTANTS = (C1, C2, D1, D2)
LOOP_MAKERS = (e, f, h)


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_basis_element(rng, mbound=5, nbound=5, constants=True):
    if constants and rng.random() < 0.15:
        return rng.choice(CONSTANTS)
    mk = rng.choice(LOOP_MAKERS)
    return mk(rng.randint(-mbound, mbound), rng.randint(-nbound, nbound))


def random_negative_element(rng, mbound=2, nmin=-2):
    while True:
        mk = rng.choice(LOOP_MAKERS)
        b = mk(rng.randint(-mbound, mbound), rng.randint(nmin, 0))
        w = weight_of(b)
        if not w.is_zero() and not is_positive(w):
            return b


def random_canonical_monomial(rng, max_factors=3, max_exp=2, mbound=2, nmin=-2):
    letters = {random_negative_element(rng, mbound, nmin)
               for _ in range(rng.randint(0, max_factors))}
    ordered = sorted(letters, key=basis_sort_key, reverse=True)
    return tuple((b, rng.randint(1, max_exp)) for b in ordered)
