import itertools
import json
import random
from pathlib import Path

import pytest

from lrcpack import known

DATA = Path(__file__).parent / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def brute_min_distance(code):
    """Pure-Python enumeration; shares no code with codes.min_distance."""
    F = code.field
    G = code.generator()
    best = code.n
    for msg in itertools.product(range(F.q), repeat=code.k):
        if not any(msg):
            continue
        word = [0] * code.n
        for coef, row in zip(msg, G):
            if coef:
                word = [F.add(w, F.mul(coef, g)) for w, g in zip(word, row)]
        best = min(best, sum(1 for w in word if w))
    return best


def random_packing_blocks(rng: random.Random, k: int, tries: int = 40) -> list[list[int]]:
    """Greedy random packing on 1..k in which every element is covered."""
    used: set[tuple[int, int]] = set()
    blocks: list[list[int]] = []
    max_size = rng.randint(1, min(k, 5))
    for _ in range(tries):
        size = rng.randint(1, max_size)
        cand = sorted(rng.sample(range(1, k + 1), size))
        pairs = set(itertools.combinations(cand, 2))
        if pairs & used:
            continue
        used |= pairs
        blocks.append(cand)
    covered = {x for b in blocks for x in b}
    blocks.extend([x] for x in range(1, k + 1) if x not in covered)
    return blocks


@pytest.fixture
def code_16_8():
    return known.code_16_8()


@pytest.fixture
def code_14_8():
    return known.code_14_8()


@pytest.fixture
def data_dir():
    return DATA
