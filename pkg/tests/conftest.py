"""Shared fixtures: named codings and the randomized periodic battery."""

from __future__ import annotations

import random

import pytest

from toeplitz.coding import Alphabet, Coding, CodingEntry, PeriodicTail
from toeplitz.presets import grigorchuk, liuqu, parse_coding_spec

BATTERY_SEED = 20250808
BATTERY_SIZE = 56


def random_periodic_coding(rng: random.Random) -> Coding:
    """Valid-by-construction coding: alphabet 2-5, n in {2,3,4}, pre <= 3, tail <= 4."""
    size = rng.randint(2, 5)
    alphabet = Alphabet.from_names("abcde"[:size])
    # a 2-letter alphabet admits no odd cyclically-distinct tail
    tail_len = rng.choice([2, 4]) if size == 2 else rng.randint(2, 4)
    while True:
        ids = [rng.randrange(size) for _ in range(tail_len)]
        if all(ids[i] != ids[(i + 1) % tail_len] for i in range(tail_len)):
            break
    pre_len = rng.randint(0, 3)
    pre_ids: list[int] = []
    follower = ids[0]
    for _ in range(pre_len):  # built backwards so every junction stays distinct
        choice = rng.choice([l for l in range(size) if l != follower])
        pre_ids.append(choice)
        follower = choice
    pre_ids.reverse()
    periods = [rng.choice([2, 3, 4]) for _ in range(pre_len + tail_len)]
    pre = tuple(
        CodingEntry(alphabet[l], n) for l, n in zip(pre_ids, periods[:pre_len])
    )
    tail = PeriodicTail(tuple(
        CodingEntry(alphabet[l], n) for l, n in zip(ids, periods[pre_len:])
    ))
    return Coding(alphabet, pre, tail)


def make_battery(count: int = BATTERY_SIZE, seed: int = BATTERY_SEED):
    rng = random.Random(seed)
    return [random_periodic_coding(rng) for _ in range(count)]


@pytest.fixture(scope="session")
def grig() -> Coding:
    return grigorchuk()


@pytest.fixture(scope="session")
def two_letter() -> Coding:
    return parse_coding_spec("| x:2 y:2")


@pytest.fixture(scope="session")
def liu_qu() -> Coding:
    return liuqu()


@pytest.fixture(scope="session")
def battery() -> list[Coding]:
    return make_battery()
