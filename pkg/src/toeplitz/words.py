"""Blocks p(k), prefixes of the one-sided limit word, and hole arithmetic.

The level-k block sits between two consecutive holes of the k-th periodic
approximant and obeys

    p(0) = a_0^{n_0 - 1},   p(k+1) = (p(k) a_{k+1})^{n_{k+1} - 1} p(k),

so |p(k)| + 1 = n_0 * ... * n_k.  Every p(k) is a prefix of p(k+1), which
pins down a unique one-sided infinite word; its factor set is the language
of the subshift, so that word is the canonical representative here.  Words
are bytes of letter ids (alphabets are capped at 255 letters).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coding import Coding, scaled_length
from .errors import BudgetExceeded, InvalidShift

DEFAULT_BUDGET = 1 << 24


@lru_cache(maxsize=512)
def _block(c: Coding, k: int) -> bytes:
    if k == 0:
        return bytes([c.letter(0).id]) * (c.period(0) - 1)
    prev = _block(c, k - 1)
    chunk = prev + bytes([c.letter(k).id])
    return chunk * (c.period(k) - 1) + prev


def block(c: Coding, k: int, budget: int = DEFAULT_BUDGET) -> bytes:
    """The block p(k); |p(k)| + 1 = n_0 * ... * n_k."""
    if k < 0:
        raise IndexError("block level must be >= 0")
    length = scaled_length(c, k) - 1
    if length > budget:
        raise BudgetExceeded(
            f"|p({k})| = {length} exceeds the budget of {budget} symbols"
        )
    return _block(c, k)


def block_length(c: Coding, k: int) -> int:
    """|p(k)| without materializing anything; |p(-1)| = 0."""
    return scaled_length(c, k) - 1


def word_prefix(c: Coding, length: int, budget: int = DEFAULT_BUDGET) -> bytes:
    """The first `length` symbols of the one-sided limit word.

    Only O(length) symbols are materialized even when the enclosing block
    is much longer than the requested prefix.
    """
    if length < 0:
        raise IndexError("prefix length must be >= 0")
    if length == 0:
        return b""
    if length > budget:
        raise BudgetExceeded(
            f"prefix of length {length} exceeds the budget of {budget} symbols"
        )
    if length <= block_length(c, 0):
        return bytes([c.letter(0).id]) * length
    k = 1
    while block_length(c, k) < length:
        k += 1
    # p(k) = (p(k-1) a_k)^{n_k - 1} p(k-1) and p(k-1) is a prefix of the
    # repeated chunk, so truncating chunk repetitions is exact
    chunk = block(c, k - 1, budget) + bytes([c.letter(k).id])
    reps = -(-length // len(chunk))
    return (chunk * reps)[:length]


@dataclass(frozen=True)
class UndeterminedPart:
    """Residue class modulus*Z + offset of the holes of an approximant."""

    modulus: int
    offset: int

    def __post_init__(self):
        if not 0 <= self.offset < self.modulus:
            raise ValueError("offset must lie in [0, modulus)")

    def __contains__(self, position: int) -> bool:
        return position % self.modulus == self.offset


def undetermined_part(c: Coding, k: int, shifts) -> UndeterminedPart:
    """Hole positions of the k-th approximant for hole shifts r_0..r_k.

    The holes form n_0*...*n_k Z + [r_0 + sum_j r_j n_0*...*n_{j-1}]:
    exactly one undetermined position per period.
    """
    shifts = tuple(shifts)
    if len(shifts) != k + 1:
        raise InvalidShift(f"expected {k + 1} shifts r_0..r_{k}, got {len(shifts)}")
    for j, r in enumerate(shifts):
        if not 0 <= r < c.period(j):
            raise InvalidShift(f"r_{j} = {r} outside [0, {c.period(j)})")
    modulus = scaled_length(c, k)
    offset, stride = 0, 1
    for j, r in enumerate(shifts):
        offset += r * stride
        stride *= c.period(j)
    return UndeterminedPart(modulus, offset % modulus)
