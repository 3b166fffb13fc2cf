"""Coding-spec parsing, named generators and the preset registry.

Spec grammar (CLI and files)::

    spec    := entries "|" entries
             | entries "|" "@" name [ "(" args ")" ]
    entries := (letter ":" int)*

Left of the bar is the preperiod, right of it either a periodic tail cycle
or a named generator.  Examples::

    a:2 | x:2 y:2 z:2        four-letter coding with constant period 2
    | @liuqu                 letter sequence (ab)c(ab)^2 d(ab)^3 c ...

Generator periods default to 2 everywhere and can be overridden with a
cyclic pattern (the CLI's --periods flag).
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Callable, Sequence

from .coding import (
    Alphabet,
    Coding,
    CodingEntry,
    GeneratorTail,
    PeriodicTail,
    normalize,
)
from .errors import EmptyCoding

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*):(\d+)$")

DEFAULT_GENERATOR_HORIZON = 512


def _liuqu_letters(count: int) -> list[str]:
    """(ab) c (ab)^2 d (ab)^3 c (ab)^4 d ... truncated to `count` letters."""
    out: list[str] = []
    for run in itertools.count(1):
        out.extend(["a", "b"] * run)
        out.append("c" if run % 2 == 1 else "d")
        if len(out) >= count:
            return out[:count]


def liuqu(horizon: int = DEFAULT_GENERATOR_HORIZON,
          periods: Sequence[int] = (2,)) -> Coding:
    """The four-letter coding whose subshift never satisfies condition (B)."""
    alphabet = Alphabet.from_names("abcd")
    cycle = itertools.cycle(periods)
    entries = tuple(
        CodingEntry(alphabet.by_name(name), next(cycle))
        for name in _liuqu_letters(horizon)
    )
    tail = GeneratorTail("liuqu", entries, recurrent=frozenset(range(4)))
    return Coding(alphabet, (), tail)


def grigorchuk() -> Coding:
    """Letters a,x,y,z,x,y,z,... with constant period 2."""
    return parse_coding_spec("a:2 | x:2 y:2 z:2")


def l_grigorchuk(*ls: int) -> Coding:
    """Letters a,x,y,z,x,y,z,... with periods 2, 2^l1, 2^l2, ...

    The finite exponent list repeats cyclically; the tail cycle closes after
    lcm(3, len(ls)) entries.
    """
    if not ls:
        raise EmptyCoding("l-grigorchuk needs at least one exponent")
    if any(l < 1 for l in ls):
        raise ValueError("l-grigorchuk exponents must be >= 1")
    alphabet = Alphabet.from_names("axyz")
    xyz = [alphabet.by_name(n) for n in "xyz"]
    count = math.lcm(3, len(ls))
    tail = tuple(
        CodingEntry(xyz[j % 3], 2 ** ls[j % len(ls)]) for j in range(count)
    )
    pre = (CodingEntry(alphabet.by_name("a"), 2),)
    return Coding(alphabet, pre, PeriodicTail(tail))


GENERATORS: dict[str, Callable[..., Coding]] = {"liuqu": liuqu}


def _parse_entries(text: str, flag: str) -> list[tuple[str, int]]:
    out = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"{flag}: bad entry {token!r}, expected letter:int")
        out.append((m.group(1), int(m.group(2))))
    return out


def parse_coding_spec(text: str, periods: Sequence[int] = (2,),
                      flag: str = "--coding") -> Coding:
    """Parse `pre | tail` into a normalized Coding.

    `periods` is the cyclic period pattern for generator tails; explicit
    periodic tails carry their own periods.
    """
    if text.count("|") != 1:
        raise ValueError(f"{flag}: spec needs exactly one '|' separator")
    left, right = text.split("|")
    pre_tokens = _parse_entries(left, flag)
    right = right.strip()

    if right.startswith("@"):
        m = re.match(r"^@([A-Za-z][A-Za-z0-9_-]*)(?:\((.*)\))?$", right)
        if not m:
            raise ValueError(f"{flag}: bad generator reference {right!r}")
        name, argtext = m.group(1), m.group(2)
        if name not in GENERATORS:
            known = ", ".join(sorted(GENERATORS))
            raise ValueError(f"{flag}: unknown generator @{name} (known: {known})")
        args = [int(a) for a in argtext.split(",")] if argtext else []
        base = GENERATORS[name](*args, periods=tuple(periods))
        if not pre_tokens:
            return normalize(base)
        names = [l.name for l in base.alphabet]
        for n, _ in pre_tokens:
            if n not in names:
                names.append(n)
        alphabet = Alphabet.from_names(names)
        pre = tuple(CodingEntry(alphabet.by_name(n), p) for n, p in pre_tokens)
        tail_entries = tuple(
            CodingEntry(alphabet.by_name(e.letter.name), e.period)
            for e in base.tail.entries
        )
        recur = frozenset(
            alphabet.by_name(base.alphabet[i].name).id for i in base.tail.recurrent
        ) if base.tail.recurrent is not None else None
        tail = GeneratorTail(base.tail.name, tail_entries, recur)
        return normalize(Coding(alphabet, pre, tail))

    tail_tokens = _parse_entries(right, flag)
    if not tail_tokens:
        raise EmptyCoding(f"{flag}: tail must not be empty")
    names: list[str] = []
    for n, _ in pre_tokens + tail_tokens:
        if n not in names:
            names.append(n)
    alphabet = Alphabet.from_names(names)
    pre = tuple(CodingEntry(alphabet.by_name(n), p) for n, p in pre_tokens)
    tail = PeriodicTail(
        tuple(CodingEntry(alphabet.by_name(n), p) for n, p in tail_tokens)
    )
    return normalize(Coding(alphabet, pre, tail))


def preset(name: str, periods: Sequence[int] = (2,)) -> Coding:
    """Resolve a preset name like `grigorchuk` or `l-grigorchuk(1,2)`."""
    m = re.match(r"^([A-Za-z][A-Za-z0-9_-]*)(?:\((.*)\))?$", name.strip())
    if not m:
        raise ValueError(f"--preset: bad preset reference {name!r}")
    base, argtext = m.group(1), m.group(2)
    args = [int(a) for a in argtext.split(",")] if argtext else []
    if base == "grigorchuk":
        return grigorchuk()
    if base == "l-grigorchuk":
        return l_grigorchuk(*args)
    if base == "liuqu":
        return liuqu(*args, periods=tuple(periods))
    raise ValueError(
        f"--preset: unknown preset {base!r} "
        "(known: grigorchuk, l-grigorchuk(l1,l2,...), liuqu)"
    )


PRESET_NAMES = ("grigorchuk", "l-grigorchuk(l1,l2,...)", "liuqu")
